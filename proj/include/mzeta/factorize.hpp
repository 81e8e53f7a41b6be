#pragma once

// Complete factorization over Z[t]: integer content, Yun squarefree split,
// then Zassenhaus on the squarefree primitive parts (Berlekamp mod p,
// quadratic Hensel lifting on a factor tree, subset recombination).

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mzeta/intpoly.hpp"

namespace mzeta {

namespace detail {

// Dense coefficient vector understood modulo an Integer passed alongside;
// canonical representatives live in [0, m) and trailing zeros are trimmed.
using ModPoly = std::vector<Integer>;

inline void mod_trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Integer mod_reduce(const Integer& x, const Integer& m)
{
    Integer r = x % m;
    if (r < 0) r += m;
    return r;
}

inline Integer mod_inverse(const Integer& a, const Integer& m)
{
    Integer r0 = m, r1 = mod_reduce(a, m);
    Integer t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw division_error("element not invertible modulo m");
    return mod_reduce(t0, m);
}

inline ModPoly mod_from_poly(const IntPolynomial& p, const Integer& m)
{
    ModPoly a(p.coefficients().size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod_reduce(p.coefficients()[i], m);
    mod_trim(a);
    return a;
}

inline ModPoly mod_add(const ModPoly& a, const ModPoly& b, const Integer& m)
{
    ModPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Integer& x = i < a.size() ? a[i] : Integer(0);
        const Integer& y = i < b.size() ? b[i] : Integer(0);
        r[i] = mod_reduce(x + y, m);
    }
    mod_trim(r);
    return r;
}

inline ModPoly mod_sub(const ModPoly& a, const ModPoly& b, const Integer& m)
{
    ModPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Integer& x = i < a.size() ? a[i] : Integer(0);
        const Integer& y = i < b.size() ? b[i] : Integer(0);
        r[i] = mod_reduce(x - y, m);
    }
    mod_trim(r);
    return r;
}

inline ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const Integer& m)
{
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& x : r) x = mod_reduce(x, m);
    mod_trim(r);
    return r;
}

inline ModPoly mod_scale(const ModPoly& a, const Integer& c, const Integer& m)
{
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_reduce(a[i] * c, m);
    mod_trim(r);
    return r;
}

// Division with remainder; the divisor's leading coefficient must be a unit
// modulo m (always the case here: either m is prime or the divisor is monic).
inline std::pair<ModPoly, ModPoly> mod_divmod(const ModPoly& a, const ModPoly& b,
                                              const Integer& m)
{
    if (b.empty()) throw division_error("modular division by zero");
    if (a.size() < b.size()) return {{}, a};
    Integer lcinv = mod_inverse(b.back(), m);
    ModPoly rem = a;
    ModPoly quot(a.size() - b.size() + 1, Integer(0));
    for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
        Integer q = mod_reduce(rem[i + b.size() - 1] * lcinv, m);
        if (q != 0) {
            for (std::size_t j = 0; j < b.size(); ++j)
                rem[i + j] = mod_reduce(rem[i + j] - q * b[j], m);
        }
        quot[i] = std::move(q);
    }
    rem.resize(b.size() - 1);
    mod_trim(rem);
    mod_trim(quot);
    return {std::move(quot), std::move(rem)};
}

inline ModPoly mod_make_monic(const ModPoly& a, const Integer& m)
{
    if (a.empty()) return a;
    return mod_scale(a, mod_inverse(a.back(), m), m);
}

// Monic gcd over F_p.
inline ModPoly mod_gcd(ModPoly a, ModPoly b, const Integer& p)
{
    while (!b.empty()) {
        ModPoly r = mod_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : mod_make_monic(a, p);
}

// s*a + t*b = 1 over F_p; the inputs must be coprime.
inline std::pair<ModPoly, ModPoly> mod_bezout(const ModPoly& a, const ModPoly& b,
                                              const Integer& p)
{
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = {Integer(1)}, s1 = {};
    ModPoly t0 = {}, t1 = {Integer(1)};
    while (!r1.empty()) {
        auto [q, r] = mod_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = mod_sub(s0, mod_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        ModPoly t2 = mod_sub(t0, mod_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw division_error("modular factors are not coprime");
    Integer inv = mod_inverse(r0[0], p);
    return {mod_scale(s0, inv, p), mod_scale(t0, inv, p)};
}

// x^e mod f over F_p by square and multiply.
inline ModPoly mod_pow_x(const Integer& e, const ModPoly& f, const Integer& p)
{
    ModPoly result = {Integer(1)};
    ModPoly base = mod_divmod(ModPoly{Integer(0), Integer(1)}, f, p).second;
    Integer exp = e;
    while (exp > 0) {
        if ((exp & 1) != 0) result = mod_divmod(mod_mul(result, base, p), f, p).second;
        base = mod_divmod(mod_mul(base, base, p), f, p).second;
        exp >>= 1;
    }
    return result;
}

// Basis of the Berlekamp algebra {v : v^p = v mod f} for monic squarefree f;
// its dimension equals the number of irreducible factors of f mod p.
inline std::vector<std::vector<Integer>> berlekamp_basis(const ModPoly& f, const Integer& p)
{
    std::size_t n = f.size() - 1;
    ModPoly xp = mod_pow_x(p, f, p);
    std::vector<ModPoly> q(n);
    q[0] = {Integer(1)};
    for (std::size_t i = 1; i < n; ++i)
        q[i] = mod_divmod(mod_mul(q[i - 1], xp, p), f, p).second;
    // rows of M are indexed by the coefficient, columns by the power of x,
    // so M v = 0 says exactly v(x)^p = v(x) mod f
    std::vector<std::vector<Integer>> M(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer v = j < q[i].size() ? q[i][j] : Integer(0);
            if (i == j) v -= 1;
            M[j][i] = mod_reduce(v, p);
        }
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t sel = rank;
        while (sel < n && M[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(M[sel], M[rank]);
        Integer inv = mod_inverse(M[rank][col], p);
        for (std::size_t j = col; j < n; ++j) M[rank][j] = mod_reduce(M[rank][j] * inv, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            Integer c = M[i][col];
            for (std::size_t j = col; j < n; ++j)
                M[i][j] = mod_reduce(M[i][j] - c * M[rank][j], p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Integer>> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Integer> v(n, Integer(0));
        v[c] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = mod_reduce(-M[r][c], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Full Berlekamp split of a monic squarefree polynomial mod p into monic
// irreducible factors, via gcd(u, v - c) over the algebra basis.
inline std::vector<ModPoly> berlekamp_split(const ModPoly& f, const Integer& p)
{
    if (f.size() <= 2) return {f};
    auto basis = berlekamp_basis(f, p);
    std::size_t r = basis.size();
    std::vector<ModPoly> factors = {f};
    if (r == 1) return factors;
    for (const auto& vec : basis) {
        if (factors.size() == r) break;
        ModPoly v = vec;
        mod_trim(v);
        if (v.size() <= 1) continue; // the constants split nothing
        std::vector<ModPoly> next;
        for (const auto& u : factors) {
            if (u.size() <= 2) {
                next.push_back(u);
                continue;
            }
            ModPoly w = u;
            for (Integer c = 0; c < p && w.size() > 1; ++c) {
                ModPoly shifted = v;
                shifted[0] = mod_reduce(shifted[0] - c, p);
                mod_trim(shifted);
                ModPoly g = mod_gcd(w, shifted, p);
                if (g.size() > 1) {
                    next.push_back(g);
                    w = mod_divmod(w, g, p).first;
                }
            }
            if (w.size() > 1) next.push_back(w);
        }
        factors = std::move(next);
    }
    return factors;
}

// Binary factor tree for Hensel lifting. Every node satisfies
// parent ~ g*h and s*g + t*h ~ 1 modulo the current modulus; the factor
// carrying the leading coefficient sits in the leftmost leaf so that every
// right-hand product stays monic (the lifting step divides by h).
struct HenselNode {
    ModPoly g, h, s, t;
    std::unique_ptr<HenselNode> left, right;
};

inline std::unique_ptr<HenselNode> build_hensel_tree(const std::vector<ModPoly>& fac,
                                                     std::size_t lo, std::size_t hi,
                                                     const Integer& p)
{
    auto node = std::make_unique<HenselNode>();
    std::size_t mid = lo + (hi - lo + 1) / 2;
    node->g = {Integer(1)};
    for (std::size_t i = lo; i < mid; ++i) node->g = mod_mul(node->g, fac[i], p);
    node->h = {Integer(1)};
    for (std::size_t i = mid; i < hi; ++i) node->h = mod_mul(node->h, fac[i], p);
    auto [s, t] = mod_bezout(node->g, node->h, p);
    node->s = std::move(s);
    node->t = std::move(t);
    if (mid - lo >= 2) node->left = build_hensel_tree(fac, lo, mid, p);
    if (hi - mid >= 2) node->right = build_hensel_tree(fac, mid, hi, p);
    return node;
}

// One quadratic step: all node data valid mod m becomes valid mod m^2.
// f must already be reduced mod m^2; h must be monic.
inline void hensel_step(const ModPoly& f, ModPoly& g, ModPoly& h, ModPoly& s, ModPoly& t,
                        const Integer& m)
{
    Integer m2 = m * m;
    ModPoly e = mod_sub(f, mod_mul(g, h, m2), m2);
    auto [q, r] = mod_divmod(mod_mul(s, e, m2), h, m2);
    ModPoly gs = mod_add(g, mod_add(mod_mul(t, e, m2), mod_mul(q, g, m2), m2), m2);
    ModPoly hs = mod_add(h, r, m2);
    ModPoly b = mod_sub(mod_add(mod_mul(s, gs, m2), mod_mul(t, hs, m2), m2),
                        ModPoly{Integer(1)}, m2);
    auto [c, d] = mod_divmod(mod_mul(s, b, m2), hs, m2);
    ModPoly ss = mod_sub(s, d, m2);
    ModPoly ts = mod_sub(t, mod_add(mod_mul(t, b, m2), mod_mul(c, gs, m2), m2), m2);
    g = std::move(gs);
    h = std::move(hs);
    s = std::move(ss);
    t = std::move(ts);
}

inline void lift_tree(HenselNode* node, const ModPoly& f, const Integer& m)
{
    hensel_step(f, node->g, node->h, node->s, node->t, m);
    if (node->left) lift_tree(node->left.get(), node->g, m);
    if (node->right) lift_tree(node->right.get(), node->h, m);
}

inline void collect_leaves(const HenselNode* node, std::vector<ModPoly>& out)
{
    if (node->left) collect_leaves(node->left.get(), out);
    else out.push_back(node->g);
    if (node->right) collect_leaves(node->right.get(), out);
    else out.push_back(node->h);
}

// Representative in (-m/2, m/2] for every coefficient.
inline IntPolynomial symmetric_lift(const ModPoly& a, const Integer& m)
{
    std::vector<Integer> v(a.size());
    Integer half = m / 2;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer x = mod_reduce(a[i], m);
        if (x > half) x -= m;
        v[i] = std::move(x);
    }
    return IntPolynomial(std::move(v));
}

// Coefficient bound for any divisor of f in Z[t].
inline Integer mignotte_bound(const IntPolynomial& f)
{
    Integer norm_sq = 0;
    for (const auto& c : f.coefficients()) norm_sq += c * c;
    long n = f.degree();
    return binomial(Integer(n), Integer(n / 2)) * isqrt_ceil(norm_sq);
}

// Zassenhaus on a primitive squarefree polynomial with positive leading
// coefficient and degree >= 1; returns primitive irreducible factors with
// positive leading coefficients.
inline std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f)
{
    if (f.degree() == 1) return {f};
    const Integer& lc = f.leading();
    IntPolynomial df = f.derivative();

    // pick the prime among the first few good ones that yields the fewest
    // modular factors; a good prime keeps the degree and the squarefreeness
    Integer best_p = 0;
    int best_count = -1;
    int candidates = 0;
    for (Integer p = 3; candidates < 5; p += 2) {
        if (!is_prime(p)) continue;
        if (lc % p == 0) continue;
        ModPoly fm = mod_from_poly(f, p);
        ModPoly fd = mod_from_poly(df, p);
        if (mod_gcd(fm, fd, p).size() != 1) continue;
        ++candidates;
        int count = static_cast<int>(berlekamp_basis(mod_make_monic(fm, p), p).size());
        if (count == 1) return {f};
        if (best_count < 0 || count < best_count) {
            best_count = count;
            best_p = p;
        }
    }
    const Integer p = best_p;

    std::vector<ModPoly> modular = berlekamp_split(mod_make_monic(mod_from_poly(f, p), p), p);
    modular[0] = mod_scale(modular[0], lc, p); // leading coefficient rides on factor 0

    auto tree = build_hensel_tree(modular, 0, modular.size(), p);
    Integer target = 2 * lc * mignotte_bound(f);
    Integer m = p;
    while (m <= target) {
        lift_tree(tree.get(), mod_from_poly(f, m * m), m);
        m *= m;
    }
    std::vector<ModPoly> leaves;
    collect_leaves(tree.get(), leaves);
    leaves[0] = mod_make_monic(leaves[0], m);

    // subset recombination: scale a candidate product by the current leading
    // coefficient, lift symmetrically, take the primitive part, trial divide
    std::vector<IntPolynomial> result;
    IntPolynomial remaining = f;
    std::vector<ModPoly> pool = std::move(leaves);
    std::size_t take = 1;
    while (2 * take <= pool.size()) {
        std::vector<std::size_t> comb(take);
        std::iota(comb.begin(), comb.end(), std::size_t{0});
        bool split = false;
        while (true) {
            ModPoly prod = {mod_reduce(remaining.leading(), m)};
            for (auto i : comb) prod = mod_mul(prod, pool[i], m);
            IntPolynomial g = content_primitive(symmetric_lift(prod, m)).primitive;
            if (auto quot = try_divide(remaining, g)) {
                result.push_back(std::move(g));
                remaining = *std::move(quot);
                for (auto it = comb.rbegin(); it != comb.rend(); ++it)
                    pool.erase(pool.begin() + static_cast<long>(*it));
                split = true;
                break;
            }
            long k = static_cast<long>(take) - 1;
            while (k >= 0 && comb[k] == pool.size() - take + static_cast<std::size_t>(k)) --k;
            if (k < 0) break;
            ++comb[k];
            for (std::size_t j = static_cast<std::size_t>(k) + 1; j < take; ++j)
                comb[j] = comb[j - 1] + 1;
        }
        if (!split) ++take;
    }
    if (remaining.degree() >= 1)
        result.push_back(content_primitive(remaining).primitive);
    return result;
}

// Yun's algorithm on a primitive polynomial with positive leading
// coefficient: returns pairwise coprime squarefree parts with multiplicities.
inline std::vector<std::pair<IntPolynomial, int>> squarefree_decompose(const IntPolynomial& f)
{
    std::vector<std::pair<IntPolynomial, int>> parts;
    IntPolynomial df = f.derivative();
    IntPolynomial u = poly_gcd(f, df);
    if (u.degree() == 0) {
        parts.emplace_back(f, 1);
        return parts;
    }
    IntPolynomial v = divide_exact(f, u);
    IntPolynomial w = divide_exact(df, u);
    int i = 1;
    while (v.degree() > 0) {
        IntPolynomial z = w - v.derivative();
        IntPolynomial h = poly_gcd(v, z);
        if (h.degree() > 0) parts.emplace_back(h, i);
        v = divide_exact(v, h);
        w = z.is_zero() ? IntPolynomial() : divide_exact(z, h);
        ++i;
    }
    return parts;
}

} // namespace detail

// sign * prod(content_primes) * prod(factors^multiplicity); the factors are
// primitive and irreducible with positive leading coefficients, ascending.
struct Factorization {
    int sign = 1;
    std::map<Integer, int> content_primes;
    std::vector<std::pair<IntPolynomial, int>> factors;

    IntPolynomial expand() const
    {
        IntPolynomial r{Integer(sign)};
        for (const auto& [p, e] : content_primes)
            r = r * pow(p, static_cast<unsigned long>(e));
        for (const auto& [g, e] : factors)
            for (int k = 0; k < e; ++k) r = r * g;
        return r;
    }
};

inline Factorization factor(const IntPolynomial& f)
{
    if (f.is_zero()) throw domain_error("cannot factor the zero polynomial");
    Factorization out;
    auto split = content_primitive(f);
    out.sign = split.sign;
    if (split.content != 1) out.content_primes = factor_integer(split.content);
    if (split.primitive.degree() >= 1) {
        for (const auto& [part, mult] : detail::squarefree_decompose(split.primitive))
            for (auto& irr : detail::factor_squarefree(part))
                out.factors.emplace_back(std::move(irr), mult);
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return out;
}

// Irreducibility in the monoid C: primitive, positive leading coefficient,
// degree >= 1, no proper split.
inline bool is_irreducible(const IntPolynomial& f)
{
    if (f.degree() < 1 || f.leading() < 0) return false;
    if (content(f) != 1) return false;
    if (f.degree() == 1) return true;
    auto parts = detail::squarefree_decompose(f);
    if (parts.size() != 1 || parts[0].second != 1) return false;
    return detail::factor_squarefree(parts[0].first).size() == 1;
}

inline std::string to_string(const Factorization& fac)
{
    std::vector<std::string> pieces;
    for (const auto& [p, e] : fac.content_primes) {
        std::string s = p.str();
        if (e > 1) s += "^" + std::to_string(e);
        pieces.push_back(std::move(s));
    }
    for (const auto& [g, e] : fac.factors) {
        std::string s = "(" + to_string(g) + ")";
        if (e > 1) s += "^" + std::to_string(e);
        pieces.push_back(std::move(s));
    }
    std::string out = fac.sign < 0 ? "-1" : (pieces.empty() ? "1" : "");
    for (const auto& s : pieces) {
        if (!out.empty()) out += " * ";
        out += s;
    }
    return out;
}

} // namespace mzeta
