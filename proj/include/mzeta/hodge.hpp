#pragma once

// Holomorphic-form Hodge vectors (h^{0,0}, h^{1,0}, ..., h^{d,0}) and the
// operations feeding the measure: Kunneth products, sign-twisted symmetric
// powers, the embedding Psi into the monoid C, and the geometric genus with
// its binomial closed form. Only the (k,0) column is ever stored.

#include <algorithm>
#include <string>
#include <vector>

#include "mzeta/monoid.hpp"

namespace mzeta {

struct HodgeVector {
    int dim = 0;
    std::vector<Integer> h; // length dim+1, h[0] = 1, entries >= 0

    HodgeVector(int d, std::vector<Integer> entries) : dim(d), h(std::move(entries))
    {
        if (dim < 0 || h.size() != static_cast<std::size_t>(dim) + 1)
            throw domain_error("Hodge vector needs dim+1 entries");
        if (h[0] != 1) throw domain_error("connected variety needs h^{0,0} = 1");
        for (const auto& x : h)
            if (x < 0) throw domain_error("Hodge numbers are nonnegative");
    }

    static HodgeVector point() { return {0, {Integer(1)}}; }

    static HodgeVector curve(const Integer& g) { return {1, {Integer(1), g}}; }

    static HodgeVector surface(const Integer& q, const Integer& pg)
    {
        return {2, {Integer(1), q, pg}};
    }

    // P^n carries no holomorphic k-forms for k >= 1
    static HodgeVector proj(int n)
    {
        std::vector<Integer> v(n + 1, Integer(0));
        v[0] = 1;
        return {n, std::move(v)};
    }

    friend bool operator==(const HodgeVector& a, const HodgeVector& b)
    {
        return a.dim == b.dim && a.h == b.h;
    }
};

inline HodgeVector kunneth_product(const HodgeVector& a, const HodgeVector& b)
{
    std::vector<Integer> h(a.h.size() + b.h.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.h.size(); ++i)
        for (std::size_t j = 0; j < b.h.size(); ++j) h[i + j] += a.h[i] * b.h[j];
    return {a.dim + b.dim, std::move(h)};
}

// h^{k,0} of the n-th symmetric power: coefficient of s^n t^k in
//   prod_{k even} (1 - t^k s)^{-h_k} * prod_{k odd} (1 + t^k s)^{h_k},
// the graded symmetric algebra on the form spaces with odd degrees
// alternating. Expanded factor by factor with the s-degree capped at n.
inline HodgeVector sym_power(const HodgeVector& a, int n)
{
    if (n < 0) throw domain_error("symmetric power needs n >= 0");
    // sc[j] = t-polynomial coefficient of s^j
    std::vector<std::vector<Integer>> sc(n + 1);
    sc[0] = {Integer(1)};
    for (int k = 0; k <= a.dim; ++k) {
        const Integer& hk = a.h[k];
        if (hk == 0) continue;
        // factor[j] = c_j * t^(k*j): binomial(hk-1+j, j) for even k,
        // binomial(hk, j) for odd k (vanishing beyond j = hk)
        std::vector<std::vector<Integer>> next(n + 1);
        for (int m = 0; m <= n; ++m) {
            for (int j = 0; j <= m; ++j) {
                if (sc[m - j].empty()) continue;
                Integer c = (k % 2 == 0) ? binomial(hk - 1 + j, Integer(j))
                                         : binomial(hk, Integer(j));
                if (c == 0) continue;
                std::size_t shift = static_cast<std::size_t>(k) * j;
                auto& dst = next[m];
                if (dst.size() < sc[m - j].size() + shift)
                    dst.resize(sc[m - j].size() + shift, Integer(0));
                for (std::size_t i = 0; i < sc[m - j].size(); ++i)
                    dst[i + shift] += c * sc[m - j][i];
            }
        }
        sc = std::move(next);
    }
    std::vector<Integer> h(static_cast<std::size_t>(a.dim) * n + 1, Integer(0));
    for (std::size_t i = 0; i < sc[n].size() && i < h.size(); ++i) h[i] = sc[n][i];
    return {a.dim * n, std::move(h)};
}

// Independent oracle: symmetrize the n-fold graded tensor power directly via
// the cycle index of S_n. An l-cycle substitutes t -> t^l and contributes a
// sign (-1)^(l-1) on the odd-degree generators. Test-scale only.
inline HodgeVector brute_force_sym_invariants(const HodgeVector& a, int n)
{
    if (n < 0) throw domain_error("symmetric power needs n >= 0");
    if (n > 4) throw budget_error("brute-force symmetrization is limited to n <= 4");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<Integer> total(static_cast<std::size_t>(a.dim) * n + 1, Integer(0));
    Integer count = 0;
    do {
        ++count;
        // cycle type of this permutation
        std::vector<bool> seen(n, false);
        std::vector<Integer> term = {Integer(1)};
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            // f_l(t) = sum_{k even} h_k t^(l k) + (-1)^(l-1) sum_{k odd} h_k t^(l k)
            std::vector<Integer> f(static_cast<std::size_t>(a.dim) * len + 1, Integer(0));
            for (int k = 0; k <= a.dim; ++k) {
                Integer c = a.h[k];
                if (k % 2 == 1 && len % 2 == 0) c = -c;
                f[static_cast<std::size_t>(k) * len] += c;
            }
            std::vector<Integer> prod(term.size() + f.size() - 1, Integer(0));
            for (std::size_t x = 0; x < term.size(); ++x)
                for (std::size_t y = 0; y < f.size(); ++y) prod[x + y] += term[x] * f[y];
            term = std::move(prod);
        }
        for (std::size_t i = 0; i < term.size() && i < total.size(); ++i) total[i] += term[i];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& x : total) {
        if (x % count != 0)
            throw domain_error("invariant dimension not integral; symmetrization bug");
        x /= count;
    }
    return {a.dim * n, std::move(total)};
}

// The polynomial 1 + h^{1,0} t + ... + h^{d,0} t^d; always lands in C.
inline IntPolynomial psi_poly(const HodgeVector& a)
{
    return IntPolynomial(a.h);
}

inline MonoidWord psi_h(const HodgeVector& a)
{
    return embed_poly(psi_poly(a));
}

inline const Integer& pg(const HodgeVector& a)
{
    return a.h.back();
}

// P_g of the n-th symmetric power of a surface with P_g = r: C(r+n-1, r-1).
// For r = 0 there are no top forms at all (n >= 1), a convention the
// generating function forces.
inline Integer pg_sym_formula(const Integer& r, int n)
{
    if (r < 0 || n < 0) throw domain_error("pg_sym_formula needs r, n >= 0");
    if (n == 0) return Integer(1);
    if (r == 0) return Integer(0);
    return binomial(r + n - 1, r - 1);
}

// (k,0)-Hodge vector of the Hilbert scheme of n points on a surface. In the
// direct-sum decomposition over partitions, a (p,q) class twisted by
// Q(|alpha|-n) lands in bidegree (p+n-|alpha|, q+n-|alpha|); q' = 0 forces
// alpha = (1^n), whose summand is the symmetric power.
inline HodgeVector hilbert_scheme_h0(const HodgeVector& a, int n)
{
    if (a.dim != 2) throw domain_error("Hilbert scheme step needs a surface");
    return sym_power(a, n);
}

} // namespace mzeta
