#pragma once

// Univariate polynomials over Z in the variable t, dense representation.
// The coefficient vector is indexed by degree and kept free of trailing
// zeros, so the empty vector is the zero polynomial.

#include <algorithm>
#include <cctype>
#include <compare>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mzeta/integer.hpp"

namespace mzeta {

class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(Integer constant)
    {
        if (constant != 0) coeff_.push_back(std::move(constant));
    }

    explicit IntPolynomial(std::vector<Integer> coeffs) : coeff_(std::move(coeffs))
    {
        trim();
    }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial(Integer(1)); }

    // The monomial c * t^d.
    static IntPolynomial monomial(Integer c, std::size_t d)
    {
        if (c == 0) return {};
        std::vector<Integer> v(d + 1);
        v[d] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const { return coeff_.size() == 1 && coeff_[0] == 1; }

    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }

    const Integer& leading() const { return coeff_.back(); }

    const Integer& operator[](std::size_t i) const
    {
        static const Integer kZero = 0;
        return i < coeff_.size() ? coeff_[i] : kZero;
    }

    const std::vector<Integer>& coefficients() const { return coeff_; }

    friend IntPolynomial operator-(const IntPolynomial& a)
    {
        IntPolynomial r = a;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
    {
        IntPolynomial r;
        r.coeff_.resize(std::max(a.coeff_.size(), b.coeff_.size()));
        for (std::size_t i = 0; i < r.coeff_.size(); ++i) r.coeff_[i] = a[i] + b[i];
        r.trim();
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
    {
        IntPolynomial r;
        r.coeff_.resize(std::max(a.coeff_.size(), b.coeff_.size()));
        for (std::size_t i = 0; i < r.coeff_.size(); ++i) r.coeff_[i] = a[i] - b[i];
        r.trim();
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        IntPolynomial r;
        r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
            if (a.coeff_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeff_.size(); ++j)
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        }
        r.trim();
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const Integer& c)
    {
        if (c == 0) return {};
        IntPolynomial r = a;
        for (auto& x : r.coeff_) x *= c;
        return r;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b)
    {
        return a.coeff_ == b.coeff_;
    }

    IntPolynomial derivative() const
    {
        if (coeff_.size() <= 1) return {};
        IntPolynomial r;
        r.coeff_.resize(coeff_.size() - 1);
        for (std::size_t i = 1; i < coeff_.size(); ++i) r.coeff_[i - 1] = coeff_[i] * i;
        r.trim();
        return r;
    }

    Integer evaluate(const Integer& x) const
    {
        Integer r = 0;
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) r = r * x + *it;
        return r;
    }

    // Canonical ordering of polynomials: degree, then the coefficient
    // sequence in ascending-degree lexicographic order. Atoms of the
    // monoid C inherit this order.
    std::strong_ordering operator<=>(const IntPolynomial& other) const
    {
        if (coeff_.size() != other.coeff_.size())
            return coeff_.size() <=> other.coeff_.size();
        for (std::size_t i = 0; i < coeff_.size(); ++i) {
            if (coeff_[i] != other.coeff_[i])
                return coeff_[i] < other.coeff_[i] ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    void trim()
    {
        while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
    }

    std::vector<Integer> coeff_;
};

struct ContentSplit {
    Integer content;        // positive gcd of coefficients
    int sign;               // +1 or -1
    IntPolynomial primitive; // content 1, positive leading coefficient
};

inline ContentSplit content_primitive(const IntPolynomial& p)
{
    if (p.is_zero()) throw domain_error("zero has no content decomposition");
    Integer c = 0;
    for (const auto& x : p.coefficients()) c = gcd(c, x);
    int sign = p.leading() < 0 ? -1 : 1;
    Integer div = sign < 0 ? Integer(-c) : c;
    std::vector<Integer> prim(p.coefficients().size());
    for (std::size_t i = 0; i < prim.size(); ++i) prim[i] = p.coefficients()[i] / div;
    return {std::move(c), sign, IntPolynomial(std::move(prim))};
}

inline Integer content(const IntPolynomial& p)
{
    Integer c = 0;
    for (const auto& x : p.coefficients()) c = gcd(c, x);
    return c;
}

// Quotient when b divides a exactly in Z[t]; nullopt otherwise.
inline std::optional<IntPolynomial> try_divide(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Integer> rem(a.coefficients());
    std::vector<Integer> quot(a.degree() - b.degree() + 1);
    const auto& bc = b.coefficients();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
        Integer& lead = rem[i + b.degree()];
        if (lead % b.leading() != 0) return std::nullopt;
        Integer q = lead / b.leading();
        if (q != 0) {
            for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] -= q * bc[j];
        }
        quot[i] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

inline IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b)
{
    auto q = try_divide(a, b);
    if (!q) throw division_error("non-exact polynomial division");
    return *std::move(q);
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<Integer> rem(a.coefficients());
    const auto& bc = b.coefficients();
    long db = b.degree();
    long dr = a.degree();
    long steps = dr - db + 1;
    if (steps <= 0) return a;
    for (long k = 0; k < steps; ++k) {
        for (auto& x : rem) x *= b.leading();
        dr = static_cast<long>(rem.size()) - 1;
        while (dr >= 0 && rem[dr] == 0) --dr;
        if (dr < db) break;
        Integer q = rem[dr] / b.leading(); // exact: leading was just scaled
        for (long j = 0; j <= db; ++j) rem[dr - db + j] -= q * bc[j];
        rem.resize(dr); // leading entry now zero
    }
    return IntPolynomial(std::move(rem));
}

// GCD in Z[t] via the primitive PRS; result is primitive with positive
// leading coefficient, scaled by the gcd of the contents.
inline IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return content_primitive(b).primitive * content(b);
    if (b.is_zero()) return content_primitive(a).primitive * content(a);
    Integer cg = gcd(content(a), content(b));
    IntPolynomial r0 = content_primitive(a).primitive;
    IntPolynomial r1 = content_primitive(b).primitive;
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        IntPolynomial r = pseudo_remainder(r0, r1);
        r0 = std::move(r1);
        r1 = r.is_zero() ? IntPolynomial() : content_primitive(r).primitive;
    }
    return r0 * cg;
}

// --- text format -----------------------------------------------------------
//
// ASCII polynomials in the variable t, e.g. "1+2t-3t^2". The parser accepts
// any term order, signs, and whitespace; the serializer emits the canonical
// ascending-degree form.

inline IntPolynomial parse_poly(std::string_view text)
{
    std::vector<Integer> coeffs;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) -> void {
        throw domain_error("polynomial parse error at position " + std::to_string(i) +
                           ": " + what);
    };
    skip_ws();
    if (i == text.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        skip_ws();
        bool has_t = i < text.size() && text[i] == 't';
        if (has_t) ++i;
        if (digits.empty() && !has_t) fail("expected coefficient or 't'");
        Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
        std::size_t deg = 0;
        if (has_t) {
            deg = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string exp;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    exp += text[i++];
                if (exp.empty()) fail("expected exponent after '^'");
                deg = std::stoul(exp);
            }
        }
        if (coeffs.size() < deg + 1) coeffs.resize(deg + 1);
        coeffs[deg] += sign * coeff;
        first = false;
    }
    return IntPolynomial(std::move(coeffs));
}

inline std::string to_string(const IntPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
        const Integer& c = p.coefficients()[d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? '-' : '+');
        }
        Integer a = abs(c);
        if (a != 1 || d == 0) out << a.str();
        if (d >= 1) {
            out << 't';
            if (d >= 2) out << '^' << d;
        }
        first = false;
    }
    return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p)
{
    return os << to_string(p);
}

} // namespace mzeta
