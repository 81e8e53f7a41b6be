#pragma once

// Monoid rings Z[G] with exact integer coefficients, and the fraction field
// H = Frac(Z[C]). Every element carries its alphabet: either the polynomial
// monoid C or a declared finite set of symbols. Arithmetic across different
// alphabets is an error, never a silent coercion.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mzeta/monoid.hpp"

namespace mzeta {

class Alphabet {
public:
    static Alphabet hodge() { return Alphabet(true, {}); }

    static Alphabet symbolic(std::vector<std::string> names)
    {
        if (names.empty()) throw alphabet_error("symbolic alphabet needs at least one name");
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        return Alphabet(false, std::move(names));
    }

    bool is_hodge() const { return hodge_; }

    bool admits(const Atom& a) const
    {
        if (hodge_) return a.kind() != Atom::Kind::symbol;
        return a.kind() == Atom::Kind::symbol &&
               std::binary_search(names_.begin(), names_.end(), a.symbol_name());
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b)
    {
        return a.hodge_ == b.hodge_ && a.names_ == b.names_;
    }

    std::string describe() const
    {
        if (hodge_) return "C";
        std::string s = "symbols{";
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (i) s += ",";
            s += names_[i];
        }
        return s + "}";
    }

private:
    Alphabet(bool hodge, std::vector<std::string> names)
        : hodge_(hodge), names_(std::move(names))
    {
    }

    bool hodge_;
    std::vector<std::string> names_;
};

namespace detail {
inline void require_same_alphabet(const Alphabet& a, const Alphabet& b)
{
    if (!(a == b))
        throw alphabet_error("alphabet mismatch: " + a.describe() + " vs " + b.describe());
}

inline Rational rational_pow(const Rational& x, std::int64_t e)
{
    Integer num = pow(boost::multiprecision::numerator(x),
                      static_cast<unsigned long>(e));
    Integer den = pow(boost::multiprecision::denominator(x),
                      static_cast<unsigned long>(e));
    return Rational(num, den);
}
} // namespace detail

class RingElement {
public:
    explicit RingElement(Alphabet alpha) : alpha_(std::move(alpha)) {} // zero

    static RingElement constant(Alphabet alpha, Integer c)
    {
        RingElement r(std::move(alpha));
        if (c != 0) r.terms_.emplace_back(MonoidWord(), std::move(c));
        return r;
    }

    static RingElement basis(Alphabet alpha, MonoidWord w, Integer coeff = Integer(1))
    {
        for (const auto& [atom, e] : w.exponents())
            if (!alpha.admits(atom))
                throw alphabet_error("atom " + to_string(atom) + " not admitted by alphabet " +
                                     alpha.describe());
        RingElement r(std::move(alpha));
        if (coeff != 0) r.terms_.emplace_back(std::move(w), std::move(coeff));
        return r;
    }

    const Alphabet& alphabet() const { return alpha_; }

    // ascending word order, coefficients all nonzero
    const std::vector<std::pair<MonoidWord, Integer>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_identity());
    }

    const std::pair<MonoidWord, Integer>& leading() const
    {
        if (terms_.empty()) throw domain_error("zero element has no leading term");
        return terms_.back();
    }

    friend RingElement operator-(const RingElement& a)
    {
        RingElement r = a;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b)
    {
        detail::require_same_alphabet(a.alpha_, b.alpha_);
        RingElement r(a.alpha_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() && j != b.terms_.end()) {
            auto cmp = i->first <=> j->first;
            if (cmp == std::strong_ordering::less) r.terms_.push_back(*i++);
            else if (cmp == std::strong_ordering::greater) r.terms_.push_back(*j++);
            else {
                Integer c = i->second + j->second;
                if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        r.terms_.insert(r.terms_.end(), i, a.terms_.end());
        r.terms_.insert(r.terms_.end(), j, b.terms_.end());
        return r;
    }

    friend RingElement operator-(const RingElement& a, const RingElement& b)
    {
        return a + (-b);
    }

    friend RingElement operator*(const RingElement& a, const RingElement& b)
    {
        detail::require_same_alphabet(a.alpha_, b.alpha_);
        std::map<MonoidWord, Integer> acc;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) acc[word_mul(wa, wb)] += ca * cb;
        RingElement r(a.alpha_);
        for (auto& [w, c] : acc)
            if (c != 0) r.terms_.emplace_back(w, std::move(c));
        return r;
    }

    friend RingElement operator*(const RingElement& a, const Integer& c)
    {
        RingElement r(a.alpha_);
        if (c == 0) return r;
        r.terms_ = a.terms_;
        for (auto& [w, x] : r.terms_) x *= c;
        return r;
    }

    friend bool operator==(const RingElement& a, const RingElement& b)
    {
        return a.alpha_ == b.alpha_ && a.terms_ == b.terms_;
    }

    void collect_atoms(std::set<Atom>& out) const
    {
        for (const auto& [w, c] : terms_)
            for (const auto& [atom, e] : w.exponents()) out.insert(atom);
    }

    // Ring homomorphism into Q determined by an atom assignment.
    Rational evaluate(const std::map<Atom, Rational>& assignment) const
    {
        Rational total = 0;
        for (const auto& [w, c] : terms_) {
            Rational prod = 1;
            for (const auto& [atom, e] : w.exponents()) {
                auto it = assignment.find(atom);
                if (it == assignment.end())
                    throw evaluation_error("no value assigned to atom " + to_string(atom));
                prod *= detail::rational_pow(it->second, e);
            }
            total += Rational(c) * prod;
        }
        return total;
    }

private:
    Alphabet alpha_;
    std::vector<std::pair<MonoidWord, Integer>> terms_;
};

// Exact quotient a/b in Z[G] via leading-term elimination under the monomial
// order; Z[C] is a polynomial ring, so exact division is well-defined. A
// non-exact division throws (for the Bareiss path that is an invariant bug).
inline RingElement exact_divide(const RingElement& a, const RingElement& b)
{
    detail::require_same_alphabet(a.alphabet(), b.alphabet());
    if (b.is_zero()) throw division_error("division by zero in the monoid ring");
    RingElement q(a.alphabet());
    RingElement r = a;
    const auto& [bw, bc] = b.leading();
    while (!r.is_zero()) {
        const auto& [rw, rc] = r.leading();
        if (!word_divides(bw, rw) || rc % bc != 0)
            throw division_error("non-exact division in the monoid ring");
        RingElement term = RingElement::basis(a.alphabet(), word_div(rw, bw), rc / bc);
        q = q + term;
        r = r - term * b;
    }
    return q;
}

inline std::string to_string(const RingElement& a)
{
    if (a.is_zero()) return "0";
    std::string out;
    const auto& terms = a.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [w, c] = *it;
        Integer mag = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (w.is_identity()) out += mag.str();
        else {
            if (mag != 1) out += mag.str() + "*";
            out += to_string(w);
        }
    }
    return out;
}

class FieldElement {
public:
    explicit FieldElement(RingElement num)
        : num_(std::move(num)), den_(RingElement::constant(num_.alphabet(), Integer(1)))
    {
    }

    FieldElement(RingElement num, RingElement den)
        : num_(std::move(num)), den_(std::move(den))
    {
        detail::require_same_alphabet(num_.alphabet(), den_.alphabet());
        if (den_.is_zero()) throw division_error("zero denominator in H");
        normalize();
    }

    static FieldElement constant(Alphabet alpha, Integer c)
    {
        return FieldElement(RingElement::constant(std::move(alpha), std::move(c)));
    }

    const RingElement& num() const { return num_; }
    const RingElement& den() const { return den_; }
    const Alphabet& alphabet() const { return num_.alphabet(); }

    bool is_zero() const { return num_.is_zero(); }

    friend FieldElement operator-(const FieldElement& a)
    {
        return FieldElement(-a.num_, a.den_);
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b)
    {
        return FieldElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b)
    {
        return a + (-b);
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b)
    {
        return FieldElement(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b)
    {
        if (b.is_zero()) throw division_error("division by zero in H");
        return FieldElement(a.num_ * b.den_, a.den_ * b.num_);
    }

    // Equality in the fraction field: cross-multiplication (normalization
    // does not compute full gcds, so syntactic equality is not enough).
    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }

    void collect_atoms(std::set<Atom>& out) const
    {
        num_.collect_atoms(out);
        den_.collect_atoms(out);
    }

    Rational evaluate(const std::map<Atom, Rational>& assignment) const
    {
        Rational d = den_.evaluate(assignment);
        if (d == 0) throw evaluation_error("unlucky evaluation point: denominator vanishes");
        return num_.evaluate(assignment) / d;
    }

private:
    // Reduce by the common word factor and the integer content, and give the
    // denominator's leading term a positive coefficient. No multivariate gcd.
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = RingElement::constant(num_.alphabet(), Integer(1));
            return;
        }
        MonoidWord shared = num_.terms()[0].first;
        for (const auto& [w, c] : num_.terms()) shared = word_gcd(shared, w);
        for (const auto& [w, c] : den_.terms()) shared = word_gcd(shared, w);
        Integer content = 0;
        for (const auto& [w, c] : num_.terms()) content = gcd(content, c);
        for (const auto& [w, c] : den_.terms()) content = gcd(content, c);
        if (den_.leading().second < 0) content = -content;
        if (shared.is_identity() && content == 1) return;
        num_ = rescale(num_, shared, content);
        den_ = rescale(den_, shared, content);
    }

    static RingElement rescale(const RingElement& a, const MonoidWord& shared,
                               const Integer& content)
    {
        RingElement r(a.alphabet());
        for (const auto& [w, c] : a.terms())
            r = r + RingElement::basis(a.alphabet(), word_div(w, shared), c / content);
        return r;
    }

    RingElement num_, den_;
};

inline std::string to_string(const FieldElement& a)
{
    std::string num = to_string(a.num());
    if (a.den().is_constant() && !a.den().is_zero() && a.den().terms()[0].second == 1)
        return num;
    std::string den = to_string(a.den());
    if (a.num().terms().size() > 1) num = "(" + num + ")";
    if (a.den().terms().size() > 1) den = "(" + den + ")";
    return num + " / " + den;
}

} // namespace mzeta
