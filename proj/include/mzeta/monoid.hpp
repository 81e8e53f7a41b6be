#pragma once

// Elements of a free commutative monoid: finite atom -> positive exponent
// maps. Words over the polynomial monoid C never mix with words over a
// symbol alphabet; word_mul enforces this at the boundary.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mzeta/atom.hpp"

namespace mzeta {

class MonoidWord {
public:
    MonoidWord() = default; // the identity

    static MonoidWord atom_power(Atom a, std::int64_t e)
    {
        if (e < 0) throw domain_error("monoid exponents must be nonnegative");
        MonoidWord w;
        if (e > 0) w.exp_.emplace_back(std::move(a), e);
        return w;
    }

    bool is_identity() const { return exp_.empty(); }

    // ascending atom order, exponents all positive
    const std::vector<std::pair<Atom, std::int64_t>>& exponents() const { return exp_; }

    std::int64_t exponent_of(const Atom& a) const
    {
        for (const auto& [atom, e] : exp_)
            if (atom == a) return e;
        return 0;
    }

    std::int64_t total_degree() const
    {
        std::int64_t d = 0;
        for (const auto& [atom, e] : exp_) d += e;
        return d;
    }

    bool has_symbol_atom() const
    {
        return !exp_.empty() && exp_.back().first.kind() == Atom::Kind::symbol;
    }

    bool has_c_atom() const
    {
        return !exp_.empty() && exp_.front().first.kind() != Atom::Kind::symbol;
    }

    friend MonoidWord word_mul(const MonoidWord& a, const MonoidWord& b)
    {
        MonoidWord r;
        r.exp_.reserve(a.exp_.size() + b.exp_.size());
        auto i = a.exp_.begin();
        auto j = b.exp_.begin();
        while (i != a.exp_.end() && j != b.exp_.end()) {
            auto cmp = i->first <=> j->first;
            if (cmp == std::strong_ordering::less) r.exp_.push_back(*i++);
            else if (cmp == std::strong_ordering::greater) r.exp_.push_back(*j++);
            else {
                r.exp_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        r.exp_.insert(r.exp_.end(), i, a.exp_.end());
        r.exp_.insert(r.exp_.end(), j, b.exp_.end());
        if (r.has_symbol_atom() && r.has_c_atom())
            throw alphabet_error("symbol atoms cannot mix with C atoms in one word");
        return r;
    }

    // True iff a divides b exponentwise.
    friend bool word_divides(const MonoidWord& a, const MonoidWord& b)
    {
        auto j = b.exp_.begin();
        for (const auto& [atom, e] : a.exp_) {
            while (j != b.exp_.end() && j->first < atom) ++j;
            if (j == b.exp_.end() || !(j->first == atom) || j->second < e) return false;
        }
        return true;
    }

    // b / a for a dividing b.
    friend MonoidWord word_div(const MonoidWord& b, const MonoidWord& a)
    {
        if (!word_divides(a, b))
            throw division_error("monoid word does not divide");
        MonoidWord r;
        auto i = a.exp_.begin();
        for (const auto& [atom, e] : b.exp_) {
            std::int64_t sub = 0;
            if (i != a.exp_.end() && i->first == atom) {
                sub = i->second;
                ++i;
            }
            if (e - sub > 0) r.exp_.emplace_back(atom, e - sub);
        }
        return r;
    }

    // Componentwise minimum of exponents (gcd in the free monoid).
    friend MonoidWord word_gcd(const MonoidWord& a, const MonoidWord& b)
    {
        MonoidWord r;
        auto j = b.exp_.begin();
        for (const auto& [atom, e] : a.exp_) {
            while (j != b.exp_.end() && j->first < atom) ++j;
            if (j != b.exp_.end() && j->first == atom)
                r.exp_.emplace_back(atom, std::min(e, j->second));
        }
        return r;
    }

    friend bool operator==(const MonoidWord& a, const MonoidWord& b)
    {
        return a.exp_ == b.exp_;
    }

    // Graded order: total degree first, ties broken atomwise in canonical
    // order with the larger exponent on the earlier atom winning. This is a
    // monomial order, which exact division in the ring relies on.
    friend std::strong_ordering operator<=>(const MonoidWord& a, const MonoidWord& b)
    {
        std::int64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da <=> db;
        auto i = a.exp_.begin();
        auto j = b.exp_.begin();
        while (i != a.exp_.end() || j != b.exp_.end()) {
            if (i == a.exp_.end()) return std::strong_ordering::less;
            if (j == b.exp_.end()) return std::strong_ordering::greater;
            auto cmp = i->first <=> j->first;
            if (cmp == std::strong_ordering::less) return std::strong_ordering::greater;
            if (cmp == std::strong_ordering::greater) return std::strong_ordering::less;
            if (i->second != j->second) return i->second <=> j->second;
            ++i;
            ++j;
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<std::pair<Atom, std::int64_t>> exp_;
};

// The basis word of an element of C: factor and collect atom exponents.
// embed_poly(p*q) = word_mul(embed_poly(p), embed_poly(q)).
inline MonoidWord embed_poly(const IntPolynomial& p)
{
    if (p.is_zero() || p.leading() < 0)
        throw domain_error("polynomial is not in C (positive leading coefficient needed): " +
                           to_string(p));
    Factorization fac = factor(p);
    MonoidWord w;
    for (const auto& [pr, e] : fac.content_primes)
        w = word_mul(w, MonoidWord::atom_power(Atom::prime(pr), e));
    for (const auto& [f, e] : fac.factors)
        w = word_mul(w, MonoidWord::atom_power(Atom::poly_unchecked(f), e));
    return w;
}

// Atoms rendered in descending canonical order: [1+t]^2*[2], L^3*E, ...
inline std::string to_string(const MonoidWord& w)
{
    if (w.is_identity()) return "1";
    std::string out;
    const auto& exps = w.exponents();
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += to_string(it->first);
        if (it->second > 1) out += "^" + std::to_string(it->second);
    }
    return out;
}

} // namespace mzeta
