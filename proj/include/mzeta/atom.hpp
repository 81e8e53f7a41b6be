#pragma once

// Generators of the free commutative monoids we work over. The monoid C of
// integer polynomials with positive leading coefficient is free on the prime
// integers and the primitive irreducible polynomials; example rings like
// Z[L, E] are free on named symbols. Construction verifies the invariants.

#include <cctype>
#include <compare>
#include <string>
#include <variant>

#include "mzeta/factorize.hpp"

namespace mzeta {

class Atom {
public:
    enum class Kind { prime = 0, poly = 1, symbol = 2 };

    static Atom prime(Integer p)
    {
        if (p < 2 || !is_prime(p))
            throw domain_error("atom must be a verified prime, got " + p.str());
        return Atom(std::move(p));
    }

    static Atom poly(IntPolynomial f)
    {
        if (!is_irreducible(f))
            throw domain_error("atom polynomial must be irreducible in C, got " +
                               to_string(f));
        return Atom(std::move(f));
    }

    // For polynomials that already come out of factor(); skips the recheck.
    static Atom poly_unchecked(IntPolynomial f) { return Atom(std::move(f)); }

    static Atom symbol(std::string name)
    {
        bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
        for (char c : name)
            ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw domain_error("symbol atom needs a name like L or E, got '" + name + "'");
        return Atom(std::move(name));
    }

    Kind kind() const { return static_cast<Kind>(value_.index()); }
    const Integer& prime_value() const { return std::get<0>(value_); }
    const IntPolynomial& poly_value() const { return std::get<1>(value_); }
    const std::string& symbol_name() const { return std::get<2>(value_); }

    friend bool operator==(const Atom& a, const Atom& b) { return a.value_ == b.value_; }

    // Canonical order: primes, then polynomials (by degree then coefficients),
    // then symbols by name.
    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b)
    {
        if (a.value_.index() != b.value_.index())
            return a.value_.index() <=> b.value_.index();
        switch (a.kind()) {
        case Kind::prime: {
            const Integer& x = a.prime_value();
            const Integer& y = b.prime_value();
            if (x == y) return std::strong_ordering::equal;
            return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        case Kind::poly:
            return a.poly_value() <=> b.poly_value();
        case Kind::symbol:
        default:
            return a.symbol_name() <=> b.symbol_name();
        }
    }

private:
    explicit Atom(Integer p) : value_(std::move(p)) {}
    explicit Atom(IntPolynomial f) : value_(std::move(f)) {}
    explicit Atom(std::string s) : value_(std::move(s)) {}

    std::variant<Integer, IntPolynomial, std::string> value_;
};

inline std::string to_string(const Atom& a)
{
    switch (a.kind()) {
    case Atom::Kind::prime: return "[" + a.prime_value().str() + "]";
    case Atom::Kind::poly: return "[" + to_string(a.poly_value()) + "]";
    case Atom::Kind::symbol:
    default: return a.symbol_name();
    }
}

} // namespace mzeta
