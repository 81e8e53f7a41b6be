#pragma once

// Arbitrary-precision integer/rational kernel plus the small number-theory
// helpers the factorization code needs (deterministic Miller-Rabin for the
// sizes we handle, Pollard rho, exact binomials, integer square roots).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <random>
#include <utility>

#include "mzeta/error.hpp"

namespace mzeta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a)
{
    return a < 0 ? Integer(-a) : a;
}

inline Integer pow(Integer base, unsigned long e)
{
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// C(n, k), exact; 0 for k < 0 or k > n.
inline Integer binomial(const Integer& n, Integer k)
{
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (Integer i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // always exact: r is a partial binomial
    }
    return r;
}

inline Integer factorial(unsigned n)
{
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n)
{
    if (n < 0) throw domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline Integer isqrt_ceil(const Integer& n)
{
    Integer r = isqrt(n);
    if (r * r < n) ++r;
    return r;
}

namespace detail {

inline Integer mulmod(const Integer& a, const Integer& b, const Integer& m)
{
    return (a * b) % m;
}

inline Integer powmod(Integer base, Integer e, const Integer& m)
{
    Integer r = 1;
    base %= m;
    while (e > 0) {
        if ((e & 1) != 0) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic for n < 3.3e24 via the standard 12-base witness set; larger
// inputs (which the artifact never produces) fall back to the same bases as
// a strong probable-prime test.
inline bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

// Pollard rho (Brent variant), used only past the trial-division range.
inline Integer pollard_rho(const Integer& n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    while (true) {
        Integer c = Integer(rng() % 1000003) + 1;
        Integer x = Integer(rng() % 1000003) + 2;
        Integer y = x, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            Integer diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_rec(Integer n, std::map<Integer, int>& out, std::uint64_t seed)
{
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n, seed);
    factor_rec(d, out, seed + 1);
    factor_rec(n / d, out, seed + 2);
}

} // namespace detail

// Prime factorization of n >= 1 as prime -> multiplicity.
inline std::map<Integer, int> factor_integer(Integer n)
{
    if (n < 1) throw domain_error("factor_integer requires n >= 1");
    std::map<Integer, int> out;
    for (Integer p : {Integer(2), Integer(3), Integer(5)}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    for (Integer p = 7; p * p <= n && p < 100000; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) detail::factor_rec(n, out, 0x9e3779b97f4a7c15ULL);
    return out;
}

} // namespace mzeta
