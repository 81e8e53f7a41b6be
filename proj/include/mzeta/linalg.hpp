#pragma once

// Exact and probabilistic determinants over H. The exact path clears row
// denominators and runs fraction-free Bareiss elimination in Z[C] (every
// division in the recurrence is exact because Z[C] is a polynomial ring);
// the probabilistic path evaluates at random rational points, so a nonzero
// verdict is a certificate while a zero verdict is only evidence.

#include <random>
#include <set>
#include <vector>

#include "mzeta/ring.hpp"

namespace mzeta {

using Matrix = std::vector<std::vector<FieldElement>>;

namespace detail {
inline void require_square(const Matrix& M)
{
    for (const auto& row : M)
        if (row.size() != M.size()) throw domain_error("matrix must be square");
}
} // namespace detail

inline FieldElement det_exact(const Matrix& M)
{
    detail::require_square(M);
    if (M.empty()) throw domain_error("empty matrix has no determinant");
    const Alphabet alpha = M[0][0].alphabet();
    const std::size_t n = M.size();

    // scale row i by the product of its denominators to land in Z[C]
    RingElement scale = RingElement::constant(alpha, Integer(1));
    std::vector<std::vector<RingElement>> A(n);
    for (std::size_t i = 0; i < n; ++i) {
        RingElement row_den = RingElement::constant(alpha, Integer(1));
        for (std::size_t j = 0; j < n; ++j) row_den = row_den * M[i][j].den();
        scale = scale * row_den;
        A[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            RingElement cleared = M[i][j].num();
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) cleared = cleared * M[i][k].den();
            A[i].push_back(std::move(cleared));
        }
    }

    int sign = 1;
    RingElement prev = RingElement::constant(alpha, Integer(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && A[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return FieldElement(RingElement(alpha)); // zero column
            std::swap(A[k], A[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                A[i][j] = exact_divide(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev);
            A[i][k] = RingElement(alpha);
        }
        prev = A[k][k];
    }
    RingElement det = A[n - 1][n - 1];
    if (sign < 0) det = -det;
    return FieldElement(std::move(det), std::move(scale));
}

enum class DetVerdict { nonzero_certified, possibly_zero };

namespace detail {
// Determinant of a rational matrix by plain Gaussian elimination.
inline Rational rational_det(std::vector<std::vector<Rational>> A)
{
    const std::size_t n = A.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && A[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(A[pivot], A[k]);
            det = -det;
        }
        det *= A[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (A[i][k] == 0) continue;
            Rational f = A[i][k] / A[k][k];
            for (std::size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
        }
    }
    return det;
}
} // namespace detail

// Random nonzero rationals with numerator and denominator up to 10^6.
inline std::map<Atom, Rational> random_assignment(const std::set<Atom>& atoms,
                                                  std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> mag(1, 1000000);
    std::uniform_int_distribution<int> coin(0, 1);
    std::map<Atom, Rational> assign;
    for (const auto& a : atoms) {
        Integer num = mag(rng);
        if (coin(rng)) num = -num;
        assign.emplace(a, Rational(num, Integer(mag(rng))));
    }
    return assign;
}

// Schwartz-Zippel: a nonzero evaluation of det(M) certifies det(M) != 0 in H.
// Throws if every trial hits a vanishing entry denominator.
inline DetVerdict det_probabilistic(const Matrix& M, int trials, std::mt19937_64& rng)
{
    detail::require_square(M);
    if (M.empty()) throw domain_error("empty matrix has no determinant");
    std::set<Atom> atoms;
    for (const auto& row : M)
        for (const auto& e : row) e.collect_atoms(atoms);

    int completed = 0;
    for (int trial = 0; trial < trials; ++trial) {
        auto assign = random_assignment(atoms, rng);
        std::vector<std::vector<Rational>> A(M.size());
        bool unlucky = false;
        for (std::size_t i = 0; i < M.size() && !unlucky; ++i) {
            A[i].reserve(M.size());
            for (std::size_t j = 0; j < M.size(); ++j) {
                try {
                    A[i].push_back(M[i][j].evaluate(assign));
                } catch (const evaluation_error&) {
                    unlucky = true;
                    break;
                }
            }
        }
        if (unlucky) continue;
        ++completed;
        if (detail::rational_det(std::move(A)) != 0) return DetVerdict::nonzero_certified;
    }
    if (completed == 0)
        throw evaluation_error("all evaluation points were unlucky; retry with a new seed");
    return DetVerdict::possibly_zero;
}

} // namespace mzeta
