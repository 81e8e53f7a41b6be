#pragma once

// Truncated zeta series with exact coefficients in H (or a symbol ring),
// the three closed-form example series, rational-form verification by
// series multiplication, Hankel matrices, and the rationality scan.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mzeta/hodge.hpp"
#include "mzeta/linalg.hpp"

namespace mzeta {

struct ZetaSeries {
    Alphabet alphabet;
    std::vector<FieldElement> a; // coefficients a_0 .. a_N
    int N = 0;
    std::string provenance;

    const FieldElement& coeff(int n) const
    {
        if (n < 0 || n > N)
            throw domain_error("series truncated at order " + std::to_string(N) +
                               ", coefficient " + std::to_string(n) + " requested");
        return a[static_cast<std::size_t>(n)];
    }
};

// Coefficients mu_h of symmetric powers of a genus-g curve: the symmetric
// powers are smooth projective, so each coefficient is the single basis
// word of Psi of the symmetric power.
inline ZetaSeries curve_zeta(const Integer& g, int N)
{
    if (N < 0) throw domain_error("truncation order must be nonnegative");
    Alphabet C = Alphabet::hodge();
    ZetaSeries S{C, {}, N, "curve_zeta(g=" + g.str() + ")"};
    S.a.reserve(N + 1);
    HodgeVector curve = HodgeVector::curve(g);
    for (int n = 0; n <= N; ++n) {
        MonoidWord w = psi_h(sym_power(curve, n));
        S.a.push_back(FieldElement(RingElement::basis(C, std::move(w))));
    }
    return S;
}

// Leading-term model for a surface with irregularity q and geometric genus
// r: coefficient n is the basis word of the full (k,0)-vector of the Hilbert
// scheme of n points. This is NOT claimed to be mu_h of the symmetric power
// on the nose -- the difference lives in lower dimension and never carries
// the top geometric genus, which is all the irrationality argument uses.
inline ZetaSeries surface_leading_zeta(const Integer& q, const Integer& r, int N)
{
    if (N < 0) throw domain_error("truncation order must be nonnegative");
    Alphabet C = Alphabet::hodge();
    ZetaSeries S{C, {}, N,
                 "surface_leading_zeta(q=" + q.str() + ",pg=" + r.str() +
                     "; leading-term model)"};
    S.a.reserve(N + 1);
    HodgeVector surf = HodgeVector::surface(q, r);
    for (int n = 0; n <= N; ++n) {
        MonoidWord w = psi_h(hilbert_scheme_h0(surf, n));
        S.a.push_back(FieldElement(RingElement::basis(C, std::move(w))));
    }
    return S;
}

enum class IdVariety { p1, p2, elliptic };

inline Alphabet id_alphabet() { return Alphabet::symbolic({"L", "E"}); }

namespace detail {
inline RingElement lpow_sum(const Alphabet& alpha, int from, int to)
{
    // L^from + ... + L^to
    RingElement s(alpha);
    for (int i = from; i <= to; ++i)
        s = s + RingElement::basis(alpha, MonoidWord::atom_power(Atom::symbol("L"), i));
    return s;
}
} // namespace detail

// The universal-measure example series in the symbol ring Z[L, E]:
// P^1 has [(P^1)^(n)] = [P^n] = 1 + L + ... + L^n, an elliptic curve has
// [E^(n)] = [E][P^(n-1)] for n >= 1, and (P^2)^(n) decomposes into cells
// counted by the complete homogeneous sum in {1, L, L^2}.
inline ZetaSeries id_measure_series(IdVariety v, int N)
{
    if (N < 0) throw domain_error("truncation order must be nonnegative");
    Alphabet alpha = id_alphabet();
    std::string label = v == IdVariety::p1 ? "id_measure_series(P1)"
                        : v == IdVariety::p2 ? "id_measure_series(P2)"
                                             : "id_measure_series(elliptic)";
    ZetaSeries S{alpha, {}, N, label};
    S.a.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
        RingElement coeff(alpha);
        switch (v) {
        case IdVariety::p1:
            coeff = detail::lpow_sum(alpha, 0, n);
            break;
        case IdVariety::elliptic:
            if (n == 0) coeff = RingElement::constant(alpha, Integer(1));
            else
                coeff = RingElement::basis(alpha, MonoidWord::atom_power(Atom::symbol("E"), 1)) *
                        detail::lpow_sum(alpha, 0, n - 1);
            break;
        case IdVariety::p2:
            // monomials 1^a L^b (L^2)^c with a+b+c = n contribute L^(b+2c)
            for (int b = 0; b <= n; ++b)
                for (int c = 0; b + c <= n; ++c)
                    coeff = coeff + RingElement::basis(
                                        alpha, MonoidWord::atom_power(Atom::symbol("L"), b + 2 * c));
            break;
        }
        S.a.push_back(FieldElement(std::move(coeff)));
    }
    return S;
}

// True iff Q(t) * S(t) = P(t) exactly through order N. P and Q are
// polynomials in t with ring coefficients, ascending. Q needs a unit
// constant term so the identity pins the series down.
inline bool rational_check_mul(const ZetaSeries& S, const std::vector<RingElement>& P,
                               const std::vector<RingElement>& Q)
{
    if (Q.empty() || !Q[0].is_constant() || Q[0].is_zero() ||
        abs(Q[0].terms()[0].second) != 1)
        throw std::invalid_argument("rational_check_mul needs a unit constant term in Q");
    FieldElement zero{RingElement(S.alphabet)};
    for (int n = 0; n <= S.N; ++n) {
        FieldElement conv = zero;
        for (int i = 0; i < static_cast<int>(Q.size()) && i <= n; ++i)
            conv = conv + FieldElement(Q[static_cast<std::size_t>(i)]) * S.coeff(n - i);
        FieldElement rhs =
            n < static_cast<int>(P.size()) ? FieldElement(P[static_cast<std::size_t>(n)]) : zero;
        if (!(conv == rhs)) return false;
    }
    return true;
}

// (n+1) x (n+1) matrix with entries a_{m+i+j}.
inline Matrix hankel_matrix(const ZetaSeries& S, int m, int n)
{
    if (m < 0 || n < 0) throw domain_error("hankel_matrix needs m, n >= 0");
    if (m + 2 * n > S.N)
        throw domain_error("hankel_matrix exceeds truncation: needs coefficient " +
                           std::to_string(m + 2 * n) + " but N = " + std::to_string(S.N));
    Matrix M(n + 1);
    for (int i = 0; i <= n; ++i) {
        M[i].reserve(n + 1);
        for (int j = 0; j <= n; ++j) M[i].push_back(S.coeff(m + i + j));
    }
    return M;
}

struct HankelVerdict {
    enum class Kind { zero, nonzero_exact, nonzero_probabilistic };
    int m = 0;
    Kind kind = Kind::zero;
    int trials = 0; // sampling budget behind a probabilistic verdict
};

inline std::string to_string(HankelVerdict::Kind k, int trials)
{
    switch (k) {
    case HankelVerdict::Kind::zero: return "zero";
    case HankelVerdict::Kind::nonzero_exact: return "nonzero-exact";
    case HankelVerdict::Kind::nonzero_probabilistic:
    default: return "nonzero-probabilistic(" + std::to_string(trials) + ")";
    }
}

struct HankelReport {
    int n = 0;
    int m_from = 0, m_to = 0;
    std::vector<HankelVerdict> verdicts;
    std::optional<int> n0;
    std::string classification;
};

// Sampling first because it is cheap; every zero verdict is confirmed by the
// exact determinant, so "zero" is never a statistical claim.
inline HankelVerdict classify_hankel(const ZetaSeries& S, int m, int n, int trials,
                                     std::mt19937_64& rng)
{
    Matrix M = hankel_matrix(S, m, n);
    HankelVerdict v;
    v.m = m;
    v.trials = trials;
    bool sampled_nonzero = false;
    try {
        sampled_nonzero = det_probabilistic(M, trials, rng) == DetVerdict::nonzero_certified;
    } catch (const evaluation_error&) {
        sampled_nonzero = false; // every point unlucky; settle exactly below
    }
    if (sampled_nonzero) {
        v.kind = HankelVerdict::Kind::nonzero_probabilistic;
        return v;
    }
    v.kind = det_exact(M).is_zero() ? HankelVerdict::Kind::zero
                                    : HankelVerdict::Kind::nonzero_exact;
    return v;
}

// For each n <= n_max, test m in [1, m_max - 2n] and report the least n0
// such that every determinant with m > n0 vanished. A report is
// "consistent-with-rational" only when the window actually ends in zeros.
inline std::vector<HankelReport> rationality_scan(const ZetaSeries& S, int n_max, int m_max,
                                                  std::mt19937_64& rng, int trials = 6)
{
    if (n_max < 1 || m_max < 1) throw domain_error("rationality_scan needs n_max, m_max >= 1");
    if (m_max + 2 * n_max > S.N)
        throw domain_error("rationality_scan window exceeds truncation order");
    std::vector<HankelReport> reports;
    for (int n = 1; n <= n_max; ++n) {
        HankelReport rep;
        rep.n = n;
        rep.m_from = 1;
        rep.m_to = m_max - 2 * n;
        int last_nonzero = 0;
        for (int m = rep.m_from; m <= rep.m_to; ++m) {
            HankelVerdict v = classify_hankel(S, m, n, trials, rng);
            if (v.kind != HankelVerdict::Kind::zero) last_nonzero = m;
            rep.verdicts.push_back(v);
        }
        if (rep.m_to < rep.m_from) {
            rep.classification = "window empty";
        } else if (last_nonzero == rep.m_to) {
            rep.classification = "no vanishing tail found";
        } else {
            rep.n0 = last_nonzero;
            rep.classification = "consistent-with-rational at (n=" + std::to_string(n) +
                                 ", n0=" + std::to_string(last_nonzero) + ")";
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace mzeta
