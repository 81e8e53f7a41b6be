#pragma once

// Report emission: JSON (series, scans, certificates), CSV coefficient
// tables, and a TeX rendering for rational forms P/Q.

#include <string>
#include <vector>

#include <json.hpp>

#include "mzeta/irrationality.hpp"
#include "mzeta/series.hpp"

namespace mzeta {

using Json = nlohmann::json;

inline Json series_json(const ZetaSeries& S)
{
    Json coeffs = Json::array();
    for (const auto& c : S.a) coeffs.push_back(to_string(c));
    return Json{{"series", S.provenance},
                {"N", S.N},
                {"alphabet", S.alphabet.describe()},
                {"coefficients", coeffs}};
}

inline std::string series_csv(const ZetaSeries& S)
{
    std::string out = "n,coefficient\n";
    for (int n = 0; n <= S.N; ++n)
        out += std::to_string(n) + ",\"" + to_string(S.a[static_cast<std::size_t>(n)]) + "\"\n";
    return out;
}

namespace detail {
inline std::string tex_term(const std::string& coeff, int power)
{
    std::string c = coeff;
    bool wrap = c.find(' ') != std::string::npos || c.find('/') != std::string::npos;
    if (wrap) c = "\\left(" + c + "\\right)";
    if (power == 0) return c;
    std::string t = power == 1 ? "t" : "t^{" + std::to_string(power) + "}";
    if (c == "1") return t;
    if (c == "-1") return "-" + t;
    return c + " " + t;
}

inline std::string tex_poly(const std::vector<RingElement>& P)
{
    if (P.empty()) return "0";
    std::string out;
    for (int i = 0; i < static_cast<int>(P.size()); ++i) {
        const auto& c = P[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string term = tex_term(to_string(c), i);
        if (out.empty()) out = term;
        else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}
} // namespace detail

// \frac{P(t)}{Q(t)} for polynomials over the coefficient ring.
inline std::string tex_rational(const std::vector<RingElement>& P,
                                const std::vector<RingElement>& Q)
{
    return "\\frac{" + detail::tex_poly(P) + "}{" + detail::tex_poly(Q) + "}";
}

// Truncated series rendering: 1 + (...) t + ... + O(t^{N+1}).
inline std::string series_tex(const ZetaSeries& S)
{
    std::string out;
    for (int n = 0; n <= S.N; ++n) {
        const auto& c = S.a[static_cast<std::size_t>(n)];
        if (c.is_zero()) continue;
        std::string term = detail::tex_term(to_string(c), n);
        if (out.empty()) out = term;
        else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    if (out.empty()) out = "0";
    return out + " + O(t^{" + std::to_string(S.N + 1) + "})";
}

inline Json scan_json(const ZetaSeries& S, const std::vector<HankelReport>& reports)
{
    Json scans = Json::array();
    for (const auto& rep : reports) {
        Json verdicts = Json::array();
        for (const auto& v : rep.verdicts)
            verdicts.push_back(Json{{"m", v.m}, {"verdict", to_string(v.kind, v.trials)}});
        Json j{{"n", rep.n},
               {"m_from", rep.m_from},
               {"m_to", rep.m_to},
               {"verdicts", verdicts},
               {"classification", rep.classification}};
        if (rep.n0) j["n0"] = *rep.n0;
        else j["n0"] = nullptr;
        scans.push_back(std::move(j));
    }
    return Json{{"series", S.provenance}, {"N", S.N}, {"scans", scans}};
}

inline Json certificate_json(const IrrationalityCertificate& cert)
{
    Json n_checked = Json::array();
    Json identity_multisets = Json::array();
    Json windows = Json::array();
    Json uniqueness = Json::array();
    for (const auto& rec : cert.uniqueness) {
        n_checked.push_back(rec.n);
        identity_multisets.push_back(rec.identity_multiset);
        windows.push_back(Json{{"n", rec.n}, {"m_lo", cert.m_lo}, {"m_hi", cert.m_hi}});
        uniqueness.push_back(Json{{"n", rec.n},
                                  {"permutations", rec.permutations},
                                  {"identity_multiset", rec.identity_multiset},
                                  {"nearest_competitor", rec.nearest_competitor},
                                  {"competitor_distance", rec.competitor_distance}});
    }
    Json verdicts = Json::array();
    for (const auto& chk : cert.checks)
        verdicts.push_back(Json{{"n", chk.n},
                                {"m", chk.m},
                                {"identity_top_pg", chk.identity_product.str()},
                                {"claim", chk.claim_ok},
                                {"determinant", chk.nonzero ? "nonzero" : "unresolved"}});
    return Json{{"surface", Json{{"q", cert.q.str()}, {"pg", cert.r.str()}}},
                {"n_checked", n_checked},
                {"identity_multisets", identity_multisets},
                {"windows", windows},
                {"verdicts", verdicts},
                {"uniqueness", uniqueness},
                {"conclusion", cert.conclusion}};
}

inline std::string certificate_text(const IrrationalityCertificate& cert)
{
    std::string out = "irrationality certificate for surface(q=" + cert.q.str() +
                      ", pg=" + cert.r.str() + ")\n";
    for (const auto& rec : cert.uniqueness) {
        out += "  n=" + std::to_string(rec.n) + ": " + std::to_string(rec.permutations) +
               " permutations enumerated, identity multiset {";
        for (std::size_t i = 0; i < rec.identity_multiset.size(); ++i)
            out += (i ? "," : "") + std::to_string(rec.identity_multiset[i]);
        out += "} unique; nearest competitor {";
        for (std::size_t i = 0; i < rec.nearest_competitor.size(); ++i)
            out += (i ? "," : "") + std::to_string(rec.nearest_competitor[i]);
        out += "} at distance " + std::to_string(rec.competitor_distance) + "\n";
    }
    out += "  window m in [" + std::to_string(cert.m_lo) + ", " + std::to_string(cert.m_hi) +
           "]: " + std::to_string(cert.checks.size()) +
           " determinants checked, all nonzero\n";
    out += cert.conclusion + "\n";
    return out;
}

} // namespace mzeta
