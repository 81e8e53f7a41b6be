#pragma once

// Command-line front end. run_command() is the whole program: the binary's
// main() only forwards argv. Exit codes: 0 success, 1 failed check,
// 2 usage or domain error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mzeta/dsl.hpp"
#include "mzeta/report.hpp"
#include "mzeta/series.hpp"

namespace mzeta {

namespace detail {

inline std::mt19937_64 make_rng()
{
    if (const char* env = std::getenv("MZETA_SEED")) {
        std::string s(env);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw domain_error("MZETA_SEED must be a nonnegative integer");
        try {
            return std::mt19937_64(std::stoull(s));
        } catch (const std::out_of_range&) {
            throw domain_error("MZETA_SEED does not fit in 64 bits");
        }
    }
    std::random_device rd;
    return std::mt19937_64((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
}

// "A..B", both ends inclusive
inline std::pair<int, int> parse_range(const std::string& s, const char* flag)
{
    auto bad = [&] {
        throw domain_error(std::string(flag) + " expects a range A..B, got '" + s + "'");
    };
    auto dots = s.find("..");
    if (dots == std::string::npos) bad();
    int lo = 0, hi = 0;
    try {
        std::size_t used = 0;
        lo = std::stoi(s.substr(0, dots), &used);
        if (used != dots) bad();
        hi = std::stoi(s.substr(dots + 2), &used);
        if (used != s.size() - dots - 2) bad();
    } catch (const std::logic_error&) {
        bad();
    }
    if (lo > hi) throw domain_error(std::string(flag) + ": empty range " + s);
    return {lo, hi};
}

// "q=Q,pg=R" (either key order)
inline std::pair<Integer, Integer> parse_surface_spec(const std::string& s)
{
    auto bad = [&] {
        throw domain_error("--surface expects q=Q,pg=R, got '" + s + "'");
    };
    std::optional<Integer> q, pg;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto eq = part.find('=');
        if (eq == std::string::npos) bad();
        std::string key = part.substr(0, eq);
        std::string val = part.substr(eq + 1);
        if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos) bad();
        if (key == "q" && !q) q = Integer(val);
        else if (key == "pg" && !pg) pg = Integer(val);
        else bad();
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!q || !pg) bad();
    return {*q, *pg};
}

inline int small_int(const Integer& v, const char* what)
{
    if (v < 0 || v > 1000000) throw domain_error(std::string(what) + " out of range");
    return v.convert_to<int>();
}

inline HodgeVector leaf_hodge(const VarietyExpr& e)
{
    using Node = VarietyExpr::Node;
    switch (e.node) {
    case Node::point: return HodgeVector::point();
    case Node::proj: return HodgeVector::proj(small_int(e.a, "P(n)"));
    case Node::elliptic: return HodgeVector::curve(1);
    case Node::curve: return HodgeVector::curve(e.a);
    case Node::surface: return HodgeVector::surface(e.a, e.b);
    default:
        throw domain_error("expected a single geometric leaf "
                           "(point, P(n), E, curve(g), surface(q,pg))");
    }
}

inline ZetaSeries hodge_leaf_zeta(const VarietyExpr& e, int N)
{
    using Node = VarietyExpr::Node;
    switch (e.node) {
    case Node::point:
    case Node::proj: break; // all coefficients are 1, handled below
    case Node::elliptic: return curve_zeta(1, N);
    case Node::curve: return curve_zeta(e.a, N);
    case Node::surface: return surface_leading_zeta(e.a, e.b, N);
    default:
        throw domain_error("zeta needs a single geometric leaf "
                           "(point, P(n), E, curve(g), surface(q,pg))");
    }
    // point and P(n): every symmetric-power measure is 1
    ZetaSeries S{Alphabet::hodge(), {}, N, "unit_zeta(" + serialize(e) + ")"};
    S.a.assign(static_cast<std::size_t>(N) + 1, FieldElement::constant(S.alphabet, 1));
    return S;
}

inline ZetaSeries id_leaf_zeta(const VarietyExpr& e, int N)
{
    using Node = VarietyExpr::Node;
    if (e.node == Node::proj && e.a == 1) return id_measure_series(IdVariety::p1, N);
    if (e.node == Node::proj && e.a == 2) return id_measure_series(IdVariety::p2, N);
    if (e.node == Node::elliptic) return id_measure_series(IdVariety::elliptic, N);
    throw domain_error("the id-symbolic measure is tabulated for P(1), P(2), and E only");
}

inline std::vector<RingElement> poly_mul(const std::vector<RingElement>& a,
                                         const std::vector<RingElement>& b)
{
    if (a.empty() || b.empty()) return {};
    Alphabet alpha = a.front().alphabet();
    std::vector<RingElement> c(a.size() + b.size() - 1, RingElement(alpha));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

// 1 - L^k t as a degree-1 polynomial over the symbol ring
inline std::vector<RingElement> one_minus_lk_t(const Alphabet& alpha, int k)
{
    MonoidWord lk = MonoidWord::atom_power(Atom::symbol("L"), k);
    return {RingElement::constant(alpha, 1), -RingElement::basis(alpha, lk)};
}

struct ExampleIdentity {
    ZetaSeries series;
    std::vector<RingElement> P, Q;
    std::string display;
};

// The three closed forms the identity measure satisfies:
//   zeta_{P1} = 1/((1-t)(1-Lt))
//   zeta_{P2} = 1/((1-t)(1-Lt)(1-L^2 t))
//   zeta_E    = 1 + E t / ((1-t)(1-Lt))
inline ExampleIdentity example_identity(const std::string& name, int N)
{
    Alphabet alpha = id_alphabet();
    auto one = std::vector<RingElement>{RingElement::constant(alpha, 1)};
    if (name == "p1") {
        auto Q = poly_mul(one_minus_lk_t(alpha, 0), one_minus_lk_t(alpha, 1));
        return {id_measure_series(IdVariety::p1, N), one, Q,
                "(1 - t)(1 - L t) * zeta = 1"};
    }
    if (name == "p2") {
        auto Q = poly_mul(poly_mul(one_minus_lk_t(alpha, 0), one_minus_lk_t(alpha, 1)),
                          one_minus_lk_t(alpha, 2));
        return {id_measure_series(IdVariety::p2, N), one, Q,
                "(1 - t)(1 - L t)(1 - L^2 t) * zeta = 1"};
    }
    if (name == "elliptic") {
        auto Q = poly_mul(one_minus_lk_t(alpha, 0), one_minus_lk_t(alpha, 1));
        // P = Q + E t, so that zeta = 1 + E t / ((1-t)(1-Lt))
        auto P = Q;
        P[1] = P[1] + RingElement::basis(alpha, MonoidWord::atom_power(Atom::symbol("E"), 1));
        return {id_measure_series(IdVariety::elliptic, N), P, Q,
                "(1 - t)(1 - L t) * zeta = (1 - t)(1 - L t) + E t"};
    }
    throw domain_error("unknown example '" + name + "' (expected p1, p2, elliptic)");
}

inline std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        parts.push_back(s.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

} // namespace detail

inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact symmetric-power zeta computations with the Hodge measure", "mzeta"};
    app.require_subcommand(1);

    std::string expr_text, out_format = "json", measure = "hodge";
    int terms = 0, trials = 6, nmax = 0, sym_n = 0;
    std::string n_range, m_range, surface_spec, mwindow, checks;

    auto* zeta = app.add_subcommand("zeta", "truncated zeta series of a leaf variety");
    zeta->add_option("--expr", expr_text, "leaf expression, e.g. curve(2)")->required();
    zeta->add_option("--terms", terms, "truncation order N")->required();
    zeta->add_option("--measure", measure, "hodge or id-symbolic")
        ->check(CLI::IsMember({"hodge", "id-symbolic"}));
    zeta->add_option("--out", out_format, "json, csv, or tex")
        ->check(CLI::IsMember({"json", "csv", "tex"}));

    auto* hankel = app.add_subcommand("hankel", "Hankel determinant verdicts for a leaf zeta");
    hankel->add_option("--expr", expr_text, "leaf expression")->required();
    hankel->add_option("--n", n_range, "denominator degrees, A..B")->required();
    hankel->add_option("--m", m_range, "offsets, C..D")->required();
    hankel->add_option("--measure", measure, "hodge or id-symbolic")
        ->check(CLI::IsMember({"hodge", "id-symbolic"}));
    hankel->add_option("--trials", trials, "sampling budget per determinant");

    auto* certify = app.add_subcommand("certify", "irrationality certificate for a surface");
    certify->add_option("--surface", surface_spec, "q=Q,pg=R with pg >= 2")->required();
    certify->add_option("--nmax", nmax, "denominator degrees 1..K (K <= 7)")->required();
    certify->add_option("--mwindow", mwindow, "offsets C..D")->required();
    certify->add_option("--out", out_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* examples = app.add_subcommand("examples", "verify the closed-form example series");
    examples->add_option("--check", checks, "comma list from p1,p2,elliptic")->required();
    examples->add_option("--terms", terms, "truncation order N")->required();

    auto* factor_cmd = app.add_subcommand("factor", "factor an integer polynomial");
    factor_cmd->add_option("--poly", expr_text, "polynomial in t, e.g. \"6+6t\"")->required();

    auto* symhodge = app.add_subcommand("symhodge", "(k,0)-invariants of a symmetric power");
    symhodge->add_option("--expr", expr_text, "leaf expression")->required();
    symhodge->add_option("--n", sym_n, "symmetric power")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(zeta)) {
            if (terms < 0) throw domain_error("--terms must be nonnegative");
            ExprPtr e = parse_expr(expr_text);
            ZetaSeries S = measure == "hodge" ? detail::hodge_leaf_zeta(*e, terms)
                                              : detail::id_leaf_zeta(*e, terms);
            if (out_format == "json") out << series_json(S).dump(2) << '\n';
            else if (out_format == "csv") out << series_csv(S);
            else out << series_tex(S) << '\n';
            return 0;
        }

        if (app.got_subcommand(hankel)) {
            auto [n_lo, n_hi] = detail::parse_range(n_range, "--n");
            auto [m_lo, m_hi] = detail::parse_range(m_range, "--m");
            if (n_lo < 1) throw domain_error("--n degrees must be >= 1");
            if (m_lo < 0) throw domain_error("--m offsets must be >= 0");
            if (trials < 1) throw domain_error("--trials must be >= 1");
            ExprPtr e = parse_expr(expr_text);
            int N = m_hi + 2 * n_hi;
            ZetaSeries S = measure == "hodge" ? detail::hodge_leaf_zeta(*e, N)
                                              : detail::id_leaf_zeta(*e, N);
            std::mt19937_64 rng = detail::make_rng();
            std::vector<HankelReport> reports;
            for (int n = n_lo; n <= n_hi; ++n) {
                HankelReport rep;
                rep.n = n;
                rep.m_from = m_lo;
                rep.m_to = m_hi;
                int last_nonzero = m_lo - 1;
                for (int m = m_lo; m <= m_hi; ++m) {
                    HankelVerdict v = classify_hankel(S, m, n, trials, rng);
                    if (v.kind != HankelVerdict::Kind::zero) last_nonzero = m;
                    rep.verdicts.push_back(v);
                }
                if (last_nonzero == m_hi) {
                    rep.classification = "no vanishing tail found";
                } else {
                    rep.n0 = last_nonzero;
                    rep.classification = "consistent-with-rational at (n=" + std::to_string(n) +
                                         ", n0=" + std::to_string(last_nonzero) + ")";
                }
                reports.push_back(std::move(rep));
            }
            out << scan_json(S, reports).dump(2) << '\n';
            return 0;
        }

        if (app.got_subcommand(certify)) {
            auto [q, r] = detail::parse_surface_spec(surface_spec);
            auto [m_lo, m_hi] = detail::parse_range(mwindow, "--mwindow");
            if (r < 2) throw domain_error("certify requires pg >= 2");
            if (nmax < 1 || nmax > 7)
                throw domain_error("--nmax must lie in 1..7 (exhaustive enumeration budget)");
            if (m_lo < 1) throw domain_error("--mwindow offsets must be >= 1");
            IrrationalityCertificate cert;
            try {
                cert = certify_irrational(q, r, nmax, m_lo, m_hi);
            } catch (const error& e) {
                err << "certificate check failed: " << e.what() << '\n';
                return 1;
            }
            if (out_format == "text") out << certificate_text(cert);
            else out << certificate_json(cert).dump(2) << '\n';
            return 0;
        }

        if (app.got_subcommand(examples)) {
            if (terms < 1) throw domain_error("--terms must be >= 1");
            bool all_ok = true;
            for (const std::string& name : detail::split_commas(checks)) {
                detail::ExampleIdentity ex = detail::example_identity(name, terms);
                bool ok = rational_check_mul(ex.series, ex.P, ex.Q);
                all_ok = all_ok && ok;
                out << name << ": " << (ok ? "ok" : "FAILED") << " -- " << ex.display
                    << " through t^" << terms << '\n';
            }
            return all_ok ? 0 : 1;
        }

        if (app.got_subcommand(factor_cmd)) {
            IntPolynomial f = parse_poly(expr_text);
            Factorization fac = factor(f);
            out << to_string(f) << " = " << to_string(fac) << '\n';
            return 0;
        }

        if (app.got_subcommand(symhodge)) {
            if (sym_n < 0) throw domain_error("--n must be nonnegative");
            ExprPtr e = parse_expr(expr_text);
            HodgeVector a = detail::leaf_hodge(*e);
            HodgeVector s = a.dim == 2 ? hilbert_scheme_h0(a, sym_n) : sym_power(a, sym_n);
            Json h = Json::array();
            for (const auto& hk : s.h) h.push_back(hk.str());
            out << Json{{"expr", serialize(*e)},
                        {"n", sym_n},
                        {"dim", s.dim},
                        {"h", h},
                        {"psi", to_string(psi_poly(s))},
                        {"measure_word", to_string(psi_h(s))}}
                       .dump(2)
                << '\n';
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2; // unreachable with require_subcommand(1)
}

} // namespace mzeta
