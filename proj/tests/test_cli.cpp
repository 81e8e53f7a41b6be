#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "mzeta/cli.hpp"

using namespace mzeta;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_command(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("zeta subcommand emits all three formats")
{
    auto json = run({"zeta", "--expr", "curve(2)", "--terms", "4"});
    REQUIRE(json.code == 0);
    REQUIRE(json.out.find("\"series\": \"curve_zeta(g=2)\"") != std::string::npos);
    REQUIRE(json.out.find("[1+2t]") != std::string::npos);

    auto csv = run({"zeta", "--expr", "curve(2)", "--terms", "3", "--out", "csv"});
    REQUIRE(csv.code == 0);
    REQUIRE(csv.out.find("n,coefficient") == 0);
    REQUIRE(csv.out.find("1,\"[1+2t]\"") != std::string::npos);

    auto tex = run({"zeta", "--expr", "E", "--terms", "3", "--measure", "id-symbolic",
                    "--out", "tex"});
    REQUIRE(tex.code == 0);
    REQUIRE(tex.out.find("O(t^{4})") != std::string::npos);
    REQUIRE(tex.out.find("E t") != std::string::npos);

    auto unit = run({"zeta", "--expr", "P(3)", "--terms", "5"});
    REQUIRE(unit.code == 0);
    REQUIRE(unit.out.find("unit_zeta") != std::string::npos);
}

TEST_CASE("zeta rejects unsupported input with exit 2")
{
    REQUIRE(run({"zeta", "--expr", "curve(2", "--terms", "3"}).code == 2);
    REQUIRE(run({"zeta", "--expr", "L + point", "--terms", "3"}).code == 2);
    REQUIRE(run({"zeta", "--expr", "curve(2)", "--terms", "3", "--out", "midi"}).code == 2);
    REQUIRE(run({"zeta", "--expr", "curve(2)", "--terms", "3",
                 "--measure", "id-symbolic"}).code == 2);
    auto r = run({"zeta", "--terms", "3"});
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("--expr") != std::string::npos);
}

TEST_CASE("hankel subcommand reports verdicts and n0")
{
    setenv("MZETA_SEED", "11", 1);
    auto r = run({"hankel", "--expr", "curve(2)", "--n", "1..2", "--m", "1..6"});
    unsetenv("MZETA_SEED");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("\"scans\"") != std::string::npos);
    REQUIRE(r.out.find("consistent-with-rational at (n=1, n0=1)") != std::string::npos);
    REQUIRE(r.out.find("consistent-with-rational at (n=2, n0=0)") != std::string::npos);

    REQUIRE(run({"hankel", "--expr", "curve(2)", "--n", "0..2", "--m", "1..6"}).code == 2);
    REQUIRE(run({"hankel", "--expr", "curve(2)", "--n", "2..1", "--m", "1..6"}).code == 2);
    REQUIRE(run({"hankel", "--expr", "curve(2)", "--n", "1..2", "--m", "banana"}).code == 2);
}

TEST_CASE("certify produces certificates and distinguishes failure kinds")
{
    auto ok = run({"certify", "--surface", "q=0,pg=2", "--nmax", "3",
                   "--mwindow", "1..10"});
    REQUIRE(ok.code == 0);
    REQUIRE(ok.out.find("\"surface\"") != std::string::npos);
    REQUIRE(ok.out.find("\"conclusion\"") != std::string::npos);

    auto text = run({"certify", "--surface", "q=0,pg=3", "--nmax", "2",
                     "--mwindow", "1..5", "--out", "text"});
    REQUIRE(text.code == 0);
    REQUIRE(text.out.find("identity multiset {2,4} unique") != std::string::npos);

    REQUIRE(run({"certify", "--surface", "q=0,pg=1", "--nmax", "3",
                 "--mwindow", "1..10"}).code == 2);
    REQUIRE(run({"certify", "--surface", "q=0,pg=2", "--nmax", "9",
                 "--mwindow", "1..10"}).code == 2);
    REQUIRE(run({"certify", "--surface", "pg=2", "--nmax", "3",
                 "--mwindow", "1..10"}).code == 2);
}

TEST_CASE("examples subcommand checks the closed forms")
{
    auto r = run({"examples", "--check", "p1,p2,elliptic", "--terms", "50"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("p1: ok") != std::string::npos);
    REQUIRE(r.out.find("p2: ok") != std::string::npos);
    REQUIRE(r.out.find("elliptic: ok") != std::string::npos);

    REQUIRE(run({"examples", "--check", "p3", "--terms", "10"}).code == 2);
}

TEST_CASE("factor subcommand prints the factorization")
{
    auto r = run({"factor", "--poly", "6+6t"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "6+6t = 2 * 3 * (1+t)\n");
    REQUIRE(run({"factor", "--poly", "6+6q"}).code == 2);
}

TEST_CASE("symhodge subcommand emits the invariants")
{
    auto r = run({"symhodge", "--expr", "surface(0,2)", "--n", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("\"dim\": 4") != std::string::npos);
    REQUIRE(r.out.find("1+2t^2+3t^4") != std::string::npos);
    REQUIRE(run({"symhodge", "--expr", "E + E", "--n", "2"}).code == 2);
}

TEST_CASE("seeded runs are reproducible")
{
    setenv("MZETA_SEED", "31337", 1);
    auto a = run({"hankel", "--expr", "surface(0,2)", "--n", "1..1", "--m", "1..4"});
    setenv("MZETA_SEED", "31337", 1);
    auto b = run({"hankel", "--expr", "surface(0,2)", "--n", "1..1", "--m", "1..4"});
    unsetenv("MZETA_SEED");
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);

    setenv("MZETA_SEED", "not-a-number", 1);
    auto bad = run({"hankel", "--expr", "curve(1)", "--n", "1..1", "--m", "1..2"});
    unsetenv("MZETA_SEED");
    REQUIRE(bad.code == 2);
}

TEST_CASE("usage errors and help")
{
    REQUIRE(run({}).code == 2);
    REQUIRE(run({"conjure"}).code == 2);
    auto help = run({"--help"});
    REQUIRE(help.code == 0);
    REQUIRE(help.out.find("certify") != std::string::npos);
}
