#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>

#include "mzeta/factorize.hpp"
#include "oracles.hpp"

using namespace mzeta;
using testing::kronecker_divisor;
using testing::kronecker_irreducible;
using testing::random_poly;

TEST_CASE("pinned factorizations")
{
    REQUIRE(to_string(factor(parse_poly("6+6t"))) == "2 * 3 * (1+t)");
    REQUIRE(to_string(factor(parse_poly("12+24t+12t^2"))) == "2^2 * 3 * (1+t)^2");
    REQUIRE(to_string(factor(parse_poly("t^12-1"))) ==
            "(-1+t) * (1+t) * (1-t+t^2) * (1+t^2) * (1+t+t^2) * (1-t^2+t^4)");
    REQUIRE(to_string(factor(parse_poly("-2t"))) == "-1 * 2 * (t)");
    REQUIRE(to_string(factor(parse_poly("7"))) == "7");
    REQUIRE_THROWS_AS(factor(IntPolynomial{}), domain_error);
}

TEST_CASE("expand inverts factor")
{
    std::mt19937_64 rng(201);
    for (int i = 0; i < 150; ++i) {
        IntPolynomial f = random_poly(rng, 1 + i % 6, 9);
        REQUIRE(factor(f).expand() == f);
    }
}

TEST_CASE("factors are irreducible by the Kronecker oracle")
{
    std::mt19937_64 rng(202);
    int checked = 0;
    for (int i = 0; i < 120; ++i) {
        IntPolynomial f = random_poly(rng, 1 + i % 4, 6);
        for (const auto& [g, mult] : factor(f).factors) {
            REQUIRE(mult >= 1);
            REQUIRE(g.leading() > 0);
            REQUIRE(content(g) == 1);
            REQUIRE(kronecker_irreducible(g));
            ++checked;
        }
    }
    REQUIRE(checked > 100);
}

TEST_CASE("agreement with the oracle on irreducibility of small polynomials")
{
    std::mt19937_64 rng(203);
    for (int i = 0; i < 150; ++i) {
        IntPolynomial f = random_poly(rng, 2 + i % 3, 5);
        auto cs = content_primitive(f);
        // compare on the primitive positive-lc part, where both sides agree on
        // what "irreducible" means
        bool lib = is_irreducible(cs.primitive);
        bool oracle = kronecker_irreducible(cs.primitive);
        INFO("f = " << to_string(cs.primitive));
        REQUIRE(lib == oracle);
    }
}

TEST_CASE("constructed products refactor to the constructed multiset")
{
    // draw irreducibles certified by the rational-root argument (degree <= 3)
    std::mt19937_64 rng(204);
    auto draw_irreducible = [&]() -> IntPolynomial {
        for (;;) {
            IntPolynomial f = random_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
            auto cs = content_primitive(f);
            if (cs.primitive.degree() < 1) continue;
            if (kronecker_irreducible(cs.primitive)) return cs.primitive;
        }
    };
    for (int trial = 0; trial < 60; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        std::map<IntPolynomial, int> built;
        IntPolynomial prod = IntPolynomial::one();
        for (int j = 0; j < k; ++j) {
            IntPolynomial g = draw_irreducible();
            built[g] += 1;
            prod = prod * g;
        }
        Factorization fac = factor(prod);
        REQUIRE(fac.sign == 1);
        REQUIRE(fac.content_primes.empty());
        std::map<IntPolynomial, int> got(fac.factors.begin(), fac.factors.end());
        REQUIRE(got == built);
    }
}

TEST_CASE("squarefree structure shows up as multiplicities")
{
    IntPolynomial f = parse_poly("1+t") * parse_poly("1+t") * parse_poly("2+t^3");
    Factorization fac = factor(f);
    std::map<IntPolynomial, int> got(fac.factors.begin(), fac.factors.end());
    REQUIRE(got[parse_poly("1+t")] == 2);
    REQUIRE(got[parse_poly("2+t^3")] == 1);
}

TEST_CASE("is_irreducible edge cases")
{
    REQUIRE(is_irreducible(parse_poly("t")));
    REQUIRE(is_irreducible(parse_poly("1+t+t^2")));
    REQUIRE_FALSE(is_irreducible(parse_poly("7")));      // units and constants
    REQUIRE_FALSE(is_irreducible(parse_poly("2+2t")));   // imprimitive
    REQUIRE_FALSE(is_irreducible(parse_poly("-1-t")));   // negative leading coefficient
    REQUIRE_FALSE(is_irreducible(parse_poly("1+2t+t^2")));
    REQUIRE_FALSE(is_irreducible(parse_poly("t^4+4"))); // Sophie Germain: splits in two quadratics
}
