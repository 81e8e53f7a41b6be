#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mzeta/intpoly.hpp"
#include "oracles.hpp"

using namespace mzeta;
using testing::random_poly;

TEST_CASE("basic arithmetic and normalization")
{
    IntPolynomial z;
    REQUIRE(z.is_zero());
    REQUIRE(z.degree() == -1);

    IntPolynomial f = parse_poly("1+2t-3t^2");
    IntPolynomial g = parse_poly("-3t^2 + 2t + 1");
    REQUIRE(f == g);
    REQUIRE(f.degree() == 2);
    REQUIRE(f.leading() == -3);

    REQUIRE((f - f).is_zero());
    REQUIRE((f * IntPolynomial::one()) == f);
    REQUIRE((f * z).is_zero());
    REQUIRE(to_string(f + IntPolynomial(Integer(4))) == "5+2t-3t^2");
}

TEST_CASE("parse accepts messy input and reports positions")
{
    REQUIRE(parse_poly("  t^3 - t + 7 ") == parse_poly("7 - t + t^3"));
    REQUIRE(parse_poly("t + t") == parse_poly("2t"));
    REQUIRE(parse_poly("-t") == IntPolynomial(std::vector<Integer>{0, -1}));

    REQUIRE_THROWS_AS(parse_poly(""), domain_error);
    REQUIRE_THROWS_AS(parse_poly("1 + x"), domain_error);
    REQUIRE_THROWS_AS(parse_poly("t^"), domain_error);
    try {
        parse_poly("1 + @");
        FAIL("expected a parse failure");
    } catch (const domain_error& e) {
        REQUIRE(std::string(e.what()).find("position 4") != std::string::npos);
    }
}

TEST_CASE("to_string and parse round-trip")
{
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        IntPolynomial f = random_poly(rng, i % 6, 9);
        REQUIRE(parse_poly(to_string(f)) == f);
    }
    REQUIRE(to_string(IntPolynomial{}) == "0");
    REQUIRE(to_string(parse_poly("-1+t")) == "-1+t");
}

TEST_CASE("content and primitive part")
{
    auto split = content_primitive(parse_poly("-6-6t"));
    REQUIRE(split.content == 6);
    REQUIRE(split.sign == -1);
    REQUIRE(split.primitive == parse_poly("1+t"));
    REQUIRE_THROWS_AS(content_primitive(IntPolynomial{}), domain_error);

    std::mt19937_64 rng(102);
    for (int i = 0; i < 100; ++i) {
        IntPolynomial f = random_poly(rng, 1 + i % 5, 8);
        auto cs = content_primitive(f);
        REQUIRE(cs.content > 0);
        REQUIRE(cs.primitive.leading() > 0);
        REQUIRE(content(cs.primitive) == 1);
        REQUIRE(cs.primitive * (cs.sign * cs.content) == f);
    }
}

TEST_CASE("exact division and its failure mode")
{
    std::mt19937_64 rng(103);
    for (int i = 0; i < 200; ++i) {
        IntPolynomial a = random_poly(rng, i % 4, 7);
        IntPolynomial b = random_poly(rng, 1 + i % 3, 7);
        REQUIRE(divide_exact(a * b, b) == a);
    }
    REQUIRE_FALSE(try_divide(parse_poly("1+t^2"), parse_poly("1+t")).has_value());
    REQUIRE_THROWS_AS(divide_exact(parse_poly("1+t^2"), parse_poly("1+t")), division_error);
    REQUIRE_THROWS_AS(divide_exact(parse_poly("1"), IntPolynomial{}), division_error);
    // 2t+2 is divisible by 1+t but not by 4+4t over the integers
    REQUIRE(try_divide(parse_poly("2+2t"), parse_poly("1+t")).has_value());
    REQUIRE_FALSE(try_divide(parse_poly("2+2t"), parse_poly("4+4t")).has_value());
}

TEST_CASE("gcd is a common divisor with canonical normalization")
{
    std::mt19937_64 rng(104);
    for (int i = 0; i < 120; ++i) {
        IntPolynomial f = random_poly(rng, 1 + i % 4, 6);
        IntPolynomial g = random_poly(rng, 1 + (i / 2) % 4, 6);
        IntPolynomial h = random_poly(rng, i % 3, 6);
        IntPolynomial d = poly_gcd(f * h, g * h);
        REQUIRE(try_divide(f * h, d).has_value());
        REQUIRE(try_divide(g * h, d).has_value());
        // h divides the gcd of its two multiples
        REQUIRE(try_divide(d, content_primitive(h).primitive).has_value());
        if (!d.is_zero()) REQUIRE(d.leading() > 0);
    }
    REQUIRE(poly_gcd(parse_poly("2+2t"), parse_poly("4+8t+4t^2")) == parse_poly("2+2t"));
    REQUIRE(poly_gcd(parse_poly("2+2t"), parse_poly("4+4t^2")) == parse_poly("2"));
    REQUIRE(poly_gcd(IntPolynomial{}, parse_poly("-2t")) == parse_poly("2t"));
}

TEST_CASE("derivative and evaluation")
{
    IntPolynomial f = parse_poly("1 - 3t + 5t^3");
    REQUIRE(f.derivative() == parse_poly("-3 + 15t^2"));
    REQUIRE(f.evaluate(Integer(2)) == 1 - 6 + 40);

    std::mt19937_64 rng(105);
    for (int i = 0; i < 80; ++i) {
        IntPolynomial a = random_poly(rng, i % 4, 5);
        IntPolynomial b = random_poly(rng, i % 3, 5);
        // product rule
        REQUIRE((a * b).derivative() == a.derivative() * b + a * b.derivative());
        // evaluation is a ring homomorphism
        Integer x = testing::random_int(rng, -9, 9);
        REQUIRE((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        REQUIRE((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    }
}

TEST_CASE("ordering is total and multiplication-friendly on sign")
{
    // degree dominates, then ascending coefficient comparison
    REQUIRE(parse_poly("t^2") > parse_poly("100t"));
    REQUIRE(parse_poly("1+t") < parse_poly("2+t"));
    REQUIRE(parse_poly("1+t") == parse_poly("1+t"));
}
