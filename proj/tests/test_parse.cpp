#include <doctest.h>

#include <random>

#include "geoproof/poly_io.hpp"
#include "support/random_values.hpp"

using namespace geoproof;

namespace {
PolyQ rnd_poly(std::mt19937_64& rng, const VarTable::Ptr& table) {
    std::uniform_int_distribution<int> nterms(0, 8), expd(0, 4);
    std::vector<PolyQ::Term> ts;
    for (int i = 0; i < nterms(rng); ++i) {
        std::vector<std::uint16_t> e(table->size());
        for (auto& x : e) x = static_cast<std::uint16_t>(expd(rng));
        ts.push_back({Monomial(std::move(e)), testsupport::small_rational(rng)});
    }
    return PolyQ::from_terms(table, std::move(ts));
}
}  // namespace

TEST_CASE("parses corpus hypothesis polynomials") {
    std::vector<std::string> dep;
    for (int i = 1; i <= 13; ++i) dep.push_back("x" + std::to_string(i));
    auto vt = VarTable::make({"u1", "u2", "k"}, dep);

    PolyQ h1 = parse_poly("x1^2-x4^2-x5^2", vt);
    PolyQ built = PolyQ::zero(vt);
    auto var = [&](const char* n) { return PolyQ::variable(vt, vt->require(n), Rational(1)); };
    built = var("x1") * var("x1") - var("x4") * var("x4") - var("x5") * var("x5");
    CHECK(h1 == built);

    CHECK(parse_poly("0", vt).is_zero());

    PolyQ h2 = parse_poly("(1-x1)^2-(1-x2)^2-x3^2", vt);
    PolyQ one = PolyQ::constant(vt, Rational(1));
    PolyQ expect = (one - var("x1")) * (one - var("x1")) - (one - var("x2")) * (one - var("x2")) -
                   var("x3") * var("x3");
    CHECK(h2 == expect);
}

TEST_CASE("parse errors carry positions; unknown variables are distinct") {
    auto t = VarTable::make({}, {"x", "y"});
    CHECK_THROWS_AS(parse_poly("x+", t), parse_error);
    CHECK_THROWS_AS(parse_poly("(x+y", t), parse_error);
    CHECK_THROWS_AS(parse_poly("x**y", t), parse_error);
    CHECK_THROWS_AS(parse_poly("x^", t), parse_error);
    CHECK_THROWS_AS(parse_poly("z+1", t), unknown_variable_error);
    try {
        parse_poly("x + q", t);
        CHECK(false);
    } catch (const unknown_variable_error& e) {
        CHECK(std::string(e.what()).find("q") != std::string::npos);
    }
}

TEST_CASE("rational coefficients and exponents") {
    auto t = VarTable::make({}, {"x"});
    CHECK(parse_poly("3/4*x^2", t) ==
          PolyQ::from_term(t, Monomial::var(1, 0, 2), Rational(3, 4)));
    CHECK(parse_poly("-x", t) == PolyQ::variable(t, 0, Rational(-1)));
    CHECK(parse_poly("x^0", t) == PolyQ::constant(t, Rational(1)));
    CHECK(parse_poly(" 2 * x - 1/2 ", t) ==
          PolyQ::variable(t, 0, Rational(2)) - PolyQ::constant(t, Rational(1, 2)));
}

TEST_CASE("print/parse round trip on random polynomials") {
    auto t = VarTable::make({"u1"}, {"x", "y"});
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        PolyQ f = rnd_poly(rng, t);
        CHECK(parse_poly(to_string(f), t) == f);
    }
    CHECK(to_string(PolyQ::zero(t)) == "0");
}

TEST_CASE("printing respects a supplied term order") {
    auto t = VarTable::make({}, {"x", "y"});
    PolyQ f = parse_poly("y^3+x", t);
    auto drl = TermOrder::degrevlex(t);
    CHECK(to_string(f, &drl) == "y^3 + x");
    CHECK(parse_poly(to_string(f, &drl), t) == f);
}
