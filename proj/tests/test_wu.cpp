#include <doctest.h>

#include <random>

#include "geoproof/poly_io.hpp"
#include "geoproof/wu.hpp"
#include "support/naive_poly.hpp"
#include "support/random_values.hpp"

using namespace geoproof;
using testsupport::NaivePoly;

namespace {

PolyQ rnd_poly(std::mt19937_64& rng, const VarTable::Ptr& table, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> nterms(1, max_terms), expd(0, max_exp);
    std::vector<PolyQ::Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint16_t> e(table->size());
        for (auto& x : e) x = static_cast<std::uint16_t>(expd(rng));
        ts.push_back({Monomial(std::move(e)), testsupport::small_rational(rng)});
    }
    return PolyQ::from_terms(table, std::move(ts));
}

bool identity_holds(const PolyQ& f, const PolyQ& g, const PseudoDivisionResult& res) {
    NaivePoly lhs = NaivePoly::from(res.multiplier) * NaivePoly::from(f);
    NaivePoly rhs = NaivePoly::from(res.quotient) * NaivePoly::from(g) + NaivePoly::from(res.remainder);
    return lhs == rhs;
}

}  // namespace

TEST_CASE("pseudo-division examples") {
    auto t = VarTable::make({}, {"x", "y"});
    VarId y = t->require("y");

    auto r1 = prem(parse_poly("y^2", t), parse_poly("x*y+1", t), y);
    CHECK(r1.remainder == parse_poly("1", t));
    CHECK(r1.quotient == parse_poly("x*y-1", t));
    CHECK(r1.multiplier == parse_poly("x^2", t));
    CHECK(identity_holds(parse_poly("y^2", t), parse_poly("x*y+1", t), r1));

    auto r2 = prem(parse_poly("x*y+3", t), parse_poly("y^2+x", t), y);
    CHECK(r2.remainder == parse_poly("x*y+3", t));
    CHECK(r2.quotient.is_zero());
    CHECK(r2.multiplier == parse_poly("1", t));

    auto r3 = prem(parse_poly("x*y", t), parse_poly("x*y", t), y);
    CHECK(r3.remainder.is_zero());

    CHECK_THROWS_AS(prem(parse_poly("y", t), PolyQ::zero(t), y), math_error);
    CHECK_THROWS_AS(prem(parse_poly("y", t), parse_poly("x", t), y), math_error);
}

TEST_CASE("reduced-multiplier pseudo-division") {
    auto t = VarTable::make({"u1"}, {"y"});
    VarId y = t->require("y");
    PolyQ f = parse_poly("u1^2*y+u1", t);
    PolyQ g = parse_poly("u1*y+1", t);

    auto red = prem_reduced_multiplier(f, g, y);
    CHECK(red.remainder.is_zero());
    CHECK(red.multiplier == parse_poly("1", t));
    CHECK(red.quotient == parse_poly("u1", t));
    CHECK(identity_holds(f, g, red));

    auto cls = prem(f, g, y);
    CHECK(cls.remainder.is_zero());
    CHECK(cls.multiplier == parse_poly("u1", t));
    CHECK(identity_holds(f, g, cls));

    // constant divisor lead: both variants coincide with ordinary division
    PolyQ g2 = parse_poly("y+u1", t);
    PolyQ f2 = parse_poly("y^2", t);
    auto a = prem(f2, g2, y);
    auto b = prem_reduced_multiplier(f2, g2, y);
    CHECK(a.remainder == b.remainder);
    CHECK(a.quotient == b.quotient);
    CHECK(a.multiplier == parse_poly("1", t));
    CHECK(b.multiplier == parse_poly("1", t));
}

TEST_CASE("pseudo-division identity and degree bound on random inputs") {
    auto t = VarTable::make({"u"}, {"x", "y"});
    VarId y = t->require("y");
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 60) {
        PolyQ f = rnd_poly(rng, t, 5, 3);
        PolyQ g = rnd_poly(rng, t, 4, 3);
        if (g.is_zero() || g.degree_in(y) == 0) continue;
        auto cls = prem(f, g, y);
        auto red = prem_reduced_multiplier(f, g, y);
        CHECK(identity_holds(f, g, cls));
        CHECK(identity_holds(f, g, red));
        if (!cls.remainder.is_zero()) CHECK(cls.remainder.degree_in(y) < g.degree_in(y));
        if (!red.remainder.is_zero()) CHECK(red.remainder.degree_in(y) < g.degree_in(y));
        // remainders agree up to the multiplier ratio: r_cls*m_red == r_red*m_cls
        CHECK(cls.remainder * red.multiplier == red.remainder * cls.multiplier);
        ++done;
    }
}

TEST_CASE("triangulation") {
    auto t = VarTable::make({}, {"x1", "x2"});
    VarId x1 = t->require("x1"), x2 = t->require("x2");

    // already triangular
    auto c1 = triangulate({parse_poly("x1-1", t), parse_poly("x2-x1", t)}, {x2, x1});
    REQUIRE(c1.size() == 2);
    CHECK(c1.chain[0] == parse_poly("x1-1", t));
    CHECK(c1.chain[1] == parse_poly("x2-x1", t));
    CHECK(c1.main_vars == std::vector<VarId>{x1, x2});
    CHECK(c1.shape_ok());

    // difference eliminates x2^2, then the x2-level element remains
    auto c2 = triangulate({parse_poly("x2^2-x1", t), parse_poly("x2^2+x1", t)}, {x2, x1});
    REQUIRE(c2.size() == 2);
    CHECK(c2.chain[0] == parse_poly("x1", t));
    CHECK(c2.main_vars[0] == x1);
    CHECK(c2.chain[1] == parse_poly("x2^2-x1", t));
    CHECK(c2.shape_ok());

    // degenerate: hypotheses collapse to a parameter-only nonzero polynomial
    auto tu = VarTable::make({"u"}, {"x"});
    CHECK_THROWS_AS(
        triangulate({parse_poly("x-u", tu), parse_poly("x-u-1", tu)}, {tu->require("x")}),
        math_error);

    // free variables may not serve as main variables
    CHECK_THROWS_AS(triangulate({parse_poly("x-u", tu)}, {tu->require("u")}), math_error);
}

TEST_CASE("chain shape invariant on random triangular-able systems") {
    auto t = VarTable::make({"u"}, {"x1", "x2", "x3"});
    std::vector<VarId> order{t->require("x3"), t->require("x2"), t->require("x1")};
    std::mt19937_64 rng(19);
    int done = 0;
    while (done < 20) {
        std::vector<PolyQ> H;
        for (int i = 0; i < 3; ++i) H.push_back(rnd_poly(rng, t, 4, 2));
        try {
            auto ch = triangulate(H, order);
            CHECK(ch.shape_ok());
            ++done;
        } catch (const math_error&) {
            // degenerate random system; draw again
        }
    }
}

TEST_CASE("prem_chain") {
    auto t = VarTable::make({}, {"x1", "x2"});
    VarId x1 = t->require("x1"), x2 = t->require("x2");
    auto ch = triangulate({parse_poly("x1^2-1", t), parse_poly("x2^2-x1", t)}, {x2, x1});

    // already reduced with respect to all main variables
    PolyQ g = parse_poly("x1*x2", t);
    CHECK(prem_chain(g, ch) == g);

    // the top element itself
    CHECK(prem_chain(parse_poly("x2^2-x1", t), ch).is_zero());

    // x2^4 - 1 = (x2^2-x1)(x2^2+x1) + x1^2 - 1 vanishes on the chain
    CHECK(prem_chain(parse_poly("x2^4-1", t), ch).is_zero());

    // and something that does not vanish
    CHECK(!prem_chain(parse_poly("x2-1", t), ch).is_zero());
}
