#include <doctest.h>

#include <random>

#include "geoproof/integer.hpp"
#include "geoproof/rational.hpp"
#include "support/random_values.hpp"

using namespace geoproof;
using testsupport::random_integer;
using testsupport::random_rational;

TEST_CASE("rational addition") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK((Rational(1, 2) + Rational(-1, 2)).is_zero());
    CHECK((Rational(1, 2) + Rational(-1, 2)).to_string() == "0");

    // Independent big-integer oracle: a/b + c/d = (a*d + c*b)/(b*d), reduced.
    auto oracle_add = [](const Rational& x, const Rational& y) {
        Integer a = x.numerator(), b = x.denominator();
        Integer c = y.numerator(), d = y.denominator();
        return Rational(a * d + c * b, b * d);
    };
    CHECK(Rational(762, 10) + Rational(4194, 10000) ==
          oracle_add(Rational(762, 10), Rational(4194, 10000)));
    CHECK(Rational(762, 10) + Rational(4194, 10000) == Rational(383097, 5000));
    CHECK(Rational(7620, 10) + Rational(4194, 10000) == Rational(3812097, 5000));
}

TEST_CASE("rational multiplication") {
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
    CHECK((Rational(0) * Rational(123, 7)).is_zero());
    // gcd-reduction oracle: 6/4 * 10/9 = 60/36 -> divide by gcd 12
    Integer num = Integer(6) * Integer(10);
    Integer den = Integer(4) * Integer(9);
    Integer g = gcd(num, den);
    CHECK(Rational(6, 4) * Rational(10, 9) == Rational(Integer::div_exact(num, g), Integer::div_exact(den, g)));
    CHECK(Rational(6, 4) * Rational(10, 9) == Rational(5, 3));
}

TEST_CASE("rational division") {
    CHECK(Rational(1) / Rational(3) == Rational(1, 3));
    Rational a(355, 113);
    CHECK(a / a == Rational(1));
    // cross-multiply oracle: (5/6)/(10/9) = 5*9/(6*10)
    CHECK(Rational(5, 6) / Rational(10, 9) == Rational(5 * 9, 6 * 10));
    CHECK(Rational(5, 6) / Rational(10, 9) == Rational(3, 4));
    CHECK_THROWS_AS(Rational(1) / Rational(0), math_error);
}

TEST_CASE("integer gcd") {
    CHECK(gcd(Integer(12), Integer(18)) == Integer(6));
    CHECK(gcd(Integer(0), Integer(-7)) == Integer(7));
    CHECK(gcd(Integer(0), Integer(0)) == Integer(0));
    // 2^64 + 1 = 274177 * 67280421310721 (Fermat F6); verified by division.
    Integer f6 = Integer::pow(Integer(2), 64) + Integer(1);
    CHECK(f6 % Integer(274177) == Integer(0));
    CHECK(Integer::div_exact(f6, Integer(274177)) == Integer("67280421310721"));
    CHECK(gcd(f6, Integer(274177)) == Integer(274177));
}

TEST_CASE("canonical form invariants") {
    Rational r(-6, -8);
    CHECK(r.numerator() == Integer(3));
    CHECK(r.denominator() == Integer(4));
    Rational z(0, 5);
    CHECK(z.numerator() == Integer(0));
    CHECK(z.denominator() == Integer(1));
    // canonicalization is idempotent: rebuilding from num/den is identity
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Rational x = random_rational(rng, 128);
        CHECK(Rational(x.numerator(), x.denominator()) == x);
        CHECK(gcd(x.numerator().abs(), x.denominator()) == Integer(1));
        CHECK(x.denominator().sign() == 1);
    }
}

TEST_CASE("field axioms on random 256-bit operands") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        Rational a = random_rational(rng, 256);
        Rational b = random_rational(rng, 256);
        Rational c = random_rational(rng, 256);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
    }
}

TEST_CASE("decimal round trips") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        Integer n = random_integer(rng, 200);
        CHECK(Integer(n.to_string()) == n);
        Rational q = random_rational(rng, 200);
        CHECK(Rational(q.to_string()) == q);
    }
    CHECK(Rational("3/4").to_string() == "3/4");
    CHECK(Rational("-3/4").to_string() == "-3/4");
    CHECK(Rational("12").to_string() == "12");
    CHECK_THROWS_AS(Integer("12a"), parse_error);
    CHECK_THROWS_AS(Rational(""), parse_error);
}
