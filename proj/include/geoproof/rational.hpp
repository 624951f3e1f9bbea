#pragma once

#include <gmp.h>

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

#include "geoproof/error.hpp"
#include "geoproof/integer.hpp"

namespace geoproof {

/// Exact rational number in canonical form: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1. Wraps GMP's mpq, whose
/// canonicalized form is exactly this.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw math_error("rational with zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    Rational(const Integer& num, const Integer& den) {
        if (den.is_zero()) throw math_error("rational with zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    explicit Rational(const Integer& num) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
    }

    /// Parse "p" or "p/q" with optionally signed decimal p, q.
    explicit Rational(std::string_view text) {
        std::string s(text);
        mpq_init(q_);
        if (s.empty() || mpq_set_str(q_, s.c_str(), 10) != 0 ||
            mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw parse_error("invalid rational literal '" + s + "'", 0);
        }
        mpq_canonicalize(q_);
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw math_error("rational division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw math_error("rational division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational inverse() const {
        if (is_zero()) throw math_error("inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    Integer numerator() const {
        Integer n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Integer denominator() const {
        Integer d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    std::size_t bit_length() const { return numerator().bit_length() + denominator().bit_length(); }

    /// "p/q", or just "p" for integers; round-trips through the parsing ctor.
    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        std::free(s);
        return out;
    }

    double to_double() const { return mpq_get_d(q_); }

  private:
    mpq_t q_;
};

}  // namespace geoproof
