#pragma once

#include <gmp.h>

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include "geoproof/error.hpp"

namespace geoproof {

/// Arbitrary-precision integer, a value-semantic wrapper around GMP's mpz.
/// GMP keeps the canonical sign-magnitude representation (no leading zero
/// limbs, unique zero), which is exactly the invariant we need.
class Integer {
  public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }

    /// Parse an optionally signed decimal string.
    explicit Integer(std::string_view text) {
        std::string s(text);
        if (s.empty() || mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw parse_error("invalid integer literal '" + s + "'", 0);
        }
    }

    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        Integer r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Integer operator-() const {
        Integer r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Integer& operator+=(const Integer& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Integer& operator-=(const Integer& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    /// Truncated division; throws on zero divisor.
    friend Integer operator/(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw math_error("integer division by zero");
        Integer r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator%(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw math_error("integer modulo by zero");
        Integer r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }

    /// Quotient when the division is known exact (faster than operator/).
    static Integer div_exact(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw math_error("integer division by zero");
        Integer r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }

    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }

    Integer abs() const {
        Integer r;
        mpz_abs(r.z_, z_);
        return r;
    }

    /// Nonnegative gcd with gcd(0,0) = 0.
    static Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    static Integer lcm(const Integer& a, const Integer& b) {
        Integer r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    static Integer pow(const Integer& base, unsigned long e) {
        Integer r;
        mpz_pow_ui(r.z_, base.z_, e);
        return r;
    }

    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        std::free(s);
        return out;
    }

    /// Raw handle for interop inside the library (e.g. building rationals).
    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

  private:
    mpz_t z_;
};

inline Integer gcd(const Integer& a, const Integer& b) { return Integer::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return Integer::lcm(a, b); }

}  // namespace geoproof
