#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "geoproof/error.hpp"
#include "geoproof/vartable.hpp"

namespace geoproof {

/// Exponent vector over a variable table; one entry per variable of the
/// universe. Total degree is cached.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint16_t> exps)
        : e_(std::move(exps)), deg_(std::accumulate(e_.begin(), e_.end(), 0u)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial var(std::size_t nvars, VarId v, std::uint16_t k = 1) {
        Monomial m(nvars);
        m.e_[v] = k;
        m.deg_ = k;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    std::uint32_t degree() const { return deg_; }
    std::uint16_t operator[](VarId v) const { return e_[v]; }
    bool is_one() const { return deg_ == 0; }

    const std::vector<std::uint16_t>& exponents() const { return e_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_.size());
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    bool divides(const Monomial& into) const {
        if (deg_ > into.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > into.e_[i]) return false;
        return true;
    }

    /// Quotient a / b; requires b.divides(a).
    static Monomial quotient(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_.size());
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        r.deg_ = a.deg_ - b.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e_.size());
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != 0 && b.e_[i] != 0) return false;
        return true;
    }

    /// Copy extended with zero exponents for newly appended variables.
    Monomial padded(std::size_t nvars) const {
        Monomial r = *this;
        r.e_.resize(nvars, 0);
        return r;
    }

    /// Exponent of `v` set to `k` (returns a copy).
    Monomial with_exponent(VarId v, std::uint16_t k) const {
        Monomial r = *this;
        r.deg_ = r.deg_ - r.e_[v] + k;
        r.e_[v] = k;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    /// Fixed variable-index lexicographic comparison (index 0 most
    /// significant); the canonical storage order inside Polynomial,
    /// independent of any user-selected term order.
    static std::strong_ordering cmp_canonical(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            if (a.e_[i] != b.e_[i])
                return a.e_[i] > b.e_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }

  private:
    std::vector<std::uint16_t> e_;
    std::uint32_t deg_ = 0;
};

}  // namespace geoproof
