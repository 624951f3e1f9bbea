#pragma once

#include <string>
#include <utility>

#include "geoproof/poly_gcd.hpp"
#include "geoproof/poly_io.hpp"
#include "geoproof/polynomial.hpp"

namespace geoproof {

/// Element of the rational function field over the free variables:
/// num/den with den nonzero, gcd(num, den) constant, den primitive with a
/// positive leading coefficient under the canonical order. Equality is
/// syntactic on the canonical form.
class RatFunc {
  public:
    RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
        VarTable::check_same(num_.table(), den_.table());
        if (den_.is_zero()) throw math_error("rational function with zero denominator");
        normalize();
    }

    explicit RatFunc(PolyQ num)
        : num_(std::move(num)), den_(PolyQ::constant(num_.table(), Rational(1))) {
        normalize();
    }

    static RatFunc zero(const VarTable::Ptr& table) { return RatFunc(PolyQ::zero(table)); }
    static RatFunc one(const VarTable::Ptr& table) {
        return RatFunc(PolyQ::constant(table, Rational(1)));
    }
    static RatFunc from_rational(const VarTable::Ptr& table, const Rational& q) {
        return RatFunc(PolyQ::constant(table, q));
    }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    const VarTable::Ptr& table() const { return num_.table(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_is_one() && num_.is_constant() && !num_.is_zero() && num_.constant_value().is_one(); }
    bool den_is_one() const {
        return den_.is_constant() && !den_.is_zero() && den_.constant_value().is_one();
    }
    /// Polynomial (denominator-free) element; the common case inside the
    /// fraction-free Groebner engine.
    bool is_polynomial() const { return den_is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw math_error("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc inverse() const {
        if (is_zero()) throw math_error("inverse of the zero rational function");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        if (den_is_one()) return geoproof::to_string(num_);
        return "(" + geoproof::to_string(num_) + ")/(" + geoproof::to_string(den_) + ")";
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = PolyQ::constant(num_.table(), Rational(1));
            return;
        }
        if (!den_.is_constant()) {
            PolyQ g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = detail::exact_div_checked(num_, g);
                den_ = detail::exact_div_checked(den_, g);
            }
        }
        Rational c = rational_content(den_);
        if (den_.terms().front().coeff.sign() < 0) c = -c;
        if (!c.is_one()) {
            Rational inv = c.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    PolyQ num_, den_;
};

inline std::string coeff_to_string(const RatFunc& c) { return c.to_string(); }

/// View of a polynomial over the full universe as a polynomial in the
/// dependent variables with rational-function coefficients in the free
/// variables (denominators 1). Monomials keep the full-universe layout with
/// zero exponents on free variables.
inline Polynomial<RatFunc> to_parametric(const PolyQ& f) {
    const auto& table = f.table();
    auto params = table->parameter_table();
    std::size_t m = table->free_count();

    // Split each term, group by the dependent part.
    struct Bucket {
        Monomial dep;
        std::vector<PolyQ::Term> coeff_terms;
    };
    std::vector<Bucket> buckets;
    for (const auto& t : f.terms()) {
        std::vector<std::uint16_t> dep_e(table->size(), 0);
        std::vector<std::uint16_t> par_e(m, 0);
        for (std::size_t v = 0; v < table->size(); ++v) {
            if (v < m)
                par_e[v] = t.mono[static_cast<VarId>(v)];
            else
                dep_e[v] = t.mono[static_cast<VarId>(v)];
        }
        Monomial dep(std::move(dep_e));
        Bucket* b = nullptr;
        for (auto& bb : buckets)
            if (bb.dep == dep) {
                b = &bb;
                break;
            }
        if (!b) {
            buckets.push_back({dep, {}});
            b = &buckets.back();
        }
        b->coeff_terms.push_back({Monomial(std::move(par_e)), t.coeff});
    }

    std::vector<Polynomial<RatFunc>::Term> terms;
    terms.reserve(buckets.size());
    for (auto& b : buckets) {
        PolyQ coeff = PolyQ::from_terms(params, std::move(b.coeff_terms));
        terms.push_back({b.dep, RatFunc(std::move(coeff))});
    }
    return Polynomial<RatFunc>::from_terms(table, std::move(terms));
}

/// Inverse of to_parametric for denominator-free inputs: multiplies the
/// coefficient polynomials back into the full universe. Throws if any
/// coefficient has a nontrivial denominator.
inline PolyQ from_parametric(const Polynomial<RatFunc>& f) {
    const auto& table = f.table();
    std::size_t m = table->free_count();
    std::vector<PolyQ::Term> terms;
    for (const auto& t : f.terms()) {
        if (!t.coeff.is_polynomial())
            throw math_error("cannot flatten a rational-function coefficient");
        for (const auto& pt : t.coeff.num().terms()) {
            std::vector<std::uint16_t> e = t.mono.exponents();
            for (std::size_t v = 0; v < m; ++v) e[v] = pt.mono[static_cast<VarId>(v)];
            terms.push_back({Monomial(std::move(e)), pt.coeff});
        }
    }
    return PolyQ::from_terms(table, std::move(terms));
}

/// Clears denominators: the unique (up to sign) denominator-free scalar
/// multiple with primitive coefficient set. Preserves the ideal membership
/// semantics over the rational function field.
inline Polynomial<RatFunc> clear_denominators(const Polynomial<RatFunc>& f) {
    if (f.is_zero()) return f;
    auto params = f.terms().front().coeff.table();
    PolyQ den_lcm = PolyQ::constant(params, Rational(1));
    for (const auto& t : f.terms()) {
        if (t.coeff.is_polynomial()) continue;
        PolyQ g = poly_gcd(den_lcm, t.coeff.den());
        den_lcm = den_lcm * detail::exact_div_checked(t.coeff.den(), g);
    }
    if (den_lcm.is_constant()) return f;
    RatFunc scale{den_lcm};
    std::vector<Polynomial<RatFunc>::Term> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) terms.push_back({t.mono, t.coeff * scale});
    return Polynomial<RatFunc>::from_terms(f.table(), std::move(terms));
}

}  // namespace geoproof
