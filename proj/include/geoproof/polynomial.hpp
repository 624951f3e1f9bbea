#pragma once

#include <algorithm>
#include <concepts>
#include <utility>
#include <vector>

#include "geoproof/error.hpp"
#include "geoproof/monomial.hpp"
#include "geoproof/rational.hpp"
#include "geoproof/term_order.hpp"
#include "geoproof/vartable.hpp"

namespace geoproof {

template <typename C>
concept scalar_field = std::copyable<C> && std::equality_comparable<C> && requires(C a, C b) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a* b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

/// Sparse multivariate polynomial over a coefficient field. Terms are kept
/// strictly descending under the canonical (variable-index lex) monomial
/// order, with no zero coefficients; equality is syntactic.
template <scalar_field C>
class Polynomial {
  public:
    struct Term {
        Monomial mono;
        C coeff;
    };

    Polynomial() = default;
    explicit Polynomial(VarTable::Ptr table) : table_(std::move(table)) {}

    static Polynomial zero(VarTable::Ptr table) { return Polynomial(std::move(table)); }

    static Polynomial constant(VarTable::Ptr table, C value) {
        Polynomial p(std::move(table));
        if (!value.is_zero()) p.terms_.push_back({Monomial::one(p.table_->size()), std::move(value)});
        return p;
    }

    static Polynomial variable(VarTable::Ptr table, VarId v, C one) {
        Polynomial p(std::move(table));
        p.terms_.push_back({Monomial::var(p.table_->size(), v), std::move(one)});
        return p;
    }

    static Polynomial from_term(VarTable::Ptr table, Monomial m, C c) {
        Polynomial p(std::move(table));
        if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Terms in arbitrary order, possibly with duplicates and zeros.
    static Polynomial from_terms(VarTable::Ptr table, std::vector<Term> ts) {
        Polynomial p(std::move(table));
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    const VarTable::Ptr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Coefficient of the constant monomial of a constant polynomial;
    /// requires is_constant() and non-zero.
    const C& constant_value() const {
        if (terms_.size() != 1 || !terms_[0].mono.is_one())
            throw math_error("polynomial is not a nonzero constant");
        return terms_[0].coeff;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    std::uint32_t degree_in(VarId v) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.mono[v]);
        return d;
    }

    bool contains_var(VarId v) const {
        for (const auto& t : terms_)
            if (t.mono[v] != 0) return true;
        return false;
    }

    /// Coefficient of v^k viewed as a polynomial in v: the terms with
    /// exponent k in v, with that exponent stripped.
    Polynomial coeff_in(VarId v, std::uint32_t k) const {
        Polynomial r(table_);
        for (const auto& t : terms_)
            if (t.mono[v] == k) r.terms_.push_back({t.mono.with_exponent(v, 0), t.coeff});
        // stripping one variable preserves the relative canonical order
        return r;
    }

    /// Multiply by v^k.
    Polynomial shifted(VarId v, std::uint32_t k) const {
        Polynomial r(table_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mono.with_exponent(v, static_cast<std::uint16_t>(t.mono[v] + k)), t.coeff});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        VarTable::check_same(a.table_, b.table_);
        Polynomial r(a.table_);
        r.terms_ = merge_terms(a.terms_, b.terms_, false);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        VarTable::check_same(a.table_, b.table_);
        Polynomial r(a.table_);
        r.terms_ = merge_terms(a.terms_, b.terms_, true);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(table_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        VarTable::check_same(a.table_, b.table_);
        Polynomial r(a.table_);
        if (a.is_zero() || b.is_zero()) return r;
        r.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                C c = ta.coeff * tb.coeff;
                if (!c.is_zero()) r.terms_.push_back({ta.mono * tb.mono, std::move(c)});
            }
        r.normalize();
        return r;
    }

    Polynomial scaled(const C& c) const {
        Polynomial r(table_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C rc = t.coeff * c;
            if (!rc.is_zero()) r.terms_.push_back({t.mono, std::move(rc)});
        }
        return r;
    }

    /// this * c * m.
    Polynomial scaled_shifted(const C& c, const Monomial& m) const {
        Polynomial r(table_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C rc = t.coeff * c;
            if (!rc.is_zero()) r.terms_.push_back({t.mono * m, std::move(rc)});
        }
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!VarTable::same(a.table_, b.table_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }

    /// Maximal term under the given order; the polynomial must be nonzero.
    const Term& leading_term(const TermOrder& ord) const {
        if (terms_.empty()) throw math_error("leading term of the zero polynomial");
        const Term* best = &terms_[0];
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].mono, best->mono)) best = &terms_[i];
        return *best;
    }

    /// All variables that actually occur.
    std::vector<VarId> support() const {
        std::vector<bool> seen(table_->size(), false);
        for (const auto& t : terms_)
            for (std::size_t v = 0; v < seen.size(); ++v)
                if (t.mono[static_cast<VarId>(v)]) seen[v] = true;
        std::vector<VarId> out;
        for (std::size_t v = 0; v < seen.size(); ++v)
            if (seen[v]) out.push_back(static_cast<VarId>(v));
        return out;
    }

  private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
            return Monomial::cmp_canonical(x.mono, y.mono) == std::strong_ordering::greater;
        });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff = out.back().coeff + t.coeff;
            else
                out.push_back(std::move(t));
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        }
        terms_ = std::move(out);
    }

    static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                         bool negate_b) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            auto c = Monomial::cmp_canonical(a[i].mono, b[j].mono);
            if (c == std::strong_ordering::greater) {
                out.push_back(a[i++]);
            } else if (c == std::strong_ordering::less) {
                out.push_back({b[j].mono, negate_b ? -b[j].coeff : b[j].coeff});
                ++j;
            } else {
                C s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
                if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) out.push_back({b[j].mono, negate_b ? -b[j].coeff : b[j].coeff});
        return out;
    }

    VarTable::Ptr table_;
    std::vector<Term> terms_;
};

using PolyQ = Polynomial<Rational>;

/// Exact evaluation at a full assignment of rational values, one per
/// variable of the universe.
inline Rational substitute(const PolyQ& f, const std::vector<Rational>& assignment) {
    if (assignment.size() != f.table()->size())
        throw error("assignment does not cover the variable universe");
    Rational acc(0);
    for (const auto& t : f.terms()) {
        Rational term = t.coeff;
        for (std::size_t v = 0; v < assignment.size(); ++v) {
            std::uint16_t e = t.mono[static_cast<VarId>(v)];
            for (std::uint16_t k = 0; k < e; ++k) term *= assignment[v];
        }
        acc += term;
    }
    return acc;
}

}  // namespace geoproof
