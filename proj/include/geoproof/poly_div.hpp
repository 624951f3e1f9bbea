#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geoproof/polynomial.hpp"

namespace geoproof {

/// Result of multivariate division: f = sum(quotients[i]*divisors[i]) + remainder,
/// with no term of the remainder divisible by any divisor's leading term.
template <scalar_field C>
struct DivisionResult {
    std::vector<Polynomial<C>> quotients;
    Polynomial<C> remainder;
};

/// Classic multivariate division by an ordered list of divisors. Requires a
/// coefficient field (divides by leading coefficients). Deterministic: for
/// each reducible term the first matching divisor in list order is used.
template <scalar_field C>
DivisionResult<C> divide(const Polynomial<C>& f, std::span<const Polynomial<C>> divisors,
                         const TermOrder& ord) {
    for (const auto& g : divisors) {
        VarTable::check_same(f.table(), g.table());
        if (g.is_zero()) throw math_error("division by a zero polynomial");
    }
    DivisionResult<C> out;
    out.quotients.assign(divisors.size(), Polynomial<C>::zero(f.table()));
    out.remainder = Polynomial<C>::zero(f.table());

    struct Lead {
        Monomial mono;
        C coeff;
    };
    std::vector<Lead> leads;
    leads.reserve(divisors.size());
    for (const auto& g : divisors) {
        const auto& lt = g.leading_term(ord);
        leads.push_back({lt.mono, lt.coeff});
    }

    Polynomial<C> p = f;
    while (!p.is_zero()) {
        const auto& lt = p.leading_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!leads[i].mono.divides(lt.mono)) continue;
            Monomial q = Monomial::quotient(lt.mono, leads[i].mono);
            C c = lt.coeff / leads[i].coeff;
            out.quotients[i] += Polynomial<C>::from_term(f.table(), q, c);
            p -= divisors[i].scaled_shifted(c, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            auto t = Polynomial<C>::from_term(f.table(), lt.mono, lt.coeff);
            out.remainder += t;
            p -= t;
        }
    }
    return out;
}

/// Exact quotient f / g, or nullopt if g does not divide f. Works over any
/// coefficient field; uses the canonical monomial order.
template <scalar_field C>
std::optional<Polynomial<C>> exact_divide(const Polynomial<C>& f, const Polynomial<C>& g) {
    VarTable::check_same(f.table(), g.table());
    if (g.is_zero()) throw math_error("exact division by zero polynomial");
    if (f.is_zero()) return Polynomial<C>::zero(f.table());

    // Divide using the canonical order directly; leading term = first term.
    const Monomial& gm = g.terms().front().mono;
    const C& gc = g.terms().front().coeff;
    Polynomial<C> q = Polynomial<C>::zero(f.table());
    Polynomial<C> p = f;
    while (!p.is_zero()) {
        const auto& lt = p.terms().front();
        if (!gm.divides(lt.mono)) return std::nullopt;
        Monomial qm = Monomial::quotient(lt.mono, gm);
        C qc = lt.coeff / gc;
        q += Polynomial<C>::from_term(f.table(), qm, qc);
        p -= g.scaled_shifted(qc, qm);
    }
    return q;
}

/// Pseudo-division data: multiplier*f = quotient*g + remainder, with
/// remainder zero or of smaller degree than g in the division variable.
struct PseudoDivisionResult {
    PolyQ quotient;
    PolyQ remainder;
    PolyQ multiplier;
};

/// Classic pseudo-division of f by g with respect to variable v: each step
/// multiplies the running dividend by g's leading coefficient in v, so all
/// arithmetic stays in the polynomial ring.
inline PseudoDivisionResult pseudo_divide(const PolyQ& f, const PolyQ& g, VarId v) {
    VarTable::check_same(f.table(), g.table());
    if (v >= f.table()->size()) throw math_error("pseudo-division by an unknown variable");
    if (g.is_zero()) throw math_error("pseudo-division by zero polynomial");
    std::uint32_t m = g.degree_in(v);
    if (m == 0) throw math_error("pseudo-division divisor has degree 0 in the main variable");

    const auto& table = f.table();
    PolyQ dm = g.coeff_in(v, m);
    PolyQ q = PolyQ::zero(table);
    PolyQ r = f;
    PolyQ mult = PolyQ::constant(table, Rational(1));
    while (!r.is_zero()) {
        std::uint32_t d = r.degree_in(v);
        if (d < m) break;
        PolyQ cp = r.coeff_in(v, d);
        PolyQ shifted = cp.shifted(v, d - m);
        r = dm * r - shifted * g;
        q = dm * q + shifted;
        mult = dm * mult;
    }
    return {std::move(q), std::move(r), std::move(mult)};
}

}  // namespace geoproof
