#pragma once

#include <span>
#include <vector>

#include "geoproof/poly_div.hpp"
#include "geoproof/polynomial.hpp"

namespace geoproof {

/// Positive rational c such that f/c has coprime integer coefficients;
/// f must be nonzero.
inline Rational rational_content(const PolyQ& f) {
    if (f.is_zero()) throw math_error("content of the zero polynomial");
    Integer den_lcm(1);
    for (const auto& t : f.terms()) den_lcm = lcm(den_lcm, t.coeff.denominator());
    Integer num_gcd(0);
    for (const auto& t : f.terms()) {
        Integer scaled = t.coeff.numerator() * Integer::div_exact(den_lcm, t.coeff.denominator());
        num_gcd = gcd(num_gcd, scaled);
        if (num_gcd.is_one()) break;
    }
    return Rational(num_gcd, den_lcm);
}

/// f scaled to coprime integer coefficients, keeping signs.
inline PolyQ primitive_part(const PolyQ& f) {
    if (f.is_zero()) return f;
    return f.scaled(rational_content(f).inverse());
}

/// Primitive with positive leading coefficient under the canonical order;
/// the library-wide normal form for gcds and fraction denominators.
inline PolyQ normalize_primitive(const PolyQ& f) {
    if (f.is_zero()) return f;
    PolyQ p = primitive_part(f);
    if (p.terms().front().coeff.sign() < 0) p = -p;
    return p;
}

inline PolyQ poly_gcd(const PolyQ& f, const PolyQ& g);

/// Content of f with respect to v: gcd of the coefficients of the powers
/// of v.
inline PolyQ content_in(const PolyQ& f, VarId v) {
    std::uint32_t d = f.degree_in(v);
    PolyQ acc = PolyQ::zero(f.table());
    for (std::uint32_t k = 0; k <= d; ++k) {
        PolyQ c = f.coeff_in(v, k);
        if (c.is_zero()) continue;
        acc = poly_gcd(acc, c);
        if (acc.is_constant() && !acc.is_zero()) break;
    }
    return acc;
}

namespace detail {

inline PolyQ exact_div_checked(const PolyQ& f, const PolyQ& g) {
    auto q = exact_divide(f, g);
    if (!q) throw math_error("expected exact polynomial division");
    return *q;
}

// Primitive PRS on v-primitive inputs of positive degree in v.
inline PolyQ gcd_prs(PolyQ a, PolyQ b, VarId v) {
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (true) {
        PolyQ r = pseudo_divide(a, b, v).remainder;
        if (r.is_zero()) return b;
        if (r.degree_in(v) == 0) return PolyQ::constant(a.table(), Rational(1));
        r = normalize_primitive(exact_div_checked(r, content_in(r, v)));
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace detail

/// Multivariate gcd over the rationals by primitive pseudo-remainder
/// sequences on a recursive main-variable view. Result is primitive with a
/// positive leading coefficient; gcd(0, 0) = 0.
inline PolyQ poly_gcd(const PolyQ& f, const PolyQ& g) {
    VarTable::check_same(f.table(), g.table());
    if (f.is_zero()) return normalize_primitive(g);
    if (g.is_zero()) return normalize_primitive(f);
    if (f.is_constant() || g.is_constant()) return PolyQ::constant(f.table(), Rational(1));

    // Main variable: the highest-indexed variable occurring in either.
    VarId v = 0;
    {
        auto sf = f.support();
        auto sg = g.support();
        VarId mf = sf.empty() ? 0 : sf.back();
        VarId mg = sg.empty() ? 0 : sg.back();
        v = mf > mg ? mf : mg;
    }

    if (f.degree_in(v) == 0) return poly_gcd(f, content_in(g, v));
    if (g.degree_in(v) == 0) return poly_gcd(content_in(f, v), g);

    PolyQ cf = content_in(f, v);
    PolyQ cg = content_in(g, v);
    PolyQ pf = detail::exact_div_checked(f, cf);
    PolyQ pg = detail::exact_div_checked(g, cg);
    PolyQ cont_gcd = poly_gcd(cf, cg);
    PolyQ pp_gcd = detail::gcd_prs(std::move(pf), std::move(pg), v);
    pp_gcd = detail::exact_div_checked(pp_gcd, content_in(pp_gcd, v));
    return normalize_primitive(cont_gcd * pp_gcd);
}

inline PolyQ poly_gcd(std::span<const PolyQ> fs) {
    if (fs.empty()) throw math_error("gcd of an empty list");
    PolyQ acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) {
        acc = poly_gcd(acc, fs[i]);
        if (acc.is_constant() && !acc.is_zero()) break;
    }
    return normalize_primitive(acc);
}

}  // namespace geoproof
