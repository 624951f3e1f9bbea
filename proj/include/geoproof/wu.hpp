#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "geoproof/poly_div.hpp"
#include "geoproof/poly_gcd.hpp"
#include "geoproof/poly_io.hpp"

namespace geoproof {

/// Classic pseudoremainder: multiplier is a power of g's leading coefficient
/// in v (accumulated per step).
inline PseudoDivisionResult prem(const PolyQ& f, const PolyQ& g, VarId v) {
    return pseudo_divide(f, g, v);
}

/// Pseudo-division with the reduced multiplier: each step scales the
/// dividend by d_m / gcd(d_m, c_p, ..., c_0) instead of d_m, curbing the
/// growth of coefficient polynomials. The identity m*f = q*g + r and the
/// degree bound are unchanged.
inline PseudoDivisionResult prem_reduced_multiplier(const PolyQ& f, const PolyQ& g, VarId v) {
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
        std::vector<PolyQ> cs{dm};
        for (std::uint32_t kk = 0; kk <= d; ++kk) {
            PolyQ c = r.coeff_in(v, kk);
            if (!c.is_zero()) cs.push_back(std::move(c));
        }
        PolyQ g0 = poly_gcd(std::span<const PolyQ>(cs));
        PolyQ t = detail::exact_div_checked(dm, g0);
        PolyQ cp = detail::exact_div_checked(r.coeff_in(v, d), g0);
        PolyQ shifted = cp.shifted(v, d - m);
        r = t * r - shifted * g;
        q = t * q + shifted;
        mult = t * mult;
    }
    return {std::move(q), std::move(r), std::move(mult)};
}

/// Triangulated system f_1(x_1), f_2(x_1,x_2), ..., main variables strictly
/// ascending in the elimination order used to build it. Levels without a
/// polynomial are simply absent.
struct AscendingChain {
    std::vector<PolyQ> chain;       // ascending: chain[i] pivots on main_vars[i]
    std::vector<VarId> main_vars;   // strictly ascending in elimination rank
    std::vector<VarId> order;       // elimination order used, highest first

    std::size_t size() const { return chain.size(); }

    /// Triangular-shape invariant: chain[i] has positive degree in its main
    /// variable and degree zero in every order variable ranked above it.
    bool shape_ok() const {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i].degree_in(main_vars[i]) == 0) return false;
            for (VarId v : order) {
                if (v == main_vars[i]) break;  // everything before is ranked above
                if (chain[i].degree_in(v) != 0) return false;
            }
        }
        for (std::size_t i = 1; i < chain.size(); ++i) {
            auto rank = [&](VarId v) {
                return std::find(order.begin(), order.end(), v) - order.begin();
            };
            if (rank(main_vars[i - 1]) <= rank(main_vars[i])) return false;
        }
        return true;
    }
};

struct WuOptions {
    bool reduced_multiplier = true;        // use the gcd-trimmed multiplier
    bool strip_integer_content = true;     // normalize remainders to primitive
    bool strip_polynomial_content = false; // also remove content in lower variables
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace wudetail {

inline void check_deadline(const WuOptions& opts) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
        throw budget_exceeded("time budget exceeded in Wu triangulation");
}

inline PolyQ cleanup(PolyQ p, VarId level, const WuOptions& opts) {
    if (p.is_zero()) return p;
    if (opts.strip_integer_content) p = primitive_part(p);
    if (opts.strip_polynomial_content && p.degree_in(level) > 0) {
        PolyQ c = content_in(p, level);
        if (!c.is_constant()) p = detail::exact_div_checked(p, c);
    }
    return p;
}

inline PseudoDivisionResult do_prem(const PolyQ& f, const PolyQ& g, VarId v, const WuOptions& opts) {
    return opts.reduced_multiplier ? prem_reduced_multiplier(f, g, v) : prem(f, g, v);
}

}  // namespace wudetail

/// Triangulate hypothesis polynomials into an ascending chain by repeated
/// pseudo-division, processing variables from the highest ranked downward.
/// At each level the divisor is the candidate of minimal degree in that
/// variable (ties: fewest terms, then first added). Free variables never
/// serve as main variables.
inline AscendingChain triangulate(const std::vector<PolyQ>& H, const std::vector<VarId>& order,
                                  const WuOptions& opts = {}) {
    if (H.empty()) throw math_error("triangulation of an empty hypothesis set");
    VarTable::Ptr table = H.front().table();
    for (const auto& h : H) VarTable::check_same(table, h.table());
    for (VarId v : order)
        if (table->is_free(v))
            throw math_error("free variable '" + table->name(v) + "' cannot be a main variable");

    std::vector<PolyQ> work;
    for (const auto& h : H)
        if (!h.is_zero()) work.push_back(opts.strip_integer_content ? primitive_part(h) : h);

    AscendingChain out;
    out.order = order;

    for (VarId v : order) {
        for (;;) {
            wudetail::check_deadline(opts);
            std::vector<std::size_t> cands;
            for (std::size_t i = 0; i < work.size(); ++i)
                if (work[i].degree_in(v) > 0) cands.push_back(i);
            if (cands.empty()) break;
            std::size_t best = cands[0];
            for (std::size_t idx : cands) {
                auto db = work[best].degree_in(v), di = work[idx].degree_in(v);
                if (di < db || (di == db && work[idx].term_count() < work[best].term_count()))
                    best = idx;
            }
            if (cands.size() == 1) {
                out.chain.push_back(work[best]);
                out.main_vars.push_back(v);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
                break;
            }
            for (std::size_t idx : cands) {
                if (idx == best) continue;
                PolyQ r = wudetail::do_prem(work[idx], work[best], v, opts).remainder;
                work[idx] = wudetail::cleanup(std::move(r), v, opts);
            }
            work.erase(std::remove_if(work.begin(), work.end(),
                                      [](const PolyQ& p) { return p.is_zero(); }),
                       work.end());
        }
    }

    for (const auto& leftover : work) {
        if (!leftover.is_zero())
            throw math_error(
                "degenerate system: a nonzero hypothesis combination involves no main variable (" +
                to_string(leftover) + ")");
    }

    // report ascending (lowest main variable first)
    std::reverse(out.chain.begin(), out.chain.end());
    std::reverse(out.main_vars.begin(), out.main_vars.end());
    return out;
}

/// Successive pseudoremainder of g against the chain, from the top element
/// down; levels where the running remainder has degree zero in the main
/// variable are skipped.
inline PolyQ prem_chain(const PolyQ& g, const AscendingChain& chain, const WuOptions& opts = {}) {
    PolyQ r = g;
    for (std::size_t i = chain.size(); i-- > 0;) {
        wudetail::check_deadline(opts);
        if (r.is_zero()) break;
        VarId v = chain.main_vars[i];
        if (r.degree_in(v) == 0) continue;
        r = wudetail::do_prem(r, chain.chain[i], v, opts).remainder;
        if (opts.strip_integer_content && !r.is_zero()) r = primitive_part(r);
    }
    return r;
}

}  // namespace geoproof
