#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geoproof/poly_div.hpp"
#include "geoproof/poly_gcd.hpp"
#include "geoproof/ratfunc.hpp"

namespace geoproof {

// ---------------------------------------------------------------------------
// Coefficient-field hooks. The reduction engine is fraction-free: a step
// rewrites p := A*p - B*(m*g) with A*lc(p) == B*lc(g), so denominators never
// appear when the inputs have none. Over the rationals A is always 1 and the
// step is the classic division step.
// ---------------------------------------------------------------------------

inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    Integer l = lcm(a.denominator(), b.denominator());
    Integer ga = a.numerator() * Integer::div_exact(l, a.denominator());
    Integer gb = b.numerator() * Integer::div_exact(l, b.denominator());
    return Rational(gcd(ga, gb), l);
}

template <scalar_field C>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational one(const PolyQ&) { return Rational(1); }
    static bool is_one(const Rational& c) { return c.is_one(); }
    static std::pair<Rational, Rational> reduce_pair(const Rational& ct, const Rational& cg) {
        return {Rational(1), ct / cg};
    }
    static void canonicalize(PolyQ& p) {
        if (p.is_zero()) return;
        p = normalize_primitive(p);
    }
    static std::size_t coeff_bits(const Rational& c) { return c.bit_length(); }
};

template <>
struct FieldOps<RatFunc> {
    static RatFunc one(const Polynomial<RatFunc>& ctx) {
        return RatFunc::one(ctx.terms().front().coeff.table());
    }
    static bool is_one(const RatFunc& c) { return c.is_one(); }

    static std::pair<RatFunc, RatFunc> reduce_pair(const RatFunc& ct, const RatFunc& cg) {
        // Constant divisor lead: an ordinary field division step, no growth.
        if (cg.is_polynomial() && cg.num().is_constant()) return {one_rf(ct), ct / cg};
        if (ct.is_polynomial() && cg.is_polynomial()) {
            PolyQ d = poly_gcd(ct.num(), cg.num());
            PolyQ a = cg.num(), b = ct.num();
            if (!d.is_constant()) {
                a = detail::exact_div_checked(a, d);
                b = detail::exact_div_checked(b, d);
            }
            Rational s = rational_gcd(rational_content(a), rational_content(b));
            if (a.terms().front().coeff.sign() < 0) s = -s;
            Rational inv = s.inverse();
            return {RatFunc(a.scaled(inv)), RatFunc(b.scaled(inv))};
        }
        return {cg, ct};
    }

    static void canonicalize(Polynomial<RatFunc>& p) {
        if (p.is_zero()) return;
        p = clear_denominators(p);
        std::vector<PolyQ> nums;
        nums.reserve(p.term_count());
        for (const auto& t : p.terms()) nums.push_back(t.coeff.num());
        PolyQ g = poly_gcd(std::span<const PolyQ>(nums));
        Rational rc(0);
        for (const auto& n : nums) rc = rational_gcd(rc, rational_content(n));
        bool nontrivial_poly = !g.is_constant();
        if (p.terms().front().coeff.num().terms().front().coeff.sign() < 0) rc = -rc;
        if (!nontrivial_poly && rc.is_one()) return;
        std::vector<Polynomial<RatFunc>::Term> ts;
        ts.reserve(p.term_count());
        Rational inv = rc.inverse();
        for (const auto& t : p.terms()) {
            PolyQ n = nontrivial_poly ? detail::exact_div_checked(t.coeff.num(), g) : t.coeff.num();
            ts.push_back({t.mono, RatFunc(n.scaled(inv))});
        }
        p = Polynomial<RatFunc>::from_terms(p.table(), std::move(ts));
    }

    static std::size_t coeff_bits(const RatFunc& c) {
        std::size_t bits = 0;
        for (const auto& t : c.num().terms()) bits = std::max(bits, t.coeff.bit_length());
        for (const auto& t : c.den().terms()) bits = std::max(bits, t.coeff.bit_length());
        return bits;
    }

  private:
    static RatFunc one_rf(const RatFunc& ctx) { return RatFunc::one(ctx.table()); }
};

// ---------------------------------------------------------------------------
// Buchberger's algorithm with the normal selection strategy and the coprime
// and chain pair criteria, producing the unique reduced basis.
// ---------------------------------------------------------------------------

struct BuchbergerOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct BasisStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_skipped_coprime = 0;
    std::size_t pairs_skipped_chain = 0;
    std::size_t reductions_to_zero = 0;
    std::size_t basis_size = 0;
    std::size_t max_total_degree = 0;
    std::size_t max_coeff_bits = 0;
    double seconds = 0.0;
};

template <scalar_field C>
struct GroebnerBasis {
    std::vector<Polynomial<C>> basis;  // monic, interreduced, leading terms ascending
    TermOrder ord;
    bool reduced = true;
    BasisStats stats;

    /// True when the basis is {1}, i.e. the ideal is the whole ring.
    bool is_unit() const {
        return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
    }
};

namespace gbdetail {

template <scalar_field C>
using TermVec = std::vector<typename Polynomial<C>::Term>;

inline void check_deadline(const BuchbergerOptions& opts) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
        throw budget_exceeded("time budget exceeded in Groebner basis computation");
}

template <scalar_field C>
TermVec<C> to_ordered(const Polynomial<C>& p, const TermOrder& ord) {
    TermVec<C> v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(),
              [&](const auto& a, const auto& b) { return ord.greater(a.mono, b.mono); });
    return v;
}

template <scalar_field C>
Polynomial<C> from_ordered(const VarTable::Ptr& table, TermVec<C> v) {
    return Polynomial<C>::from_terms(table, std::move(v));
}

// r = a*f - b*(m*g), both inputs sorted descending under ord. A null `a`
// means 1 (skips the scaling entirely).
template <scalar_field C>
TermVec<C> combine(const TermVec<C>& f, const C* a, const TermVec<C>& g, const C& b,
                   const Monomial& m, const TermOrder& ord) {
    TermVec<C> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        Monomial gm = g[j].mono * m;
        auto c = ord.compare(f[i].mono, gm);
        if (c == std::strong_ordering::greater) {
            C fc = a ? f[i].coeff * (*a) : f[i].coeff;
            if (!fc.is_zero()) out.push_back({f[i].mono, std::move(fc)});
            ++i;
        } else if (c == std::strong_ordering::less) {
            C gc = -(g[j].coeff * b);
            if (!gc.is_zero()) out.push_back({std::move(gm), std::move(gc)});
            ++j;
        } else {
            C s = (a ? f[i].coeff * (*a) : f[i].coeff) - g[j].coeff * b;
            if (!s.is_zero()) out.push_back({f[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) {
        C fc = a ? f[i].coeff * (*a) : f[i].coeff;
        if (!fc.is_zero()) out.push_back({f[i].mono, std::move(fc)});
    }
    for (; j < g.size(); ++j) {
        C gc = -(g[j].coeff * b);
        if (!gc.is_zero()) out.push_back({g[j].mono * m, std::move(gc)});
    }
    return out;
}

// Fully reduce p against the basis elements (heads and tails). The prefix of
// already-irreducible terms is preserved by each step up to a scalar factor.
template <scalar_field C>
TermVec<C> full_reduce(TermVec<C> p, const std::vector<TermVec<C>>& basis, const TermOrder& ord,
                       const VarTable::Ptr& table, const BuchbergerOptions& opts) {
    std::size_t i = 0;
    std::size_t steps = 0;
    while (i < p.size()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (!g.front().mono.divides(p[i].mono)) continue;
            auto [a, b] = FieldOps<C>::reduce_pair(p[i].coeff, g.front().coeff);
            Monomial m = Monomial::quotient(p[i].mono, g.front().mono);
            p = combine(p, FieldOps<C>::is_one(a) ? nullptr : &a, g, b, m, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            ++i;
            continue;
        }
        if ((++steps & 0x3F) == 0) check_deadline(opts);
        if constexpr (std::is_same_v<C, RatFunc>) {
            // keep coefficient growth in check on long reductions
            if ((steps & 0x1F) == 0 && !p.empty()) {
                Polynomial<C> tmp = from_ordered<C>(table, std::move(p));
                FieldOps<C>::canonicalize(tmp);
                p = to_ordered(tmp, ord);
            }
        }
    }
    return p;
}

}  // namespace gbdetail

/// S-polynomial: the leading terms of (lcm/lt f)*f and (lcm/lt g)*g cancel.
template <scalar_field C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g, const TermOrder& ord) {
    VarTable::check_same(f.table(), g.table());
    if (f.is_zero() || g.is_zero()) throw math_error("s-polynomial of a zero polynomial");
    auto fo = gbdetail::to_ordered(f, ord);
    auto go = gbdetail::to_ordered(g, ord);
    Monomial lcm = Monomial::lcm(fo.front().mono, go.front().mono);
    auto [a, b] = FieldOps<C>::reduce_pair(go.front().coeff, fo.front().coeff);
    // a*lc(g) == b*lc(f); S = b*(lcm/ltf)*f - a*(lcm/ltg)*g
    Monomial mf = Monomial::quotient(lcm, fo.front().mono);
    Monomial mg = Monomial::quotient(lcm, go.front().mono);
    gbdetail::TermVec<C> shifted;
    shifted.reserve(fo.size());
    for (const auto& t : fo) {
        C c = t.coeff * b;
        if (!c.is_zero()) shifted.push_back({t.mono * mf, std::move(c)});
    }
    auto out = gbdetail::combine<C>(shifted, nullptr, go, a, mg, ord);
    return gbdetail::from_ordered<C>(f.table(), std::move(out));
}

/// Remainder and quotients of multivariate division by a polynomial list:
/// f = sum q_i G_i + r with no term of r divisible by any leading term of G.
template <scalar_field C>
struct NormalFormResult {
    Polynomial<C> remainder;
    std::vector<Polynomial<C>> quotients;
};

template <scalar_field C>
NormalFormResult<C> normal_form(const Polynomial<C>& f, std::span<const Polynomial<C>> G,
                                const TermOrder& ord) {
    auto res = divide(f, G, ord);
    return {std::move(res.remainder), std::move(res.quotients)};
}

template <scalar_field C>
NormalFormResult<C> normal_form(const Polynomial<C>& f, const std::vector<Polynomial<C>>& G,
                                const TermOrder& ord) {
    return normal_form(f, std::span<const Polynomial<C>>(G), ord);
}

/// Buchberger's algorithm. Normal selection strategy (smallest lcm degree
/// first), coprime-criterion and chain-criterion pruning, full reduction of
/// every S-polynomial, final interreduction to the unique reduced basis.
template <scalar_field C>
GroebnerBasis<C> buchberger(const std::vector<Polynomial<C>>& F, const TermOrder& ord,
                            const BuchbergerOptions& opts = {}) {
    using gbdetail::TermVec;
    auto t0 = std::chrono::steady_clock::now();

    VarTable::Ptr table;
    std::vector<TermVec<C>> basis;
    BasisStats stats;
    for (const auto& f : F) {
        if (!table) table = f.table();
        VarTable::check_same(table, f.table());
        if (f.is_zero()) continue;
        Polynomial<C> g = f;
        FieldOps<C>::canonicalize(g);
        basis.push_back(gbdetail::to_ordered(g, ord));
    }
    if (basis.empty()) throw math_error("Groebner basis of an empty or all-zero generating set");

    struct Pair {
        std::uint32_t deg;
        Monomial lcm;
        std::size_t i, j;
    };
    struct PairLess {
        const TermOrder* ord;
        bool operator()(const Pair& x, const Pair& y) const {
            if (x.deg != y.deg) return x.deg < y.deg;
            auto c = ord->compare(x.lcm, y.lcm);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            if (x.i != y.i) return x.i < y.i;
            return x.j < y.j;
        }
    };

    std::multiset<Pair, PairLess> queue{PairLess{&ord}};
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = Monomial::lcm(basis[i].front().mono, basis[j].front().mono);
        queue.insert({l.degree(), std::move(l), i, j});
    };
    std::set<std::pair<std::size_t, std::size_t>> pending;

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            push_pair(i, j);
            pending.insert({i, j});
        }

    bool unit_found = false;
    for (const auto& b : basis)
        if (b.size() == 1 && b.front().mono.is_one()) unit_found = true;

    while (!unit_found && !queue.empty()) {
        gbdetail::check_deadline(opts);
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pr.i, pr.j});
        ++stats.pairs_considered;

        const Monomial& li = basis[pr.i].front().mono;
        const Monomial& lj = basis[pr.j].front().mono;
        if (Monomial::coprime(li, lj)) {
            ++stats.pairs_skipped_coprime;
            continue;
        }
        // chain criterion: some k with lt(k) | lcm(i,j) and both (i,k), (j,k)
        // already handled
        bool skip = false;
        for (std::size_t k = 0; !skip && k < basis.size(); ++k) {
            if (k == pr.i || k == pr.j || basis[k].empty()) continue;
            if (!basis[k].front().mono.divides(pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (!pending.count({key_ik.first, key_ik.second}) &&
                !pending.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) {
            ++stats.pairs_skipped_chain;
            continue;
        }

        // S-polynomial, fraction-free: b*(m_i*f_i) - a*(m_j*f_j) with
        // a*lc_j == b*lc_i
        auto [a, b] = FieldOps<C>::reduce_pair(basis[pr.j].front().coeff, basis[pr.i].front().coeff);
        Monomial mi = Monomial::quotient(pr.lcm, li);
        Monomial mj = Monomial::quotient(pr.lcm, lj);
        TermVec<C> lhs;
        lhs.reserve(basis[pr.i].size());
        for (const auto& t : basis[pr.i]) {
            C c = t.coeff * b;
            if (!c.is_zero()) lhs.push_back({t.mono * mi, std::move(c)});
        }
        TermVec<C> s = gbdetail::combine<C>(lhs, nullptr, basis[pr.j], a, mj, ord);
        s = gbdetail::full_reduce<C>(std::move(s), basis, ord, table, opts);
        if (s.empty()) {
            ++stats.reductions_to_zero;
            continue;
        }
        Polynomial<C> sp = gbdetail::from_ordered<C>(table, std::move(s));
        FieldOps<C>::canonicalize(sp);
        TermVec<C> so = gbdetail::to_ordered(sp, ord);
        if (so.front().mono.is_one()) unit_found = true;
        std::size_t newi = basis.size();
        basis.push_back(std::move(so));
        for (std::size_t k = 0; k < newi; ++k) {
            if (basis[k].empty()) continue;
            push_pair(k, newi);
            pending.insert({k, newi});
        }
    }

    GroebnerBasis<C> out{{}, ord, true, {}};
    if (unit_found) {
        // ideal contains a unit: reduced basis is {1}
        Polynomial<C> one_poly;
        for (const auto& b : basis)
            if (!b.empty()) {
                Polynomial<C> tmp = gbdetail::from_ordered<C>(table, {b.front()});
                one_poly = Polynomial<C>::constant(table, FieldOps<C>::one(tmp));
                break;
            }
        out.basis.push_back(std::move(one_poly));
    } else {
        // minimize: drop elements whose lead is divisible by another lead
        std::vector<bool> keep(basis.size(), true);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!keep[i] || basis[i].empty()) {
                keep[i] = false;
                continue;
            }
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || !keep[j] || basis[j].empty()) continue;
                if (basis[j].front().mono.divides(basis[i].front().mono) &&
                    !(i < j && basis[i].front().mono == basis[j].front().mono)) {
                    keep[i] = false;
                    break;
                }
            }
        }
        std::vector<TermVec<C>> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (keep[i]) minimal.push_back(std::move(basis[i]));

        // tail-reduce each against the others, then make monic
        std::vector<Polynomial<C>> reduced;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<TermVec<C>> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            TermVec<C> r = gbdetail::full_reduce<C>(minimal[i], others, ord, table, opts);
            Polynomial<C> rp = gbdetail::from_ordered<C>(table, std::move(r));
            FieldOps<C>::canonicalize(rp);
            reduced.push_back(std::move(rp));
        }
        // monic + deterministic ordering by leading monomial, ascending
        for (auto& g : reduced) {
            const C& lc = g.leading_term(ord).coeff;
            if (!FieldOps<C>::is_one(lc)) {
                C inv = FieldOps<C>::one(g) / lc;
                g = g.scaled(inv);
            }
        }
        std::sort(reduced.begin(), reduced.end(), [&](const auto& x, const auto& y) {
            return !ord.greater(x.leading_term(ord).mono, y.leading_term(ord).mono) &&
                   !(x.leading_term(ord).mono == y.leading_term(ord).mono);
        });
        out.basis = std::move(reduced);
    }

    stats.basis_size = out.basis.size();
    for (const auto& g : out.basis) {
        stats.max_total_degree = std::max<std::size_t>(stats.max_total_degree, g.total_degree());
        for (const auto& t : g.terms())
            stats.max_coeff_bits = std::max(stats.max_coeff_bits, FieldOps<C>::coeff_bits(t.coeff));
    }
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.stats = stats;
    return out;
}

// ---------------------------------------------------------------------------
// Membership tests.
// ---------------------------------------------------------------------------

enum class CertKind { ideal, radical, wu_zero_remainder, failed };

inline const char* to_string(CertKind k) {
    switch (k) {
        case CertKind::ideal: return "ideal";
        case CertKind::radical: return "radical";
        case CertKind::wu_zero_remainder: return "wu-zero-remainder";
        case CertKind::failed: return "failed";
    }
    return "?";
}

template <scalar_field C>
struct MembershipCertificate {
    CertKind kind = CertKind::failed;
    Polynomial<C> residual;  // the nonzero normal form when failed; zero otherwise
    double elapsed_seconds = 0.0;
    BasisStats basis_stats;
    double normal_form_seconds = 0.0;

    bool success() const { return kind != CertKind::failed; }
};

/// Move a polynomial to an extended universe that appends new dependent
/// variables after the existing ones (variable ids are preserved).
template <scalar_field C>
Polynomial<C> extend_universe(const Polynomial<C>& p, const VarTable::Ptr& ext) {
    std::vector<typename Polynomial<C>::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) ts.push_back({t.mono.padded(ext->size()), t.coeff});
    return Polynomial<C>::from_terms(ext, std::move(ts));
}

/// g in <H>? Computes the reduced basis of <H> and the normal form of g.
template <scalar_field C>
MembershipCertificate<C> ideal_membership(const std::vector<Polynomial<C>>& H,
                                          const Polynomial<C>& g, const TermOrder& ord,
                                          const BuchbergerOptions& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    auto gb = buchberger(H, ord, opts);
    auto t1 = std::chrono::steady_clock::now();
    auto nf = normal_form(g, gb.basis, ord);
    auto t2 = std::chrono::steady_clock::now();

    MembershipCertificate<C> cert;
    cert.kind = nf.remainder.is_zero() ? CertKind::ideal : CertKind::failed;
    cert.residual = std::move(nf.remainder);
    cert.basis_stats = gb.stats;
    cert.elapsed_seconds = std::chrono::duration<double>(t2 - t0).count();
    cert.normal_form_seconds = std::chrono::duration<double>(t2 - t1).count();
    return cert;
}

/// g in the radical of <H>, restricted by nondegeneracy side conditions
/// c_j != 0: tests whether the reduced basis of
/// <H, 1 - y*g, 1 - y_j*c_j> is {1}, with fresh slack variables ranked above
/// every other variable.
template <scalar_field C>
MembershipCertificate<C> radical_membership(const std::vector<Polynomial<C>>& H,
                                            const Polynomial<C>& g,
                                            const std::vector<Polynomial<C>>& nondegeneracy,
                                            const TermOrder& ord,
                                            const BuchbergerOptions& opts = {}) {
    if (g.is_zero()) throw math_error("radical membership of the zero polynomial");
    auto t0 = std::chrono::steady_clock::now();
    const VarTable::Ptr& base = g.table();

    std::vector<std::string> slack_names;
    auto fresh = [&](std::string stem) {
        while (base->find(stem) ||
               std::find(slack_names.begin(), slack_names.end(), stem) != slack_names.end())
            stem += "_";
        return stem;
    };
    slack_names.push_back(fresh("y"));
    for (std::size_t j = 0; j < nondegeneracy.size(); ++j)
        slack_names.push_back(fresh("y" + std::to_string(j + 2)));

    auto ext = base->with_appended_dependents(slack_names);
    std::vector<VarId> slack_ids;
    for (const auto& n : slack_names) slack_ids.push_back(ext->require(n));
    TermOrder ext_ord = ord.with_leading_vars(ext, slack_ids);

    std::vector<Polynomial<C>> gens;
    gens.reserve(H.size() + 1 + nondegeneracy.size());
    for (const auto& h : H) gens.push_back(extend_universe(h, ext));
    Polynomial<C> ge = extend_universe(g, ext);
    C one = FieldOps<C>::one(ge);
    Polynomial<C> one_poly = Polynomial<C>::constant(ext, one);
    gens.push_back(one_poly - Polynomial<C>::variable(ext, slack_ids[0], one) * ge);
    for (std::size_t j = 0; j < nondegeneracy.size(); ++j) {
        Polynomial<C> ce = extend_universe(nondegeneracy[j], ext);
        gens.push_back(one_poly - Polynomial<C>::variable(ext, slack_ids[j + 1], one) * ce);
    }

    auto gb = buchberger(gens, ext_ord, opts);
    auto t1 = std::chrono::steady_clock::now();

    MembershipCertificate<C> cert;
    cert.basis_stats = gb.stats;
    if (gb.is_unit()) {
        cert.kind = CertKind::radical;
        cert.residual = Polynomial<C>::zero(ext);
    } else {
        cert.kind = CertKind::failed;
        cert.residual = normal_form(ge, gb.basis, ext_ord).remainder;
    }
    auto t2 = std::chrono::steady_clock::now();
    cert.normal_form_seconds = std::chrono::duration<double>(t2 - t1).count();
    cert.elapsed_seconds = std::chrono::duration<double>(t2 - t0).count();
    return cert;
}

}  // namespace geoproof
