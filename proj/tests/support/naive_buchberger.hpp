#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "geoproof/polynomial.hpp"

namespace testsupport {

// Criterion-free textbook Buchberger over the rationals, written directly
// against the public polynomial arithmetic (no shared code with the library's
// engine): FIFO pair processing, plain division, repeated interreduction.
// Slow on purpose; used as a brute-force oracle.

inline geoproof::PolyQ naive_reduce(geoproof::PolyQ p, const std::vector<geoproof::PolyQ>& G,
                                    const geoproof::TermOrder& ord) {
    using namespace geoproof;
    PolyQ r = PolyQ::zero(p.table());
    while (!p.is_zero()) {
        const auto& lt = p.leading_term(ord);
        bool step = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            const auto& gl = g.leading_term(ord);
            if (!gl.mono.divides(lt.mono)) continue;
            Rational c = lt.coeff / gl.coeff;
            Monomial m = Monomial::quotient(lt.mono, gl.mono);
            p = p - g.scaled_shifted(c, m);
            step = true;
            break;
        }
        if (!step) {
            PolyQ t = PolyQ::from_term(p.table(), lt.mono, lt.coeff);
            r += t;
            p -= t;
        }
    }
    return r;
}

inline geoproof::PolyQ naive_spoly(const geoproof::PolyQ& f, const geoproof::PolyQ& g,
                                   const geoproof::TermOrder& ord) {
    using namespace geoproof;
    const auto& lf = f.leading_term(ord);
    const auto& lg = g.leading_term(ord);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    return f.scaled_shifted(lf.coeff.inverse(), Monomial::quotient(l, lf.mono)) -
           g.scaled_shifted(lg.coeff.inverse(), Monomial::quotient(l, lg.mono));
}

inline std::vector<geoproof::PolyQ> naive_buchberger(std::vector<geoproof::PolyQ> F,
                                                     const geoproof::TermOrder& ord) {
    using namespace geoproof;
    std::vector<PolyQ> G;
    for (auto& f : F)
        if (!f.is_zero()) G.push_back(f);

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pairs.push_back({i, j});
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        PolyQ s = naive_reduce(naive_spoly(G[i], G[j], ord), G, ord);
        if (s.is_zero()) continue;
        G.push_back(s);
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.push_back({k, G.size() - 1});
    }

    // minimize + reduce + monic
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i < G.size() && !changed; ++i) {
            std::vector<PolyQ> others;
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) others.push_back(G[j]);
            PolyQ r = naive_reduce(G[i], others, ord);
            if (!(r == G[i])) {
                changed = true;
                if (r.is_zero())
                    G.erase(G.begin() + static_cast<std::ptrdiff_t>(i));
                else
                    G[i] = r;
            }
        }
        if (!changed) break;
    }
    for (auto& g : G) g = g.scaled(g.leading_term(ord).coeff.inverse());
    std::sort(G.begin(), G.end(), [&](const PolyQ& a, const PolyQ& b) {
        return ord.greater(b.leading_term(ord).mono, a.leading_term(ord).mono);
    });
    return G;
}

}  // namespace testsupport
