#pragma once

#include <map>
#include <vector>

#include "geoproof/polynomial.hpp"

namespace testsupport {

// Deliberately simple map-based polynomial arithmetic, used as an
// independent oracle for the library's sorted-vector implementation.
struct NaivePoly {
    std::map<std::vector<int>, geoproof::Rational> terms;

    static NaivePoly from(const geoproof::PolyQ& p) {
        NaivePoly n;
        for (const auto& t : p.terms()) {
            std::vector<int> e(t.mono.size());
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = t.mono[static_cast<geoproof::VarId>(v)];
            n.terms[e] = t.coeff;
        }
        return n;
    }

    void add_term(const std::vector<int>& e, const geoproof::Rational& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }

    friend NaivePoly operator+(const NaivePoly& a, const NaivePoly& b) {
        NaivePoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }

    friend NaivePoly operator-(const NaivePoly& a, const NaivePoly& b) {
        NaivePoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, -c);
        return r;
    }

    friend NaivePoly operator*(const NaivePoly& a, const NaivePoly& b) {
        NaivePoly r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    bool operator==(const NaivePoly& o) const { return terms == o.terms; }
    bool is_zero() const { return terms.empty(); }
};

inline bool matches(const geoproof::PolyQ& p, const NaivePoly& n) { return NaivePoly::from(p) == n; }

}  // namespace testsupport
