#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "geoproof/error.hpp"
#include "geoproof/monomial.hpp"
#include "geoproof/vartable.hpp"

namespace geoproof {

enum class OrderKind { lex, degrevlex };

/// Total order on monomials: lex or degrevlex with an explicit variable
/// priority (highest first), or a block (elimination) order made of such
/// segments compared left to right. The concatenated priorities must form a
/// permutation of the variable universe.
class TermOrder {
  public:
    struct Block {
        OrderKind kind;
        std::vector<VarId> vars;  // highest priority first
    };

    static TermOrder lex(const VarTable::Ptr& table, std::vector<VarId> priority) {
        return TermOrder(table, {Block{OrderKind::lex, std::move(priority)}});
    }
    static TermOrder degrevlex(const VarTable::Ptr& table, std::vector<VarId> priority) {
        return TermOrder(table, {Block{OrderKind::degrevlex, std::move(priority)}});
    }
    /// All variables, id order (free variables first, i.e. highest).
    static TermOrder degrevlex(const VarTable::Ptr& table) {
        return degrevlex(table, default_priority(table));
    }
    static TermOrder lex(const VarTable::Ptr& table) {
        return lex(table, default_priority(table));
    }
    static TermOrder blocks(const VarTable::Ptr& table, std::vector<Block> bs) {
        return TermOrder(table, std::move(bs));
    }

    /// Order with extra variables ranked above everything else, in the given
    /// sequence (used for Rabinowitsch slack variables). The extended order
    /// lives on `extended` which must contain all old variables unchanged.
    TermOrder with_leading_vars(const VarTable::Ptr& extended, const std::vector<VarId>& lead) const {
        std::vector<Block> bs = blocks_;
        Block front{bs.empty() ? OrderKind::degrevlex : bs.front().kind, lead};
        bs.insert(bs.begin(), std::move(front));
        return TermOrder(extended, std::move(bs));
    }

    const VarTable::Ptr& table() const { return table_; }
    const std::vector<Block>& block_list() const { return blocks_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        for (const auto& blk : blocks_) {
            std::strong_ordering c = blk.kind == OrderKind::lex ? cmp_lex(blk.vars, a, b)
                                                                : cmp_degrevlex(blk.vars, a, b);
            if (c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    /// Human-readable description, e.g. "degrevlex(x6>x7>...)".
    std::string describe() const {
        std::string s;
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
            if (bi) s += " | ";
            s += blocks_[bi].kind == OrderKind::lex ? "lex(" : "degrevlex(";
            for (std::size_t i = 0; i < blocks_[bi].vars.size(); ++i) {
                if (i) s += ">";
                s += table_->name(blocks_[bi].vars[i]);
            }
            s += ")";
        }
        return s;
    }

  private:
    TermOrder(VarTable::Ptr table, std::vector<Block> bs)
        : table_(std::move(table)), blocks_(std::move(bs)) {
        std::vector<bool> seen(table_->size(), false);
        std::size_t total = 0;
        for (const auto& blk : blocks_) {
            for (VarId v : blk.vars) {
                if (v >= table_->size() || seen[v])
                    throw error("term order priority is not a permutation of the variable table");
                seen[v] = true;
                ++total;
            }
        }
        if (total != table_->size())
            throw error("term order priority does not cover the variable table");
    }

    static std::vector<VarId> default_priority(const VarTable::Ptr& table) {
        std::vector<VarId> p(table->size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<VarId>(i);
        return p;
    }

    static std::strong_ordering cmp_lex(const std::vector<VarId>& vars, const Monomial& a,
                                        const Monomial& b) {
        for (VarId v : vars) {
            if (a[v] != b[v])
                return a[v] > b[v] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }

    // Graded, ties broken by the reversed priority scan: at the first
    // difference from the lowest-priority end, the smaller exponent wins.
    static std::strong_ordering cmp_degrevlex(const std::vector<VarId>& vars, const Monomial& a,
                                              const Monomial& b) {
        std::uint32_t da = 0, db = 0;
        for (VarId v : vars) {
            da += a[v];
            db += b[v];
        }
        if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
            if (a[*it] != b[*it])
                return a[*it] < b[*it] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }

    VarTable::Ptr table_;
    std::vector<Block> blocks_;
};

/// Spec-level three-way monomial comparison.
inline std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b, const TermOrder& ord) {
    if (a.size() != b.size()) throw universe_error("monomials from different universes");
    return ord.compare(a, b);
}

}  // namespace geoproof
