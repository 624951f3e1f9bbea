#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "geoproof/error.hpp"

namespace geoproof {

using VarId = std::uint32_t;

/// Ordered universe of variable names, partitioned into free variables
/// (arbitrarily chosen coordinates, ratio parameters) followed by dependent
/// variables (coordinates pinned by the construction). Ids 0..free_count-1
/// are free, the rest dependent. Immutable; shared between polynomials.
class VarTable {
  public:
    using Ptr = std::shared_ptr<const VarTable>;

    static Ptr make(std::vector<std::string> free_vars, std::vector<std::string> dependent_vars) {
        return Ptr(new VarTable(std::move(free_vars), std::move(dependent_vars)));
    }

    std::size_t size() const { return names_.size(); }
    std::size_t free_count() const { return free_count_; }
    std::size_t dependent_count() const { return names_.size() - free_count_; }

    bool is_free(VarId v) const { return v < free_count_; }
    bool is_dependent(VarId v) const { return v >= free_count_ && v < names_.size(); }

    const std::string& name(VarId v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<VarId> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VarId require(std::string_view name) const {
        auto v = find(name);
        if (!v) throw error("unknown variable '" + std::string(name) + "'");
        return *v;
    }

    std::vector<VarId> free_ids() const {
        std::vector<VarId> ids(free_count_);
        for (std::size_t i = 0; i < free_count_; ++i) ids[i] = static_cast<VarId>(i);
        return ids;
    }
    std::vector<VarId> dependent_ids() const {
        std::vector<VarId> ids;
        for (std::size_t i = free_count_; i < names_.size(); ++i) ids.push_back(static_cast<VarId>(i));
        return ids;
    }

    /// Table of the free variables alone; coefficients of the rational
    /// function field live over this.
    Ptr parameter_table() const {
        std::vector<std::string> fv(names_.begin(), names_.begin() + free_count_);
        return make(std::move(fv), {});
    }

    /// Extended table with fresh dependent variables appended (used for the
    /// Rabinowitsch slack variables). Names must be fresh.
    Ptr with_appended_dependents(const std::vector<std::string>& extra) const {
        std::vector<std::string> fv(names_.begin(), names_.begin() + free_count_);
        std::vector<std::string> dv(names_.begin() + free_count_, names_.end());
        for (const auto& n : extra) dv.push_back(n);
        return make(std::move(fv), std::move(dv));
    }

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.free_count_ == b.free_count_ && a.names_ == b.names_;
    }

    /// Cheap sameness check for operand validation: pointer equality first,
    /// structural equality as a fallback (tables rebuilt from JSON compare
    /// equal to the originals).
    static bool same(const Ptr& a, const Ptr& b) {
        if (a.get() == b.get()) return true;
        if (!a || !b) return false;
        return *a == *b;
    }

    static void check_same(const Ptr& a, const Ptr& b) {
        if (!same(a, b)) throw universe_error("operands belong to different variable universes");
    }

  private:
    VarTable(std::vector<std::string> free_vars, std::vector<std::string> dependent_vars)
        : free_count_(free_vars.size()) {
        names_ = std::move(free_vars);
        names_.insert(names_.end(), dependent_vars.begin(), dependent_vars.end());
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw error("empty variable name");
            if (!index_.emplace(names_[i], static_cast<VarId>(i)).second)
                throw error("duplicate variable name '" + names_[i] + "'");
        }
    }

    std::vector<std::string> names_;
    std::size_t free_count_;
    std::unordered_map<std::string, VarId> index_;
};

}  // namespace geoproof
