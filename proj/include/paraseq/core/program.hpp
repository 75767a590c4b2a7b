/*
 *  Copyright (C) 2026  The paraseq authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "paraseq/core/signature.hpp"

namespace paraseq {

/// a_1 | ... | a_l :- b_1, ..., b_m, not c_1, ..., not c_n.
/// An empty head is a constraint.
struct Rule {
    std::vector<AtomId> head;
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;

    bool is_constraint() const noexcept { return head.empty(); }
    bool is_fact() const noexcept { return !head.empty() && pos.empty() && neg.empty(); }
    bool is_positive() const noexcept { return neg.empty(); }

    friend bool operator==(const Rule&, const Rule&) = default;
};

namespace detail {

inline void dedup_in_order(std::vector<AtomId>& atoms) {
    std::vector<AtomId> out;
    out.reserve(atoms.size());
    for (AtomId a : atoms) {
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    atoms = std::move(out);
}

}  // namespace detail

inline Rule make_rule(std::vector<AtomId> head, std::vector<AtomId> pos = {}, std::vector<AtomId> neg = {}) {
    detail::dedup_in_order(head);
    detail::dedup_in_order(pos);
    detail::dedup_in_order(neg);
    return Rule{std::move(head), std::move(pos), std::move(neg)};
}

class Program {
public:
    Program() : sig_(std::make_shared<Signature>()) {}
    explicit Program(std::shared_ptr<Signature> sig) : sig_(std::move(sig)) {
        if (!sig_) throw std::invalid_argument("program needs a signature");
    }

    /// Adds a rule; duplicate atoms inside head or body are merged.
    void add(Rule r) {
        detail::dedup_in_order(r.head);
        detail::dedup_in_order(r.pos);
        detail::dedup_in_order(r.neg);
        for (AtomId a : r.head) declare(a);
        for (AtomId a : r.pos) declare(a);
        for (AtomId a : r.neg) declare(a);
        rules_.push_back(std::move(r));
    }

    void add(std::span<const Rule> rules) {
        for (const auto& r : rules) add(r);
    }

    void declare(AtomId a) {
        if (a >= sig_->size()) throw std::out_of_range("atom not in signature");
        if (a >= member_.size()) member_.resize(sig_->size(), 0);
        if (member_[a]) return;
        member_[a] = 1;
        atoms_.push_back(a);
    }

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }

    /// At(P) in first-occurrence order.
    const std::vector<AtomId>& atoms() const noexcept { return atoms_; }
    bool contains(AtomId a) const noexcept { return a < member_.size() && member_[a]; }

    /// Atoms of the base signature (objective and constraint heads).
    std::vector<AtomId> base_atoms() const {
        std::vector<AtomId> out;
        for (AtomId a : atoms_)
            if (sig_->is_base(a)) out.push_back(a);
        return out;
    }

    bool is_positive() const {
        return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_positive(); });
    }
    bool has_constraints() const {
        return std::any_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_constraint(); });
    }

    Signature& signature() const noexcept { return *sig_; }
    const std::shared_ptr<Signature>& shared_signature() const noexcept { return sig_; }

    /// Empty program over the same signature.
    Program fresh() const { return Program(sig_); }

private:
    std::shared_ptr<Signature> sig_;
    std::vector<Rule> rules_;
    std::vector<AtomId> atoms_;
    std::vector<char> member_;
};

struct WeakConstraint {
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;
    std::uint64_t weight = 1;
    std::uint64_t level = 0;

    friend bool operator==(const WeakConstraint&, const WeakConstraint&) = default;
};

struct WeightedProgram {
    Program program;
    std::vector<WeakConstraint> weaks;

    WeightedProgram() = default;
    explicit WeightedProgram(Program p, std::vector<WeakConstraint> w = {})
        : program(std::move(p)), weaks(std::move(w)) {
        for (const auto& wc : weaks) declare_atoms(wc);
    }

    void add(WeakConstraint wc) {
        declare_atoms(wc);
        weaks.push_back(std::move(wc));
    }

    std::vector<const WeakConstraint*> at_level(std::uint64_t level) const {
        std::vector<const WeakConstraint*> out;
        for (const auto& w : weaks)
            if (w.level == level) out.push_back(&w);
        return out;
    }

    /// Distinct levels, highest first.
    std::vector<std::uint64_t> levels() const {
        std::vector<std::uint64_t> out;
        for (const auto& w : weaks) out.push_back(w.level);
        std::sort(out.begin(), out.end(), std::greater<>());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    void declare_atoms(const WeakConstraint& wc) {
        for (AtomId a : wc.pos) program.declare(a);
        for (AtomId a : wc.neg) program.declare(a);
    }
};

/// A set of atoms, stored sorted by id.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::vector<AtomId> atoms) : atoms_(std::move(atoms)) {
        std::sort(atoms_.begin(), atoms_.end());
        atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    }
    Interpretation(std::initializer_list<AtomId> atoms) : Interpretation(std::vector<AtomId>(atoms)) {}

    bool contains(AtomId a) const { return std::binary_search(atoms_.begin(), atoms_.end(), a); }
    void insert(AtomId a) {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
        if (it == atoms_.end() || *it != a) atoms_.insert(it, a);
    }

    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }
    auto begin() const noexcept { return atoms_.begin(); }
    auto end() const noexcept { return atoms_.end(); }
    const std::vector<AtomId>& atoms() const noexcept { return atoms_; }

    bool subset_of(const Interpretation& other) const {
        return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
    }
    bool strict_subset_of(const Interpretation& other) const { return size() < other.size() && subset_of(other); }

    Interpretation united(const Interpretation& other) const {
        std::vector<AtomId> out;
        std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(), std::back_inserter(out));
        return Interpretation(std::move(out));
    }

    template <class Pred>
    Interpretation filtered(Pred keep) const {
        std::vector<AtomId> out;
        std::copy_if(atoms_.begin(), atoms_.end(), std::back_inserter(out), keep);
        return Interpretation(std::move(out));
    }

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
    friend auto operator<=>(const Interpretation&, const Interpretation&) = default;

private:
    std::vector<AtomId> atoms_;
};

/// Increasing cardinality, then lexicographic by atom id.
inline bool cardinality_less(const Interpretation& a, const Interpretation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

using ModelSet = std::vector<Interpretation>;

/// Sorts by cardinality-then-id order and drops duplicates.
inline ModelSet& normalize(ModelSet& models) {
    std::sort(models.begin(), models.end(), cardinality_less);
    models.erase(std::unique(models.begin(), models.end()), models.end());
    return models;
}

inline bool models_equal(ModelSet a, ModelSet b) { return normalize(a) == normalize(b); }

/// Sorted sort keys of the atoms of m.
inline auto display_keys(const Signature& sig, const Interpretation& m) {
    std::vector<decltype(sig.sort_key(0))> k;
    for (AtomId x : m) k.push_back(sig.sort_key(x));
    std::sort(k.begin(), k.end());
    return k;
}

/// Name-based order (cardinality, then sort keys). Stable across programs
/// that only differ in atom numbering, e.g. a rewriting and its re-parse.
inline bool display_less(const Signature& sig, const Interpretation& a, const Interpretation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return display_keys(sig, a) < display_keys(sig, b);
}

inline std::vector<AtomId> display_sorted(const Signature& sig, const Interpretation& m) {
    std::vector<AtomId> out(m.begin(), m.end());
    std::sort(out.begin(), out.end(), [&](AtomId x, AtomId y) { return sig.sort_key(x) < sig.sort_key(y); });
    return out;
}

/// Constraints ":- B." become "cstr_i :- B, not cstr_i." with a fresh cstr_i
/// per constraint. Other rules are kept as they are.
inline Program desugar_constraints(const Program& p) {
    Program out = p.fresh();
    auto& sig = p.signature();
    std::uint32_t next = 1;
    auto fresh_head = [&] {
        for (;; ++next) {
            AtomId a = sig.constraint_head(next);
            if (!p.contains(a) && !out.contains(a)) return a;
        }
    };
    for (AtomId a : p.atoms()) out.declare(a);
    for (const auto& r : p.rules()) {
        if (!r.is_constraint()) {
            out.add(r);
            continue;
        }
        AtomId g = fresh_head();
        Rule d = r;
        d.head = {g};
        d.neg.push_back(g);
        out.add(std::move(d));
    }
    return out;
}

}  // namespace paraseq
