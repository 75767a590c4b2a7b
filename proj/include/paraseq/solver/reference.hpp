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
#include <stdexcept>
#include <string>
#include <vector>

#include "paraseq/core/program.hpp"
#include "paraseq/solver/search.hpp"

namespace paraseq {

/// Resource bound of the reference engine. It counts base atoms (objective
/// atoms and constraint heads); the auxiliaries added by the rewritings grow
/// linearly with those and are not counted separately.
struct Limits {
    std::size_t max_atoms = 24;
};

class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(std::size_t atoms, std::size_t bound)
        : std::runtime_error("reference engine guard exceeded: program has " + std::to_string(atoms) +
                             " base atoms, bound is " + std::to_string(bound) + " (raise with --max-atoms)"),
          atoms_(atoms), bound_(bound) {}

    std::size_t atoms() const noexcept { return atoms_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t atoms_;
    std::size_t bound_;
};

inline void check_guard(const Program& p, const Limits& limits) {
    std::size_t n = p.base_atoms().size();
    if (n > limits.max_atoms) throw GuardExceeded(n, limits.max_atoms);
}

namespace detail {

inline Interpretation to_interpretation(const CompiledProgram& c, const ModelSearch::Values& v) {
    std::vector<AtomId> out;
    for (std::uint32_t a = 0; a < v.size(); ++a)
        if (v[a] == 1) out.push_back(c.atoms[a]);
    return Interpretation(std::move(out));
}

inline bool satisfies(const Interpretation& m, const Rule& r) {
    auto in = [&](AtomId a) { return m.contains(a); };
    if (!std::all_of(r.pos.begin(), r.pos.end(), in)) return true;
    if (std::any_of(r.neg.begin(), r.neg.end(), in)) return true;
    return std::any_of(r.head.begin(), r.head.end(), in);
}

}  // namespace detail

inline bool is_model(const Interpretation& m, const Program& p) {
    return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) { return detail::satisfies(m, r); });
}

/// All classical models over At(P).
inline ModelSet classical_models(const Program& p, const Limits& limits = {}) {
    check_guard(p, limits);
    auto c = detail::CompiledProgram::from(p);
    ModelSet out;
    detail::ModelSearch(c, false).enumerate([&](const auto& v) {
        out.push_back(detail::to_interpretation(c, v));
        return true;
    });
    return normalize(out);
}

/// Subset-minimal classical models, by direct pairwise scan.
inline ModelSet minimal_models(const Program& p, const Limits& limits = {}) {
    ModelSet all = classical_models(p, limits);
    ModelSet out;
    for (const auto& m : all) {
        bool minimal = std::none_of(all.begin(), all.end(), [&](const auto& o) { return o.strict_subset_of(m); });
        if (minimal) out.push_back(m);
    }
    return out;
}

/// Gelfond-Lifschitz reduct: drop rules whose negative body meets I, then
/// drop the remaining negative bodies.
inline Program gl_reduct(const Program& p, const Interpretation& i) {
    Program out = p.fresh();
    for (AtomId a : p.atoms()) out.declare(a);
    for (const auto& r : p.rules()) {
        if (std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return i.contains(a); })) continue;
        out.add(Rule{r.head, r.pos, {}});
    }
    return out;
}

/// True iff some J strictly inside M is a model of the reduct P^M.
inline bool has_smaller_reduct_model(const Program& p, const Interpretation& m) {
    if (m.empty()) return false;
    detail::CompiledProgram c;
    for (AtomId a : m) c.add_atom(a);
    for (const auto& r : p.rules()) {
        if (std::any_of(r.neg.begin(), r.neg.end(), [&](AtomId a) { return m.contains(a); })) continue;
        // Atoms outside M are false in every candidate J.
        if (!std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return m.contains(a); })) continue;
        std::vector<AtomId> head;
        for (AtomId a : r.head)
            if (m.contains(a)) head.push_back(a);
        c.add_rule(head, r.pos, {});
    }
    // At least one atom of M must be false.
    c.add_rule({}, m.atoms(), {});
    bool found = false;
    // Some model below M exists iff a minimal one does, and minimal models of
    // a positive program are supported.
    detail::ModelSearch(c, true).enumerate([&](const auto&) {
        found = true;
        return false;
    });
    return found;
}

inline bool is_answer_set(const Program& p, const Interpretation& m) {
    for (AtomId a : m)
        if (!p.contains(a)) return false;
    return is_model(m, p) && !has_smaller_reduct_model(p, m);
}

/// AS(P). Candidates are the supported models of P; each is kept iff it is
/// a minimal model of its own reduct. Empty result: P is incoherent.
inline ModelSet answer_sets(const Program& p, const Limits& limits = {}) {
    check_guard(p, limits);
    auto c = detail::CompiledProgram::from(p);
    ModelSet out;
    detail::ModelSearch(c, true).enumerate([&](const auto& v) {
        auto m = detail::to_interpretation(c, v);
        if (!has_smaller_reduct_model(p, m)) out.push_back(std::move(m));
        return true;
    });
    return normalize(out);
}

inline bool body_holds(const Interpretation& m, const std::vector<AtomId>& pos, const std::vector<AtomId>& neg) {
    return std::all_of(pos.begin(), pos.end(), [&](AtomId a) { return m.contains(a); }) &&
           std::none_of(neg.begin(), neg.end(), [&](AtomId a) { return m.contains(a); });
}

inline std::uint64_t penalty(const WeightedProgram& wp, const Interpretation& m, std::uint64_t level) {
    std::uint64_t sum = 0;
    for (const auto& w : wp.weaks)
        if (w.level == level && body_holds(m, w.pos, w.neg)) sum += w.weight;
    return sum;
}

/// Penalties at every level of the program, highest level first.
inline std::vector<std::uint64_t> penalty_vector(const WeightedProgram& wp, const Interpretation& m) {
    std::vector<std::uint64_t> out;
    for (auto level : wp.levels()) out.push_back(penalty(wp, m, level));
    return out;
}

/// M is dominated by M' iff at some level M' pays less and both pay the same
/// at all higher levels.
inline bool dominates(const WeightedProgram& wp, const Interpretation& better, const Interpretation& worse) {
    return penalty_vector(wp, better) < penalty_vector(wp, worse);
}

/// AS^O: the answer sets not dominated by any other answer set.
inline ModelSet optimal_answer_sets(const WeightedProgram& wp, const Limits& limits = {}) {
    ModelSet all = answer_sets(wp.program, limits);
    if (wp.weaks.empty() || all.empty()) return all;
    std::vector<std::vector<std::uint64_t>> cost;
    cost.reserve(all.size());
    for (const auto& m : all) cost.push_back(penalty_vector(wp, m));
    const auto best = *std::min_element(cost.begin(), cost.end());
    ModelSet out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (cost[i] == best) out.push_back(all[i]);
    return out;
}

}  // namespace paraseq
