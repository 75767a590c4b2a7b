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

#include <optional>
#include <set>
#include <vector>

#include "paraseq/core/program.hpp"
#include "paraseq/graph/dependency_graph.hpp"
#include "paraseq/transform/epistemic.hpp"
#include "paraseq/transform/modular.hpp"

namespace paraseq {

/// gamma_a :- Ka, not a.   for every base atom a of P.
inline Program gamma_program(const Program& p) {
    Program out = p.fresh();
    auto& sig = p.signature();
    for (AtomId a : p.base_atoms()) out.add(Rule{{sig.gamma(a)}, {sig.belief(a)}, {a}});
    return out;
}

/// :~ gamma_a. [1@n-i]   for every a in C_i.
///
/// Lower components get higher levels, so a gap low in the stratification
/// costs more than any number of gaps above it.
inline std::vector<WeakConstraint> level_weak_constraints(const SccOrder& order, Signature& sig) {
    std::vector<WeakConstraint> out;
    const std::size_t n = order.size();
    for (std::size_t i = 1; i <= n; ++i)
        for (AtomId a : order.component(i)) out.push_back(WeakConstraint{{sig.gamma(a)}, {}, 1, n - i});
    return out;
}

/// split(P) = P^HT u P_gamma u leveled weak constraints over the SCC order.
inline WeightedProgram build_split(const Program& p, const SccOrder& order) {
    Program prog = epistemic_ht(p);
    prog.add(gamma_program(p).rules());
    WeightedProgram out(std::move(prog));
    for (auto& w : level_weak_constraints(order, p.signature())) out.add(std::move(w));
    return out;
}

inline WeightedProgram build_split(const Program& p, std::optional<std::uint64_t> order_seed = std::nullopt) {
    return build_split(p, scc_topological(dependency_graph(p), order_seed));
}

/// split(P) with the coherent prefix P_1..P_k kept as plain rules.
///
/// The prefix atoms are two-valued in every optimal model, so instead of
/// rewriting them their belief is tied to the atom (Ka :- a) and the upper
/// layers read them as classical literals. Upper components keep the levels
/// they have in split(P). Falls back to build_split when k = 0, and when P
/// has native constraints: those can leave every classical base of the
/// prefix without a completion while split(P) still has models.
inline WeightedProgram build_split_with_prefix(const Program& p, const SccOrder& order) {
    if (p.has_constraints()) return build_split(p, order);
    auto prefix = coherent_prefix(p, stratify(p, order));
    if (prefix.k == 0) return build_split(p, order);

    const auto lower_atoms = order.prefix(prefix.k);
    const std::set<AtomId> lower(lower_atoms.begin(), lower_atoms.end());
    auto& sig = p.signature();

    Program prog = p.fresh();
    prog.add(prefix.coherent.rules());
    std::uint32_t index = 0;
    for (const auto& r : prefix.incoherent.rules()) detail::epistemic_rule(r, ++index, lower, prog);
    detail::belief_rules(p.base_atoms(), prog);
    for (const auto& r : prefix.incoherent.rules()) detail::belief_image(r, lower, prog);
    for (AtomId a : p.base_atoms())
        if (!lower.contains(a)) prog.add(Rule{{sig.gamma(a)}, {sig.belief(a)}, {a}});

    WeightedProgram out(std::move(prog));
    const std::size_t n = order.size();
    for (std::size_t i = prefix.k + 1; i <= n; ++i)
        for (AtomId a : order.component(i)) out.add(WeakConstraint{{sig.gamma(a)}, {}, 1, n - i});
    return out;
}

}  // namespace paraseq
