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
#include <set>
#include <vector>

#include "paraseq/core/program.hpp"

namespace paraseq {

namespace detail {

/// Emits the replacement of one rule (number `index`, 1-based) in the
/// epistemic rewriting.
///
/// Atoms in `classical` are taken as already decided two-valued atoms from a
/// lower, coherent part of the program: their negative occurrences stay as
/// plain "not c" literals and their belief is the atom itself. With an empty
/// `classical` set this is the literal rewriting:
///
///   l_1 | ... | l_l | Kc_1 | ... | Kc_n :- b_1, ..., b_m.
///   a_i :- l_i.
///   :- l_i, c_j.
///   l_i :- a_i, l_k.
///
/// for a rule with a negative body; otherwise the rule is copied.
inline void epistemic_rule(const Rule& r, std::uint32_t index, const std::set<AtomId>& classical, Program& out) {
    auto& sig = out.signature();
    auto lower = [&](AtomId a) { return classical.contains(a); };

    std::vector<AtomId> neg_lower, neg_upper, k_neg_upper;
    for (AtomId c : r.neg) (lower(c) ? neg_lower : neg_upper).push_back(c);
    for (AtomId c : neg_upper) k_neg_upper.push_back(sig.belief(c));

    if (!neg_upper.empty()) {
        std::vector<AtomId> lambdas;
        for (std::uint32_t i = 1; i <= r.head.size(); ++i) lambdas.push_back(sig.lambda(index, i));

        std::vector<AtomId> guess = lambdas;
        guess.insert(guess.end(), k_neg_upper.begin(), k_neg_upper.end());
        out.add(Rule{guess, r.pos, neg_lower});
        for (std::size_t i = 0; i < r.head.size(); ++i) out.add(Rule{{r.head[i]}, {lambdas[i]}, {}});
        for (AtomId lam : lambdas)
            for (AtomId c : r.neg) out.add(Rule{{}, {lam, c}, {}});
        for (std::size_t i = 0; i < r.head.size(); ++i)
            for (AtomId lam_k : lambdas) out.add(Rule{{lambdas[i]}, {r.head[i], lam_k}, {}});
    } else {
        out.add(r);
    }
}

/// Ka_1 | ... | Ka_l | Kc_1 | ... | Kc_n :- Kb_1, ..., Kb_m.
inline void belief_image(const Rule& r, const std::set<AtomId>& classical, Program& out) {
    auto& sig = out.signature();
    auto lower = [&](AtomId a) { return classical.contains(a); };
    std::vector<AtomId> neg_lower, k_neg_upper;
    for (AtomId c : r.neg) {
        if (lower(c)) neg_lower.push_back(c);
        else k_neg_upper.push_back(sig.belief(c));
    }
    std::vector<AtomId> k_head;
    for (AtomId a : r.head) k_head.push_back(lower(a) ? a : sig.belief(a));
    k_head.insert(k_head.end(), k_neg_upper.begin(), k_neg_upper.end());
    std::vector<AtomId> k_body;
    for (AtomId b : r.pos) k_body.push_back(lower(b) ? b : sig.belief(b));
    out.add(Rule{k_head, k_body, neg_lower});
}

inline void belief_rules(const std::vector<AtomId>& base, Program& out) {
    auto& sig = out.signature();
    for (AtomId a : base) out.add(Rule{{sig.belief(a)}, {a}, {}});
}

}  // namespace detail

/// Epistemic HT-transformation P^HT. The result has no negation; its only
/// non-disjunctive statements are the constraints ":- l_i, c_j." and the
/// constraints inherited from P.
inline Program epistemic_ht(const Program& p) {
    Program out = p.fresh();
    const std::set<AtomId> none;
    std::uint32_t index = 0;
    for (const auto& r : p.rules()) detail::epistemic_rule(r, ++index, none, out);
    detail::belief_rules(p.base_atoms(), out);
    for (const auto& r : p.rules()) detail::belief_image(r, none, out);
    return out;
}

}  // namespace paraseq
