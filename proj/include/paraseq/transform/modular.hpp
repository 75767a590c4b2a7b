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
#include "paraseq/graph/dependency_graph.hpp"

namespace paraseq {

/// Rules carrying a lower-layer interpretation M (over `universe`, with
/// belief atoms) into the next layer:
///
///   a.          for a in M
///   :- not a.   for Ka in M
///   :- a.       for a in the universe with neither a nor Ka in M
///
/// Under the epistemic rewriting ":- not a" forces Ka and ":- a" forbids a
/// and Ka, so the belief part of M is passed on exactly. Gap atoms (Ka
/// without a) only get ":- not a".
inline std::vector<Rule> info_rules(const Interpretation& m, const std::vector<AtomId>& universe,
                                    Signature& sig) {
    std::vector<Rule> out;
    for (AtomId a : universe)
        if (m.contains(a)) out.push_back(Rule{{a}, {}, {}});
    for (AtomId a : universe)
        if (m.contains(sig.belief(a))) out.push_back(Rule{{}, {}, {a}});
    for (AtomId a : universe)
        if (!m.contains(a) && !m.contains(sig.belief(a))) out.push_back(Rule{{}, {a}, {}});
    return out;
}

struct CoherentPrefix {
    std::size_t k = 0;
    Program coherent;    // P_1 u ... u P_k
    Program incoherent;  // P_{k+1} u ... u P_n
};

/// Longest prefix of layers that pass the sufficient coherence test: no
/// odd negative cycle in the layer's own graph and no native constraint.
/// Desugared constraints carry an odd self-loop and stop the prefix there.
inline CoherentPrefix coherent_prefix(const Program& p, const Stratification& s) {
    CoherentPrefix out{0, p.fresh(), p.fresh()};
    bool open = true;
    for (std::size_t j = 1; j <= s.size(); ++j) {
        const Program& layer = s.layer(j);
        if (open && !layer.has_constraints() && !has_odd_negative_cycle(dependency_graph(layer))) {
            out.k = j;
            out.coherent.add(layer.rules());
        } else {
            open = false;
            out.incoherent.add(layer.rules());
        }
    }
    return out;
}

/// P_inc^I: drops every rule whose negative body meets I and erases the
/// atoms of I from the remaining rules. A rule whose head is emptied this
/// way is satisfied by I and dropped too; constraints keep their (reduced)
/// body.
inline Program simplify_wrt(const Program& p, const Interpretation& i) {
    Program out = p.fresh();
    auto in = [&](AtomId a) { return i.contains(a); };
    for (const auto& r : p.rules()) {
        if (std::any_of(r.neg.begin(), r.neg.end(), in)) continue;
        Rule s;
        for (AtomId a : r.head)
            if (!in(a)) s.head.push_back(a);
        if (!r.is_constraint() && s.head.empty()) continue;
        for (AtomId a : r.pos)
            if (!in(a)) s.pos.push_back(a);
        s.neg = r.neg;
        out.add(std::move(s));
    }
    return out;
}

}  // namespace paraseq
