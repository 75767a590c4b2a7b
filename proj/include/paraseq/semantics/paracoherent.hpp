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
#include <optional>
#include <vector>

#include "paraseq/core/program.hpp"
#include "paraseq/graph/dependency_graph.hpp"
#include "paraseq/solver/reference.hpp"
#include "paraseq/transform/epistemic.hpp"
#include "paraseq/transform/modular.hpp"
#include "paraseq/transform/split.hpp"

namespace paraseq {

/// G(I): belief atoms Ka in I with a not in I.
using GapSet = Interpretation;

inline GapSet gap(const Interpretation& i, const Signature& sig) {
    return i.filtered([&](AtomId a) {
        const auto& info = sig.info(a);
        return info.kind == AtomKind::belief && !i.contains(info.base);
    });
}

/// I^K = I u {Ka | a in I}.
inline Interpretation k_closure(const Interpretation& i, Signature& sig) {
    Interpretation out = i;
    for (AtomId a : i)
        if (sig.is_base(a)) out.insert(sig.belief(a));
    return out;
}

/// Drops the lambda and gamma auxiliaries, leaving atoms of the extended
/// signature (base atoms and their beliefs).
inline Interpretation strip_auxiliary(const Interpretation& i, const Signature& sig) {
    return i.filtered([&](AtomId a) {
        auto k = sig.kind(a);
        return k != AtomKind::lambda && k != AtomKind::gamma;
    });
}

/// mc(F): members whose gap does not strictly contain another member's gap.
inline ModelSet maximal_canonical(const ModelSet& family, const Signature& sig) {
    std::vector<GapSet> gaps;
    gaps.reserve(family.size());
    for (const auto& m : family) gaps.push_back(gap(m, sig));
    ModelSet out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool dominated = std::any_of(gaps.begin(), gaps.end(), [&](const GapSet& g) { return g.strict_subset_of(gaps[i]); });
        if (!dominated) out.push_back(family[i]);
    }
    return out;
}

/// SEQ(P): maximal canonical answer sets of P^HT, restricted to the
/// extended signature.
inline ModelSet seq_models(const Program& p, const Limits& limits = {}) {
    check_guard(p, limits);
    const auto& sig = p.signature();
    ModelSet candidates;
    for (const auto& m : answer_sets(epistemic_ht(p), limits)) candidates.push_back(strip_auxiliary(m, sig));
    normalize(candidates);
    ModelSet out = maximal_canonical(candidates, sig);
    return normalize(out);
}

struct OracleOptions {
    Limits limits;
    std::optional<std::uint64_t> order_seed;
};

/// Split SEQ models by direct expansion of the layer-by-layer definition.
///
/// Every path M_1 in SEQ(P_1), M_j in SEQ(P_j u info(M_{j-1})) is followed;
/// the end points are then filtered for maximal canonicity. Exponential in
/// the number of layers, and the reference against which the rewriting is
/// checked. Each distinct (layer, M_{j-1}) pair is solved once.
inline ModelSet split_seq_oracle(const Program& p, const OracleOptions& opts = {}) {
    check_guard(p, opts.limits);
    auto& sig = p.signature();
    const auto order = scc_topological(dependency_graph(p), opts.order_seed);
    if (order.empty()) return seq_models(p, opts.limits);
    const auto layers = stratify(p, order);

    ModelSet current = seq_models(layers.layer(1), opts.limits);
    for (std::size_t j = 2; j <= order.size(); ++j) {
        const auto below = order.prefix(j - 1);
        ModelSet next;
        for (const auto& m : current) {
            Program sub = layers.layer(j);
            for (AtomId a : below) sub.declare(a);
            for (auto& r : info_rules(m, below, sig)) sub.add(std::move(r));
            auto step = seq_models(sub, opts.limits);
            next.insert(next.end(), step.begin(), step.end());
        }
        current = std::move(normalize(next));
    }
    ModelSet out = maximal_canonical(current, sig);
    return normalize(out);
}

struct FastOptions {
    Limits limits;
    std::optional<std::uint64_t> order_seed;
    bool prefix_optimization = true;
};

namespace detail {

inline std::optional<Interpretation> first_projected(const ModelSet& models, const Signature& sig) {
    std::optional<Interpretation> best;
    for (const auto& m : models) {
        auto x = strip_auxiliary(m, sig);
        if (!best || display_less(sig, x, *best)) best = std::move(x);
    }
    return best;
}

}  // namespace detail

/// One split SEQ model, from an optimal answer set of split(P) with the
/// gamma and lambda atoms removed. Among several optimal models the first in
/// name order is returned. std::nullopt iff P has no classical model.
///
/// With the prefix optimization the coherent layers P_1..P_k stay ordinary
/// rules (see build_split_with_prefix). Choosing an answer set I of the
/// prefix first and completing it afterwards is not enough: the gap of the
/// completion depends on I, so the choice of I has to be part of the same
/// optimization.
inline std::optional<Interpretation> split_seq_fast(const Program& p, const FastOptions& opts = {}) {
    check_guard(p, opts.limits);
    const auto order = scc_topological(dependency_graph(p), opts.order_seed);
    auto rewritten = opts.prefix_optimization ? build_split_with_prefix(p, order) : build_split(p, order);
    return detail::first_projected(optimal_answer_sets(rewritten, opts.limits), p.signature());
}

}  // namespace paraseq
