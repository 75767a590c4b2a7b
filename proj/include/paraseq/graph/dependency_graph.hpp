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
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "paraseq/core/program.hpp"

namespace paraseq {

enum class Polarity : std::uint8_t { positive, negative };

struct Edge {
    AtomId from;
    AtomId to;
    Polarity polarity;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dependency graph over the base atoms. (a, b) means a's truth depends on
/// b; a pair that occurs both positively and negatively gives two edges.
class DependencyGraph {
public:
    DependencyGraph() = default;

    void add_node(AtomId a) {
        if (index_.emplace(a, nodes_.size()).second) {
            nodes_.push_back(a);
            out_.emplace_back();
        }
    }

    void add_edge(AtomId from, AtomId to, Polarity pol) {
        add_node(from);
        add_node(to);
        Edge e{from, to, pol};
        if (seen_.insert(e).second) {
            out_[index_.at(from)].push_back(edges_.size());
            edges_.push_back(e);
        }
    }

    const std::vector<AtomId>& nodes() const noexcept { return nodes_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t index_of(AtomId a) const { return index_.at(a); }
    bool has_node(AtomId a) const { return index_.contains(a); }

    /// Edge ids leaving the node at position i.
    const std::vector<std::size_t>& out_edges(std::size_t i) const { return out_[i]; }

    bool has_edge(AtomId from, AtomId to, Polarity pol) const { return seen_.contains(Edge{from, to, pol}); }

private:
    std::vector<AtomId> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::unordered_map<AtomId, std::size_t> index_;
    std::set<Edge> seen_;
};

inline DependencyGraph dependency_graph(const Program& p) {
    const auto& sig = p.signature();
    DependencyGraph g;
    for (AtomId a : p.atoms())
        if (sig.is_base(a)) g.add_node(a);
    for (const auto& r : p.rules()) {
        for (AtomId a : r.head) {
            if (!sig.is_base(a)) continue;
            for (AtomId b : r.pos)
                if (sig.is_base(b)) g.add_edge(a, b, Polarity::positive);
            for (AtomId b : r.neg)
                if (sig.is_base(b)) g.add_edge(a, b, Polarity::negative);
            for (AtomId h : r.head)
                if (h != a && sig.is_base(h)) g.add_edge(a, h, Polarity::positive);
        }
    }
    return g;
}

namespace detail {

/// Iterative Tarjan. Returns the component number of every node (by node
/// position) and the number of components.
inline std::pair<std::vector<std::size_t>, std::size_t> tarjan(const DependencyGraph& g) {
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    const std::size_t n = g.nodes().size();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::size_t counter = 0, ncomp = 0;

    struct Frame {
        std::size_t node;
        std::size_t next_edge;
    };
    std::vector<Frame> call;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& f = call.back();
            const auto& out = g.out_edges(f.node);
            if (f.next_edge < out.size()) {
                std::size_t w = g.index_of(g.edges()[out[f.next_edge++]].to);
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
                continue;
            }
            std::size_t v = f.node;
            call.pop_back();
            if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = ncomp;
                } while (w != v);
                ++ncomp;
            }
        }
    }
    return {std::move(comp), ncomp};
}

}  // namespace detail

/// Components C_1..C_n in topological order: every edge leaving C_j points
/// into some C_i with i <= j, so each prefix Gamma_j is a splitting set.
class SccOrder {
public:
    SccOrder() = default;
    explicit SccOrder(std::vector<std::vector<AtomId>> components) : components_(std::move(components)) {
        for (std::size_t i = 0; i < components_.size(); ++i)
            for (AtomId a : components_[i]) position_[a] = i;
    }

    std::size_t size() const noexcept { return components_.size(); }
    bool empty() const noexcept { return components_.empty(); }
    const std::vector<std::vector<AtomId>>& components() const noexcept { return components_; }
    /// 1-based, as C_j.
    const std::vector<AtomId>& component(std::size_t j) const { return components_.at(j - 1); }

    /// Gamma_j = C_1 u ... u C_j (1-based; prefix(0) is empty).
    std::vector<AtomId> prefix(std::size_t j) const {
        std::vector<AtomId> out;
        for (std::size_t i = 0; i < j && i < components_.size(); ++i)
            out.insert(out.end(), components_[i].begin(), components_[i].end());
        return out;
    }

    /// 0-based component position of an atom, if ordered.
    std::optional<std::size_t> position(AtomId a) const {
        auto it = position_.find(a);
        if (it == position_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::vector<std::vector<AtomId>> components_;
    std::unordered_map<AtomId, std::size_t> position_;
};

/// SCC decomposition ordered dependencies-first. Ties between incomparable
/// components go to the one whose earliest atom occurs first, or follow a
/// seeded random priority when `seed` is set.
inline SccOrder scc_topological(const DependencyGraph& g, std::optional<std::uint64_t> seed = std::nullopt) {
    auto [comp, ncomp] = detail::tarjan(g);
    const std::size_t n = g.nodes().size();

    std::vector<std::vector<AtomId>> members(ncomp);
    std::vector<std::size_t> first(ncomp, n);
    for (std::size_t v = 0; v < n; ++v) {
        members[comp[v]].push_back(g.nodes()[v]);
        first[comp[v]] = std::min(first[comp[v]], v);
    }

    // Condensation: remaining[c] counts distinct components c depends on.
    std::vector<std::set<std::size_t>> deps(ncomp), dependents(ncomp);
    for (const auto& e : g.edges()) {
        std::size_t a = comp[g.index_of(e.from)], b = comp[g.index_of(e.to)];
        if (a != b) {
            deps[a].insert(b);
            dependents[b].insert(a);
        }
    }

    std::vector<std::size_t> priority(ncomp);
    if (seed) {
        std::vector<std::size_t> perm(ncomp);
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937_64 rng(*seed);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t c = 0; c < ncomp; ++c) priority[c] = perm[c];
    } else {
        priority = first;
    }

    using Item = std::pair<std::size_t, std::size_t>;  // (priority, component)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    std::vector<std::size_t> remaining(ncomp);
    for (std::size_t c = 0; c < ncomp; ++c) {
        remaining[c] = deps[c].size();
        if (remaining[c] == 0) ready.push({priority[c], c});
    }
    std::vector<std::vector<AtomId>> ordered;
    ordered.reserve(ncomp);
    while (!ready.empty()) {
        auto [_, c] = ready.top();
        ready.pop();
        ordered.push_back(std::move(members[c]));
        for (std::size_t d : dependents[c])
            if (--remaining[d] == 0) ready.push({priority[d], d});
    }
    return SccOrder(std::move(ordered));
}

/// Layers P_1..P_n: P_j holds the rules whose atoms all lie in Gamma_j but
/// not in Gamma_{j-1}. Rules without ordered atoms go to P_1.
struct Stratification {
    std::vector<Program> layers;

    std::size_t size() const noexcept { return layers.size(); }
    const Program& layer(std::size_t j) const { return layers.at(j - 1); }
};

inline Stratification stratify(const Program& p, const SccOrder& order) {
    Stratification s;
    const std::size_t n = std::max<std::size_t>(order.size(), p.empty() ? 0 : 1);
    for (std::size_t j = 0; j < n; ++j) s.layers.push_back(p.fresh());
    for (const auto& r : p.rules()) {
        std::size_t layer = 0;
        auto visit = [&](AtomId a) {
            if (auto pos = order.position(a)) layer = std::max(layer, *pos);
        };
        for (AtomId a : r.head) visit(a);
        for (AtomId a : r.pos) visit(a);
        for (AtomId a : r.neg) visit(a);
        s.layers[layer].add(r);
    }
    return s;
}

/// S is a splitting set of P when every rule with a head atom in S has all
/// its atoms in S.
inline bool is_splitting_set(const Program& p, const std::vector<AtomId>& s) {
    std::set<AtomId> in(s.begin(), s.end());
    for (const auto& r : p.rules()) {
        bool touches = std::any_of(r.head.begin(), r.head.end(), [&](AtomId a) { return in.contains(a); });
        if (!touches) continue;
        auto inside = [&](AtomId a) { return in.contains(a); };
        if (!std::all_of(r.head.begin(), r.head.end(), inside) || !std::all_of(r.pos.begin(), r.pos.end(), inside) ||
            !std::all_of(r.neg.begin(), r.neg.end(), inside)) {
            return false;
        }
    }
    return true;
}

/// True iff some directed cycle carries an odd number of negative edges.
///
/// Each positive edge is subdivided by a fresh midpoint, which turns the
/// question into "is there a directed cycle of odd length". Inside a strongly
/// connected component that holds exactly when the component is not
/// two-colourable as an undirected graph, so the colouring runs per SCC and
/// only over intra-component edges. Linear in the number of edges.
inline bool has_odd_negative_cycle(const DependencyGraph& g) {
    auto [comp, ncomp] = detail::tarjan(g);
    const std::size_t n = g.nodes().size();

    // Undirected graph: original nodes first, midpoints appended.
    std::vector<std::vector<std::size_t>> adj(n);
    auto link = [&](std::size_t a, std::size_t b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (const auto& e : g.edges()) {
        std::size_t a = g.index_of(e.from), b = g.index_of(e.to);
        if (comp[a] != comp[b]) continue;
        if (e.polarity == Polarity::negative) {
            link(a, b);
        } else {
            std::size_t mid = adj.size();
            adj.emplace_back();
            link(a, mid);
            link(mid, b);
        }
    }

    std::vector<int> colour(adj.size(), -1);
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t v = queue[head];
            for (std::size_t w : adj[v]) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return true;
                }
            }
        }
    }
    return false;
}

/// Condensation as DOT text. Negative dependencies are dashed; components
/// with an odd negative cycle are drawn as boxes.
inline std::string to_dot(const DependencyGraph& g, const SccOrder& order, const Signature& sig) {
    std::ostringstream out;
    out << "digraph condensation {\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& c = order.components()[i];
        std::vector<AtomId> sorted(c);
        std::sort(sorted.begin(), sorted.end(),
                  [&](AtomId a, AtomId b) { return g.index_of(a) < g.index_of(b); });
        DependencyGraph sub;
        for (AtomId a : sorted) sub.add_node(a);
        for (const auto& e : g.edges())
            if (order.position(e.from) == i && order.position(e.to) == i) sub.add_edge(e.from, e.to, e.polarity);
        out << "  c" << i + 1 << " [label=\"C" << i + 1 << ": {";
        for (std::size_t k = 0; k < sorted.size(); ++k) out << (k ? ", " : "") << sig.name(sorted[k]);
        out << "}\"" << (has_odd_negative_cycle(sub) ? ", shape=box" : "") << "];\n";
    }
    std::set<std::tuple<std::size_t, std::size_t, Polarity>> seen;
    for (const auto& e : g.edges()) {
        auto a = order.position(e.from), b = order.position(e.to);
        if (!a || !b || *a == *b) continue;
        if (!seen.insert({*a, *b, e.polarity}).second) continue;
        out << "  c" << *a + 1 << " -> c" << *b + 1 << (e.polarity == Polarity::negative ? " [style=dashed]" : "")
            << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace paraseq
