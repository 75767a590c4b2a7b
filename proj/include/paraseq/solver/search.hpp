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

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "paraseq/core/program.hpp"

namespace paraseq::detail {

/// Program re-indexed over a dense local atom range.
struct CompiledProgram {
    struct LocalRule {
        std::vector<std::uint32_t> head, pos, neg;
    };

    std::vector<AtomId> atoms;  // local -> global
    std::unordered_map<AtomId, std::uint32_t> local;
    std::vector<LocalRule> rules;
    std::vector<std::vector<std::uint32_t>> occurs;   // rules mentioning the atom
    std::vector<std::vector<std::uint32_t>> defines;  // rules with the atom in the head

    std::uint32_t add_atom(AtomId a) {
        auto [it, fresh] = local.emplace(a, static_cast<std::uint32_t>(atoms.size()));
        if (fresh) {
            atoms.push_back(a);
            occurs.emplace_back();
            defines.emplace_back();
        }
        return it->second;
    }

    void add_rule(const std::vector<AtomId>& head, const std::vector<AtomId>& pos, const std::vector<AtomId>& neg) {
        LocalRule r;
        for (AtomId a : head) r.head.push_back(add_atom(a));
        for (AtomId a : pos) r.pos.push_back(add_atom(a));
        for (AtomId a : neg) r.neg.push_back(add_atom(a));
        const auto id = static_cast<std::uint32_t>(rules.size());
        auto note = [&](std::uint32_t a) {
            if (occurs[a].empty() || occurs[a].back() != id) occurs[a].push_back(id);
        };
        for (auto a : r.head) {
            note(a);
            defines[a].push_back(id);
        }
        for (auto a : r.pos) note(a);
        for (auto a : r.neg) note(a);
        rules.push_back(std::move(r));
    }

    static CompiledProgram from(const Program& p) {
        CompiledProgram c;
        for (AtomId a : p.atoms()) c.add_atom(a);
        for (const auto& r : p.rules()) c.add_rule(r.head, r.pos, r.neg);
        return c;
    }
};

/// Depth-first enumeration of total assignments that satisfy every rule
/// read as a clause, optionally restricted to supported assignments (each
/// true atom has a rule whose body holds and whose other head atoms are
/// false). Unit propagation over both conditions prunes the tree; the
/// callback sees each solution once and returns false to stop.
class ModelSearch {
public:
    using Values = std::vector<std::int8_t>;  // -1 unknown, 0 false, 1 true

    ModelSearch(const CompiledProgram& prog, bool require_support)
        : prog_(prog), support_(require_support), init_(prog.atoms.size(), -1) {}

    void fix(std::uint32_t atom, bool value) { init_[atom] = value ? 1 : 0; }

    /// Returns false if the callback stopped the enumeration.
    bool enumerate(const std::function<bool(const Values&)>& on_model) {
        Values v = init_;
        std::vector<std::uint32_t> touched;
        for (std::uint32_t a = 0; a < v.size(); ++a)
            if (v[a] != -1) touched.push_back(a);
        if (!propagate(v, touched, true)) return true;
        return search(v, on_model);
    }

private:
    bool search(Values& v, const std::function<bool(const Values&)>& on_model) {
        std::uint32_t pick = 0;
        while (pick < v.size() && v[pick] != -1) ++pick;
        if (pick == v.size()) return on_model(v);
        for (std::int8_t choice : {std::int8_t{0}, std::int8_t{1}}) {
            Values w = v;
            w[pick] = choice;
            std::vector<std::uint32_t> touched{pick};
            if (propagate(w, touched, false) && !search(w, on_model)) return false;
        }
        return true;
    }

    // Clause status of a rule: conflict, satisfied, or the single open literal.
    bool clause(Values& v, const CompiledProgram::LocalRule& r, std::vector<std::uint32_t>& touched) {
        int open = 0;
        std::uint32_t lit = 0;
        std::int8_t want = 0;
        for (auto a : r.head) {
            if (v[a] == 1) return true;
            if (v[a] == -1) ++open, lit = a, want = 1;
        }
        for (auto a : r.pos) {
            if (v[a] == 0) return true;
            if (v[a] == -1) ++open, lit = a, want = 0;
        }
        for (auto a : r.neg) {
            if (v[a] == 1) return true;
            if (v[a] == -1) ++open, lit = a, want = 1;
        }
        if (open == 0) return false;
        if (open == 1) {
            v[lit] = want;
            touched.push_back(lit);
        }
        return true;
    }

    bool blocked(const Values& v, const CompiledProgram::LocalRule& r, std::uint32_t a) const {
        for (auto b : r.pos)
            if (v[b] == 0) return true;
        for (auto c : r.neg)
            if (v[c] == 1) return true;
        for (auto h : r.head)
            if (h != a && v[h] == 1) return true;
        return false;
    }

    bool supported(Values& v, std::uint32_t a, std::vector<std::uint32_t>& touched) {
        if (v[a] == 0) return true;
        int open = 0;
        const CompiledProgram::LocalRule* only = nullptr;
        for (auto r : prog_.defines[a]) {
            const auto& rule = prog_.rules[r];
            if (!blocked(v, rule, a)) {
                ++open;
                only = &rule;
                if (open > 1) return true;
            }
        }
        if (open == 0) {
            if (v[a] == 1) return false;
            v[a] = 0;
            touched.push_back(a);
            return true;
        }
        if (v[a] == 1) {
            auto force = [&](std::uint32_t b, std::int8_t val) {
                if (v[b] == -1) {
                    v[b] = val;
                    touched.push_back(b);
                }
                return v[b] == val;
            };
            for (auto b : only->pos)
                if (!force(b, 1)) return false;
            for (auto c : only->neg)
                if (!force(c, 0)) return false;
            for (auto h : only->head)
                if (h != a && !force(h, 0)) return false;
        }
        return true;
    }

    bool propagate(Values& v, std::vector<std::uint32_t>& touched, bool full) {
        if (full) {
            for (const auto& r : prog_.rules)
                if (!clause(v, r, touched)) return false;
            if (support_) {
                for (std::uint32_t a = 0; a < v.size(); ++a)
                    if (!supported(v, a, touched)) return false;
            }
        }
        for (std::size_t next = 0; next < touched.size(); ++next) {
            const std::uint32_t x = touched[next];
            if (support_ && !supported(v, x, touched)) return false;
            for (auto r : prog_.occurs[x]) {
                const auto& rule = prog_.rules[r];
                if (!clause(v, rule, touched)) return false;
                if (support_) {
                    for (auto h : rule.head)
                        if (!supported(v, h, touched)) return false;
                }
            }
        }
        return true;
    }

    const CompiledProgram& prog_;
    bool support_;
    Values init_;
};

}  // namespace paraseq::detail
