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
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>

namespace paraseq {

using AtomId = std::uint32_t;

// objective and constraint_head atoms form the base signature; the other
// kinds are derived from a base atom or a rule by the rewritings.
enum class AtomKind : std::uint8_t {
    objective,
    belief,
    lambda,
    gamma,
    constraint_head,
};

struct AtomInfo {
    std::string name;
    AtomKind kind = AtomKind::objective;
    AtomId base = 0;          // belief, gamma: the base atom they talk about
    std::uint32_t index = 0;  // lambda: rule number; constraint_head: constraint number
    std::uint32_t head = 0;   // lambda: head position
};

inline constexpr std::string_view kBeliefPrefix = "k_";
inline constexpr std::string_view kLambdaPrefix = "lambda_";
inline constexpr std::string_view kGammaPrefix = "gamma_";
inline constexpr std::string_view kConstraintPrefix = "cstr_";

inline bool is_reserved_name(std::string_view name) {
    for (auto prefix : {kBeliefPrefix, kLambdaPrefix, kGammaPrefix, kConstraintPrefix}) {
        if (name.starts_with(prefix)) return true;
    }
    return false;
}

inline bool is_base_kind(AtomKind k) {
    return k == AtomKind::objective || k == AtomKind::constraint_head;
}

/// Append-only symbol table shared by a program and everything derived from
/// it. Generated atoms are interned by name, so asking twice for the belief
/// atom of `a` returns the same id.
///
/// Not synchronized: a signature must not be extended from two threads at
/// once. Programs over distinct signatures are independent.
class Signature {
public:
    AtomId objective(std::string_view name) {
        if (auto id = find(name)) return *id;
        return add({std::string(name), AtomKind::objective, 0, 0, 0});
    }

    AtomId belief(AtomId base) {
        check_base(base, "belief");
        std::string name = std::string(kBeliefPrefix) + atoms_[base].name;
        if (auto id = find(name)) return *id;
        return add({std::move(name), AtomKind::belief, base, 0, 0});
    }

    AtomId gamma(AtomId base) {
        check_base(base, "gamma");
        std::string name = std::string(kGammaPrefix) + atoms_[base].name;
        if (auto id = find(name)) return *id;
        return add({std::move(name), AtomKind::gamma, base, 0, 0});
    }

    AtomId lambda(std::uint32_t rule, std::uint32_t head) {
        std::string name = std::string(kLambdaPrefix) + std::to_string(rule) + "_" + std::to_string(head);
        if (auto id = find(name)) return *id;
        return add({std::move(name), AtomKind::lambda, 0, rule, head});
    }

    AtomId constraint_head(std::uint32_t index) {
        std::string name = std::string(kConstraintPrefix) + std::to_string(index);
        if (auto id = find(name)) return *id;
        return add({std::move(name), AtomKind::constraint_head, 0, index, 0});
    }

    /// Interns a name that may carry a reserved prefix, recovering the kind
    /// from the prefix. Used when reading back serialized rewritings.
    AtomId intern(std::string_view name) {
        if (auto id = find(name)) return *id;
        if (name.starts_with(kBeliefPrefix) && name.size() > kBeliefPrefix.size()) {
            return belief(intern_base(name.substr(kBeliefPrefix.size())));
        }
        if (name.starts_with(kGammaPrefix) && name.size() > kGammaPrefix.size()) {
            return gamma(intern_base(name.substr(kGammaPrefix.size())));
        }
        if (name.starts_with(kLambdaPrefix)) {
            auto rest = name.substr(kLambdaPrefix.size());
            auto sep = rest.find('_');
            std::uint32_t rule = 0, head = 0;
            if (sep != std::string_view::npos && parse_number(rest.substr(0, sep), rule) &&
                parse_number(rest.substr(sep + 1), head)) {
                return lambda(rule, head);
            }
        }
        if (name.starts_with(kConstraintPrefix)) {
            std::uint32_t index = 0;
            if (parse_number(name.substr(kConstraintPrefix.size()), index)) return constraint_head(index);
        }
        return objective(name);
    }

    std::optional<AtomId> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const AtomInfo& info(AtomId id) const { return atoms_.at(id); }
    const std::string& name(AtomId id) const { return atoms_.at(id).name; }
    AtomKind kind(AtomId id) const { return atoms_.at(id).kind; }
    bool is_base(AtomId id) const { return is_base_kind(kind(id)); }
    std::size_t size() const noexcept { return atoms_.size(); }

    /// Printable form: belief atoms as K(a), everything else by name.
    std::string display(AtomId id) const {
        const auto& a = info(id);
        if (a.kind == AtomKind::belief) return "K(" + atoms_[a.base].name + ")";
        return a.name;
    }

    /// Sort key that places K(a) right after a: (base name, rank, full name).
    std::tuple<std::string_view, int, std::string_view> sort_key(AtomId id) const {
        const auto& a = info(id);
        switch (a.kind) {
            case AtomKind::belief: return {atoms_[a.base].name, 1, a.name};
            case AtomKind::gamma: return {atoms_[a.base].name, 2, a.name};
            case AtomKind::lambda: return {a.name, 3, a.name};
            default: return {a.name, 0, a.name};
        }
    }

private:
    AtomId add(AtomInfo a) {
        auto id = static_cast<AtomId>(atoms_.size());
        index_.emplace(a.name, id);
        atoms_.push_back(std::move(a));
        return id;
    }

    AtomId intern_base(std::string_view name) {
        AtomId id = intern(name);
        if (!is_base(id)) throw std::invalid_argument("derived atom over non-base atom '" + std::string(name) + "'");
        return id;
    }

    void check_base(AtomId base, const char* what) const {
        if (base >= atoms_.size() || !is_base_kind(atoms_[base].kind)) {
            throw std::invalid_argument(std::string(what) + " atom requested for a non-base atom");
        }
    }

    static bool parse_number(std::string_view s, std::uint32_t& out) {
        if (s.empty() || s.size() > 9) return false;
        std::uint32_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
            v = v * 10 + static_cast<std::uint32_t>(c - '0');
        }
        out = v;
        return true;
    }

    std::deque<AtomInfo> atoms_;
    std::unordered_map<std::string, AtomId> index_;
};

}  // namespace paraseq
