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

#include <string>

#include "paraseq/core/program.hpp"

namespace paraseq {

enum class Dialect { native, aspcore2 };

namespace detail {

inline void write_body(std::string& out, const Signature& sig, const std::vector<AtomId>& pos,
                       const std::vector<AtomId>& neg) {
    bool first = true;
    for (AtomId a : pos) {
        if (!first) out += ", ";
        out += sig.name(a);
        first = false;
    }
    for (AtomId a : neg) {
        if (!first) out += ", ";
        out += "not ";
        out += sig.name(a);
        first = false;
    }
}

}  // namespace detail

inline std::string serialize(const Rule& r, const Signature& sig) {
    std::string out;
    for (std::size_t i = 0; i < r.head.size(); ++i) {
        if (i) out += " | ";
        out += sig.name(r.head[i]);
    }
    if (!r.pos.empty() || !r.neg.empty() || r.is_constraint()) {
        out += r.is_constraint() ? ":- " : " :- ";
        detail::write_body(out, sig, r.pos, r.neg);
    }
    if (out.ends_with(' ')) out.pop_back();
    out += '.';
    return out;
}

/// One statement per line, rules first, then weak constraints, each in
/// stored order. Atoms print by name.
///
/// ASP-Core-2 counts weak constraints with equal [w@l, terms] tuples once per
/// answer set, so that dialect appends a per-constraint term to keep the
/// sum-over-constraints reading.
inline std::string serialize(const WeightedProgram& wp, Dialect dialect = Dialect::native) {
    const auto& sig = wp.program.signature();
    std::string out;
    for (const auto& r : wp.program.rules()) {
        out += serialize(r, sig);
        out += '\n';
    }
    std::size_t index = 0;
    for (const auto& w : wp.weaks) {
        ++index;
        out += ":~ ";
        detail::write_body(out, sig, w.pos, w.neg);
        out += ". [";
        out += std::to_string(w.weight);
        out += '@';
        out += std::to_string(w.level);
        if (dialect == Dialect::aspcore2) {
            out += ',';
            out += std::to_string(index);
        }
        out += "]\n";
    }
    return out;
}

inline std::string serialize(const Program& p, Dialect dialect = Dialect::native) {
    return serialize(WeightedProgram(p), dialect);
}

}  // namespace paraseq
