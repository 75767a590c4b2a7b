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

#include <fstream>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>

#include "paraseq/core/parse.hpp"
#include "paraseq/core/program.hpp"

namespace paraseq::support {

inline std::string read_fixture(const std::string& name) {
    std::ifstream f(std::string(PARASEQ_PROGRAMS_DIR) + "/" + name);
    if (!f) throw std::runtime_error("missing fixture " + name);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline Program load_fixture(const std::string& name) { return desugar_constraints(parse_program(read_fixture(name))); }

/// Builds an interpretation from names, where "Kx" stands for the belief
/// atom of x.
inline Interpretation interp(const Program& p, std::initializer_list<std::string_view> names) {
    auto& sig = p.signature();
    std::vector<AtomId> out;
    for (auto n : names) {
        if (n.size() > 1 && n[0] == 'K') out.push_back(sig.belief(sig.objective(n.substr(1))));
        else out.push_back(sig.objective(n));
    }
    return Interpretation(std::move(out));
}

inline ModelSet models(const Program& p, std::initializer_list<std::initializer_list<std::string_view>> sets) {
    ModelSet out;
    for (auto s : sets) out.push_back(interp(p, s));
    return normalize(out);
}

}  // namespace paraseq::support
