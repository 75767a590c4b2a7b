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

#include <random>
#include <string>
#include <vector>

#include "paraseq/core/program.hpp"

namespace paraseq::support {

struct GeneratorShape {
    std::size_t max_atoms = 6;
    std::size_t max_rules = 10;
    double constraint_rate = 0.1;
    double disjunction_rate = 0.25;
    double negation_rate = 0.5;
    bool desugar = true;
};

/// Random ground program over atoms a..f. Constraints are desugared unless
/// the shape says otherwise.
class ProgramGenerator {
public:
    explicit ProgramGenerator(std::uint64_t seed, GeneratorShape shape = {}) : rng_(seed), shape_(shape) {}

    Program next() {
        Program p;
        auto& sig = p.signature();
        const std::size_t atoms = pick(1, shape_.max_atoms);
        std::vector<AtomId> pool;
        for (std::size_t i = 0; i < atoms; ++i) pool.push_back(sig.objective(std::string(1, char('a' + i))));

        const std::size_t rules = pick(1, shape_.max_rules);
        for (std::size_t r = 0; r < rules; ++r) {
            Rule rule;
            if (!chance(shape_.constraint_rate)) {
                rule.head.push_back(any(pool));
                if (chance(shape_.disjunction_rate)) rule.head.push_back(any(pool));
            }
            for (std::size_t i = pick(0, 2); i > 0; --i) rule.pos.push_back(any(pool));
            if (chance(shape_.negation_rate))
                for (std::size_t i = pick(1, 2); i > 0; --i) rule.neg.push_back(any(pool));
            if (rule.is_constraint() && rule.pos.empty() && rule.neg.empty()) rule.pos.push_back(any(pool));
            p.add(std::move(rule));
        }
        return shape_.desugar ? desugar_constraints(p) : p;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::size_t pick(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
    AtomId any(const std::vector<AtomId>& pool) { return pool[pick(0, pool.size() - 1)]; }

    std::mt19937_64 rng_;
    GeneratorShape shape_;
};

}  // namespace paraseq::support
