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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Thresholds are fixed below.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "paraseq/cli.hpp"
#include "paraseq/paraseq.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/random_programs.hpp"

using namespace paraseq;

namespace {

constexpr double kExamplesSeconds = 1.0;
constexpr int kRandomPrograms = 2000;
constexpr int kCoherentPrograms = 1000;
constexpr int kOddCycleFreePrograms = 1000;
constexpr int kLayeredPrograms = 100;
constexpr std::size_t kMinComponents = 3;
constexpr std::uint64_t kOrderSeeds = 16;
constexpr std::size_t kBenchmarkRules = 10000;
constexpr double kRewriteSeconds = 10.0;
constexpr std::size_t kMaxViolationsShown = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool member(const ModelSet& set, const Interpretation& m) { return std::find(set.begin(), set.end(), m) != set.end(); }

std::string show(const Signature& sig, const ModelSet& ms) {
    std::string out = "{";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ", ";
        out += "{";
        auto atoms = display_sorted(sig, ms[i]);
        for (std::size_t j = 0; j < atoms.size(); ++j) out += (j ? "," : "") + sig.display(atoms[j]);
        out += "}";
    }
    return out + "}";
}

std::string one_line(std::string text) {
    for (auto& c : text)
        if (c == '\n') c = ' ';
    return text;
}

struct Outcome {
    std::size_t checked = 0;
    std::vector<std::string> violations;

    void fail(std::string what) { violations.push_back(std::move(what)); }
    bool ok() const { return violations.empty() && checked > 0; }
};

struct Line {
    std::string title;
    Outcome outcome;
    std::string detail;
};

std::map<int, Line> results;
std::vector<std::string> notes;

void report(int id, const char* title, const Outcome& o, const std::string& detail) {
    results[id] = Line{title, o, detail};
}

int print_results() {
    int failures = 0;
    for (const auto& [id, line] : results) {
        const auto& o = line.outcome;
        std::printf("%s criterion %d: %s (%s)\n", o.ok() ? "PASS" : "FAIL", id, line.title.c_str(), line.detail.c_str());
        for (std::size_t i = 0; i < o.violations.size() && i < kMaxViolationsShown; ++i)
            std::printf("    violation: %s\n", o.violations[i].c_str());
        if (o.violations.size() > kMaxViolationsShown)
            std::printf("    ... %zu more\n", o.violations.size() - kMaxViolationsShown);
        if (!o.ok()) ++failures;
    }
    return failures;
}

std::string counts(const Outcome& o, const char* unit) {
    return std::to_string(o.checked) + " " + unit + ", " + std::to_string(o.violations.size()) + " violations";
}

// Criteria 2, 3, 5 and 6 share the same random instances.
struct Instance {
    Program program;
    SccOrder order;
    ModelSet oracle;
};

std::vector<Instance> random_instances() {
    support::GeneratorShape shape;
    shape.constraint_rate = 0.15;
    support::ProgramGenerator gen(20260101, shape);
    std::vector<Instance> out;
    for (int i = 0; i < kRandomPrograms; ++i) {
        auto p = gen.next();
        auto order = scc_topological(dependency_graph(p));
        auto oracle = split_seq_oracle(p);
        out.push_back({std::move(p), std::move(order), std::move(oracle)});
    }
    return out;
}

void example_programs() {
    using support::load_fixture;
    using support::models;
    Outcome o;
    const auto start = Clock::now();
    auto expect = [&](const char* what, const Program& p, const ModelSet& got, const ModelSet& want) {
        ++o.checked;
        if (got != want) o.fail(std::string(what) + ": got " + show(p.signature(), got) + ", want " + show(p.signature(), want));
    };
    auto intro = load_fixture("intro.lp");
    expect("intro split SEQ", intro, split_seq_oracle(intro), models(intro, {{"b", "Kb", "Kc"}}));
    expect("intro SEQ", intro, seq_models(intro), models(intro, {{"b", "Kb", "Kc"}, {"Ka"}}));
    auto ex1 = load_fixture("ex1.lp");
    expect("ex1 split SEQ", ex1, split_seq_oracle(ex1), models(ex1, {{"b", "Kb", "Kc"}}));
    auto ex2 = load_fixture("ex2.lp");
    expect("ex2 split SEQ", ex2, split_seq_oracle(ex2), models(ex2, {{"b", "Kb"}}));
    auto ex3 = load_fixture("ex3.lp");
    expect("ex3 split SEQ", ex3, split_seq_oracle(ex3), models(ex3, {{"a", "Ka", "Kd", "Ke"}, {"b", "Kb", "Kc"}}));
    auto fast = split_seq_fast(ex3);
    expect("ex3 fast path", ex3, fast ? ModelSet{*fast} : ModelSet{}, models(ex3, {{"a", "Ka", "Kd", "Ke"}}));
    const double elapsed = seconds_since(start);
    if (elapsed >= kExamplesSeconds) o.fail("took " + std::to_string(elapsed) + " s");
    report(1, "example programs, exact", o, counts(o, "checks") + ", " + std::to_string(elapsed) + " s < " + std::to_string(kExamplesSeconds) + " s");
}

void rewriting_criteria(const std::vector<Instance>& instances) {
    Outcome rewriting, penalties, subset;
    for (const auto& inst : instances) {
        const auto& p = inst.program;
        auto& sig = p.signature();
        const auto text = one_line(serialize(p));
        const auto wp = build_split(p, inst.order);
        const std::size_t n = inst.order.size();
        ++rewriting.checked;
        for (const auto& m : optimal_answer_sets(wp)) {
            const auto projected = strip_auxiliary(m, sig);
            if (!member(inst.oracle, projected)) rewriting.fail(text + " -> " + show(sig, {projected}));
            const auto g = gap(projected, sig);
            ++penalties.checked;
            for (std::size_t l = 0; l < n; ++l) {
                std::uint64_t expected = 0;
                for (AtomId a : inst.order.component(n - l)) expected += g.contains(sig.belief(a));
                if (penalty(wp, m, l) != expected) penalties.fail(text + " level " + std::to_string(l));
            }
        }
        ++subset.checked;
        const auto seq = seq_models(p);
        for (const auto& m : inst.oracle)
            if (!member(seq, m)) subset.fail(text + " -> " + show(sig, {m}));
    }
    report(2, "optimal models of the rewriting are split SEQ models", rewriting, counts(rewriting, "programs"));
    report(3, "penalty per level equals gap size in the matching component", penalties, counts(penalties, "optimal models"));
    report(5, "split SEQ models are SEQ models", subset, counts(subset, "programs"));
}

void congruence() {
    support::ProgramGenerator gen(4242);
    Outcome o;
    for (int i = 0; o.checked < kCoherentPrograms && i < 100 * kCoherentPrograms; ++i) {
        auto p = gen.next();
        const auto as = support::brute_answer_sets(p);
        if (as.empty()) continue;
        ++o.checked;
        ModelSet expected;
        for (const auto& m : as) expected.push_back(k_closure(m, p.signature()));
        normalize(expected);
        const auto text = one_line(serialize(p));
        if (split_seq_oracle(p) != expected) o.fail(text + ": oracle differs from answer-set closures");
        auto fast = split_seq_fast(p);
        if (!fast || !member(expected, *fast)) o.fail(text + ": fast path outside the closures");
    }
    report(4, "coherent programs: split SEQ models are the answer-set closures", o, counts(o, "coherent programs"));
}

// Even pairs first, then odd loops reading them: the prefix covers all pairs.
std::string synthetic_program(std::size_t rules) {
    std::ostringstream out;
    const std::size_t pairs = rules / 4;
    for (std::size_t i = 0; i < pairs; ++i) out << "p" << i << " :- not q" << i << ".\nq" << i << " :- not p" << i << ".\n";
    for (std::size_t i = 0; i < pairs; ++i) out << "r" << i << " :- p" << i << ", not r" << i << ".\n";
    for (std::size_t i = 0; 3 * pairs + i < rules; ++i) out << "s" << i << " | t" << i << " :- r" << i % pairs << ", not q" << i % pairs << ".\n";
    return out.str();
}

void benchmark(const Outcome& random_rule_counts) {
    Outcome o = random_rule_counts;
    const auto text = synthetic_program(kBenchmarkRules);
    const auto program = parse_program(text);
    double elapsed[2] = {0, 0};
    std::size_t emitted[2] = {0, 0};
    for (int plain = 0; plain < 2; ++plain) {
        std::vector<std::string> args;
        if (plain) args.push_back("--no-prefix-opt");
        args.push_back("rewrite");
        std::istringstream in(text);
        std::ostringstream out, err;
        const auto start = Clock::now();
        const int code = cli::run(args, in, out, err);
        elapsed[plain] = seconds_since(start);
        const auto s = out.str();
        emitted[plain] = static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
        ++o.checked;
        if (code != 0) o.fail("rewrite exited with " + std::to_string(code) + ": " + err.str());
        if (elapsed[plain] >= kRewriteSeconds) o.fail("rewrite took " + std::to_string(elapsed[plain]) + " s");
    }
    const auto k = coherent_prefix(program, stratify(program, scc_topological(dependency_graph(program)))).k;
    if (k == 0) o.fail("synthetic program has no coherent prefix");
    if (emitted[0] >= emitted[1]) o.fail("prefix optimization did not reduce the rewriting");
    report(9, "rewrite smoke benchmark and prefix size reduction", o,
           std::to_string(program.size()) + " rules, k = " + std::to_string(k) + ", " + std::to_string(elapsed[0]) + " s / " +
               std::to_string(elapsed[1]) + " s, " + std::to_string(emitted[0]) + " vs " + std::to_string(emitted[1]) +
               " lines; random programs with k >= 1: " + counts(random_rule_counts, "checked"));
}

void prefix_criteria(const std::vector<Instance>& random) {
    std::vector<Instance> instances;
    for (const char* name : {"intro.lp", "ex1.lp", "ex2.lp", "ex3.lp", "refined.lp"}) {
        auto p = support::load_fixture(name);
        auto order = scc_topological(dependency_graph(p));
        auto oracle = split_seq_oracle(p);
        instances.push_back({std::move(p), std::move(order), std::move(oracle)});
    }
    instances.insert(instances.end(), random.begin(), random.end());
    Outcome toggle, identity, rule_count;
    std::size_t mc_identity_holds = 0, with_prefix = 0;
    for (const auto& inst : instances) {
        const auto& p = inst.program;
        auto& sig = p.signature();
        const auto text = one_line(serialize(p));

        ++toggle.checked;
        FastOptions plain;
        plain.prefix_optimization = false;
        auto with = split_seq_fast(p), without = split_seq_fast(p, plain);
        if (!with || !member(inst.oracle, *with)) toggle.fail(text + ": with prefix optimization");
        if (!without || !member(inst.oracle, *without)) toggle.fail(text + ": without prefix optimization");

        auto cp = coherent_prefix(p, stratify(p, inst.order));
        if (cp.k == 0) continue;
        ++with_prefix;
        ++identity.checked;
        ModelSet factored;
        for (const auto& i : answer_sets(cp.coherent))
            for (const auto& j : split_seq_oracle(simplify_wrt(cp.incoherent, i)))
                factored.push_back(k_closure(i, sig).united(j));
        normalize(factored);
        if (factored != inst.oracle)
            identity.fail(text + ": factored " + show(sig, factored) + " vs " + show(sig, inst.oracle));
        auto filtered = maximal_canonical(factored, sig);
        if (normalize(filtered) == inst.oracle) ++mc_identity_holds;

        ++rule_count.checked;
        if (cp.k < inst.order.size() &&
            build_split_with_prefix(p, inst.order).program.size() >= build_split(p, inst.order).program.size())
            rule_count.fail(text + ": prefix rewriting is not smaller");
    }
    // The literal identity and the toggle are reported together.
    Outcome six = toggle;
    six.checked += identity.checked;
    six.violations.insert(six.violations.end(), identity.violations.begin(), identity.violations.end());
    report(6, "prefix toggle membership and factorization identity", six,
           "random and example programs; toggle: " + counts(toggle, "programs") + "; identity: " + counts(identity, "programs with k >= 1"));
    notes.push_back("with a final gap-minimality filter over the factored union, the identity holds on " +
                    std::to_string(mc_identity_holds) + " of " + std::to_string(with_prefix));
    benchmark(rule_count);
}

void odd_cycle_soundness() {
    support::ProgramGenerator gen(777);
    Outcome o;
    for (int i = 0; o.checked < kOddCycleFreePrograms && i < 100 * kOddCycleFreePrograms; ++i) {
        auto p = gen.next();
        if (has_odd_negative_cycle(dependency_graph(p))) continue;
        ++o.checked;
        if (answer_sets(p).empty()) o.fail(one_line(serialize(p)));
    }
    report(7, "no odd negative cycle implies an answer set", o, counts(o, "programs"));
}

void order_independence() {
    support::GeneratorShape shape;
    shape.max_rules = 8;
    support::ProgramGenerator gen(31337, shape);
    Outcome o;
    std::size_t orders = 0;
    for (int i = 0; o.checked < kLayeredPrograms && i < 100 * kLayeredPrograms; ++i) {
        auto p = gen.next();
        auto g = dependency_graph(p);
        if (scc_topological(g).size() < kMinComponents) continue;
        ++o.checked;
        const auto reference = split_seq_oracle(p);
        std::set<std::vector<std::vector<AtomId>>> seen{scc_topological(g).components()};
        for (std::uint64_t seed = 1; seed <= kOrderSeeds; ++seed) {
            if (!seen.insert(scc_topological(g, seed).components()).second) continue;
            OracleOptions opts;
            opts.order_seed = seed;
            if (split_seq_oracle(p, opts) != reference) o.fail(one_line(serialize(p)) + " seed " + std::to_string(seed));
        }
        orders += seen.size();
    }
    report(8, "split SEQ models do not depend on the topological order", o,
           counts(o, "programs") + ", " + std::to_string(orders) + " distinct orders");
}

}  // namespace

int main() {
    example_programs();
    const auto start = Clock::now();
    const auto instances = random_instances();
    notes.push_back(std::to_string(instances.size()) + " random programs solved by the oracle in " +
                    std::to_string(seconds_since(start)) + " s");
    rewriting_criteria(instances);
    congruence();
    odd_cycle_soundness();
    order_independence();
    prefix_criteria(instances);
    const int failures = print_results();
    for (const auto& n : notes) std::printf("note: %s\n", n.c_str());
    std::printf("%d of %zu criteria failed\n", failures, results.size());
    return failures == 0 ? 0 : 1;
}
