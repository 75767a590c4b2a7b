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
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paraseq/paraseq.hpp"

namespace paraseq::cli {

enum ExitCode : int {
    ok = 0,
    input_error = 1,
    guard_exceeded = 2,
    no_model = 20,
};

struct Settings {
    std::string command;
    std::string file = "-";
    std::string model;
    std::string format = "text";
    std::string dialect = "native";
    std::size_t max_atoms = Limits{}.max_atoms;
    std::optional<std::uint64_t> order_seed;
    bool no_prefix_opt = false;
};

namespace detail {

inline std::string join_atoms(const Signature& sig, const std::vector<AtomId>& atoms, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += sep;
        out += sig.display(atoms[i]);
    }
    return out;
}

inline std::string model_text(const Signature& sig, const Interpretation& m) {
    auto atoms = display_sorted(sig, m);
    auto g = display_sorted(sig, gap(m, sig));
    return join_atoms(sig, atoms, " ") + "\ngap: {" + join_atoms(sig, g, ", ") + "}\n";
}

inline nlohmann::json model_json(const Signature& sig, const Interpretation& m) {
    nlohmann::json model = nlohmann::json::array(), g = nlohmann::json::array();
    for (AtomId a : display_sorted(sig, m)) model.push_back(sig.display(a));
    for (AtomId a : display_sorted(sig, gap(m, sig))) g.push_back(sig.display(a));
    return {{"model", model}, {"gap", g}};
}

inline std::string read_input(const std::string& file, std::istream& in) {
    if (file == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + file + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

/// Splits "b K(b), K(c)" or "{b,Kb}"-style text into atom tokens at
/// top-level whitespace and commas.
inline std::vector<std::string> model_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool sep = depth == 0 && (c == ',' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c)));
        if (sep) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

/// Resolves model tokens against the program signature; nullopt if a token
/// names no atom of the program.
inline std::optional<Interpretation> parse_model(const std::string& text, const Program& p) {
    auto& sig = p.signature();
    std::vector<AtomId> atoms;
    for (const auto& tok : model_tokens(text)) {
        std::string name = tok;
        bool belief = false;
        if (name.size() > 3 && name.starts_with("K(") && name.ends_with(")")) {
            name = name.substr(2, name.size() - 3);
            belief = true;
        }
        auto id = sig.find(name);
        if (!id || !p.contains(*id)) return std::nullopt;
        if (belief) {
            if (!sig.is_base(*id)) return std::nullopt;
            atoms.push_back(sig.belief(*id));
        } else {
            atoms.push_back(*id);
        }
    }
    return Interpretation(std::move(atoms));
}

struct Emitter {
    const Settings& s;
    std::ostream& out;

    bool json() const { return s.format == "json"; }

    void models(const Signature& sig, const ModelSet& ms) {
        std::vector<Interpretation> sorted(ms.begin(), ms.end());
        std::sort(sorted.begin(), sorted.end(),
                  [&](const auto& a, const auto& b) { return display_keys(sig, a) < display_keys(sig, b); });
        if (json()) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& m : sorted) arr.push_back(model_json(sig, m));
            out << nlohmann::json{{"status", "ok"}, {"models", arr}}.dump() << '\n';
            return;
        }
        for (const auto& m : sorted) out << model_text(sig, m);
    }
};

inline int execute(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
    Emitter emit{s, out};
    const Limits limits{s.max_atoms};

    auto fail = [&](int code, const std::string& status, const std::string& message) {
        err << "paraseq: " << message << '\n';
        if (emit.json()) out << nlohmann::json{{"status", status}, {"error", message}}.dump() << '\n';
        return code;
    };

    Program program;
    try {
        program = desugar_constraints(parse_program(read_input(s.file, in)));
    } catch (const ParseError& e) {
        return fail(input_error, "parse-error", (s.file == "-" ? std::string("<stdin>") : s.file) + ":" + e.what());
    } catch (const std::runtime_error& e) {
        return fail(input_error, "input-error", e.what());
    }
    auto& sig = program.signature();

    try {
        if (s.command == "rewrite") {
            const auto order = scc_topological(dependency_graph(program), s.order_seed);
            auto wp = s.no_prefix_opt ? build_split(program, order) : build_split_with_prefix(program, order);
            out << serialize(wp, s.dialect == "aspcore2" ? Dialect::aspcore2 : Dialect::native);
            return ok;
        }
        if (s.command == "graph") {
            auto g = dependency_graph(program);
            out << to_dot(g, scc_topological(g, s.order_seed), sig);
            return ok;
        }
        if (s.command == "solve") {
            auto m = split_seq_fast(program, FastOptions{limits, s.order_seed, !s.no_prefix_opt});
            if (!m) {
                err << "paraseq: no paracoherent answer set exists\n";
                if (emit.json()) out << nlohmann::json{{"status", "no-model"}, {"model", nullptr}, {"gap", nullptr}}.dump() << '\n';
                return no_model;
            }
            if (emit.json()) {
                auto j = model_json(sig, *m);
                j["status"] = "ok";
                out << j.dump() << '\n';
            } else {
                out << model_text(sig, *m);
            }
            return ok;
        }
        if (s.command == "oracle") {
            emit.models(sig, split_seq_oracle(program, OracleOptions{limits, s.order_seed}));
            return ok;
        }
        if (s.command == "seq") {
            emit.models(sig, seq_models(program, limits));
            return ok;
        }
        if (s.command == "check") {
            check_guard(program, limits);
            auto m = parse_model(s.model, program);
            bool as = false, seq = false, split = false;
            if (m) {
                Interpretation objective = m->filtered([&](AtomId a) { return sig.is_base(a); });
                Interpretation beliefs = m->filtered([&](AtomId a) { return sig.kind(a) == AtomKind::belief; });
                as = is_answer_set(program, objective) &&
                     (beliefs.empty() || k_closure(objective, sig) == *m);
                // A model written without belief atoms stands for its closure.
                Interpretation probe = beliefs.empty() ? k_closure(*m, sig) : *m;
                auto seqs = seq_models(program, limits);
                seq = std::find(seqs.begin(), seqs.end(), probe) != seqs.end();
                auto splits = split_seq_oracle(program, OracleOptions{limits, s.order_seed});
                split = std::find(splits.begin(), splits.end(), probe) != splits.end();
            }
            std::string cls = as ? "answer set" : split ? "split SEQ" : seq ? "SEQ" : "none";
            if (emit.json()) {
                out << nlohmann::json{{"status", "ok"}, {"class", cls}, {"answer_set", as}, {"seq", seq}, {"split_seq", split}}.dump()
                    << '\n';
            } else {
                auto yn = [](bool b) { return b ? "yes" : "no"; };
                out << "answer set: " << yn(as) << "\nSEQ: " << yn(seq) << "\nsplit SEQ: " << yn(split)
                    << "\nclass: " << cls << '\n';
            }
            return ok;
        }
    } catch (const GuardExceeded& e) {
        return fail(guard_exceeded, "guard-exceeded", e.what());
    }
    return fail(input_error, "usage-error", "unknown command '" + s.command + "'");
}

}  // namespace detail

/// Runs the command line `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Split semi-equilibrium (paracoherent) answer sets of ground disjunctive programs", "paraseq"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-atoms", s.max_atoms, "Base-atom bound of the reference engine");
    app.add_option("--order-seed", s.order_seed, "Permute tie-breaking among incomparable components");
    app.add_flag("--no-prefix-opt", s.no_prefix_opt, "Disable the coherent-prefix optimization");
    app.add_option("--dialect", s.dialect, "Output dialect of rewrite")->check(CLI::IsMember({"native", "aspcore2"}));

    auto file_arg = [&](CLI::App* sub) { sub->add_option("file", s.file, "Program file, '-' for standard input"); };
    file_arg(app.add_subcommand("rewrite", "Print the weighted rewriting for an external optimizing solver"));
    file_arg(app.add_subcommand("solve", "Print one split SEQ model"));
    file_arg(app.add_subcommand("oracle", "Print all split SEQ models (layer-by-layer definition)"));
    file_arg(app.add_subcommand("seq", "Print all SEQ models"));
    file_arg(app.add_subcommand("graph", "Print the SCC condensation as DOT"));
    auto* check = app.add_subcommand("check", "Classify an interpretation");
    check->add_option("model", s.model, "Atoms, e.g. \"b K(b) K(c)\"")->required();
    file_arg(check);

    std::vector<std::string> argv_store{"paraseq"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "paraseq: " << e.what() << '\n' << app.help();
        return input_error;
    }
    s.command = app.get_subcommands().front()->get_name();
    return detail::execute(s, in, out, err);
}

}  // namespace paraseq::cli
