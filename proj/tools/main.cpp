// Command-line front end: decide, oracle, crosscheck, generate, stats, fixture.
//
// Exit codes: 0 YES (or success), 1 NO (or crosscheck disagreement),
// 2 REJECTED or inconclusive, 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "clawreconf/crosscheck.hpp"
#include "clawreconf/decider.hpp"
#include "clawreconf/errors.hpp"
#include "clawreconf/fixtures.hpp"
#include "clawreconf/generators.hpp"
#include "clawreconf/json_io.hpp"
#include "clawreconf/oracle.hpp"

namespace {

using namespace clawreconf;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInput = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A path, or "fixture:NAME" for a built-in graph.
Graph load_graph(const std::string& source) {
    constexpr std::string_view prefix = "fixture:";
    if (source.rfind(prefix, 0) == 0) return fixture(source.substr(prefix.size()));
    return parse_graph(read_file(source));
}

int exit_code(Answer a) {
    switch (a) {
        case Answer::Yes: return kExitYes;
        case Answer::No: return kExitNo;
        default: return kExitUndecided;
    }
}

void emit(const Graph& g, const Decision& d, const std::string& certificate_path) {
    std::cout << decision_json(g, d).dump(2) << "\n";
    if (!certificate_path.empty() && d.sequence) {
        std::ofstream out(certificate_path);
        if (!out) throw ParseError("cannot write '" + certificate_path + "'", 0);
        out << certificate_json(g, *d.sequence).dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independent set reconfiguration in claw-free graphs"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string model_flag;
    std::size_t cap = kDefaultStateCap;
    bool force_oracle = false;
    std::string certificate_path;

    auto* decide_cmd = app.add_subcommand("decide", "Decide reachability and print a decision as JSON");
    decide_cmd->add_option("instance", instance_path, "Instance JSON file")->required();
    decide_cmd->add_option("--model", model_flag, "TS or TJ (overrides the instance)");
    decide_cmd->add_option("--cap", cap, "State cap for the brute-force fallback");
    decide_cmd->add_flag("--force-oracle", force_oracle, "Answer graphs with a claw by brute force");
    decide_cmd->add_option("--emit-certificate", certificate_path, "Also write the YES certificate here");

    auto* oracle_cmd = app.add_subcommand("oracle", "Decide by breadth-first search over the solution graph");
    oracle_cmd->add_option("instance", instance_path, "Instance JSON file")->required();
    oracle_cmd->add_option("--model", model_flag, "TS or TJ (overrides the instance)");
    oracle_cmd->add_option("--cap", cap, "Maximum number of stored sets");
    oracle_cmd->add_option("--emit-certificate", certificate_path, "Also write the YES certificate here");

    CrosscheckOptions cc;
    auto* cross_cmd = app.add_subcommand("crosscheck", "Compare decide with the oracle on seeded random instances");
    cross_cmd->add_option("--count", cc.count, "Number of instances");
    cross_cmd->add_option("--max-n", cc.max_n, "Maximum number of vertices");
    cross_cmd->add_option("--max-k", cc.max_k, "Maximum number of tokens");
    cross_cmd->add_option("--seed", cc.seed, "Seed");
    cross_cmd->add_option("--cap", cc.cap, "Oracle state cap");
    cross_cmd->add_option("--dump", cc.dump_path, "File for disagreeing instances (JSON lines)")
        ->default_str("crosscheck-failures.jsonl");
    cc.dump_path = "crosscheck-failures.jsonl";

    std::size_t gen_n = 10;
    double gen_density = 0.4;
    std::uint64_t gen_seed = 1;
    bool gen_line = false;
    std::size_t gen_k = 0;
    auto* gen_cmd = app.add_subcommand("generate", "Print a random claw-free graph, or an instance with --k");
    gen_cmd->add_option("--n", gen_n, "Vertices (for --line: vertices of the base graph)");
    gen_cmd->add_option("--density", gen_density, "Edge probability");
    gen_cmd->add_option("--seed", gen_seed, "Seed");
    gen_cmd->add_flag("--line", gen_line, "Line graph of a random graph instead of claw repair");
    gen_cmd->add_option("--k", gen_k, "Emit an instance JSON with two random independent sets of this size");
    gen_cmd->add_option("--model", model_flag, "Model recorded in the instance");

    std::string graph_source;
    std::size_t stats_k = 1;
    auto* stats_cmd = app.add_subcommand("stats", "Solution-graph statistics as CSV");
    stats_cmd->add_option("graph", graph_source, "Edge-list file or fixture:NAME")->required();
    stats_cmd->add_option("--k", stats_k, "Token count")->required();
    stats_cmd->add_option("--model", model_flag, "TS, TJ, or both when omitted");
    stats_cmd->add_option("--cap", cap, "Maximum number of independent sets");

    std::string fixture_name;
    auto* fixture_cmd = app.add_subcommand("fixture", "Print a built-in graph (or list them)");
    fixture_cmd->add_option("name", fixture_name, "P3, P4, P5, C6, CLAW or FIG1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*decide_cmd || *oracle_cmd) {
            Instance inst = parse_instance(read_file(instance_path));
            const Model model = model_flag.empty() ? inst.model : parse_model(model_flag);
            Decision d;
            if (*decide_cmd) {
                d = decide(inst.graph, inst.i, inst.j, model, DecideOptions{force_oracle, cap});
            } else {
                d.model = model;
                d.by_oracle = true;
                try {
                    if (auto seq = oracle_reachable(inst.graph, inst.i, inst.j, model, cap)) {
                        d.answer = Answer::Yes;
                        d.stats.sequence_length = seq->length();
                        d.sequence = std::move(seq);
                    } else {
                        d.answer = Answer::No;
                        d.reason = inst.i.size() != inst.j.size() ? "|I| != |J|" : "exhaustive search found no sequence";
                    }
                } catch (const InconclusiveError& e) {
                    d.answer = Answer::Inconclusive;
                    d.reason = e.what();
                }
            }
            emit(inst.graph, d, certificate_path);
            return exit_code(d.answer);
        }
        if (*cross_cmd) {
            const CrosscheckReport report = run_crosscheck(cc);
            std::cout << report.summary();
            return report.ok() ? kExitYes : kExitNo;
        }
        if (*gen_cmd) {
            const Graph g = gen_line ? gen_line_graph(gen_n, gen_density, gen_seed)
                                     : gen_claw_free(std::max<std::size_t>(gen_n, 1), gen_density, gen_seed);
            if (gen_k == 0) {
                std::cout << print_graph(g);
                return kExitYes;
            }
            Rng rng(gen_seed);
            const auto i = random_independent_set(g, gen_k, rng);
            const auto j = random_independent_set(g, gen_k, rng);
            if (!i || !j) {
                std::cerr << "error: the graph has no independent set of size " << gen_k << "\n";
                return kExitInput;
            }
            std::cout << instance_json(g, *i, *j, model_flag.empty() ? Model::TS : parse_model(model_flag));
            return kExitYes;
        }
        if (*stats_cmd) {
            const Graph g = load_graph(graph_source);
            std::cout << stats_csv_header() << "\n";
            for (Model model : {Model::TS, Model::TJ}) {
                if (!model_flag.empty() && parse_model(model_flag) != model) continue;
                std::cout << stats_csv_row(solution_graph_stats(g, stats_k, model, cap)) << "\n";
            }
            return kExitYes;
        }
        if (*fixture_cmd) {
            if (fixture_name.empty()) {
                for (auto name : fixture_names()) std::cout << name << "\n";
            } else {
                std::cout << fixture_text(fixture_name);
            }
            return kExitYes;
        }
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
