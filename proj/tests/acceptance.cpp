// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//     acceptance [path-to-clawreconf-cli]
//
// Without the CLI path, criterion 10 checks the library crosscheck only.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "clawreconf/alternating.hpp"
#include "clawreconf/crosscheck.hpp"
#include "clawreconf/decider.hpp"
#include "clawreconf/fixtures.hpp"
#include "clawreconf/oracle.hpp"
#include "clawreconf/resolution.hpp"
#include "clawreconf/sequencer.hpp"
#include "properties.hpp"
#include "support.hpp"

namespace {

using namespace clawreconf;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Counts every certificate produced by any criterion; criterion 10 reports it.
struct CertificateLedger {
    std::size_t checked = 0;
    std::size_t failed = 0;

    bool check(const Graph& g, const ReconfigSequence& seq, const VertexSet& target) {
        ++checked;
        const bool ok = !validate_sequence(g, seq) && final_set(seq) == target;
        failed += ok ? 0 : 1;
        return ok;
    }
};

CertificateLedger ledger;

CrosscheckOptions standard_run() {
    CrosscheckOptions o;
    o.count = 500;
    o.max_n = 12;
    o.max_k = 4;
    o.seed = 7;
    return o;
}

const CrosscheckReport& standard_report() {
    static const CrosscheckReport report = run_crosscheck(standard_run());
    return report;
}

const std::vector<ref::GadgetCase>& gadgets() {
    static const auto all = [] {
        GadgetParams p;
        p.max_length = 12;
        p.max_extras = 6;
        p.max_outside = 3;
        return ref::gadget_cases(300, 2024, p, 18);
    }();
    return all;
}

bool is_max(const ref::GadgetCase& gc) { return gc.i.size() == brute_alpha(gc.graph); }

Outcome oracle_equivalence() {
    const auto& r = standard_report();
    Outcome o;
    o.pass = r.instances >= 500 && r.ts_agree == r.instances && r.tj_agree == r.instances && r.inconclusive == 0;
    std::ostringstream s;
    s << "TS " << r.ts_agree << "/" << r.instances << ", TJ " << r.tj_agree << "/" << r.instances << " (YES "
      << r.ts_yes << "/" << r.tj_yes << ", cyclic " << r.with_cycles << ", inconclusive " << r.inconclusive << ")";
    o.detail = s.str();
    return o;
}

Outcome ts_equals_tj() {
    const auto& r = standard_report();
    Outcome o;
    o.pass = r.instances >= 500 && r.ts_tj_equal == r.instances;
    o.detail = std::to_string(r.ts_tj_equal) + "/" + std::to_string(r.instances) + " connected instances";
    return o;
}

Outcome c6_fixture() {
    const Graph g = fixture("C6");
    const auto i = ref::set(g, {"v0", "v2", "v4"});
    const auto j = ref::set(g, {"v1", "v3", "v5"});
    const auto ts = decide(g, i, j, Model::TS);
    const auto tj = decide(g, i, j, Model::TJ);
    const bool oracle_no = !oracle_reachable(g, i, j, Model::TS) && !oracle_reachable(g, i, j, Model::TJ);
    Outcome o;
    o.pass = ts.answer == Answer::No && tj.answer == Answer::No && oracle_no;
    o.detail = "TS " + std::string(to_string(ts.answer)) + ", TJ " + std::string(to_string(tj.answer));
    return o;
}

Outcome fig1_fixture() {
    const Graph g = fixture("FIG1");
    const auto i = ref::set(g, {"c0", "c2", "c4", "c6"});
    const auto j = ref::set(g, {"c1", "c3", "c5", "c7"});
    const BadCycle c = extract_bad_cycles(g, i, j).at(0);
    const auto internal = internally_resolvable(g, i, c);
    const auto external = externally_resolvable(g, i, c);
    const auto d = decide(g, i, j, Model::TS);
    const bool cert_ok = d.sequence && ledger.check(g, *d.sequence, j.vertices());
    Outcome o;
    o.pass = internal.has_value() && !external && d.answer == Answer::Yes && cert_ok;
    o.detail = std::string("internal ") + (internal ? "found" : "none") + ", external " + (external ? "found" : "none") +
               ", decide " + std::string(to_string(d.answer)) +
               (d.sequence ? " with " + std::to_string(d.sequence->length()) + " validated moves" : "");
    return o;
}

Outcome claw_and_solution_graphs() {
    const Graph claw = fixture("CLAW");
    const auto i = ref::set(claw, {"a", "b"});
    const auto j = ref::set(claw, {"a", "c"});
    const auto tj = oracle_reachable(claw, i, j, Model::TJ);
    const auto ts = oracle_reachable(claw, i, j, Model::TS);
    bool claw_ok = tj.has_value() && !ts;
    if (tj) claw_ok &= ledger.check(claw, *tj, j.vertices());

    std::size_t graphs = 0;
    std::size_t equal = 0;
    for (const Graph& g : ref::fuzz_graphs(300, 12, 5)) {
        const std::size_t a = brute_alpha(g);
        ++graphs;
        equal += solution_graph(g, a, Model::TS).edges == solution_graph(g, a, Model::TJ).edges ? 1 : 0;
    }
    Outcome o;
    o.pass = claw_ok && equal == graphs;
    o.detail = std::string("CLAW TJ ") + (tj ? "reachable" : "unreachable") + ", TS " + (ts ? "reachable" : "unreachable") +
               "; TS_alpha = TJ_alpha on " + std::to_string(equal) + "/" + std::to_string(graphs) + " graphs";
    return o;
}

Outcome length_bounds() {
    std::size_t acyclic = 0;
    std::size_t acyclic_ok = 0;
    std::size_t jumps = 0;
    std::size_t jumps_ok = 0;
    auto visit = [&](const Graph& g, const IndependentSet& i, const IndependentSet& j) {
        if (!decompose_symdiff(g, i, j).cycles.empty()) return;
        const std::size_t moved = set_difference(i.vertices(), j.vertices()).size();
        const auto ts = ts_sequence_acyclic(g, i, j);
        ++acyclic;
        if (ledger.check(g, ts, j.vertices()) &&
            ts.length() <= 2 * moved * static_cast<std::size_t>(diameter(g))) {
            ++acyclic_ok;
        }
        const auto tj = tj_sequence_no_even_cycles(g, i, j);
        ++jumps;
        if (ledger.check(g, tj, j.vertices()) && tj.length() == moved) ++jumps_ok;
    };
    const auto opts = standard_run();
    for (std::size_t idx = 0; idx < opts.count; ++idx) {
        const auto inst = crosscheck_instance(opts, idx);
        visit(inst.graph, IndependentSet::make(inst.graph, inst.i), IndependentSet::make(inst.graph, inst.j));
    }
    Rng rng(6);
    for (const Graph& g : ref::fuzz_graphs(300, 16, 6)) {
        const std::size_t k = rng.uniform(1, std::min<std::size_t>(5, brute_alpha(g)));
        const auto i = IndependentSet::make(g, *random_independent_set(g, k, rng));
        const auto j = IndependentSet::make(g, *random_independent_set(g, k, rng));
        visit(g, i, j);
    }
    Outcome o;
    o.pass = acyclic > 0 && acyclic_ok == acyclic && jumps_ok == jumps;
    o.detail = "TS bound held " + std::to_string(acyclic_ok) + "/" + std::to_string(acyclic) + ", TJ exact " +
               std::to_string(jumps_ok) + "/" + std::to_string(jumps);
    return o;
}

Outcome bad_cycle_neighborhoods() {
    std::size_t instances = 0;
    std::size_t cycles = 0;
    std::size_t violations = 0;
    std::string first;
    auto check = [&](const Graph& g, const IndependentSet& i, const BadCycle& c) {
        ++cycles;
        const auto bad = props::bad_cycle_nbhd(g, i, c);
        violations += bad.size();
        if (!bad.empty() && first.empty()) first = bad.front();
    };
    for (const auto& gc : gadgets()) {
        ++instances;
        check(gc.graph, gc.i, gc.cycle);
    }
    const auto opts = standard_run();
    for (std::size_t idx = 0; idx < opts.count; ++idx) {
        const auto inst = crosscheck_instance(opts, idx);
        const auto i = IndependentSet::make(inst.graph, inst.i);
        const auto cs = extract_bad_cycles(inst.graph, i, IndependentSet::make(inst.graph, inst.j));
        if (cs.empty()) continue;
        ++instances;
        for (const auto& c : cs) check(inst.graph, i, c);
    }
    Outcome o;
    o.pass = instances >= 200 && violations == 0;
    o.detail = std::to_string(cycles) + " bad cycles from " + std::to_string(instances) + " instances, " +
               std::to_string(violations) + " violations" + (first.empty() ? "" : " (" + first + ")");
    return o;
}

Outcome resolvability() {
    std::size_t long_cycles = 0;
    std::size_t internal_agree = 0;
    std::size_t internal_yes = 0;
    std::size_t maximum = 0;
    std::size_t external_agree = 0;
    std::size_t external_yes = 0;
    std::size_t split_cases = 0;
    std::size_t split_agree = 0;
    for (const auto& gc : gadgets()) {
        const bool brute_int = is_resolvable_brute(gc.graph, gc.i, gc.cycle, MoveFilter::InternalOnly);
        const bool brute_ext = is_resolvable_brute(gc.graph, gc.i, gc.cycle, MoveFilter::ExternalOnly);
        const bool brute_all = is_resolvable_brute(gc.graph, gc.i, gc.cycle, MoveFilter::All);
        ++split_cases;
        split_agree += brute_all == (brute_int || brute_ext) ? 1 : 0;
        if (gc.cycle.length() >= 8) {
            ++long_cycles;
            const auto cert = internally_resolvable(gc.graph, gc.i, gc.cycle);
            internal_yes += brute_int ? 1 : 0;
            if (cert.has_value() == brute_int) {
                ++internal_agree;
                if (cert) {
                    const auto seq = resolve_and_turn(gc.graph, gc.i, gc.cycle, *cert);
                    if (!ledger.check(gc.graph, seq, gc.j.vertices())) --internal_agree;
                }
            }
        }
        if (is_max(gc)) {
            ++maximum;
            const auto cert = externally_resolvable(gc.graph, gc.i, gc.cycle);
            external_yes += brute_ext ? 1 : 0;
            if (cert.has_value() == brute_ext) {
                ++external_agree;
                if (cert) {
                    const auto seq = resolve_and_turn(gc.graph, gc.i, gc.cycle, *cert);
                    if (!ledger.check(gc.graph, seq, gc.j.vertices())) --external_agree;
                }
            }
        }
    }
    Outcome o;
    o.pass = long_cycles > 0 && maximum > 0 && internal_agree == long_cycles && external_agree == maximum &&
             split_agree == split_cases && internal_yes > 0 && external_yes > 0;
    std::ostringstream s;
    s << "internal " << internal_agree << "/" << long_cycles << " (resolvable " << internal_yes << "), external "
      << external_agree << "/" << maximum << " (resolvable " << external_yes << "), all = int or ext " << split_agree
      << "/" << split_cases;
    o.detail = s.str();
    return o;
}

Outcome tokens_move_once() {
    std::size_t sequences = 0;
    std::size_t once = 0;
    std::size_t odd_paths = 0;
    for (const auto& gc : gadgets()) {
        if (!is_max(gc)) continue;
        const auto seq = brute_resolving_sequence(gc.graph, gc.i, gc.cycle, MoveFilter::ExternalOnly);
        if (!seq) continue;
        ++sequences;
        once += props::tokens_move_once(*seq) ? 1 : 0;
        // The symmetric difference of the end points is a union of odd paths.
        const VertexSet end = apply_moves(gc.i.vertices(), *seq);
        const auto d = decompose_symdiff(gc.graph, gc.i, IndependentSet::make(gc.graph, end));
        bool odd = d.cycles.empty();
        for (const auto& p : d.paths) odd &= p.size() % 2 == 0;
        odd_paths += odd ? 1 : 0;
    }
    Outcome o;
    o.pass = sequences > 0 && once == sequences && odd_paths == sequences;
    o.detail = std::to_string(once) + "/" + std::to_string(sequences) +
               " shortest external resolving sequences move each token once (odd paths " +
               std::to_string(odd_paths) + ")";
    return o;
}

Outcome certificates(const char* cli) {
    const auto& r = standard_report();
    Outcome o;
    o.pass = r.certificate_failures == 0 && r.ok() && ledger.failed == 0 && ledger.checked > 0;
    std::string cli_note = "CLI not given";
    if (cli != nullptr) {
        const std::string cmd = std::string("\"") + cli + "\" crosscheck --count 500 --max-n 12 --seed 7 --dump \"\" > /dev/null";
        const int status = std::system(cmd.c_str());
        o.pass &= status == 0;
        cli_note = "CLI crosscheck exit " + std::to_string(status == 0 ? 0 : WEXITSTATUS(status));
    }
    o.detail = std::to_string(r.certificates_checked) + " crosscheck certificates (" +
               std::to_string(r.certificate_failures) + " failed), " + std::to_string(ledger.checked) +
               " other certificates (" + std::to_string(ledger.failed) + " failed), " + cli_note;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"oracle equivalence", oracle_equivalence},
        {"TS answer equals TJ answer", ts_equals_tj},
        {"C6 fixture", c6_fixture},
        {"FIG1 fixture", fig1_fixture},
        {"CLAW fixture and TS/TJ solution graphs at alpha", claw_and_solution_graphs},
        {"sequence length bounds", length_bounds},
        {"bad cycle neighborhoods", bad_cycle_neighborhoods},
        {"resolvability characterizations", resolvability},
        {"tokens move once", tokens_move_once},
        {"certificates validate", [cli] { return certificates(cli); }},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << (k + 1) << " " << criteria[k].first << ": " << o.detail << " ["
                  << std::fixed << std::setprecision(2) << secs << "s]" << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
