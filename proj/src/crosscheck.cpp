#include "clawreconf/crosscheck.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "clawreconf/decider.hpp"
#include "clawreconf/errors.hpp"
#include "clawreconf/generators.hpp"
#include "clawreconf/json_io.hpp"
#include "clawreconf/oracle.hpp"
#include "clawreconf/random.hpp"

namespace clawreconf {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::optional<CrosscheckInstance> from_gadget(const CrosscheckOptions& o, Rng& rng) {
    GadgetParams params;
    params.max_length = std::min<std::size_t>(8, 2 * o.max_k);
    params.max_extras = 3;
    params.max_outside = 1;
    if (params.max_length < params.min_length) return std::nullopt;
    auto gadget = gen_cycle_gadget(rng, params);
    if (!gadget || gadget->graph.size() > o.max_n || gadget->i.size() > o.max_k) return std::nullopt;
    if (!is_connected(gadget->graph)) return std::nullopt;
    return CrosscheckInstance{std::move(gadget->graph), std::move(gadget->i), std::move(gadget->j)};
}

std::optional<CrosscheckInstance> from_random(const CrosscheckOptions& o, Rng& rng, bool line) {
    const std::size_t lo = std::min<std::size_t>(3, o.max_n);
    Graph g;
    if (line) {
        g = gen_line_graph(rng.uniform(3, 7), 0.25 + 0.5 * rng.uniform01(), rng.next());
        if (g.size() < 2 || g.size() > o.max_n) return std::nullopt;
    } else {
        g = gen_claw_free(rng.uniform(lo, o.max_n), 0.25 + 0.5 * rng.uniform01(), rng.next());
    }
    if (!is_connected(g)) return std::nullopt;
    const std::size_t alpha = brute_alpha(g);
    const std::size_t top = std::min(o.max_k, alpha);
    if (top == 0) return std::nullopt;
    const std::size_t k = alpha <= o.max_k && rng.chance(0.4) ? alpha : rng.uniform(1, top);
    auto i = random_independent_set(g, k, rng);
    auto j = random_independent_set(g, k, rng);
    if (!i || !j) return std::nullopt;
    return CrosscheckInstance{std::move(g), std::move(*i), std::move(*j)};
}

}  // namespace

CrosscheckInstance crosscheck_instance(const CrosscheckOptions& options, std::size_t index) {
    Rng rng(mix(options.seed ^ mix(index)));
    for (;;) {
        std::optional<CrosscheckInstance> inst;
        switch (index % 4) {
            case 0: inst = from_random(options, rng, true); break;
            case 3: inst = from_gadget(options, rng); break;
            default: inst = from_random(options, rng, false); break;
        }
        if (inst) return std::move(*inst);
    }
}

std::string CrosscheckReport::summary() const {
    std::ostringstream out;
    out << "instances: " << instances << "\n"
        << "TS agreement: " << ts_agree << "/" << instances << " (YES " << ts_yes << ")\n"
        << "TJ agreement: " << tj_agree << "/" << instances << " (YES " << tj_yes << ")\n"
        << "TS answer == TJ answer: " << ts_tj_equal << "/" << instances << "\n"
        << "maximum I: " << maximum_instances << ", cyclic I delta J: " << with_cycles << "\n"
        << "certificates validated: " << certificates_checked << " (failures " << certificate_failures << ")\n"
        << "inconclusive: " << inconclusive << "\n";
    for (const auto& f : failures) out << "FAIL " << f << "\n";
    if (!dump_path.empty() && !failures.empty()) out << "reproducers: " << dump_path << "\n";
    out << "result: " << (ok() ? "OK" : "FAILED") << "\n";
    return out.str();
}

CrosscheckReport run_crosscheck(const CrosscheckOptions& options) {
    CrosscheckReport report;
    report.dump_path = options.dump_path;
    std::vector<std::string> dumps;

    for (std::size_t idx = 0; idx < options.count; ++idx) {
        const CrosscheckInstance inst = crosscheck_instance(options, idx);
        const Graph& g = inst.graph;
        const IndependentSet i = IndependentSet::make(g, inst.i);
        const IndependentSet j = IndependentSet::make(g, inst.j);
        ++report.instances;
        if (i.size() == brute_alpha(g)) ++report.maximum_instances;
        if (!decompose_symdiff(g, i, j).cycles.empty()) ++report.with_cycles;

        bool failed = false;
        auto fail = [&](const std::string& what) {
            report.failures.push_back("instance " + std::to_string(idx) + ": " + what);
            failed = true;
        };
        auto check_certificate = [&](const ReconfigSequence& seq, Model model, const char* who) {
            ++report.certificates_checked;
            const bool ok = seq.model == model && !validate_sequence(g, seq) && final_set(seq) == j.vertices();
            if (!ok) {
                ++report.certificate_failures;
                fail(std::string(who) + " certificate does not validate under " + std::string(to_string(model)));
            }
        };

        Answer answers[2] = {Answer::No, Answer::No};
        for (Model model : {Model::TS, Model::TJ}) {
            const std::size_t slot = model == Model::TS ? 0 : 1;
            Decision d;
            try {
                d = decide(g, i, j, model);
            } catch (const Error& e) {
                fail(std::string("decide ") + std::string(to_string(model)) + " threw: " + e.what());
                continue;
            }
            answers[slot] = d.answer;
            std::optional<ReconfigSequence> truth;
            try {
                truth = oracle_reachable(g, i, j, model, options.cap);
            } catch (const InconclusiveError&) {
                ++report.inconclusive;
                continue;
            }
            if (d.sequence) check_certificate(*d.sequence, model, "decide");
            if (truth) check_certificate(*truth, model, "oracle");
            const bool agree = (d.answer == Answer::Yes) == truth.has_value() &&
                               (d.answer == Answer::Yes || d.answer == Answer::No);
            if (agree) {
                ++(model == Model::TS ? report.ts_agree : report.tj_agree);
                if (truth) ++(model == Model::TS ? report.ts_yes : report.tj_yes);
            } else {
                fail(std::string(to_string(model)) + ": decide says " + std::string(to_string(d.answer)) +
                     ", oracle says " + (truth ? "YES" : "NO"));
            }
        }
        if (answers[0] == answers[1]) {
            ++report.ts_tj_equal;
        } else {
            fail("TS and TJ answers differ on a connected graph");
        }
        if (failed) dumps.push_back(nlohmann::ordered_json::parse(instance_json(g, inst.i, inst.j, Model::TS)).dump());
    }

    if (!options.dump_path.empty() && !dumps.empty()) {
        std::ofstream out(options.dump_path);
        for (const auto& line : dumps) out << line << "\n";
    }
    return report;
}

}  // namespace clawreconf
