#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clawreconf/graph.hpp"
#include "clawreconf/reconfig.hpp"

namespace clawreconf {

struct CrosscheckOptions {
    std::size_t count = 500;
    std::size_t max_n = 12;
    std::size_t max_k = 4;
    std::uint64_t seed = 7;
    std::size_t cap = kDefaultStateCap;
    /// Where disagreeing instances are written (JSON lines). Empty: nowhere.
    std::string dump_path;
};

/// One seeded random instance: a connected claw-free graph with two
/// independent sets of equal size.
struct CrosscheckInstance {
    Graph graph;
    VertexSet i;
    VertexSet j;
};

/// Instance number `index` of the run seeded with `options.seed`.
CrosscheckInstance crosscheck_instance(const CrosscheckOptions& options, std::size_t index);

struct CrosscheckReport {
    std::size_t instances = 0;
    std::size_t ts_agree = 0;
    std::size_t tj_agree = 0;
    std::size_t ts_yes = 0;
    std::size_t tj_yes = 0;
    std::size_t maximum_instances = 0;  // |I| = alpha(G)
    std::size_t with_cycles = 0;        // G[I delta J] has a cycle
    std::size_t ts_tj_equal = 0;        // decide(TS) == decide(TJ)
    std::size_t certificates_checked = 0;
    std::size_t certificate_failures = 0;
    std::size_t inconclusive = 0;
    std::vector<std::string> failures;  // one line per problem
    std::string dump_path;

    bool ok() const noexcept { return failures.empty() && inconclusive == 0; }
    std::string summary() const;
};

/// Runs decide and the brute-force oracle on every instance under both
/// models, validates every certificate, and records TS/TJ agreement.
CrosscheckReport run_crosscheck(const CrosscheckOptions& options);

}  // namespace clawreconf
