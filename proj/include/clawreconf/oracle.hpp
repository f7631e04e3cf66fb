#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clawreconf/graph.hpp"
#include "clawreconf/reconfig.hpp"

namespace clawreconf {

/// Shortest sequence from `i` to `j` by breadth-first search over the
/// solution graph, expanding moves in (from, to) order. nullopt when `j` is
/// unreachable. Throws InconclusiveError once more than `cap` sets are stored.
std::optional<ReconfigSequence> oracle_reachable(const Graph& g, const IndependentSet& i, const IndependentSet& j,
                                                 Model model, std::size_t cap = kDefaultStateCap);

/// All independent sets of size k in lexicographic order.
/// Throws InconclusiveError when there are more than `cap`.
std::vector<VertexSet> independent_sets_of_size(const Graph& g, std::size_t k, std::size_t cap = kDefaultStateCap);

/// TS_k(G) or TJ_k(G): nodes in lexicographic order, edges (a, b) with a < b, sorted.
struct SolutionGraph {
    std::vector<VertexSet> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};
SolutionGraph solution_graph(const Graph& g, std::size_t k, Model model, std::size_t cap = kDefaultStateCap);

struct SolutionGraphStats {
    std::size_t k = 0;
    Model model = Model::TS;
    std::size_t nodes = 0;
    std::size_t components = 0;
    std::vector<std::size_t> diameters;  // per component, ordered by smallest node
    std::size_t max_diameter = 0;
};
SolutionGraphStats solution_graph_stats(const Graph& g, std::size_t k, Model model,
                                        std::size_t cap = kDefaultStateCap);

std::string stats_csv_header();
std::string stats_csv_row(const SolutionGraphStats& s);

/// Exact independence number by branching. Throws InconclusiveError when n > max_n.
std::size_t brute_alpha(const Graph& g, std::size_t max_n = 25);

}  // namespace clawreconf
