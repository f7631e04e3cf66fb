#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clawreconf/graph.hpp"
#include "clawreconf/random.hpp"

namespace clawreconf {

/// Line graph of G(n, density). Claw-free by construction.
Graph gen_line_graph(std::size_t n, double density, std::uint64_t seed);

/// Uniform choice among all independent sets of size k (enumerated, so only
/// for small graphs). nullopt when there is none.
std::optional<VertexSet> random_independent_set(const Graph& g, std::size_t k, Rng& rng);

/// A claw-free graph built around a chordless even cycle c_0..c_{L-1}
/// (ids 0..L-1), with `i` alternating on it from c_0 and `j = i delta V(C)`.
struct CycleGadget {
    Graph graph;
    VertexSet i;
    VertexSet j;
    std::vector<Vertex> cycle;
};

struct GadgetParams {
    std::size_t min_length = 4;
    std::size_t max_length = 12;
    std::size_t max_extras = 6;
    std::size_t max_outside = 3;
    /// Chance of leaving I one token short of maximal outside the cycle.
    double sparse_tokens = 0.3;
};

/// Extra vertices attach to runs of 1-4 consecutive cycle vertices (or two
/// short runs), with random edges among themselves and to a few outside
/// vertices, followed by claw repair that never touches cycle edges.
/// nullopt when repair fails or the cycle stops being alternating.
std::optional<CycleGadget> gen_cycle_gadget(Rng& rng, const GadgetParams& params = {});

}  // namespace clawreconf
