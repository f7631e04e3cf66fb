#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clawreconf/graph.hpp"
#include "clawreconf/reconfig.hpp"

namespace clawreconf {

/// Vertices outside `i` with at most one neighbor in `i`.
VertexSet free_vertices(const Graph& g, const IndependentSet& i);

/// True iff every vertex has a closed neighbor in `s`.
bool is_dominating(const Graph& g, std::span<const Vertex> s);

/// A chordless path alternating between `i` and its complement.
struct AlternatingPath {
    std::vector<Vertex> vertices;
};

/// Checks alternation, edges and chordlessness of `path` against `i`.
bool is_chordless_alternating(const Graph& g, std::span<const Vertex> path, std::span<const Vertex> i);

/// Chordless alternating path x = w0, v1, w1, ..., vk, wk = y with k >= 1,
/// every v in `i`, and both endpoints free (an augmenting path).
///
/// The search is exact depth-first backtracking, smallest vertex id first,
/// pruned by a reachability test on the vertices that could still extend the
/// path without creating a chord. Exponential in the worst case; it is not a
/// polynomial augmenting-path algorithm, only a drop-in for one at small sizes.
///
/// Throws PreconditionError when x or y is not free or x == y.
std::optional<AlternatingPath> find_augmenting_path(const Graph& g, const IndependentSet& i, Vertex x, Vertex y);

/// First augmenting path over free pairs (x, y), x < y, in lexicographic order.
std::optional<AlternatingPath> find_any_augmenting_path(const Graph& g, const IndependentSet& i);

/// |i| == alpha(g), decided for claw-free g as: dominating and no augmenting path.
bool is_maximum(const Graph& g, const IndependentSet& i);

/// The set obtained by swapping along an augmenting path: it drops the
/// i-vertices of the path and adds all others. One larger than `i`.
VertexSet augment(std::span<const Vertex> i, const AlternatingPath& path);

}  // namespace clawreconf
