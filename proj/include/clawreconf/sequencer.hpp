#pragma once

#include <vector>

#include "clawreconf/graph.hpp"
#include "clawreconf/reconfig.hpp"

namespace clawreconf {

/// md is the minimum distance between I\J and J\I; phi = (|I\J| - 1) * diam + md.
struct PotentialState {
    int md = 0;
    long long phi = 0;
};

/// TS-sequence from `i` to `j` when G[i delta j] has no cycles, of length at
/// most 2 |i\j| diam(g). Requires g connected and claw-free, |i| == |j|.
///
/// When md = 1 an end token of a path of G[I delta J] slides onto its
/// neighbor (on the J side when that end is in I). Otherwise the token of
/// the lexicographically first closest pair (u, v) walks a BFS-parent
/// shortest path, unless some other token x touches the path, in which case
/// the x closest to v walks the rest of the path instead.
///
/// `trace`, when given, receives the potential before every step.
ReconfigSequence ts_sequence_acyclic(const Graph& g, const IndependentSet& i, const IndependentSet& j,
                                     std::vector<PotentialState>* trace = nullptr);

/// TJ-sequence of length exactly |i\j| when G[i delta j] has no even cycle
/// (equivalently no cycle, as it is bipartite). Works in any graph.
ReconfigSequence tj_sequence_no_even_cycles(const Graph& g, const IndependentSet& i, const IndependentSet& j);

/// TJ-sequence from a non-maximum `i` to any `j` of the same size in a
/// claw-free graph. A dominating `i` is first grown along an augmenting path
/// (shrunk back to |i| tokens), which leaves a vertex w undominated; each
/// cycle of the difference is then unwound through a token parked on w.
ReconfigSequence tj_sequence_nonmaximum(const Graph& g, const IndependentSet& i, const IndependentSet& j);

/// Replaces every jump that is not a slide by a TS-sequence between the two
/// sets it connects. Requires g connected and claw-free.
ReconfigSequence expand_jumps(const Graph& g, const ReconfigSequence& tj);

/// Turns every cycle of G[i delta j] in canonical order, resolving each with
/// respect to the current set, then finishes with `ts_sequence_acyclic`.
/// Requires g connected and claw-free and `i` maximum. The moves are slides;
/// `model` only sets the tag. Throws PreconditionError on an unresolvable cycle.
ReconfigSequence assemble_yes_certificate(const Graph& g, const IndependentSet& i, const IndependentSet& j,
                                          Model model);

}  // namespace clawreconf
