#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "clawreconf/graph.hpp"
#include "clawreconf/reconfig.hpp"

namespace clawreconf {

/// Chordless I-alternating even cycle c_0, ..., c_{2n-1} with c_0 in I.
///
/// `a` and `b` are the I-side and non-I-side (sorted). `classes[i]` is
/// N_i(b); it always has at least three entries so N_0, N_1, N_2 can be read
/// directly. `layers[i]` holds every vertex whose neighborhood in `b` equals
/// that of c_{2i}.
struct BadCycle {
    std::vector<Vertex> vertices;
    VertexSet a;
    VertexSet b;
    std::vector<VertexSet> classes;
    std::vector<VertexSet> layers;

    std::size_t length() const noexcept { return vertices.size(); }
    std::size_t half() const noexcept { return vertices.size() / 2; }
    const VertexSet& n0() const { return classes[0]; }
    const VertexSet& n1() const { return classes[1]; }
    const VertexSet& n2() const { return classes[2]; }
};

/// Validates `cycle` against `i` and fills in the derived sets.
/// Throws PreconditionError if it is not a chordless i-alternating cycle
/// starting in `i`.
BadCycle make_bad_cycle(const Graph& g, const IndependentSet& i, std::vector<Vertex> cycle);

/// Same cycle walked as c_0, c_{2n-1}, ..., c_1.
BadCycle reversed(const Graph& g, const IndependentSet& i, const BadCycle& c);

/// Cycle components of G[i delta j] as bad cycles with respect to `i`.
std::vector<BadCycle> extract_bad_cycles(const Graph& g, const IndependentSet& i, const IndependentSet& j);

enum class Orientation { Forward, Reversed };

/// D(G, C) or D(G, C^rev). `arcs[u]` lists out-neighbors in ascending order.
struct LayerDigraph {
    Orientation orientation = Orientation::Forward;
    std::vector<std::vector<Vertex>> arcs;

    bool has_arc(Vertex u, Vertex v) const;
};

/// Throws PreconditionError for cycles shorter than 8.
LayerDigraph build_layer_digraph(const Graph& g, const IndependentSet& i, const BadCycle& c, Orientation orientation);

enum class ResolutionKind { External, InternalDigraph, InternalEnumeration };
std::string_view to_string(ResolutionKind k);

/// Evidence that a bad cycle can be resolved.
///
/// External: an (I\A)-augmenting path x, ..., y in G-A-B with x in N_0(B)
/// and y in N_1(B); a single vertex y means y's only I-neighbor lies in A.
/// InternalDigraph: a directed path b = u_0, ..., u_m ending in A in the
/// digraph of `orientation`; a single vertex b again means one direct move.
/// InternalEnumeration: the explicit resolving moves.
struct ResolutionCertificate {
    ResolutionKind kind = ResolutionKind::External;
    Orientation orientation = Orientation::Forward;
    std::vector<Vertex> path;
    std::vector<Move> moves;
};

/// Search over pairs x in N_0(B), y in N_1(B). Throws PreconditionError when
/// `i` is not maximum, unless the caller vouches for it.
std::optional<ResolutionCertificate> externally_resolvable(const Graph& g, const IndependentSet& i, const BadCycle& c,
                                                           bool assume_maximum = false);

/// Digraph search for length >= 8, bounded enumeration for lengths 4 and 6.
std::optional<ResolutionCertificate> internally_resolvable(const Graph& g, const IndependentSet& i, const BadCycle& c);

/// TS moves from `i` whose last move resolves `c`.
/// Throws InternalError if the certificate does not replay.
std::vector<Move> resolving_moves(const Graph& g, const IndependentSet& i, const BadCycle& c,
                                  const ResolutionCertificate& cert);

/// TS-sequence from `i` to i delta V(c).
ReconfigSequence resolve_and_turn(const Graph& g, const IndependentSet& i, const BadCycle& c,
                                  const ResolutionCertificate& cert);

/// External first (requires `i` maximum), then internal.
std::optional<ResolutionCertificate> find_resolution(const Graph& g, const IndependentSet& i, const BadCycle& c);

/// True iff G[s + B] has no cycle.
bool acyclic_with(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> b);

enum class MoveFilter { All, InternalOnly, ExternalOnly };

/// Shortest resolving TS-sequence by breadth-first search. Every move except
/// the last must pass `filter`. Throws InconclusiveError past `cap` states.
std::optional<std::vector<Move>> brute_resolving_sequence(const Graph& g, const IndependentSet& i, const BadCycle& c,
                                                          MoveFilter filter, std::size_t cap = kDefaultStateCap);

bool is_resolvable_brute(const Graph& g, const IndependentSet& i, const BadCycle& c, MoveFilter filter,
                         std::size_t cap = kDefaultStateCap);

}  // namespace clawreconf
