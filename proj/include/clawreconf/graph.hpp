#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clawreconf {

using Vertex = std::int32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected simple graph on the ids 0..n-1.
///
/// Neighbor lists are sorted ascending and an adjacency bit matrix gives
/// constant-time `adjacent` queries. Every vertex carries an external label;
/// graphs built without labels use the decimal id. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Rejects loops, duplicate edges and ids out of range.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
          std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool adjacent(Vertex u, Vertex v) const {
        const auto bit = static_cast<std::size_t>(v);
        return (matrix_[static_cast<std::size_t>(u) * words_ + bit / 64] >> (bit % 64)) & 1U;
    }

    bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < size(); }

    const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<Vertex> find_label(std::string_view label) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Closed neighborhood N[v], sorted.
    VertexSet closed_neighborhood(Vertex v) const;

    /// Token shared by this graph and its copies; distinct for separately built graphs.
    std::uint64_t identity() const noexcept { return identity_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint64_t> matrix_;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> label_index_;
    std::uint64_t identity_ = 0;
};

/// Induced claw K_{1,3}: `center` adjacent to three pairwise non-adjacent `leaves`.
struct ClawWitness {
    Vertex center;
    std::array<Vertex, 3> leaves;

    friend bool operator==(const ClawWitness&, const ClawWitness&) = default;
};

/// Parses the edge-list format.
///
///     # comment
///     vertices: 4        (optional, before any other line; pads with isolated vertices)
///     a b                (edge between labels a and b)
///     c                  (declares a vertex, used for isolated vertices)
///
/// Ids are assigned by first appearance. Padded vertices are labeled with
/// their decimal id.
Graph parse_graph(std::string_view text);

/// Inverse of `parse_graph`: header, isolated vertices in id order, then edges
/// sorted by id pair. The output parses back to an isomorphic, label-identical graph.
std::string print_graph(const Graph& g);

/// First induced claw by (center, leaves) in lexicographic id order.
std::optional<ClawWitness> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

/// BFS distances from `source`; unreachable vertices hold -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Shortest-path length, or nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// A shortest u-v path following BFS parent order (first discovery wins).
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v);

/// Maximum distance over all pairs. Throws PreconditionError on a disconnected graph.
int diameter(const Graph& g);

/// Entry i is N_i(s): vertices outside s with exactly i neighbors in s.
/// The result has size max_count + 1 (at least 1).
std::vector<VertexSet> neighborhood_count_sets(const Graph& g, std::span<const Vertex> s);

/// Edge graph. Vertex t corresponds to the t-th edge of `g.edges()` and is labeled "a-b".
Graph line_graph(const Graph& g);

/// Components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// G[vertices] together with the id maps in both directions.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
    std::vector<Vertex> to_local;  // -1 for vertices outside the subgraph

    VertexSet lift(std::span<const Vertex> local) const;
    VertexSet restrict(std::span<const Vertex> parent) const;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Random claw-free graph: G(n, density) followed by claw repair, which
/// repeatedly deletes the edge from the center of the first claw to its first
/// leaf. Deterministic for a fixed seed.
Graph gen_claw_free(std::size_t n, double density, std::uint64_t seed);

/// Deletes claw edges until none remain. Edges in `protect` are never deleted;
/// for each claw the first unprotected leaf edge goes. Returns nullopt if some
/// claw has only protected leaf edges.
std::optional<Graph> repair_claws(const Graph& g, std::span<const std::pair<Vertex, Vertex>> protect = {});

// Small sorted-set helpers shared across modules.
bool set_contains(std::span<const Vertex> s, Vertex v);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet symmetric_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet normalized(VertexSet s);

}  // namespace clawreconf
