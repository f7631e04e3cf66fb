#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clawreconf/graph.hpp"

namespace clawreconf {

/// Reconfiguration rule. Under TS a token slides along an edge; under TJ it
/// may jump to any free vertex. Both keep the token set independent.
///
/// The token addition/removal rule (k-TAR) is not modeled separately: for
/// |I| = |J| a k-TAR sequence with k = |I| - 1 exists exactly when a TJ
/// sequence does, so the TJ answer also decides that question.
enum class Model { TS, TJ };

/// Default bound on the number of token configurations a brute-force search may visit.
inline constexpr std::size_t kDefaultStateCap = 1'000'000;

std::string_view to_string(Model m);
Model parse_model(std::string_view text);

/// An independent set validated against one specific graph.
class IndependentSet {
public:
    IndependentSet() = default;

    /// Throws PreconditionError naming an offending edge or an unknown vertex.
    static IndependentSet make(const Graph& g, VertexSet vertices);

    /// Skips the pairwise check. Only for sets produced by validated moves.
    static IndependentSet assume_independent(const Graph& g, VertexSet vertices);

    const VertexSet& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool contains(Vertex v) const { return set_contains(vertices_, v); }
    bool bound_to(const Graph& g) const noexcept { return graph_identity_ == g.identity(); }

    friend bool operator==(const IndependentSet& a, const IndependentSet& b) { return a.vertices_ == b.vertices_; }

private:
    IndependentSet(std::uint64_t identity, VertexSet vertices)
        : vertices_(std::move(vertices)), graph_identity_(identity) {}

    VertexSet vertices_;
    std::uint64_t graph_identity_ = 0;
};

/// Throws PreconditionError unless `s` was validated against `g`.
void require_bound(const Graph& g, const IndependentSet& s, std::string_view what);

/// True iff no two members of `s` are adjacent.
bool is_independent(const Graph& g, std::span<const Vertex> s);

struct Move {
    Vertex from;
    Vertex to;

    friend bool operator==(const Move&, const Move&) = default;
};

/// Ordered moves from `start`. Intermediate sets are not stored.
struct ReconfigSequence {
    Model model = Model::TS;
    IndependentSet start;
    std::vector<Move> moves;

    std::size_t length() const noexcept { return moves.size(); }
};

/// Applies moves without any checking.
VertexSet apply_moves(VertexSet start, std::span<const Move> moves);
VertexSet final_set(const ReconfigSequence& seq);

struct SequenceViolation {
    std::size_t step;  // index of the offending move
    std::string rule;
};

/// nullopt when every move removes a present token, adds an absent vertex,
/// keeps the set independent and (under TS) follows an edge.
std::optional<SequenceViolation> validate_sequence(const Graph& g, const ReconfigSequence& seq);

/// Components of G[I delta J]. Cycles start at their smallest I-side vertex
/// and continue to its smaller neighbor; paths start at their smaller endpoint.
/// Isolated vertices appear as single-vertex paths.
struct SymDiffDecomposition {
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::vector<Vertex>> cycles;
};

/// Throws PreconditionError when a vertex of G[I delta J] has degree above 2,
/// which cannot happen in a claw-free graph.
SymDiffDecomposition decompose_symdiff(const Graph& g, const IndependentSet& i, const IndependentSet& j);

}  // namespace clawreconf
