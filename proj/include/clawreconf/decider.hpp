#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clawreconf/graph.hpp"
#include "clawreconf/reconfig.hpp"
#include "clawreconf/resolution.hpp"

namespace clawreconf {

/// Inconclusive only arises when the brute-force fallback hits its cap.
enum class Answer { Yes, No, Rejected, Inconclusive };
std::string_view to_string(Answer a);

struct DecisionStats {
    std::size_t cycles = 0;
    std::size_t resolved_externally = 0;
    std::size_t resolved_internally = 0;
    std::size_t sequence_length = 0;
};

/// A bad cycle (w.r.t. I, in the ids of the whole graph) that no resolving
/// sequence exists for, and the index of its connected component.
struct UnresolvableCycle {
    BadCycle cycle;
    std::size_t component = 0;
};

struct Decision {
    Answer answer = Answer::No;
    Model model = Model::TS;
    std::optional<ReconfigSequence> sequence;  // YES
    std::optional<UnresolvableCycle> blocker;  // NO caused by a cycle
    std::optional<ClawWitness> claw;           // REJECTED
    std::vector<std::pair<BadCycle, ResolutionCertificate>> resolutions;
    std::string reason;
    bool by_oracle = false;
    DecisionStats stats;
};

struct DecideOptions {
    /// Answer non-claw-free instances by brute force instead of rejecting them.
    bool force_oracle = false;
    std::size_t oracle_cap = kDefaultStateCap;
};

/// Decides whether `j` is reachable from `i` under `model`.
///
/// Different sizes give NO. Graphs with a claw are rejected. Under TJ a
/// non-maximum `i` gives YES outright. Otherwise each component is handled
/// alone: different sizes give NO, a non-maximum restriction gives YES, and
/// a maximum one gives YES iff every cycle of G[I delta J] is resolvable.
Decision decide(const Graph& g, const IndependentSet& i, const IndependentSet& j, Model model,
                const DecideOptions& options = {});

/// Same question for the vertex covers V - I and V - J.
/// Throws PreconditionError (naming an edge) when a complement is not independent.
Decision decide_vertex_cover(const Graph& g, std::span<const Vertex> cover_i, std::span<const Vertex> cover_j,
                             Model model, const DecideOptions& options = {});

}  // namespace clawreconf
