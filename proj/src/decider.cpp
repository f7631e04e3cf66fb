#include "clawreconf/decider.hpp"

#include <string>

#include "clawreconf/alternating.hpp"
#include "clawreconf/errors.hpp"
#include "clawreconf/oracle.hpp"
#include "clawreconf/sequencer.hpp"

namespace clawreconf {

std::string_view to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "YES";
        case Answer::No: return "NO";
        case Answer::Rejected: return "REJECTED";
        case Answer::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

Decision by_oracle(const Graph& g, const IndependentSet& i, const IndependentSet& j, Model model,
                   const DecideOptions& options) {
    Decision d;
    d.model = model;
    d.by_oracle = true;
    try {
        if (auto seq = oracle_reachable(g, i, j, model, options.oracle_cap)) {
            d.answer = Answer::Yes;
            d.stats.sequence_length = seq->length();
            d.sequence = std::move(seq);
        } else {
            d.answer = Answer::No;
            d.reason = "exhaustive search found no sequence";
        }
    } catch (const InconclusiveError& e) {
        d.answer = Answer::Inconclusive;
        d.reason = e.what();
    }
    return d;
}

Decision finish_yes(const Graph& g, const IndependentSet& i, const IndependentSet& j, Decision d,
                    std::vector<Move> moves) {
    ReconfigSequence seq{d.model, i, std::move(moves)};
    if (auto bad = validate_sequence(g, seq)) {
        throw InternalError("certificate fails at step " + std::to_string(bad->step) + ": " + bad->rule);
    }
    if (final_set(seq) != j.vertices()) throw InternalError("certificate does not end at J");
    d.answer = Answer::Yes;
    d.stats.sequence_length = seq.length();
    d.sequence = std::move(seq);
    return d;
}

std::vector<Move> lift(const InducedSubgraph& sub, const std::vector<Move>& moves) {
    std::vector<Move> out;
    out.reserve(moves.size());
    for (const Move& m : moves) {
        out.push_back({sub.to_parent[static_cast<std::size_t>(m.from)], sub.to_parent[static_cast<std::size_t>(m.to)]});
    }
    return out;
}

}  // namespace

Decision decide(const Graph& g, const IndependentSet& i, const IndependentSet& j, Model model,
                const DecideOptions& options) {
    require_bound(g, i, "I");
    require_bound(g, j, "J");
    Decision d;
    d.model = model;
    if (i.size() != j.size()) {
        d.answer = Answer::No;
        d.reason = "|I| != |J|";
        return d;
    }
    if (auto claw = find_claw(g)) {
        if (options.force_oracle) return by_oracle(g, i, j, model, options);
        d.answer = Answer::Rejected;
        d.claw = claw;
        d.reason = "graph is not claw-free";
        return d;
    }
    if (model == Model::TJ && !is_maximum(g, i)) {
        d.reason = "I is not maximum";
        return finish_yes(g, i, j, std::move(d), tj_sequence_nonmaximum(g, i, j).moves);
    }

    std::vector<Move> moves;
    const auto components = connected_components(g);
    for (std::size_t k = 0; k < components.size(); ++k) {
        const InducedSubgraph sub = induced_subgraph(g, components[k]);
        const auto hi = IndependentSet::make(sub.graph, sub.restrict(i.vertices()));
        const auto hj = IndependentSet::make(sub.graph, sub.restrict(j.vertices()));
        if (hi.size() != hj.size()) {
            d.answer = Answer::No;
            d.reason = "component " + std::to_string(k) + " holds a different number of tokens in I and J";
            return d;
        }
        if (hi == hj) continue;
        if (!is_maximum(sub.graph, hi)) {
            const auto part = expand_jumps(sub.graph, tj_sequence_nonmaximum(sub.graph, hi, hj));
            const auto lifted = lift(sub, part.moves);
            moves.insert(moves.end(), lifted.begin(), lifted.end());
            continue;
        }
        for (const BadCycle& c : extract_bad_cycles(sub.graph, hi, hj)) {
            ++d.stats.cycles;
            std::optional<ResolutionCertificate> cert = externally_resolvable(sub.graph, hi, c, true);
            if (cert) {
                ++d.stats.resolved_externally;
            } else if ((cert = internally_resolvable(sub.graph, hi, c))) {
                ++d.stats.resolved_internally;
            }
            std::vector<Vertex> cycle;
            for (Vertex v : c.vertices) cycle.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
            BadCycle parent_cycle = make_bad_cycle(g, i, std::move(cycle));
            if (!cert) {
                d.answer = Answer::No;
                d.blocker = UnresolvableCycle{std::move(parent_cycle), k};
                d.reason = "a cycle of G[I delta J] is neither externally nor internally resolvable";
                return d;
            }
            ResolutionCertificate lifted = *cert;
            for (Vertex& v : lifted.path) v = sub.to_parent[static_cast<std::size_t>(v)];
            lifted.moves = lift(sub, lifted.moves);
            d.resolutions.emplace_back(std::move(parent_cycle), std::move(lifted));
        }
        const auto part = assemble_yes_certificate(sub.graph, hi, hj, Model::TS);
        const auto lifted = lift(sub, part.moves);
        moves.insert(moves.end(), lifted.begin(), lifted.end());
    }
    return finish_yes(g, i, j, std::move(d), std::move(moves));
}

Decision decide_vertex_cover(const Graph& g, std::span<const Vertex> cover_i, std::span<const Vertex> cover_j,
                             Model model, const DecideOptions& options) {
    auto complement = [&](std::span<const Vertex> cover) {
        VertexSet c(cover.begin(), cover.end());
        c = normalized(std::move(c));
        VertexSet out;
        for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
            if (!set_contains(c, v)) out.push_back(v);
        }
        return IndependentSet::make(g, std::move(out));
    };
    const IndependentSet i = complement(cover_i);
    const IndependentSet j = complement(cover_j);
    return decide(g, i, j, model, options);
}

}  // namespace clawreconf
