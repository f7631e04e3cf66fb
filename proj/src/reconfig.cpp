#include "clawreconf/reconfig.hpp"

#include <algorithm>

#include "clawreconf/errors.hpp"

namespace clawreconf {

std::string_view to_string(Model m) { return m == Model::TS ? "TS" : "TJ"; }

Model parse_model(std::string_view text) {
    if (text == "TS" || text == "ts") return Model::TS;
    if (text == "TJ" || text == "tj") return Model::TJ;
    throw ParseError("unknown model '" + std::string(text) + "' (expected TS or TJ)", 0);
}

IndependentSet IndependentSet::make(const Graph& g, VertexSet vertices) {
    vertices = normalized(std::move(vertices));
    for (Vertex v : vertices) {
        if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
    }
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (g.adjacent(vertices[a], vertices[b])) {
                throw PreconditionError("not independent: edge " + g.label(vertices[a]) + " " + g.label(vertices[b]));
            }
        }
    }
    return IndependentSet(g.identity(), std::move(vertices));
}

IndependentSet IndependentSet::assume_independent(const Graph& g, VertexSet vertices) {
    return IndependentSet(g.identity(), normalized(std::move(vertices)));
}

void require_bound(const Graph& g, const IndependentSet& s, std::string_view what) {
    if (!s.bound_to(g)) throw PreconditionError(std::string(what) + " was not validated against this graph");
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (s[a] == s[b] || g.adjacent(s[a], s[b])) return false;
        }
    }
    return true;
}

VertexSet apply_moves(VertexSet start, std::span<const Move> moves) {
    for (const Move& m : moves) {
        start.erase(std::remove(start.begin(), start.end(), m.from), start.end());
        start.insert(std::lower_bound(start.begin(), start.end(), m.to), m.to);
    }
    return start;
}

VertexSet final_set(const ReconfigSequence& seq) { return apply_moves(seq.start.vertices(), seq.moves); }

std::optional<SequenceViolation> validate_sequence(const Graph& g, const ReconfigSequence& seq) {
    const auto& start = seq.start.vertices();
    if (!is_independent(g, start)) return SequenceViolation{0, "start set is not independent"};
    std::vector<char> occupied(g.size(), 0);
    for (Vertex v : start) {
        if (!g.contains(v)) return SequenceViolation{0, "start set names an unknown vertex"};
        occupied[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t step = 0; step < seq.moves.size(); ++step) {
        const auto [from, to] = seq.moves[step];
        if (!g.contains(from) || !g.contains(to)) return SequenceViolation{step, "unknown vertex"};
        if (from == to) return SequenceViolation{step, "move does not change the set"};
        if (!occupied[static_cast<std::size_t>(from)]) return SequenceViolation{step, "no token on source vertex"};
        if (occupied[static_cast<std::size_t>(to)]) return SequenceViolation{step, "target vertex already occupied"};
        if (seq.model == Model::TS && !g.adjacent(from, to)) {
            return SequenceViolation{step, "slide between non-adjacent vertices"};
        }
        for (Vertex w : g.neighbors(to)) {
            if (w != from && occupied[static_cast<std::size_t>(w)]) {
                return SequenceViolation{step, "target is adjacent to the token on " + g.label(w)};
            }
        }
        occupied[static_cast<std::size_t>(from)] = 0;
        occupied[static_cast<std::size_t>(to)] = 1;
    }
    return std::nullopt;
}

SymDiffDecomposition decompose_symdiff(const Graph& g, const IndependentSet& i, const IndependentSet& j) {
    require_bound(g, i, "I");
    require_bound(g, j, "J");
    const VertexSet delta = symmetric_difference(i.vertices(), j.vertices());
    std::vector<char> in_delta(g.size(), 0);
    for (Vertex v : delta) in_delta[static_cast<std::size_t>(v)] = 1;

    auto delta_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(v)) {
            if (in_delta[static_cast<std::size_t>(w)]) out.push_back(w);
        }
        if (out.size() > 2) {
            throw PreconditionError("vertex " + g.label(v) + " has degree " + std::to_string(out.size()) +
                                    " in G[I delta J]; the graph is not claw-free");
        }
        return out;
    };

    SymDiffDecomposition out;
    std::vector<char> seen(g.size(), 0);
    for (Vertex s : delta) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        // Collect the component, then decide path vs cycle by degrees.
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        bool is_cycle = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            const auto nb = delta_neighbors(comp[head]);
            if (nb.size() < 2) is_cycle = false;
            for (Vertex w : nb) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }

        Vertex first;
        Vertex second;
        if (is_cycle) {
            first = *std::min_element(comp.begin(), comp.end(), [&](Vertex a, Vertex b) {
                const bool ai = i.contains(a);
                const bool bi = i.contains(b);
                return ai != bi ? ai : a < b;
            });
            const auto nb = delta_neighbors(first);
            second = std::min(nb[0], nb[1]);
        } else {
            first = *std::min_element(comp.begin(), comp.end(), [&](Vertex a, Vertex b) {
                const bool a_end = delta_neighbors(a).size() < 2;
                const bool b_end = delta_neighbors(b).size() < 2;
                return a_end != b_end ? a_end : a < b;
            });
            const auto nb = delta_neighbors(first);
            second = nb.empty() ? -1 : nb[0];
        }

        std::vector<Vertex> walk{first};
        Vertex prev = first;
        Vertex cur = second;
        while (cur != -1 && cur != first) {
            walk.push_back(cur);
            Vertex next = -1;
            for (Vertex w : delta_neighbors(cur)) {
                if (w != prev) next = w;
            }
            prev = cur;
            cur = next;
        }
        (is_cycle ? out.cycles : out.paths).push_back(std::move(walk));
    }
    return out;
}

}  // namespace clawreconf
