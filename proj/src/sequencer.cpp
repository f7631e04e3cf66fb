#include "clawreconf/sequencer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "clawreconf/alternating.hpp"
#include "clawreconf/errors.hpp"
#include "clawreconf/resolution.hpp"

namespace clawreconf {

namespace {

VertexSet slide(VertexSet s, Vertex from, Vertex to) {
    const Move m{from, to};
    return apply_moves(std::move(s), std::span(&m, 1));
}

void check(const Graph& g, const ReconfigSequence& seq, const VertexSet& target, const char* what) {
    if (auto bad = validate_sequence(g, seq)) {
        throw InternalError(std::string(what) + " fails at step " + std::to_string(bad->step) + ": " + bad->rule);
    }
    if (final_set(seq) != target) throw InternalError(std::string(what) + " does not end at the target set");
}

void require_same_size(const IndependentSet& i, const IndependentSet& j) {
    if (i.size() != j.size()) throw PreconditionError("|I| and |J| differ");
}

}  // namespace

ReconfigSequence ts_sequence_acyclic(const Graph& g, const IndependentSet& i, const IndependentSet& j,
                                     std::vector<PotentialState>* trace) {
    require_bound(g, i, "I");
    require_bound(g, j, "J");
    require_same_size(i, j);
    if (!decompose_symdiff(g, i, j).cycles.empty()) throw PreconditionError("G[I delta J] contains a cycle");
    if (i == j) return {Model::TS, i, {}};
    const int diam = diameter(g);

    VertexSet cur_i = i.vertices();
    VertexSet cur_j = j.vertices();
    std::vector<Move> front;
    std::vector<Move> back;  // applied to the J side, undone at the end
    long long last_phi = std::numeric_limits<long long>::max();

    while (cur_i != cur_j) {
        const VertexSet i_only = set_difference(cur_i, cur_j);
        const VertexSet j_only = set_difference(cur_j, cur_i);
        int md = std::numeric_limits<int>::max();
        Vertex u = -1;
        Vertex v = -1;
        for (Vertex x : i_only) {
            const auto dist = bfs_distances(g, x);
            for (Vertex y : j_only) {
                if (dist[static_cast<std::size_t>(y)] < md) {
                    md = dist[static_cast<std::size_t>(y)];
                    u = x;
                    v = y;
                }
            }
        }
        const PotentialState state{md, static_cast<long long>(i_only.size() - 1) * diam + md};
        if (state.phi >= last_phi) throw InternalError("potential did not decrease");
        last_phi = state.phi;
        if (trace) trace->push_back(state);

        if (md == 1) {
            const VertexSet delta = symmetric_difference(cur_i, cur_j);
            for (Vertex end : delta) {
                VertexSet nb;
                for (Vertex w : g.neighbors(end)) {
                    if (set_contains(delta, w)) nb.push_back(w);
                }
                if (nb.size() != 1) continue;
                if (set_contains(cur_j, end)) {
                    front.push_back({nb[0], end});
                    cur_i = slide(std::move(cur_i), nb[0], end);
                } else {
                    back.push_back({nb[0], end});
                    cur_j = slide(std::move(cur_j), nb[0], end);
                }
                break;
            }
            continue;
        }

        const std::vector<Vertex> path = *shortest_path(g, u, v);
        const std::size_t d = path.size() - 1;
        std::size_t hit = 0;
        Vertex blocker = -1;
        for (std::size_t t = d; t >= 1 && blocker == -1; --t) {
            for (Vertex w : g.neighbors(path[t])) {
                if (w != u && set_contains(cur_i, w)) {
                    hit = t;
                    blocker = w;
                    break;
                }
            }
        }
        std::vector<Move> walk;
        if (blocker == -1) {
            for (std::size_t t = 1; t <= d; ++t) walk.push_back({path[t - 1], path[t]});
        } else {
            walk.push_back({blocker, path[hit]});
            for (std::size_t t = hit + 1; t <= d; ++t) walk.push_back({path[t - 1], path[t]});
        }
        cur_i = apply_moves(std::move(cur_i), walk);
        front.insert(front.end(), walk.begin(), walk.end());
    }

    for (auto it = back.rbegin(); it != back.rend(); ++it) front.push_back({it->to, it->from});
    ReconfigSequence seq{Model::TS, i, std::move(front)};
    check(g, seq, j.vertices(), "acyclic sliding sequence");
    const std::size_t bound = 2 * set_difference(i.vertices(), j.vertices()).size() * static_cast<std::size_t>(diam);
    if (seq.length() > bound) throw InternalError("acyclic sliding sequence exceeds 2 |I\\J| diam(G)");
    return seq;
}

ReconfigSequence tj_sequence_no_even_cycles(const Graph& g, const IndependentSet& i, const IndependentSet& j) {
    require_bound(g, i, "I");
    require_bound(g, j, "J");
    require_same_size(i, j);

    VertexSet remaining = symmetric_difference(i.vertices(), j.vertices());
    {
        std::vector<Vertex> root(g.size());
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](Vertex x) {
            while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
            return x;
        };
        for (Vertex x : remaining) {
            for (Vertex y : g.neighbors(x)) {
                if (y <= x || !set_contains(remaining, y)) continue;
                const Vertex rx = find(x);
                const Vertex ry = find(y);
                if (rx == ry) throw PreconditionError("G[I delta J] contains an even cycle");
                root[static_cast<std::size_t>(rx)] = ry;
            }
        }
    }

    VertexSet cur = i.vertices();
    std::vector<Move> moves;
    while (cur != j.vertices()) {
        bool moved = false;
        for (Vertex v : set_difference(j.vertices(), cur)) {
            VertexSet nb;
            for (Vertex w : g.neighbors(v)) {
                if (set_contains(remaining, w)) nb.push_back(w);
            }
            if (nb.size() > 1) continue;
            // A J-vertex of degree at most one always exists in the remaining forest.
            const Vertex from = nb.empty() ? set_difference(cur, j.vertices()).front() : nb[0];
            moves.push_back({from, v});
            cur = slide(std::move(cur), from, v);
            remaining.erase(std::find(remaining.begin(), remaining.end(), from));
            remaining.erase(std::find(remaining.begin(), remaining.end(), v));
            moved = true;
            break;
        }
        if (!moved) throw InternalError("no J-vertex of degree at most one in a forest");
    }
    ReconfigSequence seq{Model::TJ, i, std::move(moves)};
    check(g, seq, j.vertices(), "jumping sequence");
    return seq;
}

ReconfigSequence tj_sequence_nonmaximum(const Graph& g, const IndependentSet& i, const IndependentSet& j) {
    require_bound(g, i, "I");
    require_bound(g, j, "J");
    require_same_size(i, j);
    if (i == j) return {Model::TJ, i, {}};
    if (is_maximum(g, i)) throw PreconditionError("I is a maximum independent set");

    VertexSet cur = i.vertices();
    std::vector<Move> moves;
    if (is_dominating(g, cur)) {
        const auto path = find_any_augmenting_path(g, i);
        if (!path) throw InternalError("non-maximum dominating set without an augmenting path");
        // w_0, v_1, w_1, ..., v_k, w_k: slide v_t -> w_t from the far end.
        const auto& p = path->vertices;
        for (std::size_t t = p.size() - 1; t >= 2; t -= 2) {
            moves.push_back({p[t - 1], p[t]});
            cur = slide(std::move(cur), p[t - 1], p[t]);
        }
    }

    Vertex w = -1;
    {
        std::vector<char> covered(g.size(), 0);
        for (Vertex x : cur) {
            covered[static_cast<std::size_t>(x)] = 1;
            for (Vertex y : g.neighbors(x)) covered[static_cast<std::size_t>(y)] = 1;
        }
        const auto it = std::find(covered.begin(), covered.end(), 0);
        if (it == covered.end()) throw InternalError("no undominated vertex after augmenting");
        w = static_cast<Vertex>(it - covered.begin());
    }

    const IndependentSet parked = IndependentSet::assume_independent(g, cur);
    for (const auto& c : decompose_symdiff(g, parked, j).cycles) {
        // u_t = c_{2(t-1)}, v_t = c_{2t-1}
        const std::size_t n = c.size() / 2;
        moves.push_back({c[0], w});
        for (std::size_t t = n; t >= 2; --t) moves.push_back({c[2 * (t - 1)], c[2 * t - 1]});
        moves.push_back({w, c[1]});
        for (std::size_t t = 0; t < n; ++t) cur = slide(std::move(cur), c[2 * t], c[2 * t + 1]);
    }

    const ReconfigSequence tail =
        tj_sequence_no_even_cycles(g, IndependentSet::assume_independent(g, cur), j);
    moves.insert(moves.end(), tail.moves.begin(), tail.moves.end());
    ReconfigSequence seq{Model::TJ, i, std::move(moves)};
    check(g, seq, j.vertices(), "non-maximum jumping sequence");
    return seq;
}

ReconfigSequence expand_jumps(const Graph& g, const ReconfigSequence& tj) {
    VertexSet cur = tj.start.vertices();
    std::vector<Move> moves;
    for (const Move& m : tj.moves) {
        VertexSet next = slide(cur, m.from, m.to);
        if (g.adjacent(m.from, m.to)) {
            moves.push_back(m);
        } else {
            const auto part = ts_sequence_acyclic(g, IndependentSet::assume_independent(g, cur),
                                                  IndependentSet::assume_independent(g, next));
            moves.insert(moves.end(), part.moves.begin(), part.moves.end());
        }
        cur = std::move(next);
    }
    ReconfigSequence seq{Model::TS, tj.start, std::move(moves)};
    check(g, seq, cur, "expanded sliding sequence");
    return seq;
}

ReconfigSequence assemble_yes_certificate(const Graph& g, const IndependentSet& i, const IndependentSet& j,
                                          Model model) {
    require_bound(g, i, "I");
    require_bound(g, j, "J");
    IndependentSet cur = i;
    std::vector<Move> moves;
    for (auto& cycle : decompose_symdiff(g, i, j).cycles) {
        const BadCycle c = make_bad_cycle(g, cur, std::move(cycle));
        const auto cert = find_resolution(g, cur, c);
        if (!cert) throw PreconditionError("a cycle of G[I delta J] is not resolvable");
        const ReconfigSequence turn = resolve_and_turn(g, cur, c, *cert);
        moves.insert(moves.end(), turn.moves.begin(), turn.moves.end());
        cur = IndependentSet::assume_independent(g, final_set(turn));
    }
    const ReconfigSequence tail = ts_sequence_acyclic(g, cur, j);
    moves.insert(moves.end(), tail.moves.begin(), tail.moves.end());
    ReconfigSequence seq{model, i, std::move(moves)};
    check(g, seq, j.vertices(), "assembled certificate");
    return seq;
}

}  // namespace clawreconf
