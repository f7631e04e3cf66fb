#include "clawreconf/resolution.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "clawreconf/alternating.hpp"
#include "clawreconf/errors.hpp"
#include "state_search.hpp"

namespace clawreconf {

namespace {

VertexSet b_neighbors(const Graph& g, Vertex v, std::span<const Vertex> b) {
    VertexSet out;
    for (Vertex w : g.neighbors(v)) {
        if (set_contains(b, w)) out.push_back(w);
    }
    return out;
}

VertexSet i_neighbors(const Graph& g, const IndependentSet& i, Vertex v) {
    VertexSet out;
    for (Vertex w : g.neighbors(v)) {
        if (i.contains(w)) out.push_back(w);
    }
    return out;
}

// Per-vertex |N(v) & B|, or -1 for members of B.
std::vector<int> class_index(const Graph& g, const BadCycle& c) {
    std::vector<int> cls(g.size(), -1);
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
        for (Vertex v : c.classes[k]) cls[static_cast<std::size_t>(v)] = static_cast<int>(k);
    }
    return cls;
}

}  // namespace

BadCycle make_bad_cycle(const Graph& g, const IndependentSet& i, std::vector<Vertex> cycle) {
    require_bound(g, i, "I");
    const std::size_t len = cycle.size();
    if (len < 4 || len % 2 != 0) throw PreconditionError("a bad cycle has even length at least 4");
    for (std::size_t p = 0; p < len; ++p) {
        if (!g.contains(cycle[p])) throw PreconditionError("cycle names an unknown vertex");
        if (i.contains(cycle[p]) != (p % 2 == 0)) {
            throw PreconditionError("cycle does not alternate with I starting at c_0");
        }
        for (std::size_t q = p + 1; q < len; ++q) {
            const bool consecutive = q == p + 1 || (p == 0 && q == len - 1);
            if (cycle[p] == cycle[q] || g.adjacent(cycle[p], cycle[q]) != consecutive) {
                throw PreconditionError("cycle is not chordless");
            }
        }
    }

    BadCycle c;
    c.vertices = std::move(cycle);
    for (std::size_t p = 0; p < len; ++p) (p % 2 == 0 ? c.a : c.b).push_back(c.vertices[p]);
    std::sort(c.a.begin(), c.a.end());
    std::sort(c.b.begin(), c.b.end());
    c.classes = neighborhood_count_sets(g, c.b);
    if (c.classes.size() < 3) c.classes.resize(3);

    std::vector<VertexSet> nb(g.size());
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
        if (!set_contains(c.b, v)) nb[static_cast<std::size_t>(v)] = b_neighbors(g, v, c.b);
    }
    for (std::size_t k = 0; k < c.half(); ++k) {
        const VertexSet& key = nb[static_cast<std::size_t>(c.vertices[2 * k])];
        VertexSet layer;
        for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
            if (!set_contains(c.b, v) && nb[static_cast<std::size_t>(v)] == key) layer.push_back(v);
        }
        c.layers.push_back(std::move(layer));
    }
    return c;
}

BadCycle reversed(const Graph& g, const IndependentSet& i, const BadCycle& c) {
    std::vector<Vertex> rev{c.vertices[0]};
    rev.insert(rev.end(), c.vertices.rbegin(), c.vertices.rend() - 1);
    return make_bad_cycle(g, i, std::move(rev));
}

std::vector<BadCycle> extract_bad_cycles(const Graph& g, const IndependentSet& i, const IndependentSet& j) {
    std::vector<BadCycle> out;
    for (auto& cycle : decompose_symdiff(g, i, j).cycles) out.push_back(make_bad_cycle(g, i, std::move(cycle)));
    return out;
}

bool LayerDigraph::has_arc(Vertex u, Vertex v) const {
    const auto& out = arcs[static_cast<std::size_t>(u)];
    return std::binary_search(out.begin(), out.end(), v);
}

LayerDigraph build_layer_digraph(const Graph& g, const IndependentSet& i, const BadCycle& c, Orientation orientation) {
    if (c.length() < 8) throw PreconditionError("the layer digraph needs a cycle of length at least 8");
    const BadCycle cc = orientation == Orientation::Forward ? c : reversed(g, i, c);
    const std::size_t n = cc.half();
    LayerDigraph d;
    d.orientation = orientation;
    d.arcs.resize(g.size());

    for (std::size_t k = 0; k < n; ++k) {
        const VertexSet& next = cc.layers[(k + 1) % n];
        for (Vertex u : cc.layers[k]) {
            for (Vertex v : next) {
                if (!g.adjacent(u, v)) d.arcs[static_cast<std::size_t>(u)].push_back(v);
            }
        }
    }
    std::vector<std::size_t> position(g.size(), 0);
    for (std::size_t p = 0; p < cc.length(); ++p) position[static_cast<std::size_t>(cc.vertices[p])] = p;
    for (Vertex b : cc.n1()) {
        const Vertex c_odd = b_neighbors(g, b, cc.b).front();
        // c_odd = c_{2k-1 mod 2n}
        const std::size_t k = ((position[static_cast<std::size_t>(c_odd)] + 1) / 2) % n;
        for (Vertex v : cc.layers[k]) {
            if (!g.adjacent(b, v)) d.arcs[static_cast<std::size_t>(b)].push_back(v);
        }
    }
    for (auto& out : d.arcs) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return d;
}

std::string_view to_string(ResolutionKind k) {
    switch (k) {
        case ResolutionKind::External: return "external";
        case ResolutionKind::InternalDigraph: return "internal-digraph";
        case ResolutionKind::InternalEnumeration: return "internal-enumeration";
    }
    return "?";
}

std::optional<ResolutionCertificate> externally_resolvable(const Graph& g, const IndependentSet& i, const BadCycle& c,
                                                           bool assume_maximum) {
    require_bound(g, i, "I");
    if (!assume_maximum && !is_maximum(g, i)) {
        throw PreconditionError("external resolvability is characterized only for maximum independent sets");
    }
    // One move w -> y already resolves when y's only I-neighbor is in A.
    for (Vertex y : c.n1()) {
        const VertexSet iy = i_neighbors(g, i, y);
        if (iy.size() == 1 && set_contains(c.a, iy[0])) {
            return ResolutionCertificate{ResolutionKind::External, Orientation::Forward, {y}, {}};
        }
    }
    if (c.n0().empty() || c.n1().empty()) return std::nullopt;

    const VertexSet rest = set_difference(set_difference([&] {
        VertexSet all(g.size());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }(), c.a), c.b);
    const InducedSubgraph sub = induced_subgraph(g, rest);
    const IndependentSet local_i = IndependentSet::make(sub.graph, sub.restrict(set_difference(i.vertices(), c.a)));
    const VertexSet free = free_vertices(sub.graph, local_i);
    auto is_free = [&](Vertex v) { return set_contains(free, sub.to_local[static_cast<std::size_t>(v)]); };

    for (Vertex x : c.n0()) {
        if (!is_free(x)) continue;
        for (Vertex y : c.n1()) {
            if (!is_free(y)) continue;
            const auto path = find_augmenting_path(sub.graph, local_i, sub.to_local[static_cast<std::size_t>(x)],
                                                   sub.to_local[static_cast<std::size_t>(y)]);
            if (!path) continue;
            ResolutionCertificate cert;
            cert.kind = ResolutionKind::External;
            for (Vertex v : path->vertices) cert.path.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
            return cert;
        }
    }
    return std::nullopt;
}

namespace {

std::optional<std::vector<Vertex>> digraph_path(const LayerDigraph& d, Vertex start, const VertexSet& a) {
    std::vector<Vertex> parent(d.arcs.size(), -2);
    parent[static_cast<std::size_t>(start)] = -1;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : d.arcs[static_cast<std::size_t>(u)]) {
            if (parent[static_cast<std::size_t>(v)] != -2) continue;
            parent[static_cast<std::size_t>(v)] = u;
            if (set_contains(a, v)) {
                std::vector<Vertex> path;
                for (Vertex x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
                return std::vector<Vertex>(path.rbegin(), path.rend());
            }
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ResolutionCertificate> internally_resolvable(const Graph& g, const IndependentSet& i, const BadCycle& c) {
    require_bound(g, i, "I");
    if (c.length() >= 8) {
        VertexSet eligible;
        for (Vertex b : c.n1()) {
            const VertexSet ib = i_neighbors(g, i, b);
            if (std::all_of(ib.begin(), ib.end(), [&](Vertex w) { return set_contains(c.a, w); })) {
                eligible.push_back(b);
            }
        }
        for (Vertex b : eligible) {
            if (i_neighbors(g, i, b).size() == 1) {
                return ResolutionCertificate{ResolutionKind::InternalDigraph, Orientation::Forward, {b}, {}};
            }
        }
        for (Orientation o : {Orientation::Forward, Orientation::Reversed}) {
            const LayerDigraph d = build_layer_digraph(g, i, c, o);
            for (Vertex b : eligible) {
                if (auto path = digraph_path(d, b, c.a)) {
                    return ResolutionCertificate{ResolutionKind::InternalDigraph, o, std::move(*path), {}};
                }
            }
        }
        return std::nullopt;
    }

    // Short cycles: only the |A| <= 3 tokens of A move; the rest of I is fixed.
    const VertexSet fixed = set_difference(i.vertices(), c.a);
    auto moves = detail::shortest_moves(
        g, i.vertices(), Model::TS, kDefaultStateCap, [&](const VertexSet& s) { return acyclic_with(g, s, c.b); },
        [&](Vertex from, Vertex, bool) { return !set_contains(fixed, from); });
    if (!moves) return std::nullopt;
    return ResolutionCertificate{ResolutionKind::InternalEnumeration, Orientation::Forward, {}, std::move(*moves)};
}

std::optional<ResolutionCertificate> find_resolution(const Graph& g, const IndependentSet& i, const BadCycle& c) {
    if (auto cert = externally_resolvable(g, i, c, true)) return cert;
    return internally_resolvable(g, i, c);
}

bool acyclic_with(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> b) {
    const VertexSet members = set_union(s, b);
    std::vector<Vertex> root(g.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](Vertex v) {
        while (root[static_cast<std::size_t>(v)] != v) {
            root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
            v = root[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (Vertex u : members) {
        for (Vertex v : g.neighbors(u)) {
            if (v <= u || !set_contains(members, v)) continue;
            const Vertex ru = find(u);
            const Vertex rv = find(v);
            if (ru == rv) return false;
            root[static_cast<std::size_t>(ru)] = rv;
        }
    }
    return true;
}

namespace {

Vertex unique_a_neighbor(const Graph& g, const BadCycle& c, Vertex v) {
    const VertexSet na = b_neighbors(g, v, c.a);
    if (na.size() != 1) {
        throw InternalError("vertex " + g.label(v) + " should have exactly one neighbor in A");
    }
    return na[0];
}

}  // namespace

std::vector<Move> resolving_moves(const Graph& g, const IndependentSet& i, const BadCycle& c,
                                  const ResolutionCertificate& cert) {
    std::vector<Move> moves;
    switch (cert.kind) {
        case ResolutionKind::External:
        case ResolutionKind::InternalDigraph:
            if (cert.path.empty()) throw InternalError("empty resolution witness");
            if (cert.path.size() == 1) {
                moves.push_back({unique_a_neighbor(g, c, cert.path[0]), cert.path[0]});
                break;
            }
            if (cert.kind == ResolutionKind::External) {
                // u_0, v_0, u_1, ..., v_{k-1}, u_k: slide each v_j back onto u_j, then w -> u_k.
                const auto& p = cert.path;
                for (std::size_t t = 0; t + 1 < p.size(); t += 2) moves.push_back({p[t + 1], p[t]});
                moves.push_back({unique_a_neighbor(g, c, p.back()), p.back()});
            } else {
                const BadCycle cc = cert.orientation == Orientation::Forward ? c : reversed(g, i, c);
                const std::size_t n = cc.half();
                const std::size_t m = cert.path.size() - 1;
                const auto at = std::find(cc.vertices.begin(), cc.vertices.end(), cert.path.back());
                const auto pos = static_cast<std::size_t>(at - cc.vertices.begin());
                if (at == cc.vertices.end() || pos % 2 != 0) throw InternalError("digraph path does not end in A");
                std::vector<Vertex> ext = cert.path;
                for (std::size_t t = 1; t < n; ++t) ext.push_back(cc.vertices[(pos + 2 * t) % cc.length()]);
                for (std::size_t t = 1; t <= m; ++t) moves.push_back({ext[m - t + n], ext[m - t]});
            }
            break;
        case ResolutionKind::InternalEnumeration:
            moves = cert.moves;
            break;
    }

    const ReconfigSequence seq{Model::TS, i, moves};
    if (auto bad = validate_sequence(g, seq)) {
        throw InternalError("resolving sequence fails at step " + std::to_string(bad->step) + ": " + bad->rule);
    }
    VertexSet cur = i.vertices();
    for (std::size_t t = 0; t + 1 < moves.size(); ++t) {
        cur = apply_moves(std::move(cur), std::span(&moves[t], 1));
        if (acyclic_with(g, cur, c.b)) throw InternalError("resolving sequence resolves before its last move");
    }
    cur = apply_moves(std::move(cur), std::span(&moves.back(), 1));
    if (!acyclic_with(g, cur, c.b)) throw InternalError("resolving sequence does not resolve the cycle");
    return moves;
}

ReconfigSequence resolve_and_turn(const Graph& g, const IndependentSet& i, const BadCycle& c,
                                  const ResolutionCertificate& cert) {
    const std::vector<Move> resolving = resolving_moves(g, i, c, cert);
    const std::vector<Move> prefix(resolving.begin(), resolving.end() - 1);
    const auto [u, v] = resolving.back();
    const VertexSet before = apply_moves(i.vertices(), prefix);

    // Tokens that started on A now sit on A', and G[A' + B] is again a cycle.
    // Walk it as c'_1 = u, c'_2 = the B-neighbor of v, and so on.
    const VertexSet vb = b_neighbors(g, v, c.b);
    if (vb.size() != 1) throw InternalError("last resolving move does not end in N_1(B)");
    VertexSet a_prime;
    for (Vertex x : before) {
        if (!b_neighbors(g, x, c.b).empty()) a_prime.push_back(x);
    }
    std::vector<Vertex> walk{u, vb[0]};
    while (walk.size() < 2 * c.half()) {
        const Vertex last = walk.back();
        const Vertex prev = walk[walk.size() - 2];
        const bool on_b = walk.size() % 2 == 0;
        const VertexSet nb = on_b ? b_neighbors(g, last, a_prime) : b_neighbors(g, last, c.b);
        if (nb.size() != 2) throw InternalError("tokens near the cycle do not form a cycle with B");
        walk.push_back(nb[0] == prev ? nb[1] : nb[0]);
    }

    std::vector<Move> moves = resolving;
    const std::size_t len = walk.size();  // walk[t] is c'_{t+1}
    for (std::size_t t = len - 1; t >= 3; t -= 2) moves.push_back({walk[t - 1], walk[t]});
    moves.push_back({v, walk[1]});

    const std::vector<int> cls = class_index(g, c);
    auto external = [&](const Move& m) {
        return cls[static_cast<std::size_t>(m.from)] == 0 && cls[static_cast<std::size_t>(m.to)] == 0;
    };
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        if (external(*it)) moves.push_back({it->to, it->from});
    }

    ReconfigSequence seq{Model::TS, i, std::move(moves)};
    if (auto bad = validate_sequence(g, seq)) {
        throw InternalError("turning sequence fails at step " + std::to_string(bad->step) + ": " + bad->rule);
    }
    if (final_set(seq) != symmetric_difference(i.vertices(), normalized(c.vertices))) {
        throw InternalError("turning sequence does not end at I delta V(C)");
    }
    return seq;
}

std::optional<std::vector<Move>> brute_resolving_sequence(const Graph& g, const IndependentSet& i, const BadCycle& c,
                                                          MoveFilter filter, std::size_t cap) {
    require_bound(g, i, "I");
    const std::vector<int> cls = class_index(g, c);
    auto in_class = [&](Vertex v, int k) { return cls[static_cast<std::size_t>(v)] == k; };
    return detail::shortest_moves(
        g, i.vertices(), Model::TS, cap, [&](const VertexSet& s) { return acyclic_with(g, s, c.b); },
        [&](Vertex from, Vertex to, bool last) {
            switch (filter) {
                case MoveFilter::All: return true;
                case MoveFilter::InternalOnly: return last || (in_class(from, 2) && in_class(to, 2));
                case MoveFilter::ExternalOnly: return last || (in_class(from, 0) && in_class(to, 0));
            }
            return false;
        });
}

bool is_resolvable_brute(const Graph& g, const IndependentSet& i, const BadCycle& c, MoveFilter filter,
                         std::size_t cap) {
    return brute_resolving_sequence(g, i, c, filter, cap).has_value();
}

}  // namespace clawreconf
