#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Graph type, and favor obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "clawreconf/fixtures.hpp"
#include "clawreconf/generators.hpp"
#include "clawreconf/graph.hpp"
#include "clawreconf/random.hpp"
#include "clawreconf/reconfig.hpp"
#include "clawreconf/resolution.hpp"

namespace ref {

using clawreconf::Graph;
using clawreconf::IndependentSet;
using clawreconf::Model;
using clawreconf::Move;
using clawreconf::Vertex;
using clawreconf::VertexSet;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) d[u][v] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][k] + d[k][v]);
        }
    }
    return d;
}

inline bool independent(const Graph& g, const VertexSet& s) {
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (g.adjacent(s[a], s[b])) return false;
        }
    }
    return true;
}

inline VertexSet from_mask(std::uint32_t mask, std::size_t n) {
    VertexSet s;
    for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1U) s.push_back(static_cast<Vertex>(v));
    }
    return s;
}

// Every subset, n <= 20.
inline std::size_t alpha(const Graph& g) {
    const std::size_t n = g.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const auto s = from_mask(mask, n);
        if (s.size() > best && independent(g, s)) best = s.size();
    }
    return best;
}

inline std::vector<VertexSet> independent_sets(const Graph& g, std::size_t k) {
    std::vector<VertexSet> out;
    const std::size_t n = g.size();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        auto s = from_mask(mask, n);
        if (independent(g, s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool has_claw(const Graph& g) {
    const auto n = static_cast<Vertex>(g.size());
    for (Vertex c = 0; c < n; ++c) {
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                for (Vertex d = b + 1; d < n; ++d) {
                    if (c == a || c == b || c == d) continue;
                    if (!g.adjacent(c, a) || !g.adjacent(c, b) || !g.adjacent(c, d)) continue;
                    if (!g.adjacent(a, b) && !g.adjacent(a, d) && !g.adjacent(b, d)) return true;
                }
            }
        }
    }
    return false;
}

inline bool one_move_apart(const Graph& g, const VertexSet& a, const VertexSet& b, Model model) {
    VertexSet only_a;
    VertexSet only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
    if (only_a.size() != 1 || only_b.size() != 1) return false;
    return model == Model::TJ || g.adjacent(only_a[0], only_b[0]);
}

// Distance in the solution graph, from a plain BFS over std::set states.
inline std::optional<std::size_t> reachable_distance(const Graph& g, const VertexSet& from, const VertexSet& to,
                                                     Model model) {
    if (from.size() != to.size()) return std::nullopt;
    const auto nodes = independent_sets(g, from.size());
    std::map<VertexSet, std::size_t> dist{{from, 0}};
    std::deque<VertexSet> queue{from};
    while (!queue.empty()) {
        VertexSet cur = queue.front();
        queue.pop_front();
        if (cur == to) return dist[cur];
        for (const auto& next : nodes) {
            if (!dist.count(next) && one_move_apart(g, cur, next, model)) {
                dist[next] = dist[cur] + 1;
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

inline bool chordless_alternating(const Graph& g, const std::vector<Vertex>& path, const VertexSet& i) {
    for (std::size_t a = 0; a < path.size(); ++a) {
        for (std::size_t b = a + 1; b < path.size(); ++b) {
            if (path[a] == path[b]) return false;
            const bool adj = g.adjacent(path[a], path[b]);
            if ((b == a + 1) != adj) return false;
        }
        if (a + 1 < path.size()) {
            const bool in_a = std::binary_search(i.begin(), i.end(), path[a]);
            const bool in_b = std::binary_search(i.begin(), i.end(), path[a + 1]);
            if (in_a == in_b) return false;
        }
    }
    return true;
}

// All simple paths from x to y, filtered to chordless alternating ones.
inline std::vector<std::vector<Vertex>> chordless_alternating_paths(const Graph& g, const VertexSet& i, Vertex x,
                                                                    Vertex y) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{x};
    std::vector<char> used(g.size(), 0);
    used[static_cast<std::size_t>(x)] = 1;
    auto dfs = [&](auto&& self) -> void {
        const Vertex last = path.back();
        if (last == y) {
            if (chordless_alternating(g, path, i)) out.push_back(path);
            return;
        }
        for (Vertex w : g.neighbors(last)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    dfs(dfs);
    return out;
}

inline std::size_t i_neighbors(const Graph& g, const VertexSet& i, Vertex v) {
    std::size_t count = 0;
    for (Vertex u : i) count += g.adjacent(u, v) ? 1 : 0;
    return count;
}

inline bool is_free(const Graph& g, const VertexSet& i, Vertex v) {
    return !std::binary_search(i.begin(), i.end(), v) && i_neighbors(g, i, v) <= 1;
}

// Augmenting path exists between some pair of free vertices (brute force).
inline bool has_augmenting_path(const Graph& g, const VertexSet& i) {
    const auto n = static_cast<Vertex>(g.size());
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            if (!is_free(g, i, x) || !is_free(g, i, y)) continue;
            for (const auto& p : chordless_alternating_paths(g, i, x, y)) {
                if (p.size() >= 3) return true;
            }
        }
    }
    return false;
}

// Union-find acyclicity of G[s].
inline bool acyclic(const Graph& g, const VertexSet& s) {
    std::map<Vertex, Vertex> parent;
    for (Vertex v : s) parent[v] = v;
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (!g.adjacent(s[a], s[b])) continue;
            const Vertex ra = find(s[a]);
            const Vertex rb = find(s[b]);
            if (ra == rb) return false;
            parent[ra] = rb;
        }
    }
    return true;
}

inline VertexSet merged(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet after(VertexSet s, const Move& m) {
    s.erase(std::find(s.begin(), s.end(), m.from));
    s.insert(std::lower_bound(s.begin(), s.end(), m.to), m.to);
    return s;
}

// |N(v) ∩ B|, counted directly.
inline std::size_t b_count(const Graph& g, const VertexSet& b, Vertex v) { return i_neighbors(g, b, v); }

// Fixture sets by label.
inline IndependentSet set(const Graph& g, std::initializer_list<std::string_view> labels) {
    return IndependentSet::make(g, clawreconf::vertices_by_label(g, labels));
}

inline Vertex id(const Graph& g, std::string_view label) { return *g.find_label(label); }

// Connected claw-free graphs from both generators, for property sweeps.
inline std::vector<Graph> fuzz_graphs(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    clawreconf::Rng rng(seed);
    std::vector<Graph> out;
    while (out.size() < count) {
        Graph g = rng.chance(0.3)
                      ? clawreconf::gen_line_graph(rng.uniform(3, 6), 0.3 + 0.4 * rng.uniform01(), rng.next())
                      : clawreconf::gen_claw_free(rng.uniform(2, max_n), 0.25 + 0.5 * rng.uniform01(), rng.next());
        if (g.size() < 2 || g.size() > max_n || !clawreconf::is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

// Bad cycles from generated gadgets, with the gadget's I.
struct GadgetCase {
    Graph graph;
    IndependentSet i;
    IndependentSet j;
    clawreconf::BadCycle cycle;
};

inline std::vector<GadgetCase> gadget_cases(std::size_t count, std::uint64_t seed,
                                            const clawreconf::GadgetParams& params, std::size_t max_n = 18) {
    clawreconf::Rng rng(seed);
    std::vector<GadgetCase> out;
    while (out.size() < count) {
        auto gadget = clawreconf::gen_cycle_gadget(rng, params);
        if (!gadget || gadget->graph.size() > max_n) continue;
        GadgetCase c;
        c.graph = std::move(gadget->graph);
        c.i = IndependentSet::make(c.graph, gadget->i);
        c.j = IndependentSet::make(c.graph, gadget->j);
        auto cycles = clawreconf::extract_bad_cycles(c.graph, c.i, c.j);
        if (cycles.size() != 1) continue;
        c.cycle = std::move(cycles.front());
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace ref
