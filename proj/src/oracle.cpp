#include "clawreconf/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "clawreconf/errors.hpp"
#include "state_search.hpp"

namespace clawreconf {

std::optional<ReconfigSequence> oracle_reachable(const Graph& g, const IndependentSet& i, const IndependentSet& j,
                                                 Model model, std::size_t cap) {
    require_bound(g, i, "I");
    require_bound(g, j, "J");
    if (i.size() != j.size()) return std::nullopt;
    auto moves = detail::shortest_moves(
        g, i.vertices(), model, cap, [&](const VertexSet& s) { return s == j.vertices(); },
        [](Vertex, Vertex, bool) { return true; });
    if (!moves) return std::nullopt;
    return ReconfigSequence{model, i, std::move(*moves)};
}

std::vector<VertexSet> independent_sets_of_size(const Graph& g, std::size_t k, std::size_t cap) {
    std::vector<VertexSet> out;
    VertexSet cur;
    const auto n = static_cast<Vertex>(g.size());
    auto grow = [&](auto&& self, Vertex next) -> void {
        if (cur.size() == k) {
            if (out.size() >= cap) {
                throw InconclusiveError("more than " + std::to_string(cap) + " independent sets of size " +
                                        std::to_string(k));
            }
            out.push_back(cur);
            return;
        }
        for (Vertex v = next; v < n; ++v) {
            if (static_cast<std::size_t>(n - v) < k - cur.size()) break;
            if (std::any_of(cur.begin(), cur.end(), [&](Vertex u) { return g.adjacent(u, v); })) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    grow(grow, 0);
    return out;
}

SolutionGraph solution_graph(const Graph& g, std::size_t k, Model model, std::size_t cap) {
    SolutionGraph sg;
    sg.nodes = independent_sets_of_size(g, k, cap);
    std::map<VertexSet, std::size_t> index;
    for (std::size_t t = 0; t < sg.nodes.size(); ++t) index.emplace(sg.nodes[t], t);
    std::vector<char> occupied(g.size(), 0);
    for (std::size_t a = 0; a < sg.nodes.size(); ++a) {
        detail::for_each_move(g, sg.nodes[a], model, occupied, [&](Vertex from, Vertex to) {
            const std::size_t b = index.at(detail::moved(sg.nodes[a], from, to));
            if (a < b) sg.edges.emplace_back(a, b);
            return false;
        });
    }
    std::sort(sg.edges.begin(), sg.edges.end());
    sg.edges.erase(std::unique(sg.edges.begin(), sg.edges.end()), sg.edges.end());
    return sg;
}

SolutionGraphStats solution_graph_stats(const Graph& g, std::size_t k, Model model, std::size_t cap) {
    const SolutionGraph sg = solution_graph(g, k, model, cap);
    const std::size_t n = sg.nodes.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : sg.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    SolutionGraphStats st;
    st.k = k;
    st.model = model;
    st.nodes = n;
    std::vector<std::size_t> component(n, SIZE_MAX);
    std::vector<std::size_t> dist(n, SIZE_MAX);
    for (std::size_t s = 0; s < n; ++s) {
        if (component[s] == SIZE_MAX) {
            component[s] = st.components++;
            st.diameters.push_back(0);
        }
        // Every BFS stays inside its component, so eccentricities can be folded in directly.
        std::fill(dist.begin(), dist.end(), SIZE_MAX);
        std::deque<std::size_t> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            component[x] = component[s];
            auto& diam = st.diameters[component[s]];
            diam = std::max(diam, dist[x]);
            for (std::size_t y : adj[x]) {
                if (dist[y] == SIZE_MAX) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    for (std::size_t d : st.diameters) st.max_diameter = std::max(st.max_diameter, d);
    return st;
}

std::string stats_csv_header() { return "k,model,nodes,components,max_diameter"; }

std::string stats_csv_row(const SolutionGraphStats& s) {
    return std::to_string(s.k) + "," + std::string(to_string(s.model)) + "," + std::to_string(s.nodes) + "," +
           std::to_string(s.components) + "," + std::to_string(s.max_diameter);
}

std::size_t brute_alpha(const Graph& g, std::size_t max_n) {
    const std::size_t n = g.size();
    if (n > max_n) {
        throw InconclusiveError("brute-force alpha is capped at " + std::to_string(max_n) + " vertices");
    }
    if (n > 64) throw InconclusiveError("brute-force alpha supports at most 64 vertices");
    std::vector<std::uint64_t> closed(n, 0);
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
        closed[static_cast<std::size_t>(v)] |= std::uint64_t{1} << v;
        for (Vertex w : g.neighbors(v)) closed[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    }
    // alpha(S) = max(alpha(S - v), 1 + alpha(S - N[v])) for the lowest v in S.
    auto solve = [&](auto&& self, std::uint64_t cand) -> std::size_t {
        if (cand == 0) return 0;
        const auto v = static_cast<std::size_t>(__builtin_ctzll(cand));
        const std::size_t with = 1 + self(self, cand & ~closed[v]);
        if ((cand & closed[v]) == (std::uint64_t{1} << v)) return with;  // isolated in S: always take it
        return std::max(with, self(self, cand & ~(std::uint64_t{1} << v)));
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return solve(solve, all);
}

}  // namespace clawreconf
