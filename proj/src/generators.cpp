#include "clawreconf/generators.hpp"

#include <algorithm>

#include "clawreconf/oracle.hpp"

namespace clawreconf {

Graph gen_line_graph(std::size_t n, double density, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
        for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
            if (rng.chance(density)) edges.emplace_back(u, v);
        }
    }
    return line_graph(Graph(n, edges));
}

std::optional<VertexSet> random_independent_set(const Graph& g, std::size_t k, Rng& rng) {
    const auto all = independent_sets_of_size(g, k);
    if (all.empty()) return std::nullopt;
    return all[rng.uniform(0, all.size() - 1)];
}

std::optional<CycleGadget> gen_cycle_gadget(Rng& rng, const GadgetParams& params) {
    const std::size_t len = 2 * rng.uniform(params.min_length / 2, params.max_length / 2);
    const std::size_t extras = rng.uniform(1, std::max<std::size_t>(1, params.max_extras));
    const std::size_t outside = rng.uniform(0, params.max_outside);
    const std::size_t n = len + extras + outside;
    const auto cyc = [&](std::size_t t) { return static_cast<Vertex>(t % len); };

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::pair<Vertex, Vertex>> cycle_edges;
    for (std::size_t t = 0; t < len; ++t) {
        const Vertex a = cyc(t);
        const Vertex b = cyc(t + 1);
        cycle_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    edges = cycle_edges;

    auto attach_run = [&](Vertex x, std::size_t start, std::size_t run) {
        for (std::size_t t = 0; t < run; ++t) edges.emplace_back(cyc(start + t), x);
    };
    for (std::size_t e = 0; e < extras; ++e) {
        const auto x = static_cast<Vertex>(len + e);
        const std::size_t start = rng.uniform(0, len - 1);
        if (len >= 8 && rng.chance(0.2)) {
            attach_run(x, start, 2);
            attach_run(x, start + rng.uniform(3, len - 4), 2);
        } else {
            attach_run(x, start, rng.uniform(1, std::min<std::size_t>(4, len - 1)));
        }
    }
    for (std::size_t a = len; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            // extra-extra 0.35, extra-outside 0.5, outside-outside 0.4
            const double p = a >= len + extras ? 0.4 : (b >= len + extras ? 0.5 : 0.35);
            if (rng.chance(p)) {
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const auto repaired = repair_claws(Graph(n, edges), cycle_edges);
    if (!repaired) return std::nullopt;

    CycleGadget out;
    out.graph = *repaired;
    for (std::size_t t = 0; t < len; ++t) out.cycle.push_back(cyc(t));
    for (std::size_t t = 0; t < len; t += 2) out.i.push_back(cyc(t));

    std::vector<Vertex> candidates;
    for (Vertex v = static_cast<Vertex>(len); static_cast<std::size_t>(v) < n; ++v) {
        const auto& nb = out.graph.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return static_cast<std::size_t>(w) < len; })) {
            candidates.push_back(v);
        }
    }
    rng.shuffle(candidates);
    VertexSet added;
    for (Vertex v : candidates) {
        if (std::none_of(added.begin(), added.end(), [&](Vertex w) { return out.graph.adjacent(v, w); })) {
            added.push_back(v);
        }
    }
    if (!added.empty() && rng.chance(params.sparse_tokens)) added.pop_back();
    out.i = normalized(set_union(out.i, normalized(added)));
    out.j = symmetric_difference(out.i, normalized(out.cycle));
    return out;
}

}  // namespace clawreconf
