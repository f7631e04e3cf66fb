#include "clawreconf/graph.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <deque>
#include <iterator>
#include <set>
#include <sstream>

#include "clawreconf/errors.hpp"
#include "clawreconf/random.hpp"

namespace clawreconf {

namespace {
std::atomic<std::uint64_t> next_identity{1};
}  // namespace

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges, std::vector<std::string> labels)
    : adjacency_(n), words_((n + 63) / 64), labels_(std::move(labels)), identity_(next_identity.fetch_add(1)) {
    matrix_.assign(n * words_, 0);
    for (auto [u, v] : edges) {
        if (!contains(u) || !contains(v)) throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
        if (adjacent(u, v)) {
            throw PreconditionError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        const auto su = static_cast<std::size_t>(u);
        const auto sv = static_cast<std::size_t>(v);
        matrix_[su * words_ + sv / 64] |= std::uint64_t{1} << (sv % 64);
        matrix_[sv * words_ + su / 64] |= std::uint64_t{1} << (su % 64);
        adjacency_[su].push_back(v);
        adjacency_[sv].push_back(u);
        ++edge_count_;
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    if (labels_.empty()) {
        labels_.reserve(n);
        for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    }
    if (labels_.size() != n) throw PreconditionError("label table size does not match vertex count");
    for (std::size_t v = 0; v < n; ++v) {
        if (!label_index_.emplace(labels_[v], static_cast<Vertex>(v)).second) {
            throw PreconditionError("duplicate vertex label '" + labels_[v] + "'");
        }
    }
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; static_cast<std::size_t>(u) < size(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    VertexSet out = neighbors(v);
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    std::optional<std::size_t> declared;
    bool body_started = false;

    auto id_of = [&](std::string_view label) {
        auto [it, inserted] = ids.emplace(std::string(label), static_cast<Vertex>(labels.size()));
        if (inserted) labels.emplace_back(label);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (tokens.front() == "vertices:") {
            if (body_started || declared) throw ParseError("'vertices:' header must come first and only once", line_no);
            std::size_t n = 0;
            if (tokens.size() != 2) throw ParseError("expected 'vertices: N'", line_no);
            auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
            if (ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size()) {
                throw ParseError("invalid vertex count '" + std::string(tokens[1]) + "'", line_no);
            }
            declared = n;
        } else if (tokens.size() == 1) {
            body_started = true;
            id_of(tokens[0]);
        } else if (tokens.size() == 2) {
            body_started = true;
            if (tokens[0] == tokens[1]) throw ParseError("self-loop on '" + std::string(tokens[0]) + "'", line_no);
            Vertex u = id_of(tokens[0]);
            Vertex v = id_of(tokens[1]);
            const std::pair<Vertex, Vertex> key{std::min(u, v), std::max(u, v)};
            if (!seen.insert(key).second) {
                throw ParseError("duplicate edge '" + std::string(tokens[0]) + " " + std::string(tokens[1]) + "'",
                                 line_no);
            }
            edges.emplace_back(u, v);
        } else {
            throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) + " fields", line_no);
        }
        if (end == text.size()) break;
    }

    if (declared) {
        if (labels.size() > *declared) {
            throw ParseError("header declares " + std::to_string(*declared) + " vertices but " +
                                 std::to_string(labels.size()) + " appear",
                             0);
        }
        while (labels.size() < *declared) {
            std::string label = std::to_string(labels.size());
            if (ids.contains(label)) throw ParseError("padding label '" + label + "' collides with an existing label", 0);
            id_of(label);
        }
    }
    const std::size_t n = labels.size();
    return Graph(n, edges, std::move(labels));
}

std::string print_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices: " << g.size() << '\n';
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
        if (g.degree(v) == 0) out << g.label(v) << '\n';
    }
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
    return out.str();
}

std::optional<ClawWitness> find_claw(const Graph& g) {
    for (Vertex c = 0; static_cast<std::size_t>(c) < g.size(); ++c) {
        const auto& nb = g.neighbors(c);
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.adjacent(nb[a], nb[b])) continue;
                for (std::size_t d = b + 1; d < nb.size(); ++d) {
                    if (!g.adjacent(nb[a], nb[d]) && !g.adjacent(nb[b], nb[d])) {
                        return ClawWitness{c, {nb[a], nb[b], nb[d]}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.size(), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    const int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    return d;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v) {
    std::vector<Vertex> parent(g.size(), -1);
    std::vector<char> seen(g.size(), 0);
    std::deque<Vertex> queue{u};
    seen[static_cast<std::size_t>(u)] = 1;
    while (!queue.empty() && !seen[static_cast<std::size_t>(v)]) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(x)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                parent[static_cast<std::size_t>(w)] = x;
                queue.push_back(w);
            }
        }
    }
    if (!seen[static_cast<std::size_t>(v)]) return std::nullopt;
    std::vector<Vertex> path;
    for (Vertex x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

int diameter(const Graph& g) {
    int best = 0;
    for (Vertex s = 0; static_cast<std::size_t>(s) < g.size(); ++s) {
        for (int d : bfs_distances(g, s)) {
            if (d < 0) throw PreconditionError("diameter of a disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<VertexSet> neighborhood_count_sets(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> in_s(g.size(), 0);
    for (Vertex v : s) in_s[static_cast<std::size_t>(v)] = 1;
    std::vector<VertexSet> classes(1);
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
        if (in_s[static_cast<std::size_t>(v)]) continue;
        std::size_t count = 0;
        for (Vertex w : g.neighbors(v)) count += in_s[static_cast<std::size_t>(w)];
        if (classes.size() <= count) classes.resize(count + 1);
        classes[count].push_back(v);
    }
    return classes;
}

Graph line_graph(const Graph& g) {
    const auto edges = g.edges();
    std::vector<std::string> labels;
    labels.reserve(edges.size());
    for (auto [u, v] : edges) labels.push_back(g.label(u) + "-" + g.label(v));

    std::vector<std::vector<Vertex>> incident(g.size());
    for (std::size_t t = 0; t < edges.size(); ++t) {
        incident[static_cast<std::size_t>(edges[t].first)].push_back(static_cast<Vertex>(t));
        incident[static_cast<std::size_t>(edges[t].second)].push_back(static_cast<Vertex>(t));
    }
    // In a simple graph two distinct edges share at most one endpoint, so each
    // pair is generated exactly once.
    std::vector<std::pair<Vertex, Vertex>> line_edges;
    for (const auto& list : incident) {
        for (std::size_t a = 0; a < list.size(); ++a) {
            for (std::size_t b = a + 1; b < list.size(); ++b) line_edges.emplace_back(list[a], list[b]);
        }
    }
    return Graph(edges.size(), line_edges, std::move(labels));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<char> seen(g.size(), 0);
    std::vector<VertexSet> out;
    for (Vertex s = 0; static_cast<std::size_t>(s) < g.size(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

VertexSet InducedSubgraph::lift(std::span<const Vertex> local) const {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet InducedSubgraph::restrict(std::span<const Vertex> parent) const {
    VertexSet out;
    for (Vertex v : parent) {
        const Vertex local = to_local[static_cast<std::size_t>(v)];
        if (local >= 0) out.push_back(local);
    }
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    InducedSubgraph sub;
    sub.to_parent.assign(vertices.begin(), vertices.end());
    std::sort(sub.to_parent.begin(), sub.to_parent.end());
    sub.to_local.assign(g.size(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        sub.to_local[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<Vertex>(i);
        labels.push_back(g.label(sub.to_parent[i]));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        for (Vertex w : g.neighbors(sub.to_parent[i])) {
            const Vertex j = sub.to_local[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    sub.graph = Graph(sub.to_parent.size(), edges, std::move(labels));
    return sub;
}

namespace {

// Mutable dense adjacency used only while repairing claws.
class DenseGraph {
public:
    explicit DenseGraph(const Graph& g) : n_(g.size()), adj_(n_ * n_, 0), protected_(n_ * n_, 0) {
        for (auto [u, v] : g.edges()) set(u, v, 1);
    }

    bool adjacent(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
    void set(Vertex u, Vertex v, char on) { adj_[index(u, v)] = adj_[index(v, u)] = on; }
    void protect(Vertex u, Vertex v) { protected_[index(u, v)] = protected_[index(v, u)] = 1; }
    bool is_protected(Vertex u, Vertex v) const { return protected_[index(u, v)] != 0; }
    std::size_t size() const { return n_; }

    std::optional<ClawWitness> first_claw(Vertex from) const {
        std::vector<Vertex> nb;
        for (Vertex c = from; static_cast<std::size_t>(c) < n_; ++c) {
            nb.clear();
            for (Vertex w = 0; static_cast<std::size_t>(w) < n_; ++w) {
                if (adjacent(c, w)) nb.push_back(w);
            }
            for (std::size_t a = 0; a < nb.size(); ++a) {
                for (std::size_t b = a + 1; b < nb.size(); ++b) {
                    if (adjacent(nb[a], nb[b])) continue;
                    for (std::size_t d = b + 1; d < nb.size(); ++d) {
                        if (!adjacent(nb[a], nb[d]) && !adjacent(nb[b], nb[d])) {
                            return ClawWitness{c, {nb[a], nb[b], nb[d]}};
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; static_cast<std::size_t>(u) < n_; ++u) {
            for (Vertex v = u + 1; static_cast<std::size_t>(v) < n_; ++v) {
                if (adjacent(u, v)) out.emplace_back(u, v);
            }
        }
        return out;
    }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
    }

    std::size_t n_;
    std::vector<char> adj_;
    std::vector<char> protected_;
};

}  // namespace

std::optional<Graph> repair_claws(const Graph& g, std::span<const std::pair<Vertex, Vertex>> protect) {
    DenseGraph dense(g);
    for (auto [u, v] : protect) dense.protect(u, v);

    // No claw is centered below `from`: deleting edge cl can only create claws
    // centered at common neighbors of c and l.
    Vertex from = 0;
    while (auto claw = dense.first_claw(from)) {
        const Vertex c = claw->center;
        const auto leaf = std::find_if(claw->leaves.begin(), claw->leaves.end(),
                                       [&](Vertex l) { return !dense.is_protected(c, l); });
        if (leaf == claw->leaves.end()) return std::nullopt;
        dense.set(c, *leaf, 0);
        from = c;
        for (Vertex x = 0; x < c; ++x) {
            if (dense.adjacent(x, c) && dense.adjacent(x, *leaf)) {
                from = x;
                break;
            }
        }
    }
    return Graph(g.size(), dense.edges(), g.labels());
}

Graph gen_claw_free(std::size_t n, double density, std::uint64_t seed) {
    if (n == 0) throw PreconditionError("gen_claw_free needs n >= 1");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
        for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
            if (rng.uniform01() < density) edges.emplace_back(u, v);
        }
    }
    return *repair_claws(Graph(n, edges));
}

bool set_contains(std::span<const Vertex> s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet symmetric_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace clawreconf
