#include "clawreconf/alternating.hpp"

#include <algorithm>

#include "clawreconf/errors.hpp"

namespace clawreconf {

VertexSet free_vertices(const Graph& g, const IndependentSet& i) {
    require_bound(g, i, "I");
    VertexSet out;
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
        if (i.contains(v)) continue;
        std::size_t count = 0;
        for (Vertex w : g.neighbors(v)) count += i.contains(w) ? 1 : 0;
        if (count <= 1) out.push_back(v);
    }
    return out;
}

bool is_dominating(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> covered(g.size(), 0);
    for (Vertex v : s) {
        covered[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) covered[static_cast<std::size_t>(w)] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool is_chordless_alternating(const Graph& g, std::span<const Vertex> path, std::span<const Vertex> i) {
    for (std::size_t a = 0; a < path.size(); ++a) {
        for (std::size_t b = a + 1; b < path.size(); ++b) {
            if (path[a] == path[b]) return false;
            if (g.adjacent(path[a], path[b]) != (b == a + 1)) return false;
        }
        if (a + 1 < path.size() && set_contains(i, path[a]) == set_contains(i, path[a + 1])) return false;
    }
    return true;
}

namespace {

class AugmentingSearch {
public:
    AugmentingSearch(const Graph& g, const IndependentSet& i, Vertex target)
        : g_(g), i_(i), target_(target), on_path_(g.size(), 0), touch_(g.size(), 0), seen_(g.size(), 0) {}

    std::optional<AlternatingPath> run(Vertex source) {
        push(source);
        if (extend()) return AlternatingPath{path_};
        return std::nullopt;
    }

private:
    void push(Vertex v) {
        path_.push_back(v);
        on_path_[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g_.neighbors(v)) ++touch_[static_cast<std::size_t>(w)];
    }

    void pop() {
        const Vertex v = path_.back();
        path_.pop_back();
        on_path_[static_cast<std::size_t>(v)] = 0;
        for (Vertex w : g_.neighbors(v)) --touch_[static_cast<std::size_t>(w)];
    }

    // A candidate may only touch the current tail; anything adjacent to an
    // earlier path vertex would close a chord.
    bool usable(Vertex v) const {
        const auto sv = static_cast<std::size_t>(v);
        const int from_tail = g_.adjacent(path_.back(), v) ? 1 : 0;
        return !on_path_[sv] && touch_[sv] == from_tail;
    }

    bool target_reachable() {
        std::fill(seen_.begin(), seen_.end(), 0);
        std::vector<Vertex> stack{path_.back()};
        seen_[static_cast<std::size_t>(path_.back())] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g_.neighbors(v)) {
                if (seen_[static_cast<std::size_t>(w)] || !usable(w)) continue;
                if (w == target_) return true;
                seen_[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
        return false;
    }

    bool extend() {
        const Vertex tail = path_.back();
        const bool tail_in_i = i_.contains(tail);
        if (!target_reachable()) return false;
        for (Vertex w : g_.neighbors(tail)) {
            if (i_.contains(w) == tail_in_i) continue;
            if (on_path_[static_cast<std::size_t>(w)] || touch_[static_cast<std::size_t>(w)] != 1) continue;
            if (w == target_) {
                path_.push_back(w);
                return true;
            }
            push(w);
            if (extend()) return true;
            pop();
        }
        return false;
    }

    const Graph& g_;
    const IndependentSet& i_;
    Vertex target_;
    std::vector<Vertex> path_;
    std::vector<char> on_path_;
    std::vector<int> touch_;
    std::vector<char> seen_;
};

}  // namespace

std::optional<AlternatingPath> find_augmenting_path(const Graph& g, const IndependentSet& i, Vertex x, Vertex y) {
    require_bound(g, i, "I");
    if (x == y) throw PreconditionError("augmenting path endpoints must differ");
    const VertexSet free = free_vertices(g, i);
    if (!set_contains(free, x) || !set_contains(free, y)) {
        throw PreconditionError("augmenting path endpoints must be free vertices");
    }
    return AugmentingSearch(g, i, y).run(x);
}

std::optional<AlternatingPath> find_any_augmenting_path(const Graph& g, const IndependentSet& i) {
    require_bound(g, i, "I");
    const VertexSet free = free_vertices(g, i);
    // Endpoints of an augmenting path have exactly one i-neighbor.
    VertexSet candidates;
    for (Vertex v : free) {
        if (std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) { return i.contains(w); })) {
            candidates.push_back(v);
        }
    }
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        for (std::size_t b = a + 1; b < candidates.size(); ++b) {
            if (auto path = AugmentingSearch(g, i, candidates[b]).run(candidates[a])) return path;
        }
    }
    return std::nullopt;
}

bool is_maximum(const Graph& g, const IndependentSet& i) {
    return is_dominating(g, i.vertices()) && !find_any_augmenting_path(g, i).has_value();
}

VertexSet augment(std::span<const Vertex> i, const AlternatingPath& path) {
    VertexSet out(i.begin(), i.end());
    for (Vertex v : path.vertices) {
        auto it = std::lower_bound(out.begin(), out.end(), v);
        if (it != out.end() && *it == v) {
            out.erase(it);
        } else {
            out.insert(it, v);
        }
    }
    return out;
}

}  // namespace clawreconf
