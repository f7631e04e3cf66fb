#pragma once

// Breadth-first search over token configurations. Internal to the library.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "clawreconf/errors.hpp"
#include "clawreconf/graph.hpp"
#include "clawreconf/reconfig.hpp"

namespace clawreconf::detail {

using StateKey = std::vector<std::uint64_t>;

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : k) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

inline StateKey encode(std::span<const Vertex> s, std::size_t n) {
    StateKey key((n + 63) / 64, 0);
    for (Vertex v : s) key[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
    return key;
}

inline VertexSet decode(const StateKey& key) {
    VertexSet out;
    for (std::size_t w = 0; w < key.size(); ++w) {
        for (std::uint64_t bits = key[w]; bits != 0; bits &= bits - 1) {
            out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
        }
    }
    return out;
}

/// Calls visit(from, to) for every legal single move out of `s`, ordered by
/// (from, to). Stops early when visit returns true.
template <typename Visit>
bool for_each_move(const Graph& g, const VertexSet& s, Model model, std::vector<char>& occupied, Visit&& visit) {
    for (Vertex v : s) occupied[static_cast<std::size_t>(v)] = 1;
    auto legal = [&](Vertex from, Vertex to) {
        if (occupied[static_cast<std::size_t>(to)]) return false;
        for (Vertex w : g.neighbors(to)) {
            if (w != from && occupied[static_cast<std::size_t>(w)]) return false;
        }
        return true;
    };
    bool stop = false;
    for (Vertex from : s) {
        if (model == Model::TS) {
            for (Vertex to : g.neighbors(from)) {
                if (legal(from, to) && visit(from, to)) { stop = true; break; }
            }
        } else {
            for (Vertex to = 0; static_cast<std::size_t>(to) < g.size(); ++to) {
                if (to != from && legal(from, to) && visit(from, to)) { stop = true; break; }
            }
        }
        if (stop) break;
    }
    for (Vertex v : s) occupied[static_cast<std::size_t>(v)] = 0;
    return stop;
}

inline VertexSet moved(const VertexSet& s, Vertex from, Vertex to) {
    VertexSet out;
    out.reserve(s.size());
    bool placed = false;
    for (Vertex v : s) {
        if (v == from) continue;
        if (!placed && to < v) { out.push_back(to); placed = true; }
        out.push_back(v);
    }
    if (!placed) out.push_back(to);
    return out;
}

/// Shortest move list from `start` to any set accepted by `target`.
/// `allow(from, to, reaches_target)` gates every move. nullopt when no
/// target is reachable.
template <typename Target, typename Allow>
std::optional<std::vector<Move>> shortest_moves(const Graph& g, const VertexSet& start, Model model, std::size_t cap,
                                                Target&& target, Allow&& allow) {
    if (target(start)) return std::vector<Move>{};
    struct Node {
        StateKey key;
        std::size_t parent;
        Move move;
    };
    std::vector<Node> nodes;
    std::unordered_map<StateKey, std::size_t, StateKeyHash> index;
    nodes.push_back({encode(start, g.size()), 0, {-1, -1}});
    index.emplace(nodes[0].key, 0);
    std::vector<char> occupied(g.size(), 0);

    auto unwind = [&](std::size_t at, Move last) {
        std::vector<Move> out{last};
        for (; at != 0; at = nodes[at].parent) out.push_back(nodes[at].move);
        return std::vector<Move>(out.rbegin(), out.rend());
    };

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const VertexSet s = decode(nodes[head].key);
        std::optional<std::vector<Move>> found;
        for_each_move(g, s, model, occupied, [&](Vertex from, Vertex to) {
            const VertexSet next = moved(s, from, to);
            const bool hit = target(next);
            if (!allow(from, to, hit)) return false;
            if (hit) {
                found = unwind(head, Move{from, to});
                return true;
            }
            StateKey key = encode(next, g.size());
            if (index.contains(key)) return false;
            if (nodes.size() >= cap) {
                throw InconclusiveError("state space exceeds the cap of " + std::to_string(cap) + " sets");
            }
            index.emplace(key, nodes.size());
            nodes.push_back({std::move(key), head, Move{from, to}});
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace clawreconf::detail
