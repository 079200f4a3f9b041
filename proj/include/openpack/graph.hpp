#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "openpack/errors.hpp"

namespace openpack {

// ---------------------------------------------------------------------------
// VertexSet: a sorted, duplicate-free set of vertex indices.
// ---------------------------------------------------------------------------
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(std::initializer_list<int> xs) : v_(xs) { normalize(); }

    explicit VertexSet(std::vector<int> xs) : v_(std::move(xs)) { normalize(); }

    static VertexSet full(int n) {
        VertexSet s;
        s.v_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) s.v_[static_cast<std::size_t>(i)] = i;
        return s;
    }

    bool contains(int x) const { return std::binary_search(v_.begin(), v_.end(), x); }

    void insert(int x) {
        if (x < 0) throw RangeError("negative vertex index " + std::to_string(x));
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it == v_.end() || *it != x) v_.insert(it, x);
    }

    bool erase(int x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it == v_.end() || *it != x) return false;
        v_.erase(it);
        return true;
    }

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    int min() const { return v_.front(); }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<int>& values() const { return v_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> v_;

    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        if (!v_.empty() && v_.front() < 0)
            throw RangeError("negative vertex index " + std::to_string(v_.front()));
    }
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(a.size() + b.size()));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib)
            ++ia;
        else
            ++ib;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Dist: a path length that may be infinite (unreachable vertex, acyclic girth).
// Infinity compares greater than every finite value.
// ---------------------------------------------------------------------------
class Dist {
public:
    constexpr Dist() : v_(kInf) {}
    constexpr Dist(long long d) : v_(d) {}  // NOLINT: numeric-with-infinity by design

    static constexpr Dist infinite() { return Dist(); }

    constexpr bool is_infinite() const { return v_ == kInf; }

    constexpr long long value() const { return v_; }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

    friend constexpr bool operator==(Dist, Dist) = default;
    friend constexpr auto operator<=>(Dist, Dist) = default;

    friend constexpr Dist operator+(Dist a, Dist b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return Dist(a.v_ + b.v_);
    }

private:
    static constexpr long long kInf = std::numeric_limits<long long>::max();
    long long v_;
};

// ---------------------------------------------------------------------------
// Graph: immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is stored CSR-style with sorted neighbor ranges. Graphs of order
// at most kBitsetLimit additionally keep an n x n adjacency bitset for O(1)
// adjacency tests; everything here is desk scale.
// ---------------------------------------------------------------------------
class Graph {
public:
    static constexpr int kBitsetLimit = 512;

    Graph() = default;

    Graph(int n, std::span<const std::pair<int, int>> edges) { build(n, edges); }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges)
        : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges)
        : Graph(n, std::span<const std::pair<int, int>>(edges)) {}

    int order() const { return n_; }
    std::int64_t size() const { return m_; }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return {nbrs_.data() + offsets_[static_cast<std::size_t>(v)],
                nbrs_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }

    int degree(int v) const {
        check_vertex(v);
        return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (!bits_.empty())
            return (bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(words_) +
                          static_cast<std::size_t>(v >> 6)] >>
                    (v & 63)) &
                   1u;
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int max_degree() const { return max_deg_; }
    int min_degree() const { return min_deg_; }

    // Edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.nbrs_ == b.nbrs_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw RangeError("vertex " + std::to_string(v) + " out of range [0, " +
                             std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    int max_deg_ = 0;
    int min_deg_ = 0;
    int words_ = 0;
    std::vector<int> offsets_{0};
    std::vector<int> nbrs_;
    std::vector<std::uint64_t> bits_;

    void build(int n, std::span<const std::pair<int, int>> edges) {
        if (n < 0) throw RangeError("negative vertex count " + std::to_string(n));
        n_ = n;
        std::vector<std::pair<int, int>> dir;
        dir.reserve(edges.size() * 2);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw RangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") out of range [0, " + std::to_string(n) + ")");
            if (u == v) throw LoopError("self-loop at vertex " + std::to_string(u));
            dir.emplace_back(u, v);
            dir.emplace_back(v, u);
        }
        std::sort(dir.begin(), dir.end());
        dir.erase(std::unique(dir.begin(), dir.end()), dir.end());
        m_ = static_cast<std::int64_t>(dir.size()) / 2;

        offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (auto& [u, v] : dir) offsets_[static_cast<std::size_t>(u) + 1]++;
        for (int i = 0; i < n; ++i)
            offsets_[static_cast<std::size_t>(i) + 1] += offsets_[static_cast<std::size_t>(i)];
        nbrs_.resize(dir.size());
        {
            std::size_t k = 0;
            for (auto& [u, v] : dir) nbrs_[k++] = v;  // dir sorted by (u, v): ranges sorted
        }

        max_deg_ = 0;
        min_deg_ = n > 0 ? n : 0;
        for (int v = 0; v < n; ++v) {
            int d = offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
            max_deg_ = std::max(max_deg_, d);
            min_deg_ = std::min(min_deg_, d);
        }
        if (n == 0) min_deg_ = 0;

        if (n <= kBitsetLimit && n > 0) {
            words_ = (n + 63) / 64;
            bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
            for (int u = 0; u < n; ++u)
                for (int v : neighbors(u))
                    bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(words_) +
                          static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
        }
    }
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

inline void validate_set(const Graph& g, const VertexSet& a) {
    if (!a.empty() && a.values().back() >= g.order())
        throw RangeError("set member " + std::to_string(a.values().back()) +
                         " out of range [0, " + std::to_string(g.order()) + ")");
}

// ---------------------------------------------------------------------------
// Neighborhood and metric queries.
// ---------------------------------------------------------------------------

inline VertexSet neighbor_set(const Graph& g, int v) {
    auto nb = g.neighbors(v);
    return VertexSet(std::vector<int>(nb.begin(), nb.end()));
}

// Union of the open neighborhoods of the members of a. May intersect a.
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& a) {
    validate_set(g, a);
    std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
    for (int v : a)
        for (int w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
    return VertexSet(std::move(out));
}

// BFS distances from u; -1 encodes unreachable.
inline std::vector<int> bfs_distances(const Graph& g, int u) {
    g.check_vertex(u);
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(g.order()));
    dist[static_cast<std::size_t>(u)] = 0;
    queue.push_back(u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

// Multi-source BFS distances from every vertex of src; -1 encodes unreachable.
inline std::vector<int> bfs_distances_from_set(const Graph& g, const VertexSet& src) {
    validate_set(g, src);
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(g.order()));
    for (int s : src) {
        dist[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

inline Dist distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return Dist(0);
    auto dist = bfs_distances(g, u);
    int d = dist[static_cast<std::size_t>(v)];
    return d < 0 ? Dist::infinite() : Dist(d);
}

inline Dist distance_to_set(const Graph& g, int u, const VertexSet& a) {
    g.check_vertex(u);
    validate_set(g, a);
    if (a.empty()) throw EmptySetError("distance_to_set: empty target set");
    if (a.contains(u)) return Dist(0);
    auto dist = bfs_distances(g, u);
    Dist best = Dist::infinite();
    for (int v : a) {
        int d = dist[static_cast<std::size_t>(v)];
        if (d >= 0) best = std::min(best, Dist(d));
    }
    return best;
}

// Length of a shortest cycle; infinite on forests. BFS from every vertex,
// taking the minimum over edge-closing events.
inline Dist girth(const Graph& g) {
    const int n = g.order();
    Dist best = Dist::infinite();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.clear();
        dist[static_cast<std::size_t>(root)] = 0;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            // A cycle through root cannot be shorter than 2*dist[x] - ...; stop
            // expanding once layers are too deep to beat the current best.
            if (!best.is_infinite() &&
                2 * static_cast<long long>(dist[static_cast<std::size_t>(x)]) >= best.value())
                break;
            for (int y : g.neighbors(x)) {
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    parent[static_cast<std::size_t>(y)] = x;
                    queue.push_back(y);
                } else if (y != parent[static_cast<std::size_t>(x)]) {
                    best = std::min(best, Dist(dist[static_cast<std::size_t>(x)] +
                                               dist[static_cast<std::size_t>(y)] + 1));
                }
            }
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Degree-one structure.
// ---------------------------------------------------------------------------

inline VertexSet leaves(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return VertexSet(std::move(out));
}

inline VertexSet supports(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        for (int w : g.neighbors(v)) {
            if (g.degree(w) == 1) {
                out.push_back(v);
                break;
            }
        }
    }
    return VertexSet(std::move(out));
}

inline VertexSet strong_supports(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        int leaf_nbrs = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 1) ++leaf_nbrs;
        if (leaf_nbrs >= 2) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Subgraphs and components.
// ---------------------------------------------------------------------------

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices outside the set
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a) {
    validate_set(g, a);
    std::vector<int> old_to_new(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v : a) old_to_new[static_cast<std::size_t>(v)] = next++;
    std::vector<std::pair<int, int>> edges;
    for (int v : a)
        for (int w : g.neighbors(v))
            if (v < w && old_to_new[static_cast<std::size_t>(w)] >= 0)
                edges.emplace_back(old_to_new[static_cast<std::size_t>(v)],
                                   old_to_new[static_cast<std::size_t>(w)]);
    return {Graph(a.size(), edges), std::move(old_to_new)};
}

// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> queue;
    for (int root = 0; root < g.order(); ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        queue.clear();
        queue.push_back(root);
        seen[static_cast<std::size_t>(root)] = 1;
        std::vector<int> comp;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            comp.push_back(x);
            for (int y : g.neighbors(x)) {
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                }
            }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

inline bool is_forest(const Graph& g) {
    // No cycle iff m = n - (#components).
    std::int64_t comp_count = static_cast<std::int64_t>(components(g).size());
    return g.size() == static_cast<std::int64_t>(g.order()) - comp_count;
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && is_connected(g) &&
           g.size() == static_cast<std::int64_t>(g.order()) - 1;
}

// g2 appended to g1 with its indices shifted by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<std::pair<int, int>> edges = g1.edges();
    int shift = g1.order();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(g1.order() + g2.order(), edges);
}

}  // namespace openpack
