#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "openpack/detail/bits.hpp"
#include "openpack/graph.hpp"

namespace openpack {

// Limits for the exhaustive routines. `vertex_cap` bounds the order of graphs
// accepted for enumeration; `set_cap` bounds how many maximal sets a spectrum
// computation will visit before degrading to branch-and-bound extremes.
struct EnumOptions {
    int vertex_cap = 64;
    std::uint64_t set_cap = 1'000'000;
};

namespace detail {

inline void check_enum_cap(const Graph& g, const EnumOptions& opts) {
    if (g.order() > opts.vertex_cap)
        throw CapExceededError("graph order " + std::to_string(g.order()) +
                               " exceeds enumeration cap " + std::to_string(opts.vertex_cap));
    if (g.order() > kMaxEnumVertices)
        throw CapExceededError("graph order " + std::to_string(g.order()) +
                               " exceeds supported enumeration width " +
                               std::to_string(kMaxEnumVertices));
}

inline std::vector<Bits> adjacency_bits(const Graph& g) {
    std::vector<Bits> rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) rows[static_cast<std::size_t>(v)].set(w);
    return rows;
}

inline std::vector<Bits> complement_bits(const Graph& g) {
    const int n = g.order();
    Bits all = Bits::first_n(n);
    std::vector<Bits> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Bits r = all;
        for (int w : g.neighbors(v)) r.reset(w);
        r.reset(v);
        rows[static_cast<std::size_t>(v)] = r;
    }
    return rows;
}

// Bron-Kerbosch with pivoting over the adjacency rows `adj`. Emits every
// maximal clique exactly once, in a deterministic order (pivot = smallest
// index among the vertices of P|X maximizing |P & adj[pivot]|, candidates
// ascending). The callback returns false to stop the enumeration; the
// function returns false iff it was stopped.
template <class Cb>
struct CliqueEnumerator {
    const std::vector<Bits>& adj;
    Cb& cb;
    bool stopped = false;

    void run(const Bits& r, Bits p, Bits x) {
        if (stopped) return;
        if (p.empty() && x.empty()) {
            if (!cb(r)) stopped = true;
            return;
        }
        int pivot = -1;
        int best = -1;
        (p | x).for_each([&](int u) {
            int c = (p & adj[static_cast<std::size_t>(u)]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        Bits ext = p.andnot(adj[static_cast<std::size_t>(pivot)]);
        ext.for_each([&](int v) {
            if (stopped) return;
            Bits r2 = r;
            r2.set(v);
            run(r2, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)]);
            p.reset(v);
            x.set(v);
        });
    }
};

template <class Cb>
bool for_each_maximal_clique(const std::vector<Bits>& adj, int n, Cb&& cb) {
    CliqueEnumerator<Cb> e{adj, cb};
    e.run(Bits{}, Bits::first_n(n), Bits{});
    return !e.stopped;
}

// Maximal independent sets of g = maximal cliques of its complement.
template <class Cb>
bool for_each_mis_bits(const Graph& g, Cb&& cb) {
    auto cadj = complement_bits(g);
    return for_each_maximal_clique(cadj, g.order(), cb);
}

inline VertexSet to_vertex_set(const Bits& b) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(b.count()));
    b.for_each([&](int v) { out.push_back(v); });
    return VertexSet(std::move(out));
}

// Exact maximum independent set, branch and bound. Returns (size, set).
inline std::pair<int, Bits> max_independent_set(const std::vector<Bits>& adj, int n) {
    int best = -1;
    Bits best_set;
    auto rec = [&](auto&& self, Bits cand, Bits chosen, int size) -> void {
        // Vertices with no candidate neighbors are free.
        for (;;) {
            int free_v = -1;
            cand.for_each([&](int v) {
                if (free_v >= 0) return;
                if ((adj[static_cast<std::size_t>(v)] & cand).empty()) free_v = v;
            });
            if (free_v < 0) break;
            cand.reset(free_v);
            chosen.set(free_v);
            ++size;
        }
        if (size > best) {
            best = size;
            best_set = chosen;
        }
        if (cand.empty()) return;
        if (size + cand.count() <= best) return;
        // Branch on a candidate of maximum degree within cand.
        int v = -1;
        int vdeg = -1;
        cand.for_each([&](int u) {
            int d = (adj[static_cast<std::size_t>(u)] & cand).count();
            if (d > vdeg) {
                vdeg = d;
                v = u;
            }
        });
        Bits with = cand.andnot(adj[static_cast<std::size_t>(v)]);
        with.reset(v);
        Bits chosen_with = chosen;
        chosen_with.set(v);
        self(self, with, chosen_with, size + 1);
        Bits without = cand;
        without.reset(v);
        self(self, without, chosen, size);
    };
    rec(rec, Bits::first_n(n), Bits{}, 0);
    return {best, best_set};
}

inline int max_independent_set_size(const std::vector<Bits>& adj, int n) {
    return max_independent_set(adj, n).first;
}

// Exact minimum maximal independent set (independent domination), branch and
// bound on the dominators of the most constrained undominated vertex.
// Returns (size, set).
inline std::pair<int, Bits> min_maximal_independent_set(const std::vector<Bits>& adj, int n) {
    if (n == 0) return {0, Bits{}};
    const Bits all = Bits::first_n(n);
    int max_deg = 0;
    for (int v = 0; v < n; ++v)
        max_deg = std::max(max_deg, adj[static_cast<std::size_t>(v)].count());
    // Greedy maximal independent set as the initial incumbent.
    int best = 0;
    Bits best_set;
    {
        Bits avail = all;
        for (int v = avail.first(); v >= 0; v = avail.first()) {
            avail.reset(v);
            avail = avail.andnot(adj[static_cast<std::size_t>(v)]);
            best_set.set(v);
            ++best;
        }
    }
    auto rec = [&](auto&& self, Bits dominated, Bits avail, Bits chosen, int size) -> void {
        Bits undom = all.andnot(dominated);
        if (undom.empty()) {
            if (size < best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        int need = (undom.count() + max_deg) / (max_deg + 1);
        if (size + need >= best) return;
        // Undominated vertex with the fewest dominator options.
        int v = -1;
        int v_opts = n + 1;
        undom.for_each([&](int u) {
            Bits closed = adj[static_cast<std::size_t>(u)];
            closed.set(u);
            int c = (closed & avail).count();
            if (c < v_opts) {
                v_opts = c;
                v = u;
            }
        });
        if (v_opts == 0) return;  // v can never be dominated
        Bits closed_v = adj[static_cast<std::size_t>(v)];
        closed_v.set(v);
        Bits options = closed_v & avail;
        options.for_each([&](int u) {
            Bits closed_u = adj[static_cast<std::size_t>(u)];
            closed_u.set(u);
            Bits chosen_u = chosen;
            chosen_u.set(u);
            self(self, dominated | closed_u, avail.andnot(closed_u), chosen_u, size + 1);
            avail.reset(u);  // later branches exclude u from the set
        });
    };
    rec(rec, Bits{}, all, Bits{}, 0);
    return {best, best_set};
}

inline int min_maximal_independent_set_size(const std::vector<Bits>& adj, int n) {
    return min_maximal_independent_set(adj, n).first;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The open neighborhood graph: same vertex set, u ~ v iff u != v and u, v
// have a common neighbor in g.
// ---------------------------------------------------------------------------
inline Graph build_ong(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int w = 0; w < g.order(); ++w) {
        auto nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) edges.emplace_back(nb[i], nb[j]);
    }
    return Graph(g.order(), edges);
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    validate_set(g, s);
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && s.contains(w)) return false;
    return true;
}

// Every maximal independent set exactly once, deterministic order. The
// callback returns false to stop early; returns false iff stopped.
template <class Cb>
bool enumerate_maximal_independent_sets(const Graph& g, const EnumOptions& opts, Cb&& cb) {
    detail::check_enum_cap(g, opts);
    return detail::for_each_mis_bits(
        g, [&](const detail::Bits& b) { return cb(detail::to_vertex_set(b)); });
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                       const EnumOptions& opts = {}) {
    std::vector<VertexSet> out;
    enumerate_maximal_independent_sets(g, opts, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

struct IndependenceReport {
    int alpha = 0;
    int i_dom = 0;
    bool well_covered = true;
    std::vector<int> mis_spectrum;   // sorted distinct sizes of maximal independent sets
    bool spectrum_complete = true;   // false when only the extremes are exact
    std::optional<std::uint64_t> count;  // number of maximal independent sets, if enumerated
};

inline IndependenceReport independence_report(const Graph& g, const EnumOptions& opts = {}) {
    detail::check_enum_cap(g, opts);
    std::vector<char> size_seen(static_cast<std::size_t>(g.order()) + 1, 0);
    std::uint64_t count = 0;
    bool complete = detail::for_each_mis_bits(g, [&](const detail::Bits& b) {
        size_seen[static_cast<std::size_t>(b.count())] = 1;
        return ++count <= opts.set_cap;
    });

    IndependenceReport rep;
    if (complete) {
        for (int s = 0; s <= g.order(); ++s)
            if (size_seen[static_cast<std::size_t>(s)]) rep.mis_spectrum.push_back(s);
        rep.count = count;
    } else {
        auto adj = detail::adjacency_bits(g);
        int alpha = detail::max_independent_set_size(adj, g.order());
        int idom = detail::min_maximal_independent_set_size(adj, g.order());
        rep.mis_spectrum.push_back(idom);
        if (alpha != idom) rep.mis_spectrum.push_back(alpha);
        rep.spectrum_complete = false;
    }
    rep.i_dom = rep.mis_spectrum.front();
    rep.alpha = rep.mis_spectrum.back();
    rep.well_covered = rep.i_dom == rep.alpha;
    return rep;
}

inline bool in_U_via_ong(const Graph& g, const EnumOptions& opts = {}) {
    return independence_report(build_ong(g), opts).well_covered;
}

// ---------------------------------------------------------------------------
// Small-structure classification of the ONG's components.
// ---------------------------------------------------------------------------
enum class ShapeKind { Path, Cycle, Other };

inline std::string to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::Path: return "path";
        case ShapeKind::Cycle: return "cycle";
        default: return "other";
    }
}

struct ComponentShape {
    ShapeKind kind = ShapeKind::Other;
    int order = 0;
    friend bool operator==(const ComponentShape&, const ComponentShape&) = default;
};

struct OngStructure {
    std::vector<ComponentShape> components;  // ordered by smallest component member
};

// A component is a path iff connected, acyclic and max degree <= 2 (K1 is a
// path of order 1, K2 of order 2); a cycle iff connected and 2-regular.
inline ComponentShape classify_component_shape(const Graph& comp) {
    ComponentShape shape{ShapeKind::Other, comp.order()};
    if (comp.size() == comp.order() - 1 && comp.max_degree() <= 2)
        shape.kind = ShapeKind::Path;
    else if (comp.size() == comp.order() && comp.min_degree() == 2 && comp.max_degree() == 2)
        shape.kind = ShapeKind::Cycle;
    return shape;
}

inline OngStructure ong_structure_check(const Graph& g) {
    Graph ong = build_ong(g);
    OngStructure out;
    for (const VertexSet& comp : components(ong))
        out.components.push_back(classify_component_shape(induced_subgraph(ong, comp).graph));
    return out;
}

}  // namespace openpack
