#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "openpack/graph.hpp"
#include "openpack/ong.hpp"

namespace openpack {

// p is an open packing iff the open neighborhoods of its members are pairwise
// disjoint; equivalently no vertex of g has two neighbors in p.
inline bool is_open_packing(const Graph& g, const VertexSet& p) {
    validate_set(g, p);
    std::vector<char> hits(static_cast<std::size_t>(g.order()), 0);
    for (int v : p)
        for (int w : g.neighbors(v))
            if (++hits[static_cast<std::size_t>(w)] > 1) return false;
    return true;
}

namespace detail {

// hits[w] = |N(w) & p| for an open packing p; v can join p iff every neighbor
// of v is currently unclaimed.
inline bool packing_can_add(const Graph& g, const std::vector<char>& hits, int v) {
    for (int w : g.neighbors(v))
        if (hits[static_cast<std::size_t>(w)] != 0) return false;
    return true;
}

}  // namespace detail

inline bool is_maximal_open_packing(const Graph& g, const VertexSet& p) {
    validate_set(g, p);
    std::vector<char> hits(static_cast<std::size_t>(g.order()), 0);
    for (int v : p)
        for (int w : g.neighbors(v))
            if (++hits[static_cast<std::size_t>(w)] > 1) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!p.contains(v) && detail::packing_can_add(g, hits, v)) return false;
    return true;
}

// Greedy extension of p to a maximal open packing. Candidates are examined in
// `order` (a permutation of the vertices; ascending indices when empty).
inline VertexSet extend_to_maximal(const Graph& g, const VertexSet& p,
                                   std::span<const int> order = {}) {
    validate_set(g, p);
    if (!order.empty()) {
        if (static_cast<int>(order.size()) != g.order())
            throw RangeError("ordering must list every vertex exactly once");
        std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
        for (int v : order) {
            g.check_vertex(v);
            if (seen[static_cast<std::size_t>(v)]++)
                throw RangeError("ordering repeats vertex " + std::to_string(v));
        }
    }
    std::vector<char> hits(static_cast<std::size_t>(g.order()), 0);
    for (int v : p)
        for (int w : g.neighbors(v))
            if (++hits[static_cast<std::size_t>(w)] > 1)
                throw NotAPackingError("input set is not an open packing");
    VertexSet result = p;
    auto try_add = [&](int v) {
        if (result.contains(v) || !detail::packing_can_add(g, hits, v)) return;
        result.insert(v);
        for (int w : g.neighbors(v)) ++hits[static_cast<std::size_t>(w)];
    };
    if (order.empty()) {
        for (int v = 0; v < g.order(); ++v) try_add(v);
    } else {
        for (int v : order) try_add(v);
    }
    return result;
}

// Maximal open packings of g are exactly the maximal independent sets of its
// open neighborhood graph, so the enumeration delegates to that machinery.
template <class Cb>
bool enumerate_maximal_open_packings(const Graph& g, const EnumOptions& opts, Cb&& cb) {
    detail::check_enum_cap(g, opts);
    return detail::for_each_mis_bits(
        build_ong(g), [&](const detail::Bits& b) { return cb(detail::to_vertex_set(b)); });
}

inline std::vector<VertexSet> maximal_open_packings(const Graph& g, const EnumOptions& opts = {}) {
    std::vector<VertexSet> out;
    enumerate_maximal_open_packings(g, opts, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

struct PackingReport {
    int rho_open_lower = 0;  // smallest cardinality of a maximal open packing
    int rho_open = 0;        // largest cardinality of an open packing
    std::vector<int> spectrum;           // sorted distinct cardinalities attained
    bool spectrum_complete = true;       // false when only the extremes are exact
    std::optional<std::uint64_t> count;  // number of maximal open packings, if enumerated
};

// Full spectrum by enumeration. Past opts.set_cap maximal sets the report
// degrades to exact extremes via branch and bound on the ONG; the spectrum
// then lists only those extremes and is flagged incomplete.
inline PackingReport packing_report(const Graph& g, const EnumOptions& opts = {}) {
    detail::check_enum_cap(g, opts);
    Graph ong = build_ong(g);
    std::vector<char> size_seen(static_cast<std::size_t>(g.order()) + 1, 0);
    std::uint64_t count = 0;
    bool complete = detail::for_each_mis_bits(ong, [&](const detail::Bits& b) {
        size_seen[static_cast<std::size_t>(b.count())] = 1;
        return ++count <= opts.set_cap;
    });

    PackingReport rep;
    if (complete) {
        for (int s = 0; s <= g.order(); ++s)
            if (size_seen[static_cast<std::size_t>(s)]) rep.spectrum.push_back(s);
        rep.count = count;
    } else {
        auto adj = detail::adjacency_bits(ong);
        int lo = detail::min_maximal_independent_set_size(adj, ong.order());
        int hi = detail::max_independent_set_size(adj, ong.order());
        rep.spectrum.push_back(lo);
        if (hi != lo) rep.spectrum.push_back(hi);
        rep.spectrum_complete = false;
    }
    rep.rho_open_lower = rep.spectrum.front();
    rep.rho_open = rep.spectrum.back();
    return rep;
}

// True iff every maximal open packing of g has the same cardinality.
// Enumerates with an early exit on the second distinct size; falls back to
// branch-and-bound extremes when the count cap is hit first.
inline bool in_U_bruteforce(const Graph& g, const EnumOptions& opts = {}) {
    detail::check_enum_cap(g, opts);
    Graph ong = build_ong(g);
    int first_size = -1;
    bool uniform = true;
    std::uint64_t count = 0;
    bool complete = detail::for_each_mis_bits(ong, [&](const detail::Bits& b) {
        int s = b.count();
        if (first_size < 0) first_size = s;
        if (s != first_size) {
            uniform = false;
            return false;
        }
        return ++count <= opts.set_cap;
    });
    if (!uniform) return false;
    if (complete) return true;
    auto adj = detail::adjacency_bits(ong);
    return detail::min_maximal_independent_set_size(adj, ong.order()) ==
           detail::max_independent_set_size(adj, ong.order());
}

// Exact minimum size of a set S such that every vertex of g has a neighbor in
// S. Branch and bound on the dominators of the most constrained vertex.
inline int total_domination_number(const Graph& g, const EnumOptions& opts = {}) {
    detail::check_enum_cap(g, opts);
    const int n = g.order();
    if (n == 0) return 0;
    if (g.min_degree() == 0) {
        int v = 0;
        while (g.degree(v) != 0) ++v;
        throw IsolatedVertexError("vertex " + std::to_string(v) +
                                  " is isolated; no total dominating set exists");
    }
    auto adj = detail::adjacency_bits(g);
    const detail::Bits all = detail::Bits::first_n(n);
    const int max_deg = g.max_degree();
    int best = n;  // S = V(g) totally dominates once min degree >= 1
    auto rec = [&](auto&& self, detail::Bits dominated, detail::Bits excluded, int size) -> void {
        detail::Bits undom = all.andnot(dominated);
        if (undom.empty()) {
            best = std::min(best, size);
            return;
        }
        int need = (undom.count() + max_deg - 1) / max_deg;
        if (size + need >= best) return;
        // Undominated vertex with the fewest usable dominators.
        int v = -1;
        int v_opts = n + 1;
        undom.for_each([&](int u) {
            int c = adj[static_cast<std::size_t>(u)].andnot(excluded).count();
            if (c < v_opts) {
                v_opts = c;
                v = u;
            }
        });
        if (v_opts == 0) return;  // v can never be dominated
        detail::Bits options = adj[static_cast<std::size_t>(v)].andnot(excluded);
        options.for_each([&](int u) {
            self(self, dominated | adj[static_cast<std::size_t>(u)], excluded, size + 1);
            excluded.set(u);  // later branches leave u out of S
        });
    };
    rec(rec, detail::Bits{}, detail::Bits{}, 0);
    return best;
}

// Henning-Slater chain n/(D(D-1)+1) <= rho_lower <= rho <= n/d for connected
// g with minimum degree d >= 1. Compared exactly over the rationals.
inline bool check_bound_chain(const Graph& g, const EnumOptions& opts = {}) {
    if (g.order() == 0 || !is_connected(g))
        throw DisconnectedError("bound chain requires a connected nonempty graph");
    if (g.min_degree() < 1)
        throw IsolatedVertexError("bound chain requires minimum degree at least 1");
    PackingReport rep = packing_report(g, opts);
    long long n = g.order();
    long long dmax = g.max_degree();
    long long dmin = g.min_degree();
    long long denom = dmax * (dmax - 1) + 1;
    if (n > static_cast<long long>(rep.rho_open_lower) * denom) return false;
    if (static_cast<long long>(rep.rho_open) * dmin > n) return false;
    return rep.rho_open_lower <= rep.rho_open;
}

}  // namespace openpack
