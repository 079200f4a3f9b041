#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "openpack/classifier.hpp"
#include "openpack/graph.hpp"

namespace openpack {

// Small deterministic generator (splitmix64) so seeded constructions are
// reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw from [0, bound); bound >= 1.
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    int between(int lo, int hi) { return lo + below(hi - lo + 1); }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Basic families.
// ---------------------------------------------------------------------------

inline Graph gen_path(int n) {
    if (n < 1) throw RangeError("path order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw RangeError("cycle order must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

// Tree of order 4n+2: two adjacent centers 0 and 1; center 0 carries the
// subdivided pendant paths 0-(2+2i)-(3+2i), center 1 the paths
// 1-(2+2n+2i)-(3+2n+2i), for i in 0..n-1.
inline Graph gen_T(int n) {
    if (n < 1) throw RangeError("T_n requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, 1);
    for (int i = 0; i < n; ++i) {
        int mid = 2 + 2 * i;
        edges.emplace_back(0, mid);
        edges.emplace_back(mid, mid + 1);
        int mid2 = 2 + 2 * n + 2 * i;
        edges.emplace_back(1, mid2);
        edges.emplace_back(mid2, mid2 + 1);
    }
    return Graph(4 * n + 2, edges);
}

// Attach a pendant path v-(a)-(b)-(c) to every vertex of h; the host keeps
// its indices (identity embedding), vertex i's path occupying
// n+3i, n+3i+1, n+3i+2. Every maximal open packing of the result has
// cardinality 2|V(h)|.
struct Embedding {
    Graph graph;
    std::vector<int> map;  // host vertex -> image vertex
};

inline Embedding embed_in_U(const Graph& h) {
    const int n = h.order();
    if (n == 0) throw RangeError("embed_in_U requires a nonempty graph");
    std::vector<std::pair<int, int>> edges = h.edges();
    for (int i = 0; i < n; ++i) {
        int a = n + 3 * i;
        edges.emplace_back(i, a);
        edges.emplace_back(a, a + 1);
        edges.emplace_back(a + 1, a + 2);
    }
    Embedding out;
    out.graph = Graph(4 * n, edges);
    out.map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.map[static_cast<std::size_t>(i)] = i;
    return out;
}

// Order 6k+2: hubs x=0 and y=1 joined by k internally disjoint paths
// x-a_j-b_j-c_j-d_j-e_j-f_j-y, block j occupying 2+6j .. 7+6j.
inline Graph gen_Gk(int k) {
    if (k < 1) throw RangeError("G_k requires k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < k; ++j) {
        int a = 2 + 6 * j;
        edges.emplace_back(0, a);
        for (int t = 0; t < 5; ++t) edges.emplace_back(a + t, a + t + 1);
        edges.emplace_back(a + 5, 1);
    }
    return Graph(6 * k + 2, edges);
}

// ---------------------------------------------------------------------------
// Double-star construction of trees with one size of maximal open packings.
// ---------------------------------------------------------------------------

enum class StarRule { One, Two };

// A collection of double stars (supports u_k ~ v_k with pendant leaves on
// each) plus link edges between distinguished ("special") leaves.
//   rule One: at least one (possibly all) u-leaves special, no v-leaf special.
//   rule Two: on both sides at least one but not all leaves special.
// Every special leaf must meet at least one link, and the links must make the
// whole construction a tree.
struct DoubleStarSpec {
    struct Star {
        int leaves_u = 1;
        int leaves_v = 1;
        StarRule rule = StarRule::One;
        std::vector<int> special_u;  // leaf indices in 0..leaves_u-1
        std::vector<int> special_v;  // leaf indices in 0..leaves_v-1
    };
    enum class Side { U, V };
    struct LeafRef {
        int star = 0;
        Side side = Side::U;
        int leaf = 0;
    };
    std::vector<Star> stars;
    std::vector<std::pair<LeafRef, LeafRef>> links;
};

struct FTree {
    Graph tree;
    FPartition partition;
};

namespace detail {

// star k occupies [base, base + 2 + leaves_u + leaves_v):
//   u = base, v = base+1, u-leaf i = base+2+i, v-leaf i = base+2+leaves_u+i.
inline std::vector<int> star_bases(const DoubleStarSpec& spec) {
    std::vector<int> bases;
    int base = 0;
    for (const auto& st : spec.stars) {
        bases.push_back(base);
        base += 2 + st.leaves_u + st.leaves_v;
    }
    bases.push_back(base);  // sentinel: total order
    return bases;
}

inline int leaf_vertex(const DoubleStarSpec& spec, const std::vector<int>& bases,
                       const DoubleStarSpec::LeafRef& ref) {
    if (ref.star < 0 || ref.star >= static_cast<int>(spec.stars.size()))
        throw SpecError("link references star " + std::to_string(ref.star) +
                        " which does not exist");
    const auto& st = spec.stars[static_cast<std::size_t>(ref.star)];
    int count = ref.side == DoubleStarSpec::Side::U ? st.leaves_u : st.leaves_v;
    if (ref.leaf < 0 || ref.leaf >= count)
        throw SpecError("link references leaf " + std::to_string(ref.leaf) +
                        " outside star " + std::to_string(ref.star));
    const auto& specials =
        ref.side == DoubleStarSpec::Side::U ? st.special_u : st.special_v;
    if (std::find(specials.begin(), specials.end(), ref.leaf) == specials.end())
        throw SpecError("link endpoint is not a special leaf (star " +
                        std::to_string(ref.star) + ")");
    int base = bases[static_cast<std::size_t>(ref.star)];
    int offset = ref.side == DoubleStarSpec::Side::U ? 2 + ref.leaf : 2 + st.leaves_u + ref.leaf;
    return base + offset;
}

}  // namespace detail

inline FTree gen_F_tree(const DoubleStarSpec& spec) {
    if (spec.stars.empty()) throw SpecError("spec needs at least one double star");
    auto check_specials = [](const std::vector<int>& specials, int count, bool proper,
                             const std::string& what) {
        if (specials.empty()) throw SpecError(what + ": at least one special leaf required");
        std::vector<int> sorted = specials;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw SpecError(what + ": duplicate special leaf");
        if (sorted.front() < 0 || sorted.back() >= count)
            throw SpecError(what + ": special leaf index out of range");
        if (proper && static_cast<int>(sorted.size()) == count)
            throw SpecError(what + ": rule two forbids labeling all leaves special");
    };
    for (std::size_t k = 0; k < spec.stars.size(); ++k) {
        const auto& st = spec.stars[k];
        std::string tag = "star " + std::to_string(k);
        if (st.leaves_u < 1 || st.leaves_v < 1)
            throw SpecError(tag + ": each support needs at least one leaf");
        if (st.rule == StarRule::One) {
            check_specials(st.special_u, st.leaves_u, false, tag + " (u side)");
            if (!st.special_v.empty())
                throw SpecError(tag + ": rule one labels only u-side leaves");
        } else {
            check_specials(st.special_u, st.leaves_u, true, tag + " (u side)");
            check_specials(st.special_v, st.leaves_v, true, tag + " (v side)");
        }
    }

    auto bases = detail::star_bases(spec);
    int total = bases.back();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < spec.stars.size(); ++k) {
        const auto& st = spec.stars[k];
        int base = bases[k];
        edges.emplace_back(base, base + 1);
        for (int i = 0; i < st.leaves_u; ++i) edges.emplace_back(base, base + 2 + i);
        for (int i = 0; i < st.leaves_v; ++i)
            edges.emplace_back(base + 1, base + 2 + st.leaves_u + i);
    }
    std::vector<int> link_degree(static_cast<std::size_t>(total), 0);
    for (const auto& [a, b] : spec.links) {
        int va = detail::leaf_vertex(spec, bases, a);
        int vb = detail::leaf_vertex(spec, bases, b);
        if (va == vb) throw SpecError("link joins a special leaf to itself");
        edges.emplace_back(va, vb);
        ++link_degree[static_cast<std::size_t>(va)];
        ++link_degree[static_cast<std::size_t>(vb)];
    }
    for (std::size_t k = 0; k < spec.stars.size(); ++k) {
        const auto& st = spec.stars[k];
        for (int i : st.special_u)
            if (link_degree[static_cast<std::size_t>(bases[k] + 2 + i)] == 0)
                throw SpecError("star " + std::to_string(k) +
                                ": special u-leaf " + std::to_string(i) + " has no link");
        for (int i : st.special_v)
            if (link_degree[static_cast<std::size_t>(bases[k] + 2 + st.leaves_u + i)] == 0)
                throw SpecError("star " + std::to_string(k) +
                                ": special v-leaf " + std::to_string(i) + " has no link");
    }

    Graph tree(total, edges);
    if (!is_tree(tree))
        throw SpecError("links must join the stars into a connected acyclic graph");

    // Assemble the partition. Stars treated by rule one with every u-leaf
    // special contribute v to s1, u to d11 and the u-leaves to d2; all other
    // stars contribute both supports to s2 and their special leaves to d12.
    FPartition part;
    part.leaves = leaves(tree);
    for (std::size_t k = 0; k < spec.stars.size(); ++k) {
        const auto& st = spec.stars[k];
        int u = bases[k];
        int v = bases[k] + 1;
        bool all_u_special =
            st.rule == StarRule::One && static_cast<int>(st.special_u.size()) == st.leaves_u;
        if (all_u_special) {
            part.s1.insert(v);
            part.d11.insert(u);
            for (int i : st.special_u) part.d2.insert(u + 2 + i);
        } else {
            part.s2.insert(u);
            part.s2.insert(v);
            for (int i : st.special_u) part.d12.insert(u + 2 + i);
            for (int i : st.special_v) part.d12.insert(u + 2 + st.leaves_u + i);
        }
    }

    FamilyCheck fc = recognize_family(tree);
    if (!fc.accepted || !(fc.partition == part))
        throw Error("internal: double-star construction does not satisfy the family conditions");
    return {std::move(tree), std::move(part)};
}

// Seeded generator of valid specifications: a random spanning tree over
// `stars` double stars, each link routed through special leaves chosen to
// satisfy the rule constraints. stars >= 2 because a single star cannot link
// its specials without creating a cycle.
inline DoubleStarSpec random_double_star_spec(int stars, Rng& rng) {
    if (stars < 2) throw RangeError("random spec needs at least two stars");
    DoubleStarSpec spec;
    spec.stars.resize(static_cast<std::size_t>(stars));

    // Random labeled tree on the stars.
    std::vector<std::pair<int, int>> star_edges;
    if (stars == 2) {
        star_edges.emplace_back(0, 1);
    } else {
        std::vector<int> seq(static_cast<std::size_t>(stars - 2));
        for (int& x : seq) x = rng.below(stars);
        std::vector<int> deg(static_cast<std::size_t>(stars), 1);
        for (int x : seq) ++deg[static_cast<std::size_t>(x)];
        std::vector<char> used(static_cast<std::size_t>(stars), 0);
        int ptr = 0;
        while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
        int leaf = ptr;
        for (int x : seq) {
            star_edges.emplace_back(leaf, x);
            if (--deg[static_cast<std::size_t>(x)] == 1 && x < ptr) {
                leaf = x;
            } else {
                ++ptr;
                while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
                leaf = ptr;
            }
        }
        star_edges.emplace_back(leaf, stars - 1);
    }

    std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(stars));
    for (std::size_t e = 0; e < star_edges.size(); ++e) {
        incident[static_cast<std::size_t>(star_edges[e].first)].push_back(e);
        incident[static_cast<std::size_t>(star_edges[e].second)].push_back(e);
    }

    // Per star: pick sizes, rule and specials, then route its incident links
    // through them (each special used at least once).
    std::vector<std::pair<DoubleStarSpec::LeafRef, DoubleStarSpec::LeafRef>> links(
        star_edges.size());
    for (int k = 0; k < stars; ++k) {
        auto& st = spec.stars[static_cast<std::size_t>(k)];
        int d = static_cast<int>(incident[static_cast<std::size_t>(k)].size());
        st.leaves_u = rng.between(1, 4);
        st.leaves_v = rng.between(1, 4);
        bool can_two = d >= 2 && st.leaves_u >= 2 && st.leaves_v >= 2;
        st.rule = can_two && rng.coin() ? StarRule::Two : StarRule::One;

        std::vector<DoubleStarSpec::LeafRef> slots;  // one entry per incident link
        if (st.rule == StarRule::Two) {
            int su = rng.between(1, std::min(st.leaves_u - 1, d - 1));
            int sv = rng.between(1, std::min(st.leaves_v - 1, d - su));
            for (int i = 0; i < su; ++i) st.special_u.push_back(i);
            for (int i = 0; i < sv; ++i) st.special_v.push_back(i);
            for (int i = 0; i < su; ++i)
                slots.push_back({k, DoubleStarSpec::Side::U, i});
            for (int i = 0; i < sv; ++i)
                slots.push_back({k, DoubleStarSpec::Side::V, i});
            while (static_cast<int>(slots.size()) < d) {
                bool u_side = rng.coin();
                int idx = u_side ? st.special_u[static_cast<std::size_t>(rng.below(su))]
                                 : st.special_v[static_cast<std::size_t>(rng.below(sv))];
                slots.push_back({k, u_side ? DoubleStarSpec::Side::U : DoubleStarSpec::Side::V,
                                 idx});
            }
        } else {
            // Bias toward the all-special case so both partition shapes occur.
            int max_specials = std::min(st.leaves_u, d);
            int su = rng.coin() ? max_specials : rng.between(1, max_specials);
            for (int i = 0; i < su; ++i) st.special_u.push_back(i);
            for (int i = 0; i < su; ++i)
                slots.push_back({k, DoubleStarSpec::Side::U, i});
            while (static_cast<int>(slots.size()) < d)
                slots.push_back({k, DoubleStarSpec::Side::U, rng.below(su)});
        }
        // Shuffle slot assignment across this star's links.
        for (int i = d - 1; i > 0; --i) std::swap(slots[static_cast<std::size_t>(i)],
                                                  slots[static_cast<std::size_t>(rng.below(i + 1))]);
        for (int i = 0; i < d; ++i) {
            std::size_t e = incident[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            if (star_edges[e].first == k)
                links[e].first = slots[static_cast<std::size_t>(i)];
            else
                links[e].second = slots[static_cast<std::size_t>(i)];
        }
    }
    spec.links = std::move(links);
    return spec;
}

// ---------------------------------------------------------------------------
// Leaf surgery.
// ---------------------------------------------------------------------------

inline Graph add_leaf(const Graph& g, int support) {
    g.check_vertex(support);
    if (!supports(g).contains(support))
        throw NotASupportError("vertex " + std::to_string(support) + " is not a support");
    std::vector<std::pair<int, int>> edges = g.edges();
    edges.emplace_back(support, g.order());
    return Graph(g.order() + 1, edges);
}

// Removes the smallest-index leaf attached to a strong support; remaining
// vertices are renumbered downward past the gap.
inline Graph remove_extra_leaf(const Graph& g, int support) {
    g.check_vertex(support);
    if (!strong_supports(g).contains(support))
        throw NotAStrongSupportError("vertex " + std::to_string(support) +
                                     " is not a strong support");
    int drop = -1;
    for (int w : g.neighbors(support))
        if (g.degree(w) == 1) {
            drop = w;
            break;
        }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        if (u == drop || v == drop) continue;
        edges.emplace_back(u > drop ? u - 1 : u, v > drop ? v - 1 : v);
    }
    return Graph(g.order() - 1, edges);
}

// ---------------------------------------------------------------------------
// Labeled trees.
// ---------------------------------------------------------------------------

// Decode a Pruefer sequence into the labeled tree on seq.size()+2 vertices.
inline Graph tree_from_pruefer(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    for (int x : seq)
        if (x < 0 || x >= n) throw RangeError("Pruefer entry out of range");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<std::size_t>(x)];
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.emplace_back(leaf, x);
        if (--deg[static_cast<std::size_t>(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph(n, edges);
}

inline Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw RangeError("tree order must be at least 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& x : seq) x = rng.below(n);
    return tree_from_pruefer(seq);
}

inline constexpr int kLabeledTreeEnumCap = 9;

inline std::uint64_t labeled_tree_count(int n) {
    if (n < 1) throw RangeError("tree order must be at least 1");
    if (n <= 2) return 1;
    std::uint64_t c = 1;
    for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
    return c;
}

// All n^(n-2) labeled trees in Pruefer-sequence order. The callback may
// return false to stop; the function returns false iff stopped.
template <class Cb>
bool enumerate_labeled_trees(int n, Cb&& cb) {
    if (n < 1) throw RangeError("tree order must be at least 1");
    if (n > kLabeledTreeEnumCap)
        throw CapExceededError("labeled tree enumeration capped at order " +
                               std::to_string(kLabeledTreeEnumCap));
    if (n == 1) return cb(Graph(1, {}));
    if (n == 2) return cb(Graph(2, {{0, 1}}));
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    for (;;) {
        if (!cb(tree_from_pruefer(seq))) return false;
        int pos = n - 3;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1)
            seq[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) return true;
        ++seq[static_cast<std::size_t>(pos)];
    }
}

}  // namespace openpack
