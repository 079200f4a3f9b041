#pragma once

// Cross-validation suites: each criterion pits the structural machinery
// against independent definition-level oracles or frozen expectations on a
// fixed, seeded corpus. The CLI `verify` subcommand and the acceptance test
// binary both run these.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "openpack/classifier.hpp"
#include "openpack/generators.hpp"
#include "openpack/graph.hpp"
#include "openpack/ong.hpp"
#include "openpack/packing.hpp"

namespace openpack::verify {

// ---------------------------------------------------------------------------
// Definition-level oracles. These deliberately avoid the ONG transform and
// the clique enumeration; they scan all 2^n subsets against the raw
// definitions.
// ---------------------------------------------------------------------------

namespace oracle_detail {

inline std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
    if (g.order() > 20) throw CapExceededError("subset oracle capped at 20 vertices");
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= 1u << w;
    return nbr;
}

inline bool pairwise_disjoint_neighborhoods(const std::vector<std::uint32_t>& nbr,
                                            std::uint32_t mask) {
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        for (std::uint32_t other = rest & (rest - 1); other != 0; other &= other - 1) {
            int w = std::countr_zero(other);
            if ((nbr[static_cast<std::size_t>(v)] & nbr[static_cast<std::size_t>(w)]) != 0)
                return false;
        }
    }
    return true;
}

inline VertexSet from_mask(std::uint32_t mask) {
    std::vector<int> out;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return VertexSet(std::move(out));
}

}  // namespace oracle_detail

// All maximal open packings by scanning every subset.
inline std::vector<VertexSet> naive_maximal_open_packings(const Graph& g) {
    auto nbr = oracle_detail::neighbor_masks(g);
    const int n = g.order();
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!oracle_detail::pairwise_disjoint_neighborhoods(nbr, mask)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (mask & (1u << v)) continue;
            if (oracle_detail::pairwise_disjoint_neighborhoods(nbr, mask | (1u << v)))
                maximal = false;
        }
        if (maximal) out.push_back(oracle_detail::from_mask(mask));
    }
    return out;
}

// All maximal independent sets by scanning every subset.
inline std::vector<VertexSet> naive_maximal_independent_sets(const Graph& g) {
    auto nbr = oracle_detail::neighbor_masks(g);
    const int n = g.order();
    auto independent = [&](std::uint32_t mask) {
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if ((nbr[static_cast<std::size_t>(v)] & mask) != 0) return false;
        }
        return true;
    };
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!independent(mask)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(mask & (1u << v)) && (nbr[static_cast<std::size_t>(v)] & mask) == 0)
                maximal = false;
        if (maximal) out.push_back(oracle_detail::from_mask(mask));
    }
    return out;
}

// Minimum size of a subset whose open neighborhoods cover every vertex.
inline int naive_total_domination_number(const Graph& g) {
    auto nbr = oracle_detail::neighbor_masks(g);
    const int n = g.order();
    if (n == 0) return 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw IsolatedVertexError("isolated vertex " + std::to_string(v));
    int best = n + 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        bool dominates = true;
        for (int v = 0; v < n && dominates; ++v)
            if ((nbr[static_cast<std::size_t>(v)] & mask) == 0) dominates = false;
        if (dominates) best = size;
    }
    return best;
}

// Girth via shortest u-v distance in g minus each edge uv (Floyd-Warshall).
inline Dist naive_girth(const Graph& g) {
    const int n = g.order();
    const long long inf = 1'000'000'000;
    Dist best = Dist::infinite();
    for (auto [eu, ev] : g.edges()) {
        std::vector<std::vector<long long>> d(static_cast<std::size_t>(n),
                                              std::vector<long long>(static_cast<std::size_t>(n), inf));
        for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
        for (auto [u, v] : g.edges()) {
            if (u == eu && v == ev) continue;
            d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
            d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(
                        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                            d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
        if (d[static_cast<std::size_t>(eu)][static_cast<std::size_t>(ev)] < inf)
            best = std::min(best,
                            Dist(1 + d[static_cast<std::size_t>(eu)][static_cast<std::size_t>(ev)]));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Seeded corpora.
// ---------------------------------------------------------------------------

inline Graph random_graph(int n, int edge_percent, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < edge_percent) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Labeled graph from an edge-present bitmask over the C(n,2) pairs in
// lexicographic order.
inline Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1u << bit)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Spider: center 0 with `legs` pendant paths of the given length.
inline Graph spider(int legs, int leg_len) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int a = 0; a < legs; ++a) {
        int prev = 0;
        for (int t = 0; t < leg_len; ++t) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, edges);
}

// Center 0 with one pendant leaf and two pendant paths of length 4: a single
// star support with two internal neighbors (triggers rule R5).
inline Graph double_arm_single_star() {
    return Graph(10, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 6}, {6, 7}, {7, 8}, {8, 9}});
}

// Two branches x-a_i-b_i with doubled supports b_i ~ c_i, all supports double:
// a distance-2 vertex with no single star support at distance 2 (rule R6).
inline Graph no_single_at_distance_two() {
    return Graph(11, {{0, 1},
                      {1, 2},
                      {2, 3},
                      {2, 4},   // leaf of b1
                      {3, 5},   // leaf of c1
                      {0, 6},
                      {6, 7},
                      {7, 8},
                      {7, 9},   // leaf of b2
                      {8, 10}});  // leaf of c2
}

namespace corpus {

inline constexpr std::uint64_t kSeedC4 = 0x0C400000;
inline constexpr std::uint64_t kSeedC6 = 0x0C600000;
inline constexpr std::uint64_t kSeedC7 = 0x0C700000;
inline constexpr std::uint64_t kSeedC8 = 0x0C800000;
inline constexpr std::uint64_t kSeedC8Leaf = 0x0C810000;
inline constexpr std::uint64_t kSeedC10 = 0x0CA00000;

inline Graph c4_random(int i) {
    Rng rng(kSeedC4 + static_cast<std::uint64_t>(i));
    int n = rng.between(1, 10);
    int percent = rng.between(5, 60);
    return random_graph(n, percent, rng);
}

inline Graph c6_host(int i) {
    // Three pinned hosts, then seeded random ones.
    if (i == 0) return gen_cycle(3);  // K3
    if (i == 1) return gen_cycle(5);
    if (i == 2) return gen_path(4);
    Rng rng(kSeedC6 + static_cast<std::uint64_t>(i));
    int n = rng.between(1, 5);
    int percent = rng.between(20, 80);
    return random_graph(n, percent, rng);
}

inline Graph c7_random_tree(int i) {
    int n = 10 + i % 7;  // 10..16
    return gen_random_tree(n, kSeedC7 + static_cast<std::uint64_t>(i));
}

inline FTree c8_instance(int i) {
    Rng rng(kSeedC8 + static_cast<std::uint64_t>(i));
    int stars = rng.between(2, 6);
    return gen_F_tree(random_double_star_spec(stars, rng));
}

// F-tree plus one to three extra leaves at random supports.
inline std::pair<Graph, int> c8_leaf_instance(int i) {
    Rng rng(kSeedC8Leaf + static_cast<std::uint64_t>(i));
    int stars = rng.between(2, 5);
    FTree ft = gen_F_tree(random_double_star_spec(stars, rng));
    int predicted = expected_spectrum_value(ft.partition);
    Graph g = ft.tree;
    int extra = rng.between(1, 3);
    for (int t = 0; t < extra; ++t) {
        VertexSet sup = supports(g);
        const auto& vals = sup.values();
        g = add_leaf(g, vals[static_cast<std::size_t>(rng.below(sup.size()))]);
    }
    return {std::move(g), predicted};
}

inline Graph c10_random(int i) {
    Rng rng(kSeedC10 + static_cast<std::uint64_t>(i));
    int n = rng.between(4, 14);
    int percent = rng.between(8, 50);
    return random_graph(n, percent, rng);
}

// Targeted constructions triggering each diagnostic rule.
inline std::vector<Graph> c10_constructions() {
    std::vector<Graph> out;
    for (int legs = 2; legs <= 5; ++legs) out.push_back(spider(legs, 2));  // R1
    for (int n = 15; n <= 20; ++n) out.push_back(gen_cycle(n));            // R2
    for (int legs = 2; legs <= 3; ++legs) out.push_back(spider(legs, 4));  // R3
    out.push_back(gen_path(7));                                            // R4, R6
    out.push_back(double_arm_single_star());                               // R5
    out.push_back(no_single_at_distance_two());                            // R6
    // Small components exercise the per-component structural fallback.
    out.push_back(disjoint_union(Graph(2, {{0, 1}}), Graph(2, {{0, 1}})));
    out.push_back(disjoint_union(gen_path(4), Graph(1, {})));
    for (int i = 0; i < 30; ++i)
        out.push_back(gen_random_tree(5 + i % 12, kSeedC10 + 0x1000 + static_cast<std::uint64_t>(i)));
    return out;
}

}  // namespace corpus

// Streams every graph instance of a criterion's corpus (generation only, no
// checks). Criterion 11 sweeps these.
template <class Cb>
void for_each_instance(int id, Cb&& cb) {
    switch (id) {
        case 1:
            for (int n = 1; n <= 16; ++n) cb(gen_path(n));
            break;
        case 2:
            for (int n = 3; n <= 20; ++n) cb(gen_cycle(n));
            break;
        case 3:
            for (int n = 1; n <= 5; ++n) cb(gen_T(n));
            break;
        case 4:
            for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) cb(graph_from_mask(4, mask));
            for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) cb(graph_from_mask(5, mask));
            for (int i = 0; i < 500; ++i) cb(corpus::c4_random(i));
            break;
        case 5:
            cb(gen_path(1));
            for (int n = 1; n <= 15; ++n) {
                cb(gen_path(2 * n));
                cb(gen_path(2 * n + 1));
            }
            for (int n = 3; n <= 30; ++n) cb(gen_cycle(n));
            break;
        case 6:
            for (int i = 0; i < 25; ++i) {
                Graph h = corpus::c6_host(i);
                cb(h);
                cb(embed_in_U(h).graph);
            }
            break;
        case 7:
            for (int n = 3; n <= 9; ++n)
                enumerate_labeled_trees(n, [&](const Graph& t) {
                    cb(t);
                    return true;
                });
            for (int i = 0; i < 2000; ++i) cb(corpus::c7_random_tree(i));
            break;
        case 8:
            for (int i = 0; i < 200; ++i) cb(corpus::c8_instance(i).tree);
            for (int i = 0; i < 50; ++i) cb(corpus::c8_leaf_instance(i).first);
            break;
        case 9:
            for (int k = 2; k <= 5; ++k) cb(gen_Gk(k));
            break;
        case 10:
            for (int i = 0; i < 300; ++i) cb(corpus::c10_random(i));
            for (const Graph& g : corpus::c10_constructions()) cb(g);
            break;
        default:
            throw RangeError("no instance corpus for criterion " + std::to_string(id));
    }
}

// ---------------------------------------------------------------------------
// Criterion driver.
// ---------------------------------------------------------------------------

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::uint64_t instances = 0;
    std::string detail;  // first failure, or a short summary
    double seconds = 0.0;
};

namespace run_detail {

struct Check {
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void fail(const std::string& msg) {
        if (failures++ == 0) first_failure = msg;
    }

    bool expect(bool ok, const std::string& msg) {
        ++instances;
        if (!ok) fail(msg);
        return ok;
    }
};

inline std::string fmt_spectrum(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[static_cast<std::size_t>(i)]);
    }
    return out + "}";
}

inline std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<std::pair<int, int>> shape_multiset(const OngStructure& s) {
    std::vector<std::pair<int, int>> out;
    for (const ComponentShape& c : s.components)
        out.emplace_back(static_cast<int>(c.kind), c.order);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<int, int>> shapes(std::initializer_list<ComponentShape> cs) {
    std::vector<std::pair<int, int>> out;
    for (const ComponentShape& c : cs) out.emplace_back(static_cast<int>(c.kind), c.order);
    std::sort(out.begin(), out.end());
    return out;
}

// --- criterion 1: P_n uniform exactly for n in {1,2,3,4,8} ---
inline void run_c1(Check& c) {
    for (int n = 1; n <= 16; ++n) {
        bool expected = n == 1 || n == 2 || n == 3 || n == 4 || n == 8;
        Diagnosis d = decide_U(gen_path(n), DecisionMode::Brute);
        c.expect(d.verdict == (expected ? Verdict::InU : Verdict::NotInU),
                 "P_" + std::to_string(n) + ": expected " +
                     std::string(expected ? "IN_U" : "NOT_IN_U") + ", got " +
                     to_string(d.verdict));
    }
}

// --- criterion 2: C_n uniform exactly for n in {3,4,5,6,7,8,10,14} ---
inline void run_c2(Check& c) {
    for (int n = 3; n <= 20; ++n) {
        bool expected =
            n == 3 || n == 4 || n == 5 || n == 6 || n == 7 || n == 8 || n == 10 || n == 14;
        Diagnosis d = decide_U(gen_cycle(n), DecisionMode::Brute);
        c.expect(d.verdict == (expected ? Verdict::InU : Verdict::NotInU),
                 "C_" + std::to_string(n) + ": expected " +
                     std::string(expected ? "IN_U" : "NOT_IN_U") + ", got " +
                     to_string(d.verdict));
    }
}

// --- criterion 3: T_n extremes 2 and 2n+2 ---
inline void run_c3(Check& c) {
    for (int n = 1; n <= 5; ++n) {
        PackingReport rep = packing_report(gen_T(n));
        c.expect(rep.rho_open_lower == 2 && rep.rho_open == 2 * n + 2,
                 "T_" + std::to_string(n) + ": extremes (" + std::to_string(rep.rho_open_lower) +
                     ", " + std::to_string(rep.rho_open) + "), expected (2, " +
                     std::to_string(2 * n + 2) + ")");
    }
}

// --- criterion 4: transform equivalence against the subset oracle ---
inline void run_c4(Check& c) {
    auto check_graph = [&](const Graph& g, const std::string& tag) {
        auto oracle_pack = sorted(naive_maximal_open_packings(g));
        auto lib_pack = sorted(maximal_open_packings(g));
        auto oracle_mis = sorted(naive_maximal_independent_sets(build_ong(g)));
        c.expect(oracle_pack == lib_pack && oracle_pack == oracle_mis,
                 tag + ": packing/MIS families disagree");
    };
    for (std::uint32_t mask = 0; mask < (1u << 6); ++mask)
        check_graph(graph_from_mask(4, mask), "n=4 mask=" + std::to_string(mask));
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask)
        check_graph(graph_from_mask(5, mask), "n=5 mask=" + std::to_string(mask));
    for (int i = 0; i < 500; ++i)
        check_graph(corpus::c4_random(i), "random #" + std::to_string(i));
}

// --- criterion 5: ONG closed forms for paths and cycles ---
inline void run_c5(Check& c) {
    using K = ShapeKind;
    auto check = [&](const Graph& g, std::vector<std::pair<int, int>> want,
                     const std::string& tag) {
        c.expect(shape_multiset(ong_structure_check(g)) == want, tag + ": ONG shape mismatch");
    };
    check(gen_path(1), shapes({{K::Path, 1}}), "P_1");
    check(gen_path(2), shapes({{K::Path, 1}, {K::Path, 1}}), "P_2");
    check(gen_path(3), shapes({{K::Path, 1}, {K::Path, 2}}), "P_3");
    check(gen_path(4), shapes({{K::Path, 2}, {K::Path, 2}}), "P_4");
    check(gen_path(5), shapes({{K::Path, 2}, {K::Path, 3}}), "P_5");
    check(gen_cycle(3), shapes({{K::Cycle, 3}}), "C_3");
    check(gen_cycle(4), shapes({{K::Path, 2}, {K::Path, 2}}), "C_4");
    for (int n = 3; n <= 15; ++n) {
        check(gen_path(2 * n), shapes({{K::Path, n}, {K::Path, n}}),
              "P_" + std::to_string(2 * n));
        check(gen_path(2 * n + 1), shapes({{K::Path, n}, {K::Path, n + 1}}),
              "P_" + std::to_string(2 * n + 1));
        check(gen_cycle(2 * n), shapes({{K::Cycle, n}, {K::Cycle, n}}),
              "C_" + std::to_string(2 * n));
        check(gen_cycle(2 * n - 1), shapes({{K::Cycle, 2 * n - 1}}),
              "C_" + std::to_string(2 * n - 1));
    }
}

// --- criterion 6: embedding spectrum and induced-subgraph property ---
inline void run_c6(Check& c) {
    for (int i = 0; i < 25; ++i) {
        Graph h = corpus::c6_host(i);
        Embedding emb = embed_in_U(h);
        std::string tag = "host #" + std::to_string(i);
        bool induced = true;
        for (int u = 0; u < h.order() && induced; ++u)
            for (int v = u + 1; v < h.order() && induced; ++v)
                if (h.adjacent(u, v) !=
                    emb.graph.adjacent(emb.map[static_cast<std::size_t>(u)],
                                       emb.map[static_cast<std::size_t>(v)]))
                    induced = false;
        PackingReport rep = packing_report(emb.graph);
        std::vector<int> want{2 * h.order()};
        c.expect(induced && rep.spectrum == want,
                 tag + ": spectrum " + fmt_spectrum(rep.spectrum) + ", expected " +
                     fmt_spectrum(want) + (induced ? "" : " (embedding not induced)"));
    }
}

// --- criterion 7: family recognition == brute force on trees ---
inline void run_c7(Check& c) {
    auto check_tree = [&](const Graph& t, const std::string& tag) {
        FamilyCheck fc = recognize_family(t);
        bool brute = in_U_bruteforce(t);
        ++c.instances;
        if (fc.accepted != brute) {
            c.fail(tag + ": recognize_family " + (fc.accepted ? "accepts" : "rejects") +
                   " but brute force says " + (brute ? "uniform" : "non-uniform"));
            return;
        }
        if (fc.accepted) {
            PackingReport rep = packing_report(t);
            std::vector<int> want{expected_spectrum_value(fc.partition)};
            if (rep.spectrum != want)
                c.fail(tag + ": spectrum " + fmt_spectrum(rep.spectrum) + ", predicted " +
                       fmt_spectrum(want));
        }
    };
    for (int n = 3; n <= 9; ++n) {
        std::uint64_t idx = 0;
        enumerate_labeled_trees(n, [&](const Graph& t) {
            check_tree(t, "tree n=" + std::to_string(n) + " #" + std::to_string(idx));
            ++idx;
            return true;
        });
    }
    for (int i = 0; i < 2000; ++i)
        check_tree(corpus::c7_random_tree(i), "random tree #" + std::to_string(i));
}

// --- criterion 8: family sufficiency regardless of girth ---
inline void run_c8(Check& c) {
    for (int i = 0; i < 200; ++i) {
        FTree ft = corpus::c8_instance(i);
        PackingReport rep = packing_report(ft.tree);
        std::vector<int> want{expected_spectrum_value(ft.partition)};
        c.expect(rep.spectrum == want, "construction #" + std::to_string(i) + ": spectrum " +
                                           fmt_spectrum(rep.spectrum) + ", predicted " +
                                           fmt_spectrum(want));
    }
    for (int i = 0; i < 50; ++i) {
        auto [g, predicted] = corpus::c8_leaf_instance(i);
        FamilyCheck fc = recognize_family(g);
        PackingReport rep = packing_report(g);
        std::vector<int> want{predicted};
        bool ok = fc.accepted && expected_spectrum_value(fc.partition) == predicted &&
                  rep.spectrum == want;
        c.expect(ok, "leaf-extended #" + std::to_string(i) + ": spectrum " +
                         fmt_spectrum(rep.spectrum) + ", predicted " + fmt_spectrum(want));
    }
}

// --- criterion 9: the girth-14 family ---
inline void run_c9(Check& c) {
    for (int k = 2; k <= 5; ++k) {
        Graph g = gen_Gk(k);
        std::string tag = "G_" + std::to_string(k);
        PackingReport rep = packing_report(g);
        std::vector<int> want{2 * (k + 1)};
        bool ok = girth(g) == Dist(14) && in_U_via_ong(g) && rep.spectrum == want;
        c.expect(ok, tag + ": girth " + girth(g).str() + ", spectrum " +
                         fmt_spectrum(rep.spectrum) + ", expected girth 14 and " +
                         fmt_spectrum(want));
    }
}

// --- criterion 10: diagnostic soundness ---
inline void run_c10(Check& c) {
    auto check_graph = [&](const Graph& g, const std::string& tag) {
        Diagnosis d = diagnose(g);
        ++c.instances;
        if (d.verdict != Verdict::NotInU) return;  // soundness concerns negatives only
        if (d.reasons.empty()) {
            c.fail(tag + ": NOT_IN_U without a reason");
            return;
        }
        if (in_U_bruteforce(g))
            c.fail(tag + ": ruled NOT_IN_U (" + d.reasons.front().rule +
                   ") but brute force finds one size");
    };
    for (int i = 0; i < 300; ++i) check_graph(corpus::c10_random(i), "random #" + std::to_string(i));
    int j = 0;
    for (const Graph& g : corpus::c10_constructions())
        check_graph(g, "construction #" + std::to_string(j++));
}

// --- criterion 11: bound chain + tree total domination identity ---
inline void run_c11(Check& c) {
    for (int id = 1; id <= 10; ++id) {
        std::uint64_t idx = 0;
        for_each_instance(id, [&](const Graph& g) {
            std::string tag =
                "criterion " + std::to_string(id) + " instance #" + std::to_string(idx++);
            bool counted = false;
            if (g.order() >= 1 && g.min_degree() >= 1 && is_connected(g)) {
                counted = true;
                ++c.instances;
                if (!check_bound_chain(g)) {
                    c.fail(tag + ": bound chain violated");
                    return;
                }
            }
            if (g.order() >= 2 && is_tree(g)) {
                if (!counted) ++c.instances;
                PackingReport rep = packing_report(g);
                int td = total_domination_number(g);
                if (td != rep.rho_open)
                    c.fail(tag + ": total domination " + std::to_string(td) +
                           " != rho_open " + std::to_string(rep.rho_open));
            }
        });
    }
}

}  // namespace run_detail

inline const std::vector<std::pair<int, std::string>>& criteria() {
    static const std::vector<std::pair<int, std::string>> kCriteria = {
        {1, "paths: P_n has one packing size exactly for n in {1,2,3,4,8}"},
        {2, "cycles: C_n has one packing size exactly for n in {3,4,5,6,7,8,10,14}"},
        {3, "t-gap: T_n extremes are 2 and 2n+2"},
        {4, "prop1: packing enumeration matches the subset oracle and the ONG transform"},
        {5, "ong-forms: ONG closed forms for paths and cycles"},
        {6, "embed: embeddings are induced with spectrum {2n}"},
        {7, "theorem1: family recognition equals brute force on trees"},
        {8, "f-sufficiency: constructed trees realize the predicted spectrum"},
        {9, "gk: girth-14 family is uniform with spectrum {2(k+1)}"},
        {10, "lemmas: every NOT_IN_U rule verdict agrees with brute force"},
        {11, "bounds: degree bound chain and tree total domination identity"},
    };
    return kCriteria;
}

inline std::optional<std::vector<int>> suite_ids(std::string_view name) {
    static const std::vector<std::pair<std::string_view, int>> kNames = {
        {"paths", 1},        {"cycles", 2}, {"t-gap", 3},  {"prop1", 4},
        {"ong-forms", 5},    {"embed", 6},  {"theorem1", 7}, {"f-sufficiency", 8},
        {"gk", 9},           {"lemmas", 10}, {"bounds", 11},
    };
    if (name == "all") {
        std::vector<int> ids;
        for (const auto& [id, _] : criteria()) ids.push_back(id);
        return ids;
    }
    for (const auto& [n, id] : kNames)
        if (n == name) return std::vector<int>{id};
    // Bare criterion number.
    int id = 0;
    for (char ch : name) {
        if (ch < '0' || ch > '9') return std::nullopt;
        id = id * 10 + (ch - '0');
    }
    if (id >= 1 && id <= static_cast<int>(criteria().size())) return std::vector<int>{id};
    return std::nullopt;
}

inline CriterionResult run_criterion(int id) {
    run_detail::Check check;
    auto start = std::chrono::steady_clock::now();
    switch (id) {
        case 1: run_detail::run_c1(check); break;
        case 2: run_detail::run_c2(check); break;
        case 3: run_detail::run_c3(check); break;
        case 4: run_detail::run_c4(check); break;
        case 5: run_detail::run_c5(check); break;
        case 6: run_detail::run_c6(check); break;
        case 7: run_detail::run_c7(check); break;
        case 8: run_detail::run_c8(check); break;
        case 9: run_detail::run_c9(check); break;
        case 10: run_detail::run_c10(check); break;
        case 11: run_detail::run_c11(check); break;
        default: throw RangeError("unknown criterion " + std::to_string(id));
    }
    auto stop = std::chrono::steady_clock::now();

    CriterionResult res;
    res.id = id;
    res.name = criteria()[static_cast<std::size_t>(id - 1)].second;
    res.instances = check.instances;
    res.passed = check.failures == 0;
    res.seconds = std::chrono::duration<double>(stop - start).count();
    if (!res.passed)
        res.detail = std::to_string(check.failures) + " failure(s); first: " + check.first_failure;
    return res;
}

inline std::vector<CriterionResult> run_suite(const std::vector<int>& ids, std::ostream* log) {
    std::vector<CriterionResult> out;
    for (int id : ids) {
        CriterionResult res = run_criterion(id);
        if (log) {
            char line[64];
            std::snprintf(line, sizeof line, "%s %2d ", res.passed ? "PASS" : "FAIL", res.id);
            *log << line << res.name << " [" << res.instances << " instances, ";
            std::snprintf(line, sizeof line, "%.2fs]", res.seconds);
            *log << line;
            if (!res.passed) *log << "\n     " << res.detail;
            *log << std::endl;
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace openpack::verify
