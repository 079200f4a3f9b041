#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "openpack/classifier.hpp"
#include "openpack/graph.hpp"
#include "openpack/ong.hpp"
#include "openpack/packing.hpp"

namespace openpack {

// ---------------------------------------------------------------------------
// Edge list documents: header "n m", then m lines "u v" (0-based). Lines that
// are blank or start with '#' are ignored. Serialization writes edges sorted,
// so parse-then-serialize is canonical.
// ---------------------------------------------------------------------------

inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::string, int>> rows;  // payload line + line number
    {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            std::string_view line =
                nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
            ++line_no;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first != std::string_view::npos && line[first] != '#')
                rows.emplace_back(std::string(line), line_no);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }

    if (rows.empty()) throw ParseError("missing header line \"n m\"", 1);
    auto parse_two = [](const std::string& s, int line_no) {
        std::istringstream iss(s);
        long long a = 0, b = 0;
        std::string extra;
        if (!(iss >> a >> b)) throw ParseError("expected two integers", line_no);
        if (iss >> extra) throw ParseError("trailing content \"" + extra + "\"", line_no);
        return std::pair<long long, long long>(a, b);
    };

    auto [n, m] = parse_two(rows[0].first, rows[0].second);
    if (n < 0 || m < 0) throw ParseError("negative count in header", rows[0].second);
    if (static_cast<long long>(rows.size()) - 1 != m)
        throw ParseError("header announces " + std::to_string(m) + " edges but " +
                             std::to_string(rows.size() - 1) + " edge lines follow",
                         rows[0].second);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto [u, v] = parse_two(rows[i].first, rows[i].second);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range [0, " + std::to_string(n) + ")",
                             rows[i].second);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), rows[i].second);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// graph6: the standard printable encoding. Short form for n <= 62, the
// four-byte long form up to n <= 258047.
// ---------------------------------------------------------------------------

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 258047) throw RangeError("graph6 writer supports order at most 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    // Upper triangle column by column: bit (u, v) for v = 1..n-1, u = 0..v-1,
    // packed six bits per byte, most significant first.
    int bit_pos = 5;
    int acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.adjacent(u, v)) acc |= 1 << bit_pos;
            if (--bit_pos < 0) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bit_pos = 5;
            }
        }
    }
    if (bit_pos != 5) out.push_back(static_cast<char>(acc + 63));
    return out;
}

inline Graph parse_graph6(std::string_view line) {
    // Tolerate the conventional prefix and surrounding whitespace.
    constexpr std::string_view kHeader = ">>graph6<<";
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (line.empty()) throw ParseError("empty graph6 string", 1);

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) {
        if (i >= line.size()) throw ParseError("graph6 string truncated", 1);
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", 1);
        return c - 63;
    };

    long long n = 0;
    if (byte(0) == 63 && line[0] == 126) {
        // impossible: 126 maps to 63; handled below
    }
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            throw ParseError("graph6 orders above 258047 are not supported", 1);
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }

    long long pair_bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (line.size() != pos + body)
        throw ParseError("graph6 body has " + std::to_string(line.size() - pos) +
                             " bytes, expected " + std::to_string(body),
                         1);

    std::vector<std::pair<int, int>> edges;
    long long idx = 0;
    int u = 0, v = 1;
    for (std::size_t i = 0; i < body; ++i) {
        int bits = byte(pos + i);
        for (int b = 5; b >= 0; --b, ++idx) {
            if (idx >= pair_bits) {
                if ((bits >> b) & 1) throw ParseError("nonzero padding bits", 1);
                continue;
            }
            if ((bits >> b) & 1) edges.emplace_back(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return Graph(static_cast<int>(n), edges);
}

enum class GraphFormat { EdgeList, Graph6 };

inline Graph parse_graph(std::string_view text, GraphFormat fmt) {
    if (fmt == GraphFormat::EdgeList) return parse_edge_list(text);
    // graph6: the first non-blank, non-comment line.
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') return parse_graph6(line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    throw ParseError("no graph6 line found", 1);
}

inline std::string write_graph(const Graph& g, GraphFormat fmt) {
    return fmt == GraphFormat::EdgeList ? write_edge_list(g) : write_graph6(g) + "\n";
}

// ---------------------------------------------------------------------------
// JSON report pieces (schema 1). Sets serialize as sorted index arrays.
// ---------------------------------------------------------------------------

inline std::uint64_t graph_digest(const Graph& g) {
    // FNV-1a over the canonical edge list serialization.
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : write_edge_list(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline nlohmann::json to_json(const VertexSet& s) { return nlohmann::json(s.values()); }

inline nlohmann::json to_json(const Dist& d) {
    if (d.is_infinite()) return nlohmann::json("inf");
    return nlohmann::json(d.value());
}

inline nlohmann::json to_json(const FPartition& p) {
    return nlohmann::json{{"L", p.leaves.values()},  {"S1", p.s1.values()},
                          {"S2", p.s2.values()},     {"D11", p.d11.values()},
                          {"D12", p.d12.values()},   {"D2", p.d2.values()}};
}

inline nlohmann::json to_json(const PackingReport& r) {
    nlohmann::json j{{"rho_open_lower", r.rho_open_lower},
                     {"rho_open", r.rho_open},
                     {"spectrum", r.spectrum},
                     {"spectrum_complete", r.spectrum_complete}};
    if (r.count) j["count"] = *r.count;
    return j;
}

inline nlohmann::json to_json(const IndependenceReport& r) {
    nlohmann::json j{{"alpha", r.alpha},
                     {"i", r.i_dom},
                     {"well_covered", r.well_covered},
                     {"mis_spectrum", r.mis_spectrum},
                     {"spectrum_complete", r.spectrum_complete}};
    if (r.count) j["count"] = *r.count;
    return j;
}

inline nlohmann::json to_json(const Diagnosis& d) {
    nlohmann::json reasons = nlohmann::json::array();
    for (const Reason& r : d.reasons)
        reasons.push_back(nlohmann::json{{"rule", r.rule}, {"witness", r.witness}});
    nlohmann::json j{{"verdict", to_string(d.verdict)}, {"reasons", reasons}};
    if (d.partition) j["partition"] = to_json(*d.partition);
    return j;
}

inline nlohmann::json to_json(const OngStructure& s) {
    nlohmann::json comps = nlohmann::json::array();
    for (const ComponentShape& c : s.components)
        comps.push_back(nlohmann::json{{"kind", to_string(c.kind)}, {"order", c.order}});
    return nlohmann::json{{"component_count", s.components.size()}, {"components", comps}};
}

// Shared header of every CLI JSON document.
inline nlohmann::json report_header(const Graph& g) {
    char digest[20];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(graph_digest(g)));
    return nlohmann::json{{"schema", 1},
                          {"digest", std::string(digest)},
                          {"order", g.order()},
                          {"size", g.size()},
                          {"girth", to_json(girth(g))},
                          {"min_degree", g.min_degree()},
                          {"max_degree", g.max_degree()}};
}

}  // namespace openpack
