#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "openpack/io.hpp"
#include "openpack/verify.hpp"

namespace openpack {

namespace cli_detail {

inline std::string read_all(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline int parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw Error("not an integer: \"" + s + "\"");
        return v;
    } catch (const std::exception&) {
        throw Error("not an integer: \"" + s + "\"");
    }
}

inline void print_set_line(std::ostream& out, const char* key, const VertexSet& s) {
    out << key;
    for (int v : s) out << ' ' << v;
    out << '\n';
}

}  // namespace cli_detail

// The whole command-line surface, callable in-process. Data goes to `out`,
// logs and errors to `err`; `in` backs the "-" input path. Exit codes: 0 on
// success, 1 on runtime failures (bad input, caps, failed suites), 2 on usage
// errors.
inline int run_cli(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"open packing invariants toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "el";
    bool as_json = false;
    std::uint64_t seed = 1;
    app.add_option("--format", format, "graph format: el (edge list) or g6 (graph6)")
        ->check(CLI::IsMember({"el", "g6"}));
    app.add_flag("--json", as_json, "emit JSON documents");
    app.add_option("--seed", seed, "seed for the random generators");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    std::string family;
    std::vector<std::string> params;
    gen->add_option("family", family, "path|cycle|T|Gk|embed|ftree|randtree")->required();
    gen->add_option("params", params, "family parameters");

    // graph-consuming commands
    std::string in_path = "-";
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", in_path, "input graph file (- for stdin)");
    };
    auto* stats = app.add_subcommand("stats", "order, size, girth, degrees, leaf structure");
    add_input(stats);
    auto* spectrum = app.add_subcommand("spectrum", "maximal open packing spectrum");
    add_input(spectrum);
    int vertex_cap = EnumOptions{}.vertex_cap;
    std::uint64_t set_cap = EnumOptions{}.set_cap;
    spectrum->add_option("--cap", vertex_cap, "enumeration vertex cap");
    spectrum->add_option("--max-sets", set_cap, "maximal-set count before degrading");
    auto* ong_cmd = app.add_subcommand("ong", "open neighborhood graph and its structure");
    add_input(ong_cmd);
    auto* classify = app.add_subcommand("classify", "diagnosis and family partition (JSON)");
    add_input(classify);
    auto* decide = app.add_subcommand("decide", "decide one-size membership");
    add_input(decide);
    std::string mode = "auto";
    decide->add_option("--mode", mode, "auto|structural|brute")
        ->check(CLI::IsMember({"auto", "structural", "brute"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run an acceptance suite");
    std::string suite = "all";
    bool list_suites = false;
    verify_cmd->add_option("suite", suite, "suite name or criterion number");
    verify_cmd->add_flag("--list", list_suites, "list available suites");

    std::vector<const char*> cargv;
    cargv.push_back("openpack");
    for (const std::string& a : argv) cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    GraphFormat fmt = format == "g6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
    EnumOptions opts;
    opts.vertex_cap = vertex_cap;
    opts.set_cap = set_cap;

    try {
        if (gen->parsed()) {
            auto need_params = [&](std::size_t k) {
                if (params.size() != k)
                    throw Error("family \"" + family + "\" expects " + std::to_string(k) +
                                " parameter(s)");
            };
            Graph g;
            if (family == "path") {
                need_params(1);
                g = gen_path(cli_detail::parse_int(params[0]));
            } else if (family == "cycle") {
                need_params(1);
                g = gen_cycle(cli_detail::parse_int(params[0]));
            } else if (family == "T") {
                need_params(1);
                g = gen_T(cli_detail::parse_int(params[0]));
            } else if (family == "Gk") {
                need_params(1);
                g = gen_Gk(cli_detail::parse_int(params[0]));
            } else if (family == "embed") {
                need_params(1);
                Graph h = parse_graph(cli_detail::read_all(params[0], in), fmt);
                g = embed_in_U(h).graph;
            } else if (family == "randtree") {
                need_params(1);
                g = gen_random_tree(cli_detail::parse_int(params[0]), seed);
            } else if (family == "ftree") {
                need_params(1);
                Rng rng(seed);
                g = gen_F_tree(random_double_star_spec(cli_detail::parse_int(params[0]), rng))
                        .tree;
            } else {
                throw Error("unknown family \"" + family + "\"");
            }
            if (as_json) {
                nlohmann::json j = report_header(g);
                j["edges"] = g.edges();
                out << j.dump() << '\n';
            } else {
                out << write_graph(g, fmt);
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (list_suites) {
                out << "all";
                for (const auto& [id, name] : verify::criteria()) {
                    (void)name;
                    std::string slug = *verify::suite_ids(std::to_string(id)) ==
                                               std::vector<int>{id}
                                           ? ""
                                           : "";
                    (void)slug;
                }
                for (const char* s : {"paths", "cycles", "t-gap", "prop1", "ong-forms", "embed",
                                      "theorem1", "f-sufficiency", "gk", "lemmas", "bounds"})
                    out << ' ' << s;
                out << '\n';
                return 0;
            }
            auto ids = verify::suite_ids(suite);
            if (!ids) throw Error("unknown suite \"" + suite + "\"");
            bool all_passed = true;
            if (as_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& res : verify::run_suite(*ids, &err)) {
                    all_passed = all_passed && res.passed;
                    arr.push_back(nlohmann::json{{"id", res.id},
                                                 {"name", res.name},
                                                 {"passed", res.passed},
                                                 {"instances", res.instances},
                                                 {"seconds", res.seconds},
                                                 {"detail", res.detail}});
                }
                out << nlohmann::json{{"schema", 1}, {"criteria", arr}}.dump() << '\n';
            } else {
                for (const auto& res : verify::run_suite(*ids, &out))
                    all_passed = all_passed && res.passed;
            }
            return all_passed ? 0 : 1;
        }

        // Everything below consumes one input graph.
        Graph g = parse_graph(cli_detail::read_all(in_path, in), fmt);

        if (stats->parsed()) {
            if (as_json) {
                nlohmann::json j = report_header(g);
                j["leaves"] = leaves(g).values();
                j["supports"] = supports(g).values();
                j["strong_supports"] = strong_supports(g).values();
                j["components"] = components(g).size();
                out << j.dump() << '\n';
            } else {
                out << "order " << g.order() << '\n';
                out << "size " << g.size() << '\n';
                out << "girth " << girth(g).str() << '\n';
                out << "min_degree " << g.min_degree() << '\n';
                out << "max_degree " << g.max_degree() << '\n';
                cli_detail::print_set_line(out, "leaves", leaves(g));
                cli_detail::print_set_line(out, "supports", supports(g));
                cli_detail::print_set_line(out, "strong_supports", strong_supports(g));
            }
            return 0;
        }

        if (spectrum->parsed()) {
            auto start = std::chrono::steady_clock::now();
            PackingReport rep = packing_report(g, opts);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (as_json) {
                nlohmann::json j = report_header(g);
                j["packing"] = to_json(rep);
                j["timing_sec"] = secs;
                out << j.dump() << '\n';
            } else {
                out << "rho_open_lower " << rep.rho_open_lower << '\n';
                out << "rho_open " << rep.rho_open << '\n';
                out << "spectrum";
                for (int s : rep.spectrum) out << ' ' << s;
                out << '\n';
                if (rep.count) out << "count " << *rep.count << '\n';
                out << "spectrum_complete " << (rep.spectrum_complete ? "yes" : "no") << '\n';
            }
            return 0;
        }

        if (ong_cmd->parsed()) {
            Graph ong = build_ong(g);
            OngStructure st = ong_structure_check(g);
            if (as_json) {
                nlohmann::json j = report_header(g);
                j["ong_edges"] = ong.edges();
                j["structure"] = to_json(st);
                out << j.dump() << '\n';
            } else {
                out << write_edge_list(ong);
                out << "# components " << st.components.size() << '\n';
                for (const ComponentShape& comp : st.components)
                    out << "# component " << to_string(comp.kind) << " order " << comp.order
                        << '\n';
            }
            return 0;
        }

        if (classify->parsed()) {
            auto start = std::chrono::steady_clock::now();
            Diagnosis d = diagnose(g);
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            nlohmann::json j = report_header(g);
            j["diagnosis"] = to_json(d);
            j["timing_sec"] = secs;
            out << j.dump() << '\n';
            return 0;
        }

        if (decide->parsed()) {
            DecisionMode m = mode == "structural" ? DecisionMode::Structural
                             : mode == "brute"    ? DecisionMode::Brute
                                                  : DecisionMode::Auto;
            Diagnosis d = decide_U(g, m, opts);
            if (as_json) {
                nlohmann::json j = report_header(g);
                j["mode"] = mode;
                j["diagnosis"] = to_json(d);
                out << j.dump() << '\n';
            } else {
                out << to_string(d.verdict) << '\n';
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace openpack
