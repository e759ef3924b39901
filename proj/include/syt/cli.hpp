#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "syt/growth.hpp"
#include "syt/io.hpp"
#include "syt/jdt.hpp"
#include "syt/matching.hpp"
#include "syt/prom_perms.hpp"
#include "syt/rs.hpp"
#include "syt/shadow.hpp"
#include "syt/svg.hpp"
#include "syt/tableau.hpp"
#include "syt/verify.hpp"

namespace syt {

namespace cli_detail {

struct Global {
    bool json = false;
    std::string input;  // empty = stdin
    unsigned seed = 0;
};

inline std::string read_input(const Global& g) {
    if (g.input.empty()) {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(g.input);
    if (!in) throw std::invalid_argument("cannot open input file: " + g.input);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline RectShape parse_shape(const std::string& s) {
    const auto x = s.find_first_of("xX");
    if (x == std::string::npos) throw std::invalid_argument("shape must look like 3x4");
    const int r = std::stoi(s.substr(0, x));
    const int c = std::stoi(s.substr(x + 1));
    if (r < 1 || c < 1) throw std::invalid_argument("shape must have positive dimensions");
    return {r, c};
}

inline Direction parse_direction(const std::string& s) {
    if (s == "ne") return Direction::NE;
    if (s == "se") return Direction::SE;
    if (s == "sw") return Direction::SW;
    if (s == "nw") return Direction::NW;
    throw std::invalid_argument("direction must be one of ne, se, sw, nw");
}

inline void emit_tableau(const StandardTableau& t, const Global& g) {
    if (g.json) std::cout << tableau_to_json(t).dump() << '\n';
    else std::cout << t.to_string() << '\n';
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

}  // namespace cli_detail

/// Command-line entry point; returns the process exit code.
inline int run(int argc, const char* const* argv) {
    using cli_detail::Global;
    CLI::App app{"standard Young tableau promotion, growth diagrams, shadow lines, and theorem sweeps"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_flag("--json", g.json, "emit JSON instead of text");
    app.add_option("--input", g.input, "input file (default: standard input)");
    app.add_option("--seed", g.seed, "seed for randomized verification sampling");

    int promote_k = 1, gromote_k = 1;
    bool gromote_trace = false;
    std::string pm_from = "perms";
    std::string viennot_dir = "ne", viennot_svg;
    bool viennot_skeleta = false;
    std::string chord_svg;
    std::string verify_shape, verify_theorem = "prom-rs";
    std::int64_t verify_sample = 0;
    std::string enum_shape;

    CLI::App* cmd_promote = app.add_subcommand("promote", "apply promotion k times");
    cmd_promote->add_option("-k", promote_k, "number of applications")->default_val(1);

    CLI::App* cmd_evacuate = app.add_subcommand("evacuate", "apply evacuation");

    CLI::App* cmd_gromote = app.add_subcommand("gromote", "apply gromotion k times");
    cmd_gromote->add_option("-k", gromote_k, "number of applications")->default_val(1);
    cmd_gromote->add_flag("--trace", gromote_trace, "report each sliding path");

    CLI::App* cmd_promperms = app.add_subcommand("promperms", "promotion permutations of a rectangular tableau");

    CLI::App* cmd_pm = app.add_subcommand("pm", "promotion matrix");
    cmd_pm->add_option("--from", pm_from, "construction route")->check(CLI::IsMember({"perms", "diagram"}));

    CLI::App* cmd_stack = app.add_subcommand("stack", "stack two tableaux of the same rectangular shape");

    CLI::App* cmd_rs = app.add_subcommand("rs", "Robinson-Schensted insertion of a permutation");
    CLI::App* cmd_rs_inverse = app.add_subcommand("rs-inverse", "permutation of a tableau pair");

    CLI::App* cmd_viennot = app.add_subcommand("viennot", "shadow line construction on a point set");
    cmd_viennot->add_option("--dir", viennot_dir, "light direction")->check(CLI::IsMember({"ne", "se", "sw", "nw"}));
    cmd_viennot->add_flag("--skeleta", viennot_skeleta, "also list the iterated skeleta");
    cmd_viennot->add_option("--svg", viennot_svg, "write the shadow-line rendering to this file");

    CLI::App* cmd_matching = app.add_subcommand("matching", "perfect matching utilities");
    CLI::App* cmd_matching_stats = cmd_matching->add_subcommand("stats", "crossing and nesting numbers");
    cmd_matching->require_subcommand(1);

    CLI::App* cmd_chord = app.add_subcommand("chord", "chord diagram rendering of a matching");
    cmd_chord->add_option("--svg", chord_svg, "write the rendering to this file (default: stdout)");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a theorem sweep");
    cmd_verify->add_option("--shape", verify_shape, "rectangle RxC")->required();
    cmd_verify->add_option("--theorem", verify_theorem, "which statement to sweep")
        ->check(CLI::IsMember({"prom-rs", "main", "cor"}));
    cmd_verify->add_option("--sample", verify_sample, "check this many random pairs instead of all");

    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list all standard tableaux of a shape");
    cmd_enumerate->add_option("--shape", enum_shape, "rectangle RxC")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_promote) {
            cli_detail::emit_tableau(promote_power(parse_tableau(cli_detail::read_input(g)), promote_k), g);
        } else if (*cmd_evacuate) {
            cli_detail::emit_tableau(evacuate(parse_tableau(cli_detail::read_input(g))), g);
        } else if (*cmd_gromote) {
            ShiftedTableau cur(parse_tableau(cli_detail::read_input(g)));
            nlohmann::json trace = nlohmann::json::array();
            for (int step = 1; step <= gromote_k; ++step) {
                GromoteResult res = gromote(cur);
                cur = res.tableau;
                if (gromote_trace && !g.json) {
                    std::cout << "# step " << step << " path:";
                    for (const Cell& cell : res.record.path) std::cout << " (" << cell.row + 1 << "," << cell.col + 1 << ")";
                    std::cout << " slides:";
                    for (const auto& [row, entry] : res.record.row_entries)
                        std::cout << " row" << row << "<-" << entry;
                    std::cout << '\n';
                } else if (gromote_trace) {
                    nlohmann::json rec;
                    for (const Cell& cell : res.record.path) rec["path"].push_back({cell.row + 1, cell.col + 1});
                    for (const auto& [row, entry] : res.record.row_entries)
                        rec["row_entries"][std::to_string(row)] = entry;
                    trace.push_back(std::move(rec));
                }
            }
            if (g.json) {
                nlohmann::json out{{"rows", cur.rows()}, {"offset", cur.offset()}};
                if (gromote_trace) out["trace"] = trace;
                std::cout << out.dump() << '\n';
            } else {
                std::ostringstream os;
                for (int r = 0; r < cur.shape().rows(); ++r) {
                    if (r) os << '\n';
                    for (int c = 0; c < cur.shape().part(r); ++c) {
                        if (c) os << ' ';
                        os << cur.at(r, c);
                    }
                }
                std::cout << os.str() << '\n';
            }
        } else if (*cmd_promperms) {
            const PromTuple tuple = prom_perms(parse_tableau(cli_detail::read_input(g)));
            if (g.json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const Permutation& p : tuple.all()) arr.push_back(p.one_line());
                std::cout << nlohmann::json{{"prom", arr}}.dump() << '\n';
            } else {
                for (int i = 1; i <= tuple.count(); ++i)
                    std::cout << "prom_" << i << " = " << tuple.prom(i).to_string() << '\n';
            }
        } else if (*cmd_pm) {
            const StandardTableau t = parse_tableau(cli_detail::read_input(g));
            const PromotionMatrix m = pm_from == "diagram" ? promotion_matrix_from_diagram(t) : promotion_matrix(t);
            if (g.json) std::cout << matrix_to_json(m).dump() << '\n';
            else std::cout << m.to_text();
        } else if (*cmd_stack) {
            const auto [p, q] = parse_tableau_pair(cli_detail::read_input(g));
            cli_detail::emit_tableau(stack(p, q), g);
        } else if (*cmd_rs) {
            const RSPair pair = rs_insert(parse_permutation(cli_detail::read_input(g)));
            if (g.json)
                std::cout << nlohmann::json{{"p", tableau_to_json(pair.p)}, {"q", tableau_to_json(pair.q)}}.dump()
                          << '\n';
            else std::cout << pair.p.to_string() << "\n\n" << pair.q.to_string() << '\n';
        } else if (*cmd_rs_inverse) {
            const auto [p, q] = parse_tableau_pair(cli_detail::read_input(g));
            const Permutation rho = rs_inverse(p, q);
            if (g.json) std::cout << nlohmann::json(rho.one_line()).dump() << '\n';
            else std::cout << rho.to_string() << '\n';
        } else if (*cmd_viennot) {
            const Direction dir = cli_detail::parse_direction(viennot_dir);
            const PlanarPointSet pts = parse_points(cli_detail::read_input(g));
            const ViennotOverlay overlay = viennot_overlay(pts, dir);
            const StandardTableau p = tableau_from_lattice_word(overlay.word_p);
            const StandardTableau q = tableau_from_lattice_word(overlay.word_q);
            if (!viennot_svg.empty()) cli_detail::write_file(viennot_svg, render_shadow_svg(pts, dir));
            if (g.json) {
                nlohmann::json out{{"p", tableau_to_json(p)}, {"q", tableau_to_json(q)}};
                if (viennot_skeleta) {
                    nlohmann::json sk = nlohmann::json::array();
                    for (const PlanarPointSet& level : overlay.skeleta) sk.push_back(points_to_json(level));
                    out["skeleta"] = sk;
                }
                std::cout << out.dump() << '\n';
            } else {
                std::cout << p.to_string() << "\n\n" << q.to_string() << '\n';
                if (viennot_skeleta)
                    for (std::size_t k = 0; k < overlay.skeleta.size(); ++k) {
                        std::cout << "# skeleton " << k << ":";
                        for (const Point& pt : overlay.skeleta[k].points()) std::cout << " (" << pt.x << "," << pt.y << ")";
                        std::cout << '\n';
                    }
            }
        } else if (*cmd_matching_stats) {
            const PerfectMatching m = parse_matching(cli_detail::read_input(g));
            const int cr = crossing_number(m), ne = nesting_number(m);
            if (g.json) std::cout << nlohmann::json{{"crossing", cr}, {"nesting", ne}}.dump() << '\n';
            else std::cout << "crossing " << cr << ", nesting " << ne << '\n';
        } else if (*cmd_chord) {
            const PerfectMatching m = parse_matching(cli_detail::read_input(g));
            const std::string svg = render_chord_svg(m);
            if (chord_svg.empty()) std::cout << svg;
            else cli_detail::write_file(chord_svg, svg);
        } else if (*cmd_verify) {
            const auto [r, c] = cli_detail::parse_shape(verify_shape);
            VerifyOptions opt;
            opt.sample = verify_sample;
            opt.seed = g.seed;
            VerifyReport rep;
            if (verify_theorem == "prom-rs") rep = verify_thm_prom_rs(r, c, opt);
            else if (verify_theorem == "main") rep = verify_thm_main(r, c, opt);
            else rep = verify_cor_image(r, c, opt);
            if (g.json) std::cout << report_to_json(rep).dump() << '\n';
            else std::cout << rep.to_text() << '\n';
            return rep.passed() ? 0 : 1;
        } else if (*cmd_enumerate) {
            const RectShape shape = cli_detail::parse_shape(enum_shape);
            if (g.json) {
                nlohmann::json arr = nlohmann::json::array();
                for_each_syt(shape.partition(),
                             [&](const StandardTableau& t) { arr.push_back(tableau_to_json(t)); });
                std::cout << arr.dump() << '\n';
            } else {
                bool first = true;
                for_each_syt(shape.partition(), [&](const StandardTableau& t) {
                    if (!first) std::cout << '\n';
                    std::cout << t.to_string() << '\n';
                    first = false;
                });
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace syt
