#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "su2ab/assembly.hpp"
#include "su2ab/lipa.hpp"
#include "su2ab/su2_oracle.hpp"
#include "su2ab/svg.hpp"

using namespace su2ab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int EXIT_PARSE = 2;
constexpr int EXIT_NOT_QHS = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string degrees(const Turn& t) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", t.v.to_double() * 360.0);
    return buf;
}

std::string angle_str(const Turn& t) {
    return t.str() + " of 2pi (" + degrees(t) + " deg)";
}

std::string status_str(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Abelian: return "Abelian";
        case VerdictStatus::NotAbelian: return "NotAbelian";
        case VerdictStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string witness_kind_str(WitnessKind k) {
    switch (k) {
        case WitnessKind::HH: return "H1 cap H2";
        case WitnessKind::HA: return "H1 cap A2";
        case WitnessKind::AH: return "A1 cap H2";
        case WitnessKind::PP: return "P1 cap P2";
    }
    return "?";
}

int run_analyze_one(const std::string& path, int split, bool as_json) {
    ManifoldGraph g;
    try {
        g = parse_manifold(slurp(path));
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_PARSE;
    }
    HomologyReport hom;
    try {
        hom = homology_of_closed(g, split);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_PARSE;
    }
    if (hom.order < 0) {
        std::cerr << "not a rational homology sphere (Delta(lambda1, lambda2) = 0)\n";
        return EXIT_NOT_QHS;
    }
    Verdict v = analyze_closed(g, split);
    if (as_json) {
        json out = json::parse(graph_to_json(g));
        out["schema"] = 1;
        json res;
        res["status"] = status_str(v.status);
        res["h1_order"] = hom.order;
        res["split_torus"] = v.torus_label;
        res["exact"] = v.exact;
        if (v.witness) {
            res["witness"] = {{"u", v.witness->u.str()},
                              {"v", v.witness->v.str()},
                              {"u_degrees", degrees(v.witness->u)},
                              {"v_degrees", degrees(v.witness->v)},
                              {"intersection", witness_kind_str(v.witness_kind)}};
        }
        out["result"] = res;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "status: " << status_str(v.status) << "\n";
        std::cout << "|H1| = " << hom.order << "\n";
        std::cout << "split torus: " << v.torus_label << "\n";
        if (v.witness) {
            std::cout << "witness (" << witness_kind_str(v.witness_kind) << ") on the split torus:\n";
            std::cout << "  theta = " << angle_str(v.witness->u) << "\n";
            std::cout << "  psi   = " << angle_str(v.witness->v) << "\n";
        }
        if (!v.exact && v.status != VerdictStatus::NotAbelian)
            std::cout << "note: a C2 piece makes the H-sets one-sided; Abelian cannot be certified\n";
    }
    return 0;
}

BoundaryTriple triple_of_bounded(const ManifoldGraph& g0) {
    ManifoldGraph g = expand_graph(g0);
    auto open = g.open_ports();
    if (open.size() != 1)
        throw std::runtime_error("document must have exactly one unglued port for this command");
    return fold_to_port(g, open[0].first, open[0].second, -1);
}

std::string table_cell(const TableEntry& e, bool markdown) {
    std::string v = e.value.num == 0 ? "0" : e.value.str();
    if (e.flagged) return markdown ? "**" + v + "**" : v + "*";
    return v;
}

std::string slope_label(long long p, long long q) {
    return std::to_string(p) + "/" + std::to_string(q);
}

void print_table(const TableGrid& t, const std::string& name, const std::string& format) {
    bool md = format == "markdown";
    if (md) {
        std::cout << "## " << name << "\n\n| lambda2 |";
        for (const auto& [p, q] : t.cols) std::cout << " " << slope_label(p, q) << " |";
        std::cout << "\n|---|";
        for (size_t i = 0; i < t.cols.size(); ++i) std::cout << "---|";
        std::cout << "\n";
        for (size_t r = 0; r < t.rows.size(); ++r) {
            std::cout << "| " << slope_label(t.rows[r].first, t.rows[r].second) << " |";
            for (const auto& e : t.cells[r]) std::cout << " " << table_cell(e, true) << " |";
            std::cout << "\n";
        }
        std::cout << "\n";
    } else {
        std::cout << name << "\nlambda2";
        for (const auto& [p, q] : t.cols) std::cout << "\t" << slope_label(p, q);
        std::cout << "\n";
        for (size_t r = 0; r < t.rows.size(); ++r) {
            std::cout << slope_label(t.rows[r].first, t.rows[r].second);
            for (const auto& e : t.cells[r]) std::cout << "\t" << table_cell(e, false);
            std::cout << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SU(2)-abelian status of graph-manifold rational homology spheres"};
    app.require_subcommand(1);

    std::string file, out_path, which = "both", format = "tsv", corpus;
    int split = 0;
    bool as_json = false, force = false;

    auto* analyze = app.add_subcommand("analyze", "closed-manifold verdict");
    analyze->add_option("file", file, "manifold document");
    analyze->add_option("--split", split, "interior edge index to split at")->default_val(0);
    analyze->add_flag("--json", as_json, "JSON output");
    analyze->add_option("--corpus", corpus, "analyze every .json document in a directory");

    auto* homology = app.add_subcommand("homology", "|H1| and per-side longitude data");
    homology->add_option("file", file)->required();
    homology->add_option("--split", split)->default_val(0);

    auto* weight = app.add_subcommand("weight", "LIPA weight mu of a one-boundary document");
    weight->add_option("file", file)->required();

    auto* tables = app.add_subcommand("tables", "the (m-2-l)/m grids");
    tables->add_option("--which", which, "1 | 2 | both")->default_val("both");
    tables->add_option("--format", format, "tsv | markdown")->default_val("tsv");

    auto* plot = app.add_subcommand("plot", "SVG of the A/H/P sets");
    plot->add_option("file", file)->required();
    plot->add_option("--out", out_path, "output SVG path")->required();
    plot->add_flag("--force", force, "overwrite an existing file");
    plot->add_option("--split", split)->default_val(0);

    auto* oracle = app.add_subcommand("oracle-check", "verify the verdict witness numerically");
    oracle->add_option("file", file)->required();
    oracle->add_option("--split", split)->default_val(0);

    auto* decompose = app.add_subcommand("decompose", "expanded atomic-piece tree");
    decompose->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) {
            if (!corpus.empty()) {
                std::vector<fs::path> files;
                for (const auto& e : fs::directory_iterator(corpus))
                    if (e.path().extension() == ".json") files.push_back(e.path());
                std::sort(files.begin(), files.end());
                int worst = 0;
                for (const auto& f : files) {
                    std::cout << "== " << f.string() << "\n";
                    worst = std::max(worst, run_analyze_one(f.string(), split, as_json));
                }
                return worst;
            }
            if (file.empty()) {
                std::cerr << "analyze needs a file or --corpus\n";
                return EXIT_PARSE;
            }
            return run_analyze_one(file, split, as_json);
        }
        if (app.got_subcommand(homology)) {
            ManifoldGraph g = parse_manifold(slurp(file));
            HomologyReport r = homology_of_closed(g, split);
            auto side = [](const char* name, const LongitudeData& l) {
                std::cout << name << ": lambda = " << l.longitude.a << "*x + " << l.longitude.b
                          << "*h, order = " << l.order << ", torsion = " << l.torsion << "\n";
            };
            side("side 1", r.side1);
            side("side 2", r.side2);
            std::cout << "Delta(lambda1, lambda2) = " << r.delta << "\n";
            if (r.order < 0) {
                std::cout << "|H1| = infinite\n";
                return EXIT_NOT_QHS;
            }
            std::cout << "|H1| = " << r.order << " (SNF cross-check: " << r.snf_order << ")\n";
            return 0;
        }
        if (app.got_subcommand(weight)) {
            ManifoldGraph g = parse_manifold(slurp(file));
            BoundaryTriple t = triple_of_bounded(g);
            std::cout << weight_mu(t).str() << "\n";
            return 0;
        }
        if (app.got_subcommand(tables)) {
            auto [t1, t2] = generate_tables();
            if (which == "1" || which == "both") print_table(t1, "Table 1 (c = 0)", format);
            if (which == "2" || which == "both") print_table(t2, "Table 2 (c = pi)", format);
            return 0;
        }
        if (app.got_subcommand(plot)) {
            if (fs::exists(out_path) && !force) {
                std::cerr << "refusing to overwrite " << out_path << " (use --force)\n";
                return EXIT_PARSE;
            }
            ManifoldGraph g = parse_manifold(slurp(file));
            ManifoldGraph eg = expand_graph(g);
            std::string svg;
            if (eg.open_ports().size() == 1) {
                BoundaryTriple t = triple_of_bounded(g);
                svg = render_triple_svg(t, "boundary character sets");
            } else {
                SplitResult s = reduce_to_split(eg, split);
                // overlay both sides at the split torus
                BoundaryTriple t = s.side_from;
                long long m[2][2];
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) m[i][j] = s.m[i][j];
                BoundaryTriple other = s.side_to;
                other.A = apply_matrix(other.A, m);
                other.H = apply_matrix(other.H, m);
                other.P = apply_matrix(other.P, m);
                TorusSet A = t.A, H = t.H, P = t.P;
                A.lines.insert(A.lines.end(), other.A.lines.begin(), other.A.lines.end());
                A.arcs.insert(A.arcs.end(), other.A.arcs.begin(), other.A.arcs.end());
                A.points.insert(A.points.end(), other.A.points.begin(), other.A.points.end());
                H.lines.insert(H.lines.end(), other.H.lines.begin(), other.H.lines.end());
                H.arcs.insert(H.arcs.end(), other.H.arcs.begin(), other.H.arcs.end());
                H.points.insert(H.points.end(), other.H.points.begin(), other.H.points.end());
                P.lines.insert(P.lines.end(), other.P.lines.begin(), other.P.lines.end());
                P.arcs.insert(P.arcs.end(), other.P.arcs.begin(), other.P.arcs.end());
                P.points.insert(P.points.end(), other.P.points.begin(), other.P.points.end());
                BoundaryTriple merged;
                merged.A = A.normalized();
                merged.H = H.normalized();
                merged.P = P.normalized();
                svg = render_triple_svg(merged, "character sets at " + s.label);
            }
            std::ofstream o(out_path, std::ios::binary);
            o << svg;
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (app.got_subcommand(oracle)) {
            ManifoldGraph g = parse_manifold(slurp(file));
            HomologyReport hom = homology_of_closed(g, split);
            if (hom.order < 0) {
                std::cerr << "not a rational homology sphere\n";
                return EXIT_NOT_QHS;
            }
            Verdict v = analyze_closed(g, split);
            std::cout << "status: " << status_str(v.status) << "\n";
            OracleConfig cfg;
            WitnessReport rep = verify_witness(v, cfg);
            if (v.witness) {
                std::cout << "witness: theta = " << angle_str(v.witness->u)
                          << ", psi = " << angle_str(v.witness->v) << " ("
                          << witness_kind_str(v.witness_kind) << ")\n";
                std::cout << "residuals: side1 = " << rep.residual1
                          << ", side2 = " << rep.residual2 << "\n";
                std::cout << "commutator scores: side1 = " << rep.commutator1
                          << ", side2 = " << rep.commutator2 << "\n";
            }
            std::cout << (rep.pass ? "PASS" : "FAIL") << ": " << rep.detail << "\n";
            return rep.pass ? 0 : 1;
        }
        if (app.got_subcommand(decompose)) {
            ManifoldGraph g = parse_manifold(slurp(file));
            std::cout << graph_to_json(expand_graph(g)) << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_PARSE;
    }
    return 0;
}
