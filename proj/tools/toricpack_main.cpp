// Command-line interface: exact Delzant verification, classification,
// packing density, perfect-packing enumeration, blow-up and SVG rendering
// over a single JSON polytope format.
//
// Exit codes: 0 success (and "yes" for decision commands), 2 domain
// negative (not Delzant, chop too deep, wrong render dimension), 1 input
// or usage errors.

#include "toricpack/catalog.hpp"
#include "toricpack/delzant.hpp"
#include "toricpack/error.hpp"
#include "toricpack/json_io.hpp"
#include "toricpack/packing.hpp"
#include "toricpack/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace toricpack;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Polytope load_polytope(const std::string& path) {
    return polytope_from_json(read_input(path));
}

int exit_code_for(const Error& e) {
    static const std::set<std::string> domain_negative = {
        "NotDelzant", "ChopTooDeep", "NotDelzantResult", "BallTooLarge", "RenderDimension"};
    return domain_negative.count(e.code()) ? 2 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for Delzant polytopes and equivariant ball packings"};
    app.require_subcommand(1);

    bool strict_sl = false;
    bool json_output = true;
    int budget = 64;
    app.add_flag("--strict-sl", strict_sl, "restrict lattice maps to determinant +1");
    app.add_flag("--json", json_output, "JSON output (default; reports are always JSON)");
    app.add_option("--budget", budget, "refinement budget for the packing solver");

    std::string file;
    auto* cmd_check = app.add_subcommand("check", "verify the Delzant conditions");
    cmd_check->add_option("file", file, "polytope JSON file, or - for stdin")->required();

    auto* cmd_classify = app.add_subcommand("classify", "match against the packable models");
    cmd_classify->add_option("file", file)->required();

    auto* cmd_omega = app.add_subcommand("omega", "certified equivariant packing density");
    cmd_omega->add_option("file", file)->required();

    bool enumerate = false;
    auto* cmd_pack = app.add_subcommand("pack", "decide and enumerate perfect packings");
    cmd_pack->add_option("file", file)->required();
    cmd_pack->add_flag("--enumerate", enumerate, "list the perfect packings");

    std::string vertex_str, size_str;
    auto* cmd_blowup = app.add_subcommand("blowup", "corner chop at a vertex");
    cmd_blowup->add_option("file", file)->required();
    cmd_blowup->add_option("--vertex", vertex_str, "vertex index in canonical order")->required();
    cmd_blowup->add_option("--size", size_str, "chop depth t = r^2, rational")->required();

    bool with_pack = false;
    std::string out_path;
    auto* cmd_render = app.add_subcommand("render", "SVG picture of a 2-d polytope");
    cmd_render->add_option("file", file)->required();
    cmd_render->add_flag("--pack", with_pack, "shade an optimal packing witness");
    cmd_render->add_option("-o,--output", out_path, "output SVG path (default stdout)");

    std::string catalog_name;
    std::vector<std::string> catalog_params;
    auto* cmd_catalog = app.add_subcommand("catalog", "emit a built-in polytope");
    cmd_catalog->add_option("name", catalog_name, "entry name")->required();
    cmd_catalog->add_option("params", catalog_params, "entry parameters");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_check->parsed()) {
            const DelzantReport report = check_delzant(load_polytope(file));
            std::cout << delzant_report_to_json(report) << "\n";
            return report.is_delzant ? 0 : 2;
        }
        if (cmd_classify->parsed()) {
            const Polytope p = load_polytope(file);
            if (!check_delzant(p).is_delzant)
                throw Error("NotDelzant", "classification needs a Delzant polytope");
            std::cout << classification_to_json(classify(p, strict_sl)) << "\n";
            return 0;
        }
        if (cmd_omega->parsed()) {
            const PackingReport report = omega(load_polytope(file), budget);
            std::cout << packing_report_to_json(report) << "\n";
            return 0;
        }
        if (cmd_pack->parsed()) {
            const PackingDecision decision = decide_perfect_packing(load_polytope(file));
            std::cout << packing_decision_to_json(decision, enumerate) << "\n";
            return 0;
        }
        if (cmd_blowup->parsed()) {
            const Polytope p = load_polytope(file);
            const Rational t = parse_rational(size_str);
            const Rational idx = parse_rational(vertex_str);
            if (rat_den(idx) != 1 || idx < 0)
                throw Error("ParseError", "--vertex must be a non-negative integer");
            const auto vertex_id = rat_num(idx).convert_to<std::size_t>();
            if (vertex_id >= p.vertices().size())
                throw Error("ParseError", "vertex index out of range");
            const Polytope chopped = blow_up(p, vertex_id, t);
            std::cout << polytope_to_json(chopped) << "\n";
            std::cerr << "volume_delta " << to_string(chopped.volume() - p.volume()) << "\n";
            return 0;
        }
        if (cmd_render->parsed()) {
            const Polytope p = load_polytope(file);
            std::vector<OpenSimplex> witness;
            if (with_pack) {
                if (!check_delzant(p).is_delzant)
                    throw Error("NotDelzant", "packing witness needs a Delzant polytope");
                witness = omega(p, budget).witness;
            }
            const std::string svg = render_svg(p, witness);
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw Error("ParseError", "cannot write \"" + out_path + "\"");
                out << svg;
            }
            return 0;
        }
        if (cmd_catalog->parsed()) {
            std::cout << polytope_to_json(catalog_lookup(catalog_name, catalog_params)) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error " << e.what() << "\n";
        return 1;
    }
    return 1;
}
