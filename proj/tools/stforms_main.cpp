#include "stforms/catalog.hpp"
#include "stforms/form_ops.hpp"
#include "stforms/generators.hpp"
#include "stforms/intertwine.hpp"
#include "stforms/json_io.hpp"
#include "stforms/linalg.hpp"
#include "stforms/spacetime.hpp"
#include "stforms/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using Json = nlohmann::ordered_json;
using namespace stforms;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitSemantic = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SpacetimeKind require_spacetime(const std::string& name) {
    auto kind = parse_spacetime(name);
    if (!kind) throw UsageError("unknown spacetime '" + name + "'");
    return *kind;
}

Json matrix_json(const RatMatrix& m) { return Json::parse(matrix_to_json(m)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text << "\n";
}

// ---------------------------------------------------------------- gen ----

int cmd_gen(const std::string& st_name, int degree, const std::string& kind, int axis,
            const std::string& format) {
    if (degree < 0 || degree > 4) throw UsageError("--degree must be in 0..4");
    if (axis < 1 || axis > 3) throw UsageError("--axis must be in 1..3");
    RatMatrix m;
    if (kind == "rot") {
        m = rotation_generator(degree, axis);
    } else if (kind == "boost") {
        if (st_name.empty()) throw UsageError("--spacetime is required for boost generators");
        m = boost_generator(spacetime(require_spacetime(st_name)), degree, axis);
    } else {
        throw UsageError("--kind must be rot or boost");
    }
    if (format == "json") {
        Json j;
        j["kind"] = kind;
        if (!st_name.empty()) j["spacetime"] = st_name;
        j["degree"] = degree;
        j["axis"] = axis;
        j["matrix"] = matrix_json(m);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << m.str() << "\n";
    }
    return kExitOk;
}

// -------------------------------------------------------------- solve ----

int cmd_solve(const std::string& st_name, int from, int to, bool rotations_only,
              const std::string& format) {
    if (from < 0 || from > 4 || to < 0 || to > 4) throw UsageError("degrees must be in 0..4");
    const SpacetimeKind kind = require_spacetime(st_name);
    const ConstraintMode mode =
        rotations_only ? ConstraintMode::RotationsOnly : ConstraintMode::Full;
    const IntertwinerSpace space = solve_intertwiners(spacetime(kind), from, to, mode);
    const std::vector<OperatorLabel> labels = classify(space);
    if (format == "json") {
        std::cout << intertwiner_space_to_json(space, labels) << "\n";
        return kExitOk;
    }
    std::cout << to_string(kind) << " O^" << from << " -> O^" << to << " ("
              << to_string(mode) << ")\n";
    std::cout << "dim " << space.dim() << "\n";
    for (std::size_t i = 0; i < space.basis.size(); ++i)
        std::cout << "basis[" << i << "]:\n" << space.basis[i].str() << "\n";
    std::cout << "labels:";
    for (const OperatorLabel& l : labels) std::cout << ' ' << to_string(l.tag);
    std::cout << "\n";
    for (const OperatorLabel& l : labels)
        if (!l.detail.empty()) std::cout << "  " << to_string(l.tag) << ": " << l.detail << "\n";
    return kExitOk;
}

// --------------------------------------------------------------- grid ----

Json grid_cell_json(const IntertwinerSpace& space) {
    Json cell;
    cell["q"] = space.q;
    cell["p"] = space.p;
    cell["dim"] = space.dim();
    Json labels = Json::array();
    for (const OperatorLabel& l : classify(space)) labels.push_back(to_string(l.tag));
    cell["labels"] = std::move(labels);
    return cell;
}

void print_grid_text(SpacetimeKind kind, ConstraintMode mode) {
    const Spacetime& st = spacetime(kind);
    std::cout << to_string(kind) << " (" << to_string(mode) << ")\n";
    std::cout << "     ";
    for (int p = 0; p <= 4; ++p) {
        std::cout.width(12);
        std::cout << ("p=" + std::to_string(p));
    }
    std::cout << "\n";
    for (int q = 0; q <= 4; ++q) {
        std::cout << "  q=" << q;
        for (int p = 0; p <= 4; ++p) {
            const IntertwinerSpace space = solve_intertwiners(st, p, q, mode);
            std::string cell;
            if (space.dim() == 0) {
                cell = ".";
            } else {
                cell = std::to_string(space.dim()) + ":";
                bool first = true;
                for (const OperatorLabel& l : classify(space)) {
                    if (!first) cell += "+";
                    first = false;
                    cell += tag_abbrev(l.tag);
                }
            }
            std::cout.width(12);
            std::cout << cell;
        }
        std::cout << "\n";
    }
}

int cmd_grid(const std::string& st_name, bool rotations_only, const std::string& format) {
    const ConstraintMode mode =
        rotations_only ? ConstraintMode::RotationsOnly : ConstraintMode::Full;
    std::vector<SpacetimeKind> kinds;
    if (st_name == "all") {
        kinds.assign(kAllSpacetimes.begin(), kAllSpacetimes.end());
    } else {
        kinds.push_back(require_spacetime(st_name));
    }
    if (format == "json") {
        Json out;
        out["mode"] = to_string(mode);
        Json grids = Json::array();
        for (SpacetimeKind kind : kinds) {
            const Spacetime& st = spacetime(kind);
            Json g;
            g["spacetime"] = to_string(kind);
            Json dims = Json::array();
            Json cells = Json::array();
            for (int q = 0; q <= 4; ++q) {
                Json row = Json::array();
                for (int p = 0; p <= 4; ++p) {
                    const IntertwinerSpace space = solve_intertwiners(st, p, q, mode);
                    row.push_back(space.dim());
                    if (space.dim() > 0) cells.push_back(grid_cell_json(space));
                }
                dims.push_back(std::move(row));
            }
            g["dims"] = std::move(dims);
            g["cells"] = std::move(cells);
            grids.push_back(std::move(g));
        }
        out["grids"] = std::move(grids);
        std::cout << out.dump() << "\n";
    } else {
        bool first = true;
        for (SpacetimeKind kind : kinds) {
            if (!first) std::cout << "\n";
            first = false;
            print_grid_text(kind, mode);
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------- verify ----

int cmd_verify(std::uint64_t seed, int trials, bool allow_unknown, bool tamper) {
    if (trials < 1) throw UsageError("--trials must be positive");
    VerifyConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.allow_unknown = allow_unknown;
    cfg.tamper = tamper;
    const VerifyReport report = run_verification(cfg);
    for (const VerifyGroupResult& g : report.groups) {
        std::cout.width(32);
        std::cout << std::left << g.name << std::right << " checks=" << g.checks
                  << " failures=" << g.failures;
        if (g.warnings > 0) std::cout << " warnings=" << g.warnings;
        std::cout << "\n";
    }
    std::cout << "result: " << (report.ok() ? "PASS" : "FAIL") << " (seed=" << seed
              << ", trials=" << trials << ")\n";
    if (!report.ok()) {
        std::cout << "first counterexample: " << report.first_counterexample << "\n";
        return kExitPropertyFailure;
    }
    return kExitOk;
}

// -------------------------------------------------------------- apply ----

int cmd_apply(const std::string& op, const std::string& st_name, const std::string& in_path,
              const std::string& out_path, int to_degree) {
    const Form input = form_from_json(read_file(in_path));
    Form result(0);
    if (op == "star") {
        if (st_name.empty()) throw UsageError("--op star needs --spacetime");
        result = hodge_star(require_spacetime(st_name), input);
    } else if (op == "dtwedge") {
        if (input.degree() > 3)
            throw std::domain_error("dt_wedge: degree overflow past the top form");
        result = dt_wedge(input);
    } else if (op == "it") {
        if (input.degree() < 1) throw std::domain_error("interior product: undefined on 0-forms");
        result = time_interior(input);
    } else if (op == "d") {
        if (input.degree() > 3)
            throw std::domain_error("exterior_derivative: no 5-forms on a 4-dimensional model");
        result = exterior_derivative(input);
    } else if (op.rfind("matrix:", 0) == 0) {
        const RatMatrix m = matrix_from_json(read_file(op.substr(7)));
        if (m.cols() != degree_dim(input.degree()))
            throw std::domain_error("matrix width does not match the form degree");
        int target = to_degree;
        if (target < 0) {
            // Degrees 1/3 and 0/4 share component counts; default to the
            // star-analog convention q = 4 - p when the height allows it.
            if (degree_dim(4 - input.degree()) == m.rows())
                target = 4 - input.degree();
            else if (degree_dim(input.degree()) == m.rows())
                target = input.degree();
            else if (m.rows() == 6)
                target = 2;
            else
                throw UsageError("ambiguous target degree; pass --to");
        }
        if (degree_dim(target) != m.rows())
            throw std::domain_error("matrix height does not match --to degree");
        result = apply_componentwise(m, target, input);
    } else {
        throw UsageError("--op must be star|dtwedge|it|d|matrix:<file>");
    }
    write_output(out_path, form_to_json(result));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intertwining-operator toolkit for differential forms on flat "
                 "Minkowski, Galilei and Carroll spacetimes"};
    app.require_subcommand(1);

    std::string st_name, kind = "rot", format = "text", op, in_path, out_path = "-";
    int degree = 0, axis = 1, from = 0, to = 0, trials = 50, apply_to = -1;
    std::uint64_t seed = 42;
    bool rotations_only = false, allow_unknown = false, tamper = false;

    auto* gen = app.add_subcommand("gen", "Print a rotation or boost generator matrix");
    gen->add_option("--spacetime", st_name, "minkowski|galilei|carroll");
    gen->add_option("--degree", degree, "form degree 0..4")->required();
    gen->add_option("--kind", kind, "rot|boost")->required();
    gen->add_option("--axis", axis, "axis 1..3")->required();
    gen->add_option("--format", format, "text|json");

    auto* solve = app.add_subcommand("solve", "Solve one intertwiner cell");
    solve->add_option("--spacetime", st_name, "minkowski|galilei|carroll")->required();
    solve->add_option("--from", from, "source degree p")->required();
    solve->add_option("--to", to, "target degree q")->required();
    solve->add_flag("--rotations-only", rotations_only, "restrict to rotation generators");
    solve->add_option("--format", format, "text|json");

    auto* grid = app.add_subcommand("grid", "Dimension/label tables for all 25 cells");
    grid->add_option("--spacetime", st_name, "minkowski|galilei|carroll|all")->default_val("all");
    grid->add_flag("--rotations-only", rotations_only, "restrict to rotation generators");
    grid->add_option("--format", format, "text|json");

    auto* verify = app.add_subcommand("verify", "Run the seeded randomized verification sweep");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--trials", trials, "trials per randomized property");
    verify->add_flag("--allow-unknown", allow_unknown,
                     "downgrade catalog mismatches to warnings");
    verify->add_flag("--tamper", tamper,
                     "negative control: corrupt one catalog matrix before running");

    auto* apply = app.add_subcommand("apply", "Apply an operator to a Form JSON file");
    apply->add_option("--op", op, "star|dtwedge|it|d|matrix:<file>")->required();
    apply->add_option("--spacetime", st_name, "spacetime for --op star");
    apply->add_option("--in", in_path, "input Form JSON file")->required();
    apply->add_option("--out", out_path, "output file ('-' for stdout)");
    apply->add_option("--to", apply_to,
                      "target degree for --op matrix:<file> (default: 4 - degree)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError&) {
        std::cerr << "usage error; see --help\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(st_name, degree, kind, axis, format);
        if (solve->parsed()) return cmd_solve(st_name, from, to, rotations_only, format);
        if (grid->parsed()) return cmd_grid(st_name, rotations_only, format);
        if (verify->parsed()) return cmd_verify(seed, trials, allow_unknown, tamper);
        if (apply->parsed()) return cmd_apply(op, st_name, in_path, out_path, apply_to);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitUsage;
}
