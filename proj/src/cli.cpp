#include "tropical/cli.hpp"

#include "tropical/containment.hpp"
#include "tropical/oracle.hpp"
#include "tropical/plot.hpp"
#include "tropical/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace tropical::cli {

namespace {

struct InputError : Error {
    using Error::Error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputError("cannot write '" + path + "'");
}

struct Inputs {
    std::optional<std::size_t> vars;
    bool relaxed = false;

    Polynomial load(const std::string &path) const {
        try {
            return parse_polynomial(read_file(path), vars, {.allow_negative_exponents = relaxed});
        } catch (const InputError &) {
            throw;
        } catch (const Error &e) {
            throw InputError(path + ": " + e.what());
        }
    }

    std::pair<Polynomial, Polynomial> load_pair(const std::string &fp, const std::string &gp) const {
        auto f = load(fp);
        auto g = load(gp);
        if (f.num_vars() != g.num_vars())
            throw InputError("dimension mismatch: " + std::to_string(f.num_vars()) + " vs " +
                             std::to_string(g.num_vars()) + " variables");
        return {std::move(f), std::move(g)};
    }
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Containment of tropical hypersurfaces via Newton polyhedra", "tropcheck"};
    app.require_subcommand(1);

    Inputs inputs;
    std::size_t vars = 0;
    app.add_option("--vars", vars, "Number of variables for text inputs")->check(CLI::PositiveNumber);
    app.add_flag("--relaxed", inputs.relaxed, "Accept negative exponents");

    std::string f_path, g_path, json_path, out_path, viewport_text;
    bool witness = false, all = false;
    std::size_t samples = 100;
    std::uint64_t seed = 0;

    auto *check = app.add_subcommand("check", "Decide whether Trop(f) is contained in Trop(g)");
    check->add_option("f", f_path)->required();
    check->add_option("g", g_path)->required();
    check->add_flag("--witness", witness, "Search for a point of Trop(f) outside Trop(g)");
    check->add_flag("--all", all, "List every failing vertex");
    check->add_option("--json", json_path, "Write the report to this file");

    auto *newton = app.add_subcommand("newton", "Print the dual description of N(f)");
    newton->add_option("f", f_path)->required();
    newton->add_option("--json", json_path, "Write the description to this file");

    auto *oracle = app.add_subcommand("oracle", "Check containment by sampling Trop(f)");
    oracle->add_option("f", f_path)->required();
    oracle->add_option("g", g_path)->required();
    oracle->add_option("--samples", samples, "Extra random samples (n >= 2)");
    oracle->add_option("--seed", seed, "Seed for the extra samples");

    auto *plot = app.add_subcommand("plot", "Draw Trop(f) and N(f) as SVG");
    plot->add_option("f", f_path)->required();
    plot->add_option("g", g_path);
    plot->add_option("--viewport", viewport_text, "xmin,ymin,xmax,ymax");
    plot->add_option("-o,--output", out_path, "SVG output path")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    if (!argv.empty())
        argv.pop_back(); // program name
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kContained;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    if (vars > 0)
        inputs.vars = vars;

    try {
        if (*check) {
            auto [f, g] = inputs.load_pair(f_path, g_path);
            const auto report =
                check_containment(f, g, {.search_witness = witness, .all_failing = all});
            const std::string doc = report_json(report);
            if (json_path.empty()) {
                out << doc;
            } else {
                write_file(json_path, doc);
                out << (report.contained() ? "contained" : "not contained") << "\n";
            }
            return report.contained() ? kContained : kNotContained;
        }
        if (*newton) {
            const std::string doc = newton_json(newton_polyhedron(inputs.load(f_path)));
            if (json_path.empty())
                out << doc;
            else
                write_file(json_path, doc);
            return kContained;
        }
        if (*oracle) {
            auto [f, g] = inputs.load_pair(f_path, g_path);
            const auto verdict = oracle_check(f, g, samples, seed);
            out << oracle_json(verdict);
            return verdict.agrees_contained() ? kContained : kNotContained;
        }
        if (*plot) {
            Viewport view;
            if (!viewport_text.empty()) {
                auto v = parse_viewport(viewport_text);
                if (!v)
                    throw InputError("bad viewport '" + viewport_text +
                                     "', expected xmin,ymin,xmax,ymax with xmin<xmax, ymin<ymax");
                view = *v;
            }
            if (g_path.empty()) {
                write_file(out_path, render_svg(inputs.load(f_path), nullptr, view));
            } else {
                const auto [f, g] = inputs.load_pair(f_path, g_path);
                write_file(out_path, render_svg(f, &g, view));
            }
            return kContained;
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kUsageError;
}

} // namespace tropical::cli
