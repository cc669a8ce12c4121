#include "stdiff/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>
#include <utility>
#include <vector>

#include "stdiff/report.hpp"

namespace stdiff::cli {

namespace {

// Raised for unreadable inputs or unwritable outputs.
struct IoFailure {
    std::string message;
};

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoFailure{"cannot read " + p.string()};
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoFailure{"error reading " + p.string()};
    return ss.str();
}

using OutputFile = std::pair<std::string, std::string>;  // file name, contents

// Every file goes to a temporary sibling first and is renamed into place.
void write_outputs(const std::filesystem::path& dir, const std::vector<OutputFile>& files) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoFailure{"cannot create " + dir.string() + ": " + ec.message()};

    std::vector<std::filesystem::path> staged;
    for (const auto& [name, contents] : files) {
        const auto tmp = dir / ("." + name + ".tmp");
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << contents;
        out.close();
        if (!out) {
            std::filesystem::remove(tmp, ec);
            for (const auto& s : staged) std::filesystem::remove(s, ec);
            throw IoFailure{"cannot write " + tmp.string()};
        }
        staged.push_back(tmp);
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::filesystem::rename(staged[i], dir / files[i].first, ec);
        if (ec) throw IoFailure{"cannot rename into " + (dir / files[i].first).string() + ": " + ec.message()};
    }
}

struct Inputs {
    Catalog catalog;
    Constants constants;
    std::vector<FomResult> results;
};

Inputs load(const RunConfig& cfg, std::ostream& err) {
    if (cfg.k_per_category < 1) throw Error("--k must be >= 1");
    Constants constants = default_constants();
    if (cfg.constants_path) constants = load_constants(read_file(*cfg.constants_path));
    Catalog catalog = cfg.records_path ? parse_records(read_file(*cfg.records_path)) : embedded_table1();
    auto results = evaluate_all(catalog, PeriodicTable::standard(), constants);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        for (const auto& w : results[i].warnings) err << "warning: " << catalog[i].name << ": " << w << '\n';
    }
    return {std::move(catalog), constants, std::move(results)};
}

// Maps the error taxonomy onto the exit-code contract.
template <class Body>
int guarded(std::ostream& err, Body body) {
    try {
        return body();
    } catch (const CatalogError& e) {
        for (const auto& d : e.diagnostics()) err << to_string(d) << '\n';
        return kExitInvalid;
    } catch (const IoFailure& e) {
        err << "error: " << e.message << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const UnknownElement& e) {
        err << "UnknownElement: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ParseError& e) {
        err << "ParseError: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

std::string bounds_text(const Inputs& in, RankFilter filter) {
    const auto anchors = anchors_for(in.catalog, in.results);
    return emit_bounds_summary(in.catalog, in.results, anchors, in.constants, filter);
}

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto in = load(cfg, err);
        auto table = emit_table(in.catalog, in.results, cfg.filter);
        auto bounds = bounds_text(in, cfg.filter);
        write_outputs(cfg.output_dir, {{"table.csv", std::move(table)}, {"bounds.txt", std::move(bounds)}});
        out << "wrote table.csv and bounds.txt for " << in.catalog.size() << " records to "
            << cfg.output_dir.string() << '\n';
        return kExitOk;
    });
}

int cmd_figure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto in = load(cfg, err);
        const auto points = figure_points(in.catalog, in.results, cfg.k_per_category);
        auto files = emit_figure(points, anchors_for(in.catalog, in.results));
        write_outputs(cfg.output_dir, {{"figure.svg", std::move(files.svg)}, {"figure.dat", std::move(files.dat)}});
        out << "wrote figure.svg and figure.dat to " << cfg.output_dir.string() << '\n';
        return kExitOk;
    });
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto in = load(cfg, err);
        auto bounds = bounds_text(in, cfg.filter);
        write_outputs(cfg.output_dir, {{"bounds.txt", bounds}});
        out << bounds;
        return kExitOk;
    });
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto in = load(cfg, err);
        out << in.catalog.size() << " records OK\n";
        return kExitOk;
    });
}

int cmd_formula(std::string_view text, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto f = parse_formula(text);
        out << "terms:";
        for (const auto& t : f.terms) out << ' ' << t.symbol << ' ' << t.count;
        out << '\n';
        if (f.charge_ignored) out << "charge ignored: " << f.charge_sign << '\n';
        out << "M = " << format_sig(molar_mass(f).value(), 4) << " kg/mol, nuclei = " << nuclei_per_formula(f)
            << '\n';
        return kExitOk;
    });
}

int run(int argc, char** argv) {
    CLI::App app{"Spacetime-diffusion figure of merit from force-noise experiments"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string records, constants, filter = "all", out_dir = ".";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--records", records, "record CSV (default: embedded reference table)");
        sub->add_option("--constants", constants, "constants file");
        sub->add_option("--k", cfg.k_per_category, "records per category in the figure")->check(CLI::PositiveNumber);
        sub->add_option("--filter", filter, "all | absolute-on-earth")
            ->check(CLI::IsMember({"all", "absolute-on-earth"}));
        sub->add_option("--out", out_dir, "output directory");
    };

    auto* compute = app.add_subcommand("compute", "write table.csv and bounds.txt");
    auto* figure = app.add_subcommand("figure", "write figure.svg and figure.dat");
    auto* bounds = app.add_subcommand("bounds", "write and print bounds.txt");
    auto* validate = app.add_subcommand("validate", "check a record file");
    for (auto* sub : {compute, figure, bounds, validate}) add_common(sub);

    std::string formula_text;
    auto* formula = app.add_subcommand("formula", "inspect a chemical formula");
    formula->add_option("text", formula_text, "formula, e.g. Si3N4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    if (!records.empty()) cfg.records_path = records;
    if (!constants.empty()) cfg.constants_path = constants;
    cfg.filter = *parse_filter(filter);
    cfg.output_dir = out_dir;

    if (*compute) return cmd_compute(cfg, std::cout, std::cerr);
    if (*figure) return cmd_figure(cfg, std::cout, std::cerr);
    if (*bounds) return cmd_bounds(cfg, std::cout, std::cerr);
    if (*validate) return cmd_validate(cfg, std::cout, std::cerr);
    return cmd_formula(formula_text, std::cout, std::cerr);
}

}  // namespace stdiff::cli
