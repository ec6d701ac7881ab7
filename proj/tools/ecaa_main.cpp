// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: pattern/beamset computation, metrics extraction,
// parameter sweeps, the vertical-spacing search, and SVG plot emission.
//
// Exit codes: 0 success, 2 usage or config error, 3 I/O error, 4 numeric or
// data-format error.

#include <cmath>
#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecaa/config_io.hpp"
#include "ecaa/explore.hpp"
#include "ecaa/fields.hpp"
#include "ecaa/hyperbeam.hpp"
#include "ecaa/metrics.hpp"
#include "ecaa/svg_plot.hpp"
#include "ecaa/table_io.hpp"

namespace {

using namespace ecaa;

struct GridSpec {
    double start = -90.0;
    double stop = 90.0;
    double step = 0.05;
};

GridSpec parse_grid_spec(const std::string& text) {
    GridSpec g;
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("grid must be start:stop:step, got '" + text + "'");
    try {
        g.start = std::stod(text.substr(0, first));
        g.stop = std::stod(text.substr(first + 1, second - first - 1));
        g.step = std::stod(text.substr(second + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("grid must be numeric start:stop:step, got '" + text + "'");
    }
    return g;
}

std::pair<double, double> parse_range(const std::string& text) {
    const auto sep = text.find(':');
    if (sep == std::string::npos)
        throw std::invalid_argument("range must be min:max, got '" + text + "'");
    try {
        return {std::stod(text.substr(0, sep)), std::stod(text.substr(sep + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("range must be numeric min:max, got '" + text + "'");
    }
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> values;
    std::string cell;
    std::istringstream in(text);
    while (std::getline(in, cell, ',')) {
        try {
            values.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw std::invalid_argument("sweep value '" + cell + "' is not a number");
        }
    }
    if (values.empty())
        throw std::invalid_argument("--values must list at least one number");
    return values;
}

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string grid_text = "-90:90:0.05";
    std::optional<double> phi_cut;
    std::optional<double> theta_cut;
};

struct CutSetup {
    Scenario scenario;
    CutPlane plane;
    AngleGrid grid;
};

CutSetup make_setup(const CommonArgs& args) {
    CutSetup setup;
    setup.scenario = parse_scenario_with_overrides(read_file(args.config_path), args.overrides);
    const GridSpec g = parse_grid_spec(args.grid_text);
    setup.grid = make_grid(g.start, g.stop, g.step);
    if (args.theta_cut)
        setup.plane = CutPlane{CutPlane::Axis::phi, *args.theta_cut};
    else
        setup.plane = CutPlane{CutPlane::Axis::theta, args.phi_cut.value_or(0.0)};
    return setup;
}

void emit_cut_rows(const PatternCut& cut, std::vector<std::vector<double>>& rows,
                   const std::vector<double>& extra_col_a, const std::vector<double>& extra_col_b,
                   const std::vector<double>& extra_col_c, const std::vector<double>& extra_col_d) {
    rows.reserve(cut.grid.size());
    for (std::size_t i = 0; i < cut.grid.size(); ++i) {
        const bool theta_sweep = cut.plane.sweep == CutPlane::Axis::theta;
        const double theta = theta_sweep ? cut.grid[i] : cut.plane.fixed_deg;
        const double phi = theta_sweep ? cut.plane.fixed_deg : cut.grid[i];
        rows.push_back({theta, phi, extra_col_a[i], extra_col_b[i], extra_col_c[i], extra_col_d[i]});
    }
}

int cmd_pattern(const CommonArgs& args, const std::string& out_path) {
    const CutSetup setup = make_setup(args);
    std::cerr << "lambda = " << fmt_g9(wavelength_m(setup.scenario.config.freq_hz)) << " m\n";
    const PatternCut cut = sample_cut(setup.scenario.config, Excitation{}, setup.scenario.steer,
                                      setup.plane, setup.grid);
    std::vector<double> re(cut.samples.size()), im(cut.samples.size()), mag(cut.samples.size());
    for (std::size_t i = 0; i < cut.samples.size(); ++i) {
        re[i] = cut.samples[i].af.real();
        im[i] = cut.samples[i].af.imag();
        mag[i] = std::abs(cut.samples[i].af);
    }
    const std::vector<double> db = normalize_db(mag);
    std::vector<std::vector<double>> rows;
    emit_cut_rows(cut, rows, re, im, mag, db);
    write_file_atomic(out_path, table_to_csv({"theta_deg", "phi_deg", "re", "im", "mag", "norm_db"}, rows));
    return 0;
}

int cmd_hyper(const CommonArgs& args, double exponent, const std::string& out_path) {
    const CutSetup setup = make_setup(args);
    std::cerr << "lambda = " << fmt_g9(wavelength_m(setup.scenario.config.freq_hz)) << " m\n";
    const PatternCut cut = sample_cut(setup.scenario.config, Excitation{}, setup.scenario.steer,
                                      setup.plane, setup.grid);
    const BeamSet beams = compose_beamset(cut, exponent);
    if (beams.grating_advisory)
        std::cerr << "advisory: hyper exponent r=" << fmt_g9(exponent)
                  << " is below 0.1; grating lobes are likely\n";
    const std::vector<double> db = normalize_db(beams.hyper);
    std::vector<std::vector<double>> rows;
    emit_cut_rows(cut, rows, beams.sum, beams.difference, beams.hyper, db);
    write_file_atomic(out_path,
                      table_to_csv({"theta_deg", "phi_deg", "sum", "diff", "hyper", "hyper_norm_db"}, rows));
    return 0;
}

// The swept angle is whichever angle column actually varies in the file.
int varying_angle_column(const Table& table) {
    const int theta = table.require_column("theta_deg");
    const int phi = table.require_column("phi_deg");
    bool theta_varies = false;
    bool phi_varies = false;
    for (const auto& row : table.rows) {
        theta_varies = theta_varies || row[theta] != table.rows.front()[theta];
        phi_varies = phi_varies || row[phi] != table.rows.front()[phi];
    }
    if (theta_varies == phi_varies)
        throw FormatError(theta_varies ? "both theta_deg and phi_deg vary; cut plane is ambiguous"
                                       : "neither theta_deg nor phi_deg varies");
    return theta_varies ? theta : phi;
}

int level_column(const Table& table) {
    if (table.column("norm_db") >= 0)
        return table.column("norm_db");
    return table.require_column("hyper_norm_db");
}

int magnitude_column(const Table& table) {
    if (table.column("mag") >= 0)
        return table.column("mag");
    return table.require_column("hyper");
}

int cmd_metrics(const std::string& in_path, const std::string& out_path) {
    const Table table = parse_table(read_file(in_path));
    const int angle_col = varying_angle_column(table);
    const int db_col = level_column(table);
    std::vector<double> angles, db;
    angles.reserve(table.rows.size());
    db.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        angles.push_back(row[angle_col]);
        db.push_back(row[db_col]);
    }
    const PatternMetrics metrics = extract_metrics(angles, db);
    const std::string text = metrics_to_text(metrics);
    if (out_path.empty())
        std::cout << text;
    else
        write_file_atomic(out_path, text);
    return 0;
}

int cmd_sweep(const CommonArgs& args, const std::string& param, const std::string& values_text,
              std::optional<double> exponent, const std::string& out_path) {
    const CutSetup setup = make_setup(args);
    SweepSpec spec;
    spec.parameter = sweep_parameter_from_string(param);
    spec.values = parse_values(values_text);
    spec.base.config = setup.scenario.config;
    spec.base.steer = setup.scenario.steer;
    spec.base.exponent = exponent;
    spec.base.plane = setup.plane;
    spec.base.grid = setup.grid;
    if ((exponent && *exponent < 0.1) ||
        (spec.parameter == SweepParameter::exponent &&
         *std::min_element(spec.values.begin(), spec.values.end()) < 0.1))
        std::cerr << "advisory: hyper exponent below 0.1; grating lobes are likely\n";

    const std::vector<SweepRow> rows = run_sweep(spec);
    std::vector<std::vector<double>> cells;
    cells.reserve(rows.size());
    for (const SweepRow& row : rows)
        cells.push_back({row.value, row.metrics.peak_angle, row.metrics.sll_db,
                         row.metrics.fnbw_deg, row.metrics.hpbw_deg,
                         row.metrics.grating_lobe ? 1.0 : 0.0});
    write_file_atomic(out_path, table_to_csv({to_string(spec.parameter), "peak_angle", "sll_db",
                                              "fnbw_deg", "hpbw_deg", "grating_lobe"},
                                             cells));
    const auto best = std::min_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.metrics.sll_db < b.metrics.sll_db;
    });
    std::cout << "best " << to_string(spec.parameter) << "=" << fmt_g9(best->value)
              << " sll_db=" << fmt_g9(best->metrics.sll_db)
              << " fnbw_deg=" << fmt_g9(best->metrics.fnbw_deg)
              << " hpbw_deg=" << fmt_g9(best->metrics.hpbw_deg) << "\n";
    return 0;
}

int cmd_search(const CommonArgs& args, std::uint32_t seed, int iters, const std::string& range_text,
               std::optional<double> exponent, const std::string& out_path) {
    const CutSetup setup = make_setup(args);
    SweepBase base;
    base.config = setup.scenario.config;
    base.steer = setup.scenario.steer;
    base.exponent = exponent;
    base.plane = setup.plane;
    base.grid = setup.grid;
    SearchOptions options;
    options.seed = seed;
    options.iterations = iters;
    const auto [lo, hi] = parse_range(range_text);
    options.dv_min = lo;
    options.dv_max = hi;

    const SearchResult result = search_spacing(base, options);
    std::vector<std::vector<double>> cells;
    cells.reserve(result.trace.size());
    for (const SearchProposal& p : result.trace)
        cells.push_back({static_cast<double>(p.index), p.dv, p.sll_db, p.accepted ? 1.0 : 0.0,
                         p.best_dv, p.best_sll_db, static_cast<double>(p.remaining)});
    write_file_atomic(out_path, table_to_csv({"proposal", "dv_wl", "sll_db", "accepted",
                                              "best_dv_wl", "best_sll_db", "remaining"},
                                             cells));
    std::cout << "initial dv_wl=" << fmt_g9(result.initial_dv)
              << " sll_db=" << fmt_g9(result.initial_sll_db) << "\n";
    std::cout << "best dv_wl=" << fmt_g9(result.final_state.best_dv)
              << " sll_db=" << fmt_g9(result.final_state.best_sll_db)
              << " proposals=" << result.trace.size() << "\n";
    return 0;
}

int cmd_plot(const std::string& in_path, const std::string& style, const std::string& out_path,
             double floor_db) {
    const Table table = parse_table(read_file(in_path));
    const int angle_col = varying_angle_column(table);
    std::vector<double> angles;
    angles.reserve(table.rows.size());
    for (const auto& row : table.rows)
        angles.push_back(row[angle_col]);
    const std::string title = in_path.substr(in_path.find_last_of('/') + 1);

    std::string svg;
    if (style == "rect") {
        const int db_col = level_column(table);
        std::vector<double> db;
        db.reserve(table.rows.size());
        for (const auto& row : table.rows)
            db.push_back(row[db_col]);
        svg = render_rect_plot(angles, db, title, floor_db);
    } else if (style == "polar") {
        const int mag_col = magnitude_column(table);
        std::vector<double> mag;
        mag.reserve(table.rows.size());
        for (const auto& row : table.rows)
            mag.push_back(row[mag_col]);
        svg = render_polar_plot(angles, mag, title);
    } else {
        throw std::invalid_argument("plot style must be 'rect' or 'polar'");
    }
    write_file_atomic(out_path, svg);
    return 0;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON array configuration")->required();
    cmd->add_option("--set", args.overrides, "key=value config override (repeatable)");
    cmd->add_option("--grid", args.grid_text, "sweep grid start:stop:step in degrees");
    auto* phi = cmd->add_option("--phi-cut", args.phi_cut, "sweep theta at this fixed phi (deg)");
    cmd->add_option("--theta-cut", args.theta_cut, "sweep phi at this fixed theta (deg)")
        ->excludes(phi);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptical-cylindrical array pattern synthesis and hyper beamforming"};
    app.require_subcommand(1);

    CommonArgs pattern_args, hyper_args, sweep_args, search_args;
    std::string pattern_out, hyper_out, metrics_in, metrics_out, sweep_out, search_out;
    std::string sweep_param, sweep_values, plot_in, plot_style = "rect", plot_out;
    std::string search_range = "0.1:1.0";
    double hyper_exponent = 1.0;
    std::optional<double> sweep_exponent, search_exponent;
    std::uint32_t search_seed = 1;
    int search_iters = 500;
    double plot_floor = -60.0;

    CLI::App* pattern = app.add_subcommand("pattern", "sample the array factor over a cut");
    add_common(pattern, pattern_args);
    pattern->add_option("--out", pattern_out, "output CSV path")->required();

    CLI::App* hyper = app.add_subcommand("hyper", "sample sum/difference/hyper beams over a cut");
    add_common(hyper, hyper_args);
    hyper->add_option("--exponent", hyper_exponent, "hyper beam exponent r > 0")->required();
    hyper->add_option("--out", hyper_out, "output CSV path")->required();

    CLI::App* metrics = app.add_subcommand("metrics", "extract SLL/FNBW/HPBW from a data file");
    metrics->add_option("--in", metrics_in, "pattern or hyper CSV")->required();
    metrics->add_option("--out", metrics_out, "output path (default: stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "metrics versus one swept parameter");
    add_common(sweep, sweep_args);
    sweep->add_option("--param", sweep_param, "elements|rings|major_axis|spacing|exponent")
        ->required();
    sweep->add_option("--values", sweep_values, "comma-separated parameter values")->required();
    sweep->add_option("--exponent", sweep_exponent, "evaluate hyper-beam metrics at this r");
    sweep->add_option("--out", sweep_out, "output CSV path")->required();

    CLI::App* search = app.add_subcommand("search-dv", "random search over the vertical spacing");
    add_common(search, search_args);
    search->add_option("--seed", search_seed, "RNG seed");
    search->add_option("--iters", search_iters, "non-improving proposal budget");
    search->add_option("--range", search_range, "proposal range min:max in wavelengths");
    search->add_option("--exponent", search_exponent, "evaluate hyper-beam metrics at this r");
    search->add_option("--out", search_out, "trace CSV path")->required();

    CLI::App* plot = app.add_subcommand("plot", "render a data file as an SVG plot");
    plot->add_option("--in", plot_in, "pattern or hyper CSV")->required();
    plot->add_option("--style", plot_style, "rect|polar");
    plot->add_option("--floor-db", plot_floor, "dB floor for rect plots");
    plot->add_option("--out", plot_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(pattern))
            return cmd_pattern(pattern_args, pattern_out);
        if (app.got_subcommand(hyper))
            return cmd_hyper(hyper_args, hyper_exponent, hyper_out);
        if (app.got_subcommand(metrics))
            return cmd_metrics(metrics_in, metrics_out);
        if (app.got_subcommand(sweep))
            return cmd_sweep(sweep_args, sweep_param, sweep_values, sweep_exponent, sweep_out);
        if (app.got_subcommand(search))
            return cmd_search(search_args, search_seed, search_iters, search_range,
                              search_exponent, search_out);
        if (app.got_subcommand(plot))
            return cmd_plot(plot_in, plot_style, plot_out, plot_floor);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
