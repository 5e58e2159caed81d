#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xcmos/suite.hpp"

namespace {

#ifndef XCMOS_DEFAULT_LIBRARY
#define XCMOS_DEFAULT_LIBRARY "data/devices.json"
#endif

struct SweepSpec {
    std::string field;
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;
};

SweepSpec parse_sweep(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
        xcmos::fail(xcmos::Errc::Validation,
                    "--sweep expects field=start:stop:steps");
    }
    SweepSpec s;
    s.field = text.substr(0, eq);
    const std::string rest = text.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        xcmos::fail(xcmos::Errc::Validation,
                    "--sweep expects field=start:stop:steps");
    }
    try {
        s.start = std::stod(rest.substr(0, c1));
        s.stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
        s.steps = std::stoi(rest.substr(c2 + 1));
    } catch (const std::exception&) {
        xcmos::fail(xcmos::Errc::Validation,
                    "--sweep values must be numeric");
    }
    if (s.steps < 1) {
        xcmos::fail(xcmos::Errc::Validation, "--sweep steps must be >= 1");
    }
    return s;
}

// Sweep fields are given in CLI units (um, W/cm^2); rows carry SI.
void apply_sweep_point(xcmos::SuiteOptions& opts, const std::string& field,
                       double value, std::string* metric, double* si_value) {
    if (field == "length") {
        opts.wire_length = value * 1e-6;
        *metric = "length";
        *si_value = opts.wire_length;
    } else if (field == "p_cap") {
        opts.p_cap = value * 1e4;
        *metric = "p_cap";
        *si_value = opts.p_cap;
    } else if (field == "activity") {
        opts.activity = value;
        *metric = "activity";
        *si_value = value;
    } else if (field == "noise") {
        opts.cnn.noise_fraction = value;
        *metric = "noise_fraction";
        *si_value = value;
    } else {
        xcmos::fail(xcmos::Errc::Validation,
                    "--sweep field must be length|p_cap|activity|noise");
    }
}

int exit_code_for(xcmos::Errc code) {
    switch (code) {
        case xcmos::Errc::Parse:
            return 2;
        case xcmos::Errc::Internal:
            return 3;
        default:
            return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beyond-CMOS device benchmarking engine"};
    app.get_formatter()->column_width(36);

    std::string suite;
    app.add_option("suite", suite, "alu | throughput | wire | span | cnn | all")
        ->required();

    std::string library_path;
    app.add_option("--library", library_path,
                   "device library JSON (default: $XCMOS_LIB, then built-in path)");

    double p_cap_wcm2 = 10.0;
    app.add_option("--p-cap", p_cap_wcm2, "power density cap, W/cm^2")
        ->capture_default_str();
    double length_um = 100.0;
    app.add_option("--length", length_um, "interconnect length, um")
        ->capture_default_str();
    double activity = 0.1;
    app.add_option("--activity", activity, "static-logic switching probability")
        ->capture_default_str();
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "CNN trial seed")->capture_default_str();

    std::string csv_path, svg_path, svg_x, svg_y;
    app.add_option("--csv", csv_path, "write results as CSV (default: stdout)");
    app.add_option("--svg", svg_path, "write a log-log scatter SVG");
    app.add_option("--svg-x", svg_x, "x metric for --svg (default per suite)");
    app.add_option("--svg-y", svg_y, "y metric for --svg (default per suite)");

    std::string sweep_text;
    app.add_option("--sweep", sweep_text,
                   "sweep an option: field=start:stop:steps "
                   "(length um | p_cap W/cm^2 | activity | noise)");

    std::string netlist_path, patterns_dir;
    app.add_option("--netlist", netlist_path, "adder netlist JSON override");
    app.add_option("--patterns", patterns_dir, "directory of CNN pattern files");

    int cnn_trials = 100;
    app.add_option("--cnn-trials", cnn_trials, "CNN recall trials")
        ->capture_default_str();
    double cnn_noise = 0.10;
    app.add_option("--cnn-noise", cnn_noise, "CNN input noise fraction")
        ->capture_default_str();
    int weight_bits = 4;
    app.add_option("--cnn-bits", weight_bits, "CNN synapse weight bits")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (library_path.empty()) {
            const char* env = std::getenv("XCMOS_LIB");
            library_path = env != nullptr ? env : XCMOS_DEFAULT_LIBRARY;
        }
        const xcmos::DeviceLibrary lib = xcmos::load_device_library(library_path);

        xcmos::SuiteOptions opts;
        opts.p_cap = p_cap_wcm2 * 1e4;
        opts.wire_length = length_um * 1e-6;
        opts.activity = activity;
        opts.seed = seed;
        opts.patterns_dir = patterns_dir;
        opts.cnn.trials = cnn_trials;
        opts.cnn.noise_fraction = cnn_noise;
        opts.cnn.weight_bits = weight_bits;
        if (!netlist_path.empty()) {
            opts.netlist = xcmos::load_netlist(netlist_path);
        }

        xcmos::ResultSet rs;
        if (sweep_text.empty()) {
            rs = xcmos::run_suite(lib, suite, opts);
        } else {
            const SweepSpec sweep = parse_sweep(sweep_text);
            for (int i = 0; i < sweep.steps; ++i) {
                const double v =
                    sweep.steps == 1
                        ? sweep.start
                        : sweep.start + (sweep.stop - sweep.start) * i /
                                            (sweep.steps - 1);
                xcmos::SuiteOptions point = opts;
                std::string metric;
                double si = 0.0;
                apply_sweep_point(point, sweep.field, v, &metric, &si);
                xcmos::ResultSet part = xcmos::run_suite(lib, suite, point);
                for (auto& row : part.rows) {
                    if (!row.metrics.empty()) row.metrics[metric] = si;
                    rs.rows.push_back(std::move(row));
                }
            }
            rs.sort();
        }

        if (!csv_path.empty()) {
            xcmos::emit_csv(rs, csv_path);
        } else {
            xcmos::emit_csv(rs, std::cout);
        }
        if (!svg_path.empty()) {
            auto [ax, ay] = xcmos::default_axes(suite);
            if (!svg_x.empty()) ax = svg_x;
            if (!svg_y.empty()) ay = svg_y;
            xcmos::emit_svg_scatter(rs, ax, ay, svg_path);
        }
        return 0;
    } catch (const xcmos::Error& e) {
        std::cerr << "error (" << xcmos::to_string(e.code()) << "): " << e.what()
                  << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
