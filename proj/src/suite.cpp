#include "xcmos/suite.hpp"

#include <cmath>
#include <utility>

namespace xcmos {

namespace {

ResultRow warning_row(const std::string& benchmark, const std::string& device,
                      const std::string& reason) {
    ResultRow row;
    row.benchmark = benchmark;
    row.device = device;
    row.note = "skipped: " + reason;
    return row;
}

void put_common(ResultRow& row, const DeviceParams& dev) {
    row.metrics["spin"] = is_spintronic(dev.cls) ? 1.0 : 0.0;
}

ResultRow alu_row(const std::string& benchmark, const DeviceParams& dev,
                  const CircuitMetrics& c) {
    ResultRow row;
    row.benchmark = benchmark;
    row.device = dev.name;
    row.metrics["t_op"] = c.t_op;
    row.metrics["E_op"] = c.E_op;
    row.metrics["E_dyn"] = c.E_dyn;
    row.metrics["E_leak"] = c.E_leak;
    row.metrics["A_circ"] = c.A_circ;
    row.metrics["p_density"] = c.p_density;
    row.metrics["logic_depth"] = c.logic_depth;
    row.metrics["EDP"] = c.t_op * c.E_op;
    put_common(row, dev);
    return row;
}

NetlistSpec netlist_for(const SuiteOptions& opts, CircuitStyle style) {
    if (!opts.netlist.fa_gates.empty()) return opts.netlist;
    NetlistSpec n = NetlistSpec::for_style(style);
    n.table = opts.netlist.table;
    n.area_overhead = opts.netlist.area_overhead;
    n.bits = opts.netlist.bits;
    return n;
}

void run_alu(const DeviceLibrary& lib, const SuiteOptions& opts, ResultSet& rs) {
    for (const auto& dev : lib.devices) {
        const CircuitStyle style = natural_style(dev.cls);
        try {
            const CircuitMetrics c =
                alu32_metrics(dev, style, opts.activity, netlist_for(opts, style));
            rs.rows.push_back(alu_row("alu", dev, c));
        } catch (const Error& e) {
            rs.rows.push_back(warning_row("alu", dev.name, e.what()));
        }
    }
}

void run_throughput(const DeviceLibrary& lib, const SuiteOptions& opts,
                    ResultSet& rs) {
    for (const auto& dev : lib.devices) {
        try {
            const CircuitStyle style = natural_style(dev.cls);
            const CircuitMetrics c =
                alu32_metrics(dev, style, opts.activity, netlist_for(opts, style));
            const ThroughputResult t = throughput_density(c, opts.p_cap);

            ResultRow row;
            row.benchmark = "throughput";
            row.device = dev.name;
            row.metrics["theta_unconstrained"] = t.theta_unconstrained;
            row.metrics["theta_capped"] = t.theta_capped;
            row.metrics["limited_by"] =
                t.limited_by == ThroughputLimiter::Power ? 1.0 : 0.0;
            row.metrics["p_cap"] = t.p_cap;
            row.metrics["p_density"] = c.p_density;
            row.metrics["E_op"] = c.E_op;

            const CircuitStyle pstyle = natural_pipelined_style(dev.cls);
            const CircuitMetrics pbase =
                alu32_metrics(dev, pstyle, opts.activity, netlist_for(opts, pstyle));
            const CircuitMetrics piped = pipeline_transform(pbase, pstyle);
            const ThroughputResult tp = throughput_density(piped, opts.p_cap);
            row.metrics["theta_capped_pipelined"] = tp.theta_capped;
            row.metrics["limited_by_pipelined"] =
                tp.limited_by == ThroughputLimiter::Power ? 1.0 : 0.0;
            put_common(row, dev);
            rs.rows.push_back(std::move(row));
            rs.rows.push_back(alu_row("alu_pipelined", dev, piped));
        } catch (const Error& e) {
            rs.rows.push_back(warning_row("throughput", dev.name, e.what()));
        }
    }
}

void run_wire(const DeviceLibrary& lib, const SuiteOptions& opts, ResultSet& rs) {
    for (const auto& dev : lib.devices) {
        try {
            const RepeaterParams rep = repeater_for_device(dev);
            ResultRow row;
            row.benchmark = "wire";
            row.device = dev.name;
            row.metrics["length"] = opts.wire_length;
            row.metrics["wire_delay"] =
                repeated_wire_delay(lib.wire, rep, opts.wire_length);
            row.metrics["wire_energy"] =
                repeated_wire_energy(lib.wire, rep, opts.wire_length);
            put_common(row, dev);
            rs.rows.push_back(std::move(row));
        } catch (const Error& e) {
            rs.rows.push_back(warning_row("wire", dev.name, e.what()));
        }
    }
}

void run_span(const DeviceLibrary& lib, const SuiteOptions& opts, ResultSet& rs) {
    for (const auto& dev : lib.devices) {
        try {
            const RepeaterParams rep = repeater_for_device(dev);
            const double t_int = intrinsic_delay(dev, opts.netlist.table);
            const double a_gate =
                opts.netlist.table.n(GateKind::NAND2) * dev.A_dev;
            const SpanResult s = span_of_control(t_int, lib.wire, rep, a_gate);
            ResultRow row;
            row.benchmark = "span";
            row.device = dev.name;
            row.metrics["t_int"] = t_int;
            row.metrics["T_clk"] = s.T_clk;
            row.metrics["l_max"] = s.l_max;
            row.metrics["n_gates"] = s.n_gates;
            row.metrics["A_gate"] = a_gate;
            put_common(row, dev);
            rs.rows.push_back(std::move(row));
        } catch (const Error& e) {
            rs.rows.push_back(warning_row("span", dev.name, e.what()));
        }
    }
}

void run_cnn(const DeviceLibrary& lib, const SuiteOptions& opts, ResultSet& rs) {
    if (lib.devices.empty()) return;
    std::vector<Pattern> patterns;
    TemplateWeights weights;
    RecallStats stats;
    try {
        patterns = resolve_patterns(opts);
        weights = hebbian_weights(patterns, opts.cnn);
        // the functional simulation is device-independent; cost models
        // reuse one recall run
        stats = simulate_recall(weights, patterns, opts.cnn, opts.seed);
    } catch (const Error& e) {
        rs.rows.push_back(warning_row("cnn", "*", e.what()));
        return;
    }

    auto add_row = [&](const DeviceParams& dev, CnnKind kind,
                       const std::string& label) {
        try {
            CnnCostModel cost;
            cost.kind = kind;
            cost.device = dev;
            cost.table = opts.netlist.table;
            const auto [e_assoc, t_assoc] =
                cnn_energy_delay(cost, opts.cnn, stats);
            ResultRow row;
            row.benchmark = "cnn";
            row.device = label;
            row.metrics["pixel_accuracy"] = stats.pixel_accuracy;
            row.metrics["trials_recalled"] = stats.trials_recalled;
            row.metrics["settle_steps"] = stats.settle_steps;
            row.metrics["settle_time_tau"] = stats.settle_time_tau;
            row.metrics["E_assoc"] = e_assoc;
            row.metrics["t_assoc"] = t_assoc;
            row.metrics["accuracy_pass"] =
                stats.pixel_accuracy >= kRecallAccuracyGate ? 1.0 : 0.0;
            put_common(row, dev);
            rs.rows.push_back(std::move(row));
        } catch (const Error& e) {
            rs.rows.push_back(warning_row("cnn", label, e.what()));
        }
    };

    for (const auto& dev : lib.devices) {
        CnnKind kind;
        if (!cnn_kind_for_class(dev.cls, &kind)) {
            rs.rows.push_back(warning_row(
                "cnn", dev.name,
                std::string("no CNN cost model for class ") + to_string(dev.cls)));
            continue;
        }
        add_row(dev, kind, dev.name);
        if (kind == CnnKind::Analog && dev.extra_or("cnn_digital", 0.0) > 0.5) {
            add_row(dev, CnnKind::DigitalCMOSLike, dev.name + "-digital");
        }
    }
}

} // namespace

std::vector<Pattern> default_patterns() {
    constexpr int n = 16;
    std::vector<Pattern> out;

    Pattern cross(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cross[i * n + j] =
                ((i == 7 || i == 8) || (j == 7 || j == 8)) ? 1.0 : -1.0;
    out.push_back(cross);

    Pattern ring(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool in_outer = i >= 2 && i <= 13 && j >= 2 && j <= 13;
            const bool in_inner = i >= 5 && i <= 10 && j >= 5 && j <= 10;
            ring[i * n + j] = (in_outer && !in_inner) ? 1.0 : -1.0;
        }
    out.push_back(ring);

    Pattern stripes(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            stripes[i * n + j] = ((i + j) % 8 < 4) ? 1.0 : -1.0;
    out.push_back(stripes);

    Pattern blocks(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            blocks[i * n + j] = ((i < 8) != (j < 8)) ? 1.0 : -1.0;
    out.push_back(blocks);

    return out;
}

std::vector<Pattern> resolve_patterns(const SuiteOptions& opts) {
    if (opts.patterns_dir.empty()) {
        if (opts.cnn.rows != 16 || opts.cnn.cols != 16) {
            fail(Errc::InvalidParameter,
                 "built-in patterns are 16x16; pass a pattern directory for "
                 "other grids");
        }
        return default_patterns();
    }
    return load_pattern_dir(opts.patterns_dir, opts.cnn.rows, opts.cnn.cols);
}

ResultSet run_suite(const DeviceLibrary& lib, const std::string& suite,
                    const SuiteOptions& opts) {
    ResultSet rs;
    if (suite == "alu") {
        run_alu(lib, opts, rs);
    } else if (suite == "throughput") {
        run_throughput(lib, opts, rs);
    } else if (suite == "wire") {
        run_wire(lib, opts, rs);
    } else if (suite == "span") {
        run_span(lib, opts, rs);
    } else if (suite == "cnn") {
        run_cnn(lib, opts, rs);
    } else if (suite == "all") {
        run_alu(lib, opts, rs);
        run_throughput(lib, opts, rs);
        run_wire(lib, opts, rs);
        run_span(lib, opts, rs);
        run_cnn(lib, opts, rs);
    } else {
        fail(Errc::Validation,
             "unknown suite '" + suite +
                 "' (expected alu|throughput|wire|span|cnn|all)");
    }
    rs.sort();
    return rs;
}

std::pair<std::string, std::string> default_axes(const std::string& suite) {
    if (suite == "wire") return {"wire_delay", "wire_energy"};
    if (suite == "span") return {"t_int", "n_gates"};
    if (suite == "throughput") return {"theta_capped", "p_density"};
    if (suite == "cnn") return {"t_assoc", "E_assoc"};
    return {"t_op", "E_op"};
}

} // namespace xcmos
