// Acceptance suite: every release gate in one binary, one PASS/FAIL
// line per criterion. Runs against the shipped default library and the
// bench CLI binary (paths passed on the command line).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/ndr_cycle_count.hpp"
#include "oracles/spin_diffusion_fd.hpp"
#include "xcmos/suite.hpp"

using namespace xcmos;

namespace {

struct Gate {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c);
    return buf;
}

// ---- criterion 1: spin-transport analytic form vs diffusion ladder ---------

Gate check_spin_oracle() {
    Gate g{"Eq-oracle spin transport: analytic vs 1D finite difference"};
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> len(20e-9, 1e-6);
    std::uniform_real_distribution<double> sf(50e-9, 2e-6);

    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        SpinChannelParams ch;
        ch.beta = 0.8;
        ch.l_c = len(rng);
        ch.l_g = len(rng);
        ch.l_sf = sf(rng);
        ch.rho = 3e-8;
        ch.cross_section = 9e-17;
        const double analytic = asl_spin_current_density(ch, 1e10);
        const double fd = xcmos::testing::spin_current_density_fd(ch, 1e10);
        worst = std::max(worst, std::abs(fd - analytic) / analytic);
    }

    SpinChannelParams lim;
    lim.beta = 0.8;
    lim.l_c = 0.0;
    lim.l_g = 300e-9;
    lim.l_sf = 400e-9;
    lim.rho = 3e-8;
    lim.cross_section = 9e-17;
    const double short_err =
        std::abs(asl_spin_current_density(lim, 1e10) - 0.8e10) / 0.8e10;

    lim.l_c = 200e-9;
    lim.l_sf = 1e4 * std::max(lim.l_c, lim.l_g);
    const double divider = 0.8e10 / (1.0 + lim.l_c / lim.l_g);
    const double long_err =
        std::abs(asl_spin_current_density(lim, 1e10) - divider) / divider;

    g.pass = worst <= 0.01 && short_err <= 1e-3 && long_err <= 1e-3;
    g.detail = fmt("max rel err %.3g over 50 tuples; limits %.2g / %.2g", worst,
                   short_err, long_err);
    return g;
}

// ---- criterion 2: repeated-wire closed form vs Elmore optimizer ------------

Gate check_repeater_oracle() {
    Gate g{"Eq-oracle repeater insertion: closed form vs brute force"};
    std::mt19937_64 rng(202);
    auto logu = [&rng](double lo, double hi) {
        std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
        return std::exp(u(rng));
    };

    double worst = 0.0;
    int done = 0;
    while (done < 100) {
        WireParams w{logu(1e5, 1e9), logu(1e-12, 1e-8)};
        RepeaterParams r{logu(1e3, 1e7), logu(1e-17, 1e-13), 0.0, 0.7};
        const double l = logu(1e-5, 1e-1);
        const double n_star =
            l * std::sqrt(0.4 * w.r_w * w.c_w / (0.7 * r.R0 * r.C0));
        if (n_star < 2.0) continue; // outside the repeated-wire regime
        const RepeaterSolution sol = repeater_oracle_minimize(w, r, l);
        const double closed = repeated_wire_delay(w, r, l);
        worst = std::max(worst, std::abs(sol.t_opt - closed) / closed);
        ++done;
    }

    const WireParams w{1e8, 2e-10};
    const RepeaterParams r{1e4, 1e-16, 0.0, 0.7};
    const double coeff = repeated_wire_delay(w, r, 1.0) /
                         std::sqrt(r.R0 * r.C0 * w.r_w * w.c_w);
    const double coeff_err = std::abs(coeff - 2.458) / 2.458;

    g.pass = worst <= 0.05 && coeff_err <= 1e-3;
    g.detail = fmt("max rel err %.3g over 100 tuples; slope coeff %.6g", worst,
                   coeff);
    return g;
}

// ---- criterion 3: clock-disable energy is exactly 1/32 ----------------------

Gate check_ndr_clocking(const DeviceLibrary& lib) {
    Gate g{"NDR clock disable: exact 1/32 of constant clocking"};
    int checked = 0;
    bool ok = true;
    for (const auto& dev : lib.devices) {
        if (dev.cls != DeviceClass::NDR) continue;
        ++checked;
        const NetlistSpec net = NetlistSpec::for_style(CircuitStyle::NdrClocked);
        const GateProvider gates = make_gate_provider(dev);
        const CircuitMetrics c =
            alu32_metrics(gates, CircuitStyle::NdrClocked, 0.1, net);
        const double reference =
            xcmos::testing::ndr_constant_clocking_reference(net).dynamic_energy(
                gates);
        if (reference != 32.0 * c.E_dyn) {
            ok = false;
            g.detail = "mismatch for device " + dev.name;
        }
    }
    g.pass = ok && checked > 0;
    if (g.pass) g.detail = fmt("%g devices, bitwise 32:1", checked);
    return g;
}

// ---- criterion 4: throughput law and pipelining monotonicity ----------------

Gate check_throughput_law(const DeviceLibrary& lib) {
    Gate g{"throughput law at 10 W/cm^2 and pipelining monotonicity"};
    const double p_cap = 1e5; // W/m^2
    bool ok = true;
    std::string why;
    int checked = 0;
    for (const auto& dev : lib.devices) {
        try {
            const CircuitStyle style = natural_style(dev.cls);
            const CircuitMetrics c = alu32_metrics(dev, style, 0.1);
            const ThroughputResult t = throughput_density(c, p_cap);
            const double expect =
                std::min(t.theta_unconstrained, p_cap / c.E_op);
            if (t.theta_capped != expect) {
                ok = false;
                why = dev.name + ": capped throughput off the law";
                break;
            }
            const bool power_bound = p_cap / c.E_op < t.theta_unconstrained;
            if (power_bound != (t.limited_by == ThroughputLimiter::Power)) {
                ok = false;
                why = dev.name + ": limiter flag inconsistent";
                break;
            }

            const CircuitStyle pstyle = natural_pipelined_style(dev.cls);
            const CircuitMetrics base = alu32_metrics(dev, pstyle, 0.1);
            const CircuitMetrics piped = pipeline_transform(base, pstyle);
            if (piped.E_op != base.E_op) {
                ok = false;
                why = dev.name + ": pipelining changed energy per op";
                break;
            }
            const ThroughputResult tb = throughput_density(base, p_cap);
            const ThroughputResult tp = throughput_density(piped, p_cap);
            if (tp.theta_capped < tb.theta_capped) {
                ok = false;
                why = dev.name + ": pipelining reduced capped throughput";
                break;
            }
            if (tb.limited_by == ThroughputLimiter::Power &&
                tp.theta_capped != tb.theta_capped) {
                ok = false;
                why = dev.name + ": power-limited cap moved under pipelining";
                break;
            }
            ++checked;
        } catch (const Error& e) {
            ok = false;
            why = dev.name + ": " + e.what();
            break;
        }
    }
    g.pass = ok && checked == static_cast<int>(lib.devices.size());
    g.detail = ok ? fmt("%g devices", checked) : why;
    return g;
}

// ---- criterion 5: polarization delay extends the span -----------------------

Gate check_ferroelectric_span(const DeviceLibrary& lib) {
    Gate g{"polarization delay strictly extends the span of control"};
    int checked = 0;
    bool ok = true;
    for (const auto& dev : lib.devices) {
        if (dev.cls != DeviceClass::Ferroelectric) continue;
        ++checked;
        DeviceParams fast = dev;
        fast.t_p = 0.0;
        DeviceParams slow = dev;
        slow.t_p = 10e-12;
        const double a_gate = GateCostTable{}.n(GateKind::NAND2) * dev.A_dev;
        const SpanResult s0 = span_of_control(
            intrinsic_delay(fast), lib.wire, repeater_for_device(fast), a_gate);
        const SpanResult s1 = span_of_control(
            intrinsic_delay(slow), lib.wire, repeater_for_device(slow), a_gate);
        if (!(s1.n_gates > s0.n_gates)) {
            ok = false;
            g.detail = dev.name + ": span did not grow";
        }
    }
    g.pass = ok && checked > 0;
    if (g.pass) g.detail = fmt("%g ferroelectric devices", checked);
    return g;
}

// ---- criterion 6: associative recall accuracy --------------------------------

Gate check_cnn_recall() {
    Gate g{"CNN recall: >= 90% pixel accuracy at 10% noise"};
    const double t0 = now_seconds();
    CnnConfig cfg; // 16x16, radius 3, 4-bit, 10% noise, 100 trials
    const auto patterns = default_patterns();
    const TemplateWeights tw = hebbian_weights(patterns, cfg);
    const RecallStats stats = simulate_recall(tw, patterns, cfg, 1);
    const double dt = now_seconds() - t0;
    g.pass = stats.pixel_accuracy >= 0.90 && dt < 60.0;
    g.detail = fmt("pixel accuracy %.4f over 100 trials in %.1f s",
                   stats.pixel_accuracy, dt);
    return g;
}

// ---- criterion 7: default-library qualitative orderings ----------------------

Gate check_default_orderings(const DeviceLibrary& lib) {
    Gate g{"default library: energy/delay orderings"};
    SuiteOptions opts;
    const ResultSet alu = run_suite(lib, "alu", opts);
    const ResultSet cnn = run_suite(lib, "cnn", opts);

    auto metric = [](const ResultSet& rs, const std::string& bench,
                     const std::string& device, const std::string& name) {
        for (const auto& row : rs.rows) {
            if (row.benchmark == bench && row.device == device) {
                return row.metrics.at(name);
            }
        }
        fail(Errc::Internal, "missing row " + bench + "/" + device);
    };

    std::vector<std::string> problems;

    // (a) voltage-controlled spin beats current-driven spin on energy
    for (const char* vc : {"MEMTJ", "SWD", "CoMET"}) {
        for (const char* cd : {"ASL", "CSL", "mLogic"}) {
            if (!(metric(alu, "alu", vc, "E_op") < metric(alu, "alu", cd, "E_op"))) {
                problems.push_back(std::string("E_op ") + vc + " !< " + cd);
            }
        }
    }

    // (b) every spintronic ALU is slower than every charge-based ALU
    double charge_max = 0.0, spin_min = 1e30;
    for (const auto& row : alu.rows) {
        if (row.benchmark != "alu" || row.metrics.empty()) continue;
        const double t = row.metrics.at("t_op");
        if (row.metrics.at("spin") > 0.5) {
            spin_min = std::min(spin_min, t);
        } else {
            charge_max = std::max(charge_max, t);
        }
    }
    if (!(spin_min > charge_max)) {
        problems.push_back(fmt("spin min t_op %.3g !> charge max %.3g", spin_min,
                               charge_max));
    }

    // (c) structural collector/isolation gains order the CSL variants
    const double t_yig = metric(alu, "alu", "CSL_YIG", "t_op");
    const double t_cc = metric(alu, "alu", "CSL_CC", "t_op");
    const double t_base = metric(alu, "alu", "CSL", "t_op");
    if (!(t_yig < t_cc && t_cc < t_base)) {
        problems.push_back("CSL variant delay ordering broken");
    }

    // (d) at least one spintronic CNN beats the analog reference on energy
    const double analog_ref = metric(cnn, "cnn", "CMOS_HP", "E_assoc");
    double spin_best = 1e30;
    for (const auto& row : cnn.rows) {
        if (row.benchmark != "cnn" || row.metrics.empty()) continue;
        if (row.metrics.at("spin") > 0.5) {
            spin_best = std::min(spin_best, row.metrics.at("E_assoc"));
        }
    }
    if (!(spin_best < analog_ref)) {
        problems.push_back(fmt("best spin E_assoc %.3g !< analog %.3g",
                               spin_best, analog_ref));
    }

    g.pass = problems.empty();
    if (g.pass) {
        g.detail = fmt("charge max t_op %.3g s < spin min %.3g s; "
                       "best spin CNN at %.3g of analog energy",
                       charge_max, spin_min, spin_best / analog_ref);
    } else {
        for (const auto& p : problems) {
            if (!g.detail.empty()) g.detail += "; ";
            g.detail += p;
        }
    }
    return g;
}

// ---- criterion 8: CLI determinism and CSV round-trip --------------------------

Gate check_determinism(const std::string& bench_exe,
                       const std::string& library) {
    Gate g{"CLI determinism and lossless CSV round-trip"};
    auto run = [&](const std::string& tag) {
        const std::string cmd = "\"" + bench_exe + "\" all --library \"" +
                                library + "\" --seed 7 --csv acc_" + tag +
                                ".csv --svg acc_" + tag + ".svg > /dev/null";
        return std::system(cmd.c_str());
    };
    if (run("a") != 0 || run("b") != 0) {
        g.detail = "bench invocation failed";
        return g;
    }
    const std::string csv_a = read_file("acc_a.csv");
    const std::string csv_b = read_file("acc_b.csv");
    const std::string svg_a = read_file("acc_a.svg");
    const std::string svg_b = read_file("acc_b.svg");

    bool ok = !csv_a.empty() && csv_a == csv_b && !svg_a.empty() && svg_a == svg_b;
    std::string why = ok ? "" : "re-invocation produced different bytes";

    if (ok) {
        const ResultSet back = parse_csv_file("acc_a.csv");
        std::ostringstream again;
        emit_csv(back, again);
        if (again.str() != csv_a) {
            ok = false;
            why = "CSV round trip not byte identical";
        }
    }
    for (const char* f : {"acc_a.csv", "acc_b.csv", "acc_a.svg", "acc_b.svg"}) {
        std::remove(f);
    }
    g.pass = ok;
    g.detail = ok ? fmt("%g identical bytes of CSV, %g of SVG",
                        static_cast<double>(csv_a.size()),
                        static_cast<double>(svg_a.size()))
                  : why;
    return g;
}

} // namespace

int main(int argc, char** argv) {
    std::string bench_exe = "./bench";
    std::string library;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--bench") bench_exe = argv[i + 1];
        if (flag == "--library") library = argv[i + 1];
    }
    if (library.empty()) {
        const char* env = std::getenv("XCMOS_LIB");
        library = env != nullptr ? env : std::string(XCMOS_DATA_DIR) + "/devices.json";
    }

    DeviceLibrary lib;
    try {
        lib = load_device_library(library);
    } catch (const Error& e) {
        std::fprintf(stderr, "cannot load library %s: %s\n", library.c_str(),
                     e.what());
        return 2;
    }

    std::vector<std::function<Gate()>> checks{
        [] { return check_spin_oracle(); },
        [] { return check_repeater_oracle(); },
        [&] { return check_ndr_clocking(lib); },
        [&] { return check_throughput_law(lib); },
        [&] { return check_ferroelectric_span(lib); },
        [] { return check_cnn_recall(); },
        [&] { return check_default_orderings(lib); },
        [&] { return check_determinism(bench_exe, library); },
    };
    const std::vector<double> budgets{10.0, 30.0, 0.0, 0.0, 0.0, 60.0, 0.0, 0.0};

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const double t0 = now_seconds();
        Gate g;
        try {
            g = checks[i]();
        } catch (const std::exception& e) {
            g.name = "criterion " + std::to_string(i + 1);
            g.pass = false;
            g.detail = std::string("exception: ") + e.what();
        }
        g.seconds = now_seconds() - t0;
        if (budgets[i] > 0.0 && g.seconds >= budgets[i]) {
            g.pass = false;
            g.detail += fmt(" [over %g s budget]", budgets[i]);
        }
        if (!g.pass) ++failures;
        std::printf("[%s] %zu. %s (%.1f s): %s\n", g.pass ? "PASS" : "FAIL",
                    i + 1, g.name.c_str(), g.seconds, g.detail.c_str());
    }
    std::printf("%s: %zu/%zu criteria passed\n",
                failures == 0 ? "ACCEPTED" : "REJECTED", checks.size() - failures,
                checks.size());
    return failures == 0 ? 0 : 1;
}
