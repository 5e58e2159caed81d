#include "xcmos/interconnect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace xcmos {

namespace {

void require(bool ok, Errc code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

} // namespace

void WireParams::validate(const std::string& where) const {
    const std::string p = where.empty() ? "" : where + ": ";
    require(r_w > 0, Errc::Validation, p + "r_w must be > 0");
    require(c_w > 0, Errc::Validation, p + "c_w must be > 0");
}

void RepeaterParams::validate(const std::string& where) const {
    const std::string p = where.empty() ? "" : where + ": ";
    require(R0 > 0, Errc::Validation, p + "R0 must be > 0");
    require(C0 > 0, Errc::Validation, p + "C0 must be > 0");
    require(V_dd > 0, Errc::Validation, p + "V_dd must be > 0");
    require(t_p >= 0, Errc::Validation, p + "t_p must be >= 0");
}

double repeated_wire_delay_slope(const WireParams& w, const RepeaterParams& r) {
    const double rc = r.R0 * r.C0;
    return 1.4 * std::sqrt(rc * w.r_w * w.c_w) +
           2.0 * std::sqrt((0.7 * rc + r.t_p) * 0.4 * w.r_w * w.c_w);
}

double repeated_wire_delay(const WireParams& w, const RepeaterParams& r, double l) {
    require(l >= 0, Errc::InvalidParameter, "wire length must be >= 0");
    return repeated_wire_delay_slope(w, r) * l;
}

double repeated_wire_energy(const WireParams& w, const RepeaterParams& r, double l) {
    require(l >= 0, Errc::InvalidParameter, "wire length must be >= 0");
    const double rc = r.R0 * r.C0;
    const double repeater_share = std::sqrt(0.4 * rc / (0.7 * rc + r.t_p));
    return 0.5 * w.c_w * l * (1.0 + repeater_share) * r.V_dd * r.V_dd;
}

double repeater_chain_delay(const WireParams& w, const RepeaterParams& r,
                            double l, int n, double s) {
    const double h = l / n;
    const double stage = 0.7 * (r.R0 / s) * (s * r.C0 + w.c_w * h) +
                         w.r_w * h * (0.4 * w.c_w * h + 0.7 * s * r.C0);
    return n * stage;
}

namespace {

// Golden-section minimum of the stage delay over repeater size, searched
// in log-space on a wide fixed bracket (the objective is convex in log s).
double best_size_delay(const WireParams& w, const RepeaterParams& r, double l,
                       int n, double* s_out) {
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = std::log(1e-9);
    double hi = std::log(1e9);
    double x1 = hi - golden * (hi - lo);
    double x2 = lo + golden * (hi - lo);
    double f1 = repeater_chain_delay(w, r, l, n, std::exp(x1));
    double f2 = repeater_chain_delay(w, r, l, n, std::exp(x2));
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = repeater_chain_delay(w, r, l, n, std::exp(x1));
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = repeater_chain_delay(w, r, l, n, std::exp(x2));
        }
    }
    const double s = std::exp(0.5 * (lo + hi));
    if (s_out) *s_out = s;
    return repeater_chain_delay(w, r, l, n, s);
}

} // namespace

RepeaterSolution repeater_oracle_minimize(const WireParams& w,
                                          const RepeaterParams& r, double l) {
    require(l > 0, Errc::InvalidParameter, "wire length must be > 0");
    w.validate("wire");
    r.validate("repeater");

    // Coarse log-spaced scan over the segment count, then integer
    // ternary search around the best coarse candidate. The objective is
    // convex in n at the per-n optimal size, so the scan brackets the
    // minimum within one coarse step.
    const int n_hi = std::max(
        64, static_cast<int>(4.0 * l * std::sqrt(0.4 * w.r_w * w.c_w /
                                                 (0.7 * r.R0 * r.C0))) +
                8);
    RepeaterSolution best;
    best.t_opt = std::numeric_limits<double>::infinity();

    auto consider = [&](int n) {
        double s = 0.0;
        const double t = best_size_delay(w, r, l, n, &s);
        if (t < best.t_opt) best = RepeaterSolution{n, s, t};
    };

    int prev = 0;
    for (double x = 0.0;; x += 0.05) {
        const int n = static_cast<int>(std::round(std::pow(10.0, x)));
        if (n > n_hi) break;
        if (n != prev) consider(n);
        prev = n;
    }
    int lo = std::max(1, static_cast<int>(best.n_opt / 1.3));
    int hi = std::min(n_hi, std::max(static_cast<int>(best.n_opt * 1.3),
                                     best.n_opt + 4));
    while (hi - lo > 6) {
        const int m1 = lo + (hi - lo) / 3;
        const int m2 = hi - (hi - lo) / 3;
        if (best_size_delay(w, r, l, m1, nullptr) <=
            best_size_delay(w, r, l, m2, nullptr)) {
            hi = m2 - 1;
        } else {
            lo = m1 + 1;
        }
    }
    for (int n = lo; n <= hi; ++n) consider(n);
    return best;
}

SpanResult span_of_control(double t_int, const WireParams& w,
                           const RepeaterParams& r, double A_gate) {
    require(t_int > 0, Errc::InvalidParameter, "t_int must be > 0");
    require(A_gate > 0, Errc::InvalidParameter, "A_gate must be > 0");
    SpanResult out;
    out.T_clk = kClockPeriodsPerIntrinsicDelay * t_int;
    out.l_max = out.T_clk / repeated_wire_delay_slope(w, r);
    out.n_gates = std::floor(std::numbers::pi * out.l_max * out.l_max / A_gate);
    return out;
}

} // namespace xcmos
