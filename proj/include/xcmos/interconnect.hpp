#pragma once

#include "xcmos/errors.hpp"

namespace xcmos {

struct WireParams {
    double r_w = 0.0; // Ohm/m
    double c_w = 0.0; // F/m

    void validate(const std::string& where = {}) const;
};

struct RepeaterParams {
    double R0 = 0.0;   // Ohm, output resistance of a minimum repeater
    double C0 = 0.0;   // F, input capacitance of a minimum repeater
    double t_p = 0.0;  // s, fixed per-repeater switching time on top of RC
    double V_dd = 0.0; // V

    void validate(const std::string& where = {}) const;
};

struct SpanResult {
    double T_clk = 0.0;  // s
    double l_max = 0.0;  // m
    double n_gates = 0.0; // reachable gates, floor(pi*l_max^2/A_gate)
};

struct RepeaterSolution {
    int n_opt = 0;      // repeater count
    double s_opt = 0.0; // repeater size (multiples of minimum)
    double t_opt = 0.0; // s
};

/// Delay of a length-l wire with optimal repeater insertion:
/// t = 1.4*sqrt(R0*C0*r_w*c_w)*l + 2*sqrt((0.7*R0*C0 + t_p)*0.4*r_w*c_w)*l.
double repeated_wire_delay(const WireParams& w, const RepeaterParams& r, double l);

/// Per-unit-length delay slope of the closed form above.
double repeated_wire_delay_slope(const WireParams& w, const RepeaterParams& r);

/// Energy of the same wire:
/// E = 0.5*c_w*l*(1 + sqrt(0.4*R0*C0/(0.7*R0*C0 + t_p)))*V_dd^2.
double repeated_wire_energy(const WireParams& w, const RepeaterParams& r, double l);

/// Brute-force Elmore optimization over integer repeater count n and
/// real size s of n*[0.7*(R0/s)*(s*C0 + c_w*h) + r_w*h*(0.4*c_w*h + 0.7*s*C0)]
/// with h = l/n. Independent check of the closed form (t_p = 0 regime).
RepeaterSolution repeater_oracle_minimize(const WireParams& w,
                                          const RepeaterParams& r, double l);

/// Delay of the Elmore stage expression at a given (n, s); exposed so
/// tests can probe the oracle's objective directly.
double repeater_chain_delay(const WireParams& w, const RepeaterParams& r,
                            double l, int n, double s);

/// Gates reachable within one clock cycle of 300 intrinsic delays:
/// l_max = T_clk / slope, n_gates = floor(pi*l_max^2/A_gate). The reach
/// budget counts wire delay only, over a Euclidean disc.
SpanResult span_of_control(double t_int, const WireParams& w,
                           const RepeaterParams& r, double A_gate);

inline constexpr double kClockPeriodsPerIntrinsicDelay = 300.0;

} // namespace xcmos
