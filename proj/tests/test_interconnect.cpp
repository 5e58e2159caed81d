#include <doctest.h>

#include <cmath>
#include <random>

#include "xcmos/interconnect.hpp"

using namespace xcmos;

namespace {

WireParams ref_wire() { return WireParams{1e8, 2e-10}; }

RepeaterParams ref_repeater(double t_p = 0.0) {
    return RepeaterParams{1e4, 1e-16, t_p, 0.7};
}

// log-uniform sample
double logu(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

} // namespace

TEST_CASE("repeated wire delay closed form") {
    const WireParams w = ref_wire();
    const RepeaterParams r = ref_repeater();

    SUBCASE("zero polarization slope coefficient") {
        const double slope = repeated_wire_delay_slope(w, r);
        const double unit = std::sqrt(r.R0 * r.C0 * w.r_w * w.c_w);
        CHECK(slope / unit == doctest::Approx(2.458).epsilon(1e-3));
    }
    SUBCASE("reference point") {
        const double t = repeated_wire_delay(w, r, 100e-6);
        CHECK(t == doctest::Approx(34.8e-12).epsilon(2e-3));
    }
    SUBCASE("zero length") { CHECK(repeated_wire_delay(w, r, 0.0) == 0.0); }
    SUBCASE("strictly increasing in every parameter") {
        const double base = repeated_wire_delay(w, r, 1e-4);
        CHECK(repeated_wire_delay(WireParams{2 * w.r_w, w.c_w}, r, 1e-4) > base);
        CHECK(repeated_wire_delay(WireParams{w.r_w, 2 * w.c_w}, r, 1e-4) > base);
        RepeaterParams r2 = r;
        r2.R0 *= 2;
        CHECK(repeated_wire_delay(w, r2, 1e-4) > base);
        r2 = r;
        r2.C0 *= 2;
        CHECK(repeated_wire_delay(w, r2, 1e-4) > base);
        r2 = r;
        r2.t_p = 1e-12;
        CHECK(repeated_wire_delay(w, r2, 1e-4) > base);
        CHECK(repeated_wire_delay(w, r, 2e-4) > base);
    }
}

TEST_CASE("repeated wire energy closed form") {
    const WireParams w = ref_wire();
    const RepeaterParams r = ref_repeater();

    SUBCASE("zero polarization coefficient") {
        const double e = repeated_wire_energy(w, r, 1.0);
        const double coeff = e / (w.c_w * r.V_dd * r.V_dd);
        CHECK(coeff == doctest::Approx(0.878).epsilon(1e-3));
    }
    SUBCASE("reference point") {
        CHECK(repeated_wire_energy(w, r, 100e-6) ==
              doctest::Approx(8.6e-15).epsilon(3e-3));
    }
    SUBCASE("repeater share vanishes with a huge fixed delay") {
        RepeaterParams slow = r;
        slow.t_p = 1.0;
        const double wire_only = 0.5 * w.c_w * 1e-4 * r.V_dd * r.V_dd;
        CHECK(repeated_wire_energy(w, slow, 1e-4) ==
              doctest::Approx(wire_only).epsilon(1e-3));
    }
    SUBCASE("decomposes into wire charging plus repeater charging") {
        const double l = 1e-4;
        const double wire_share = 0.5 * w.c_w * l * r.V_dd * r.V_dd;
        const double e = repeated_wire_energy(w, r, l);
        CHECK(e > wire_share);
        const double repeater_share = e - wire_share;
        const double expected =
            wire_share * std::sqrt(0.4 * r.R0 * r.C0 / (0.7 * r.R0 * r.C0));
        CHECK(repeater_share == doctest::Approx(expected).epsilon(1e-9));
    }
    SUBCASE("increasing in wire capacitance and length") {
        const double base = repeated_wire_energy(w, r, 1e-4);
        CHECK(repeated_wire_energy(WireParams{w.r_w, 2 * w.c_w}, r, 1e-4) > base);
        CHECK(repeated_wire_energy(w, r, 2e-4) > base);
        RepeaterParams r2 = r;
        r2.t_p = 1e-12;
        // a fixed per-repeater delay shrinks the optimal repeaters
        CHECK(repeated_wire_energy(w, r2, 1e-4) < base);
    }
}

TEST_CASE("repeater optimization oracle") {
    const WireParams w = ref_wire();
    const RepeaterParams r = ref_repeater();

    SUBCASE("reference point within closed-form discreteness") {
        const RepeaterSolution sol = repeater_oracle_minimize(w, r, 100e-6);
        CHECK(sol.t_opt ==
              doctest::Approx(repeated_wire_delay(w, r, 100e-6)).epsilon(0.05));
        CHECK(sol.n_opt >= 1);
        CHECK(sol.s_opt > 0.0);
    }
    SUBCASE("short wires take a single repeater") {
        const RepeaterSolution sol = repeater_oracle_minimize(w, r, 1e-6);
        CHECK(sol.n_opt == 1);
    }
    SUBCASE("quadrupling the length quadruples segments and delay") {
        const RepeaterSolution a = repeater_oracle_minimize(w, r, 100e-6);
        const RepeaterSolution b = repeater_oracle_minimize(w, r, 400e-6);
        CHECK(b.n_opt >= 4 * a.n_opt - 4);
        CHECK(b.n_opt <= 4 * a.n_opt + 4);
        CHECK(b.t_opt / a.t_opt == doctest::Approx(4.0).epsilon(0.05));
    }
    SUBCASE("closed form tracks the oracle over random tuples") {
        std::mt19937_64 rng(2024);
        int done = 0;
        while (done < 20) {
            WireParams wr{logu(rng, 1e5, 1e9), logu(rng, 1e-12, 1e-8)};
            RepeaterParams rr{logu(rng, 1e3, 1e7), logu(rng, 1e-17, 1e-13), 0.0,
                              0.7};
            const double l = logu(rng, 1e-5, 1e-1);
            // repeated-wire regime: at least two optimal segments
            const double n_star =
                l * std::sqrt(0.4 * wr.r_w * wr.c_w / (0.7 * rr.R0 * rr.C0));
            if (n_star < 2.0) continue;
            const RepeaterSolution sol = repeater_oracle_minimize(wr, rr, l);
            const double closed = repeated_wire_delay(wr, rr, l);
            CHECK(std::abs(sol.t_opt - closed) / closed < 0.05);
            ++done;
        }
    }
}

TEST_CASE("span of control") {
    const WireParams w = ref_wire();
    const RepeaterParams r = ref_repeater();

    SUBCASE("reference chain") {
        const SpanResult s = span_of_control(7e-12, w, r, 1e-13);
        CHECK(s.T_clk == doctest::Approx(2.1e-9));
        CHECK(s.l_max == doctest::Approx(6.03e-3).epsilon(0.01));
        CHECK(s.n_gates == doctest::Approx(1.14e9).epsilon(0.01));
    }
    SUBCASE("no budget, no reach") {
        const SpanResult s = span_of_control(1e-30, w, r, 1e-13);
        CHECK(s.n_gates < 1.0);
    }
    SUBCASE("monotone in budget and footprint") {
        const SpanResult a = span_of_control(5e-12, w, r, 1e-13);
        const SpanResult b = span_of_control(10e-12, w, r, 1e-13);
        CHECK(b.n_gates >= a.n_gates);
        const SpanResult c = span_of_control(5e-12, w, r, 2e-13);
        CHECK(c.n_gates <= a.n_gates);
    }
    SUBCASE("a fixed per-repeater delay extends the span") {
        // the clock budget grows linearly with t_p while the wire slope
        // grows sublinearly
        const double t_int0 = 7e-12;
        const double t_p = 10e-12;
        const SpanResult plain =
            span_of_control(t_int0, w, ref_repeater(0.0), 1e-13);
        const SpanResult ferro =
            span_of_control(t_int0 + t_p, w, ref_repeater(t_p), 1e-13);
        CHECK(ferro.n_gates > plain.n_gates);
    }
}
