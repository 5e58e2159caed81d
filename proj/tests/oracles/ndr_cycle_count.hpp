#pragma once

// Cycle-by-cycle supply-clocking reference for NDR adders. Walks the
// word one bit-cycle at a time and counts clock firings per gate kind,
// so the clock-disable scheme can be checked against the
// constant-clocking baseline by exact event counting.

#include <cstdint>
#include <map>

#include "xcmos/circuit_bench.hpp"

namespace xcmos::testing {

struct ClockEventCount {
    std::map<GateKind, std::int64_t> events;

    double dynamic_energy(const GateProvider& gates) const {
        double e = 0.0;
        for (const auto& [kind, count] : events) {
            e += static_cast<double>(count) * gates.get(kind).E_dyn;
        }
        return e;
    }
};

/// Constant clocking: every gate of every full adder is clocked once
/// per bit cycle until the word completes (bits cycles total).
inline ClockEventCount ndr_constant_clocking_reference(const NetlistSpec& net) {
    ClockEventCount c;
    for (int cycle = 0; cycle < net.bits; ++cycle) {
        for (int fa = 0; fa < net.bits; ++fa) {
            for (const auto& [kind, count] : net.fa_gates) {
                c.events[kind] += count;
            }
        }
    }
    return c;
}

/// Clock-disable scheme: each gate is clocked exactly once per word.
inline ClockEventCount ndr_clock_disable_reference(const NetlistSpec& net) {
    ClockEventCount c;
    for (int fa = 0; fa < net.bits; ++fa) {
        for (const auto& [kind, count] : net.fa_gates) {
            c.events[kind] += count;
        }
    }
    return c;
}

} // namespace xcmos::testing
