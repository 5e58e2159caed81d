#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xcmos/circuit_bench.hpp"
#include "xcmos/cnn_bench.hpp"
#include "xcmos/library.hpp"
#include "xcmos/results.hpp"

namespace xcmos {

struct SuiteOptions {
    double p_cap = 1e5;        // W/m^2 (10 W/cm^2)
    double wire_length = 1e-4; // m
    double activity = 0.1;     // static-logic switching probability
    std::uint64_t seed = 1;
    CnnConfig cnn{};
    std::string patterns_dir;  // empty -> built-in default patterns
    NetlistSpec netlist{};     // empty fa_gates -> per-style defaults
};

/// Built-in 16x16 bipolar test patterns (also shipped as text files).
std::vector<Pattern> default_patterns();

/// Resolve the pattern set: directory if given, defaults otherwise.
std::vector<Pattern> resolve_patterns(const SuiteOptions& opts);

/// Run one benchmark suite (alu | throughput | wire | span | cnn | all)
/// over every device. Incompatible or failing device/benchmark pairs
/// produce warning rows, not errors. Deterministic in (lib, opts).
ResultSet run_suite(const DeviceLibrary& lib, const std::string& suite,
                    const SuiteOptions& opts);

/// Default scatter axes per suite (x, y).
std::pair<std::string, std::string> default_axes(const std::string& suite);

} // namespace xcmos
