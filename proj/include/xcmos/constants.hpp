#pragma once

namespace xcmos::constants {

// 2019 SI exact values where defined, CODATA otherwise.
inline constexpr double q_e       = 1.602176634e-19;  // elementary charge, C
inline constexpr double k_B       = 1.380649e-23;     // Boltzmann constant, J/K
inline constexpr double h_planck  = 6.62607015e-34;   // Planck constant, J*s
inline constexpr double hbar      = 1.054571817e-34;  // reduced Planck constant, J*s
inline constexpr double mu_B      = 9.2740100783e-24; // Bohr magneton, J/T

// Thermal voltage k_B*T/q at temperature T.
inline constexpr double thermal_voltage(double temperature_K) {
    return k_B * temperature_K / q_e;
}

} // namespace xcmos::constants
