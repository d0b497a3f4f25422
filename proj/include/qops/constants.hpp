// constants.hpp
// Physical constants (2019 SI exact values where defined) and unit helpers.

#pragma once

#include <numbers>

namespace qops::constants {

// Boltzmann constant, J/K (exact by SI definition).
inline constexpr double k_boltzmann = 1.380649e-23;

// Planck constant, J*s (exact by SI definition).
inline constexpr double planck_h = 6.62607015e-34;

// Reduced Planck constant, J*s.
inline constexpr double hbar = 1.054571817e-34;

inline constexpr double ln2 = std::numbers::ln2;

// Thermodynamic entropy of n random bits, J/K. Single definition so the
// ledger, the Landauer accounting, and the tests agree bit for bit.
inline constexpr double bits_to_joule_per_kelvin(double n_bits) {
    return n_bits * k_boltzmann * ln2;
}

}  // namespace qops::constants
