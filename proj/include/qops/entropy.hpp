// entropy.hpp
// Von Neumann and Shannon entropy in bits and nats, the projective
// measurement entropy inequality, the wave-behavior criterion with an l1
// coherence measure, and the Landauer erasure bound.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qops/complex_matrix.hpp"
#include "qops/constants.hpp"
#include "qops/eigen.hpp"
#include "qops/errors.hpp"
#include "qops/measurement.hpp"
#include "qops/state.hpp"

namespace qops {

inline constexpr double entropy_eigenvalue_floor = -1e-9;
inline constexpr double wave_support_threshold_default = 1e-9;
inline constexpr double unitary_check_tol = 1e-10;

struct EntropyValue {
    double bits;
    double nats;
};

namespace detail {

// -sum p ln p with 0 ln 0 = 0; inputs already validated nonnegative.
inline EntropyValue entropy_from_probabilities(const std::vector<double>& p) {
    double nats = 0.0;
    for (double x : p) {
        if (x > 0.0) nats -= x * std::log(x);
    }
    return EntropyValue{nats / constants::ln2, nats};
}

}  // namespace detail

inline EntropyValue von_neumann_entropy(const DensityOperator& rho) {
    Spectrum sp = eig_hermitian(hermitian_part(rho.matrix()));
    std::vector<double> p;
    p.reserve(sp.eigenvalues.size());
    for (double lambda : sp.eigenvalues) {
        if (lambda < entropy_eigenvalue_floor) {
            throw positivity_error("density eigenvalue below the clamp floor");
        }
        p.push_back(std::max(lambda, 0.0));
    }
    return detail::entropy_from_probabilities(p);
}

inline EntropyValue shannon_entropy(const std::vector<double>& p) {
    double sum = 0.0;
    for (double x : p) {
        if (x < 0.0) throw argument_error("negative probability");
        sum += x;
    }
    if (std::abs(sum - 1.0) > probability_sum_tol) {
        throw normalization_error("probabilities do not sum to one");
    }
    return detail::entropy_from_probabilities(p);
}

struct EntropyGain {
    EntropyValue before;
    EntropyValue after;
    double gain_bits;
};

// S(sum_i P rho P) - S(rho). Nonnegative up to roundoff for complete
// orthogonal projective sets; not claimed for general measurements.
inline EntropyGain projective_entropy_gain(const DensityOperator& rho, const Observable& proj) {
    MeasurementSet ms = [&] {
        try {
            return proj.to_measurement();
        } catch (const error&) {
            throw argument_error("entropy inequality needs a complete orthogonal projective set");
        }
    }();
    const EntropyValue before = von_neumann_entropy(rho);
    const EntropyValue after = von_neumann_entropy(nonselective_update(ms, rho));
    return EntropyGain{before, after, after.bits - before.bits};
}

struct WaveBehaviorReport {
    std::size_t support_count;
    bool has_wave_behavior;
    double l1_coherence;
};

// Sum of |off-diagonal| entries of rho expressed in the given orthonormal
// basis (columns of `basis`).
inline double l1_coherence(const ComplexMatrix& rho, const ComplexMatrix& basis) {
    if (!basis.square() || basis.rows() != rho.rows()) {
        throw shape_error("basis dimension does not match state");
    }
    if (max_abs_diff(basis.adjoint() * basis, identity(basis.rows())) > unitary_check_tol) {
        throw argument_error("basis matrix is not unitary");
    }
    const ComplexMatrix transformed = basis.adjoint() * rho * basis;
    double sum = 0.0;
    for (std::size_t i = 0; i < transformed.rows(); ++i) {
        for (std::size_t j = 0; j < transformed.cols(); ++j) {
            if (i != j) sum += std::abs(transformed(i, j));
        }
    }
    return sum;
}

inline double l1_coherence(const DensityOperator& rho, const ComplexMatrix& basis) {
    return l1_coherence(rho.matrix(), basis);
}

// Counts basis amplitudes above the threshold; two or more means the state
// still interferes in that basis.
inline WaveBehaviorReport wave_behavior(const Ket& k, const ComplexMatrix& basis,
                                        double threshold = wave_support_threshold_default) {
    if (!basis.square() || basis.rows() != k.dim()) {
        throw shape_error("basis dimension does not match state");
    }
    if (max_abs_diff(basis.adjoint() * basis, identity(basis.rows())) > unitary_check_tol) {
        throw argument_error("basis matrix is not unitary");
    }
    const ComplexMatrix amps = basis.adjoint() * k.column();
    std::size_t support = 0;
    for (std::size_t i = 0; i < amps.rows(); ++i) {
        if (std::abs(amps(i, 0)) > threshold) ++support;
    }
    const double l1 = l1_coherence(density_from_ket(k).matrix(), basis);
    return WaveBehaviorReport{support, support >= 2, l1};
}

struct LandauerCost {
    std::size_t bits_erased;
    double temperature;
    double min_heat;
};

// Minimum heat k_B T ln2 per erased bit.
inline LandauerCost landauer_cost(std::size_t bits, double temperature) {
    if (!(temperature > 0.0)) throw argument_error("temperature must be positive");
    return LandauerCost{bits, temperature,
                        constants::bits_to_joule_per_kelvin(static_cast<double>(bits)) * temperature};
}

}  // namespace qops
