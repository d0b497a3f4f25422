// sampling.hpp
// Seeded generators for random states, unitaries, and measurement bases.
// Everything funnels through SplitMix64 so sweeps are reproducible.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qops/complex_matrix.hpp"
#include "qops/errors.hpp"
#include "qops/measurement.hpp"
#include "qops/rng.hpp"
#include "qops/state.hpp"

namespace qops {

inline ComplexMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = cplx{rng.gaussian(), rng.gaussian()};
        }
    }
    return m;
}

// Full-rank random density matrix G G† / tr(G G†).
inline DensityOperator random_density(Dims dims, SplitMix64& rng) {
    const std::size_t d = dim_product(dims);
    const ComplexMatrix g = random_gaussian_matrix(d, d, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / trace(rho).real();
    return DensityOperator(std::move(dims), std::move(rho));
}

inline Ket random_ket(Dims dims, SplitMix64& rng) {
    const std::size_t d = dim_product(dims);
    std::vector<cplx> amps(d);
    double norm2 = 0.0;
    for (auto& a : amps) {
        a = cplx{rng.gaussian(), rng.gaussian()};
        norm2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= scale;
    return Ket(std::move(dims), std::move(amps));
}

// Haar-ish unitary via Gram-Schmidt on a Gaussian matrix. Distribution
// details are irrelevant here; orthonormality is what the sweeps need.
inline ComplexMatrix random_unitary(std::size_t dim, SplitMix64& rng) {
    ComplexMatrix u = random_gaussian_matrix(dim, dim, rng);
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx overlap{0.0, 0.0};
            for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(u(r, prev)) * u(r, c);
            for (std::size_t r = 0; r < dim; ++r) u(r, c) -= overlap * u(r, prev);
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < dim; ++r) norm2 += std::norm(u(r, c));
        if (norm2 < 1e-24) throw convergence_error("degenerate column in unitary sampling");
        const double scale = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < dim; ++r) u(r, c) *= scale;
    }
    return u;
}

// Observable whose eigenbasis is a random unitary and whose eigenvalues are
// 0..d-1, far enough apart that no eigenspace merging can occur.
inline Observable random_nondegenerate_basis(std::size_t dim, SplitMix64& rng) {
    const ComplexMatrix u = random_unitary(dim, rng);
    ComplexMatrix h(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const double value = static_cast<double>(k);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                h(r, c) += value * u(r, k) * std::conj(u(c, k));
            }
        }
    }
    return projective_from_observable(hermitian_part(h));
}

}  // namespace qops
