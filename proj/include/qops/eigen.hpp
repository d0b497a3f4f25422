// eigen.hpp
// Hermitian eigendecomposition via cyclic Jacobi sweeps with complex
// Givens rotations. Dense and simple; sized for the <= 64-dimensional
// operators this library works with, with no external numerics dependency.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qops/complex_matrix.hpp"
#include "qops/errors.hpp"

namespace qops {

// Descending-sorted eigenvalues; eigenvector k is column k of `eigenvectors`.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix eigenvector(std::size_t k) const {
        const std::size_t n = eigenvectors.rows();
        ComplexMatrix v(n, 1);
        for (std::size_t i = 0; i < n; ++i) v(i, 0) = eigenvectors(i, k);
        return v;
    }

    // V diag(lambda) V^dagger.
    ComplexMatrix reconstruct() const {
        const std::size_t n = eigenvalues.size();
        ComplexMatrix scaled = eigenvectors;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[j];
        }
        return scaled * eigenvectors.adjoint();
    }
};

inline constexpr double default_hermiticity_tol = 1e-12;
inline constexpr int jacobi_max_sweeps = 100;

namespace detail {

inline double off_diagonal_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

// One rotation zeroing a(p,q). The 2x2 block [[app, z],[conj(z), aqq]] with
// z = |z| e^{i phi} is diagonalized by U = [[c, -s e^{i phi}],[s e^{-i phi}, c]],
// tan(2 theta) = 2|z| / (app - aqq), picking |theta| <= pi/4.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx z = a(p, q);
    const double az = std::abs(z);
    if (az == 0.0) return;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (app - aqq) / (2.0 * az);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const cplx phase = z / az;  // e^{i phi}

    const cplx upq = -s * phase;       // U(p,q)
    const cplx uqp = s * std::conj(phase);  // U(q,p)

    const std::size_t n = a.rows();
    // A <- A U
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip + uqp * aiq;
        a(i, q) = upq * aip + c * aiq;
    }
    // A <- U^dagger A
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j);
        const cplx aqj = a(q, j);
        a(p, j) = c * apj + std::conj(uqp) * aqj;
        a(q, j) = std::conj(upq) * apj + c * aqj;
    }
    // V <- V U
    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip + uqp * viq;
        v(i, q) = upq * vip + c * viq;
    }
    // Pin the zeroed pair and keep the diagonal real.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace detail

inline Spectrum eig_hermitian(const ComplexMatrix& input, double tol = default_hermiticity_tol) {
    if (!input.square() || input.empty()) {
        throw shape_error("eig_hermitian needs a nonempty square matrix");
    }
    if (!input.is_hermitian(tol)) {
        throw symmetry_error("eig_hermitian input is not Hermitian within tolerance");
    }

    const std::size_t n = input.rows();
    ComplexMatrix a = input;
    ComplexMatrix v = identity(n);

    // The stop threshold scales with the matrix so large operators converge
    // to the same relative accuracy as unit-scale ones.
    const double stop = tol * std::max(1.0, a.frobenius_norm());

    bool converged = detail::off_diagonal_frobenius(a) <= stop;
    for (int sweep = 0; sweep < jacobi_max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                detail::jacobi_rotate(a, v, p, q);
            }
        }
        converged = detail::off_diagonal_frobenius(a) <= stop;
    }
    if (!converged) {
        throw convergence_error("Jacobi sweeps did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    Spectrum sp;
    sp.eigenvalues.resize(n);
    sp.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sp.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) sp.eigenvectors(i, k) = v(i, order[k]);
    }
    return sp;
}

// Spectral square root of a positive semidefinite Hermitian matrix.
// Eigenvalues in [eigenvalue_floor, 0) are clamped to zero; anything below
// the floor raises positivity_error.
inline ComplexMatrix hermitian_sqrt(const ComplexMatrix& a, double eigenvalue_floor = -1e-10,
                                    double tol = default_hermiticity_tol) {
    Spectrum sp = eig_hermitian(a, tol);
    const std::size_t n = sp.eigenvalues.size();
    ComplexMatrix scaled = sp.eigenvectors;
    for (std::size_t j = 0; j < n; ++j) {
        double lam = sp.eigenvalues[j];
        if (lam < eigenvalue_floor) {
            throw positivity_error("hermitian_sqrt: eigenvalue below PSD floor");
        }
        const double root = lam > 0.0 ? std::sqrt(lam) : 0.0;
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= root;
    }
    return scaled * sp.eigenvectors.adjoint();
}

}  // namespace qops
