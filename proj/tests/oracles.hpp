// oracles.hpp
// Reference computations kept deliberately separate from the library: plain
// index loops and closed forms, so each comparison pits two independent
// code paths against each other.

#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

#include "qops/complex_matrix.hpp"

namespace oracle {

using qops::ComplexMatrix;
using qops::cplx;

// Entry-by-entry Kronecker definition.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return r;
}

// Schoolbook product.
inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx s{0.0, 0.0};
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
    return c;
}

// Two-factor reductions by the explicit index sum. Big-endian flattening:
// row (i, k) of the joint matrix is i * db + k.
inline ComplexMatrix trace_out_second(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
    ComplexMatrix r(da, da);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            for (std::size_t k = 0; k < db; ++k) r(i, j) += rho(i * db + k, j * db + k);
        }
    }
    return r;
}

inline ComplexMatrix trace_out_first(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
    ComplexMatrix r(db, db);
    for (std::size_t i = 0; i < db; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            for (std::size_t k = 0; k < da; ++k) r(i, j) += rho(k * db + i, k * db + j);
        }
    }
    return r;
}

// 2x2 Hermitian eigenvalues straight from the characteristic polynomial,
// returned descending.
inline std::pair<double, double> eig2(const ComplexMatrix& h) {
    const double t = h(0, 0).real() + h(1, 1).real();
    const double det = h(0, 0).real() * h(1, 1).real() - std::norm(h(0, 1));
    const double disc = std::sqrt(std::max(0.0, t * t / 4.0 - det));
    return {t / 2.0 + disc, t / 2.0 - disc};
}

}  // namespace oracle
