// state.hpp
// Pure states and density operators over multi-qudit registers, and the
// partial trace producing reduced density operators.
//
// Subsystem ordering is big-endian throughout: subsystem 0 is the most
// significant factor of a Kronecker product, so |i0 i1 ... ik> has flat
// index i0*d1*...*dk + i1*d2*...*dk + ... + ik.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "qops/complex_matrix.hpp"
#include "qops/eigen.hpp"
#include "qops/errors.hpp"

namespace qops {

inline constexpr double ket_norm_tol = 1e-10;
inline constexpr double density_hermiticity_tol = 1e-10;
inline constexpr double density_trace_tol = 1e-10;
inline constexpr double density_eigenvalue_floor = -1e-9;
inline constexpr double mixture_probability_tol = 1e-9;

using Dims = std::vector<std::size_t>;

inline std::size_t dim_product(const Dims& dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw argument_error("zero subsystem dimension");
        p *= d;
    }
    return p;
}

class Ket {
public:
    Ket(Dims dims, std::vector<cplx> amplitudes)
        : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
        if (dims_.empty() || dim_product(dims_) != amplitudes_.size()) {
            throw shape_error("amplitude count does not match subsystem dimensions");
        }
        double norm2 = 0.0;
        for (const auto& a : amplitudes_) {
            if (!is_finite(a)) throw argument_error("amplitude is not finite");
            norm2 += std::norm(a);
        }
        if (std::abs(norm2 - 1.0) > ket_norm_tol) {
            throw normalization_error("ket is not normalized");
        }
    }

    const Dims& dims() const { return dims_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    cplx amplitude(std::size_t i) const { return amplitudes_[i]; }

    // n x 1 column matrix.
    ComplexMatrix column() const {
        ComplexMatrix c(dim(), 1);
        for (std::size_t i = 0; i < dim(); ++i) c(i, 0) = amplitudes_[i];
        return c;
    }

    cplx inner_product(const Ket& other) const {
        if (dim() != other.dim()) throw shape_error("inner product dimension mismatch");
        cplx r{0.0, 0.0};
        for (std::size_t i = 0; i < dim(); ++i) {
            r += std::conj(amplitudes_[i]) * other.amplitudes_[i];
        }
        return r;
    }

private:
    Dims dims_;
    std::vector<cplx> amplitudes_;
};

class DensityOperator {
public:
    DensityOperator(Dims dims, ComplexMatrix matrix)
        : dims_(std::move(dims)), matrix_(std::move(matrix)) {
        const std::size_t d = dim_product(dims_);
        if (dims_.empty() || !matrix_.square() || matrix_.rows() != d) {
            throw shape_error("density matrix size does not match subsystem dimensions");
        }
        if (matrix_.hermiticity_defect() > density_hermiticity_tol) {
            throw symmetry_error("density matrix is not Hermitian");
        }
        if (std::abs(trace(matrix_).real() - 1.0) > density_trace_tol ||
            std::abs(trace(matrix_).imag()) > density_trace_tol) {
            throw normalization_error("density matrix trace is not one");
        }
        // PSD check through the same Jacobi path every spectral routine uses,
        // on the exactly symmetrized matrix so convergence is tight.
        Spectrum sp = eig_hermitian(hermitian_part(matrix_));
        if (sp.eigenvalues.back() < density_eigenvalue_floor) {
            throw positivity_error("density matrix has a negative eigenvalue");
        }
    }

    const Dims& dims() const { return dims_; }
    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    Dims dims_;
    ComplexMatrix matrix_;
};

// -------- constructors --------

inline DensityOperator density_from_ket(const Ket& k) {
    const std::size_t n = k.dim();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = k.amplitude(i) * std::conj(k.amplitude(j));
        }
    }
    return DensityOperator(k.dims(), std::move(m));
}

// Convex combination sum_i p_i rho_i. Probabilities must be nonnegative and
// sum to 1 within mixture_probability_tol; they are renormalized exactly.
inline DensityOperator mixture(const std::vector<std::pair<double, DensityOperator>>& parts) {
    if (parts.empty()) throw argument_error("mixture of nothing");
    double total = 0.0;
    for (const auto& [p, rho] : parts) {
        if (p < 0.0) throw argument_error("negative mixture probability");
        if (rho.dims() != parts.front().second.dims()) {
            throw shape_error("mixture components have mismatched dimensions");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > mixture_probability_tol) {
        throw normalization_error("mixture probabilities do not sum to one");
    }
    ComplexMatrix acc(parts.front().second.dim(), parts.front().second.dim());
    for (const auto& [p, rho] : parts) {
        acc += (p / total) * rho.matrix();
    }
    return DensityOperator(parts.front().second.dims(), std::move(acc));
}

inline DensityOperator maximally_mixed(Dims dims) {
    const std::size_t d = dim_product(dims);
    return DensityOperator(std::move(dims), (1.0 / static_cast<double>(d)) * identity(d));
}

inline DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityOperator(std::move(dims), kron(a.matrix(), b.matrix()));
}

// -------- named states --------

inline Ket basis_ket(Dims dims, std::size_t flat_index) {
    const std::size_t d = dim_product(dims);
    if (flat_index >= d) throw argument_error("basis index out of range");
    std::vector<cplx> amps(d, cplx{0.0, 0.0});
    amps[flat_index] = 1.0;
    return Ket(std::move(dims), std::move(amps));
}

inline Ket plus_ket() {
    const double r = 1.0 / std::sqrt(2.0);
    return Ket({2}, {cplx{r, 0.0}, cplx{r, 0.0}});
}

// (|00...0> + |11...1>)/sqrt(2)
inline Ket ghz_state(std::size_t n_qubits = 3) {
    if (n_qubits == 0) throw argument_error("ghz_state needs at least one qubit");
    const std::size_t d = std::size_t{1} << n_qubits;
    std::vector<cplx> amps(d, cplx{0.0, 0.0});
    const double r = 1.0 / std::sqrt(2.0);
    amps.front() = r;
    amps.back() = r;
    return Ket(Dims(n_qubits, 2), std::move(amps));
}

// Equal superposition of all single-excitation basis states.
inline Ket w_state(std::size_t n_qubits = 3) {
    if (n_qubits == 0) throw argument_error("w_state needs at least one qubit");
    const std::size_t d = std::size_t{1} << n_qubits;
    std::vector<cplx> amps(d, cplx{0.0, 0.0});
    const double r = 1.0 / std::sqrt(static_cast<double>(n_qubits));
    for (std::size_t k = 0; k < n_qubits; ++k) amps[std::size_t{1} << k] = r;
    return Ket(Dims(n_qubits, 2), std::move(amps));
}

// -------- operations --------

namespace detail {

// Flat index from digit values over a subset of subsystem positions.
struct SubsystemIndexer {
    std::vector<std::size_t> positions;
    std::vector<std::size_t> sub_dims;
    std::vector<std::size_t> strides;  // full-register stride of each position

    SubsystemIndexer(const Dims& dims, const std::vector<std::size_t>& pos) : positions(pos) {
        std::vector<std::size_t> full_strides(dims.size(), 1);
        for (std::size_t s = dims.size(); s-- > 1;) {
            full_strides[s - 1] = full_strides[s] * dims[s];
        }
        for (std::size_t p : positions) {
            sub_dims.push_back(dims[p]);
            strides.push_back(full_strides[p]);
        }
    }

    std::size_t count() const {
        std::size_t c = 1;
        for (std::size_t d : sub_dims) c *= d;
        return c;
    }

    // Contribution of sub-index `linear` to the full flat index.
    std::size_t expand(std::size_t linear) const {
        std::size_t full = 0;
        for (std::size_t k = sub_dims.size(); k-- > 0;) {
            full += (linear % sub_dims[k]) * strides[k];
            linear /= sub_dims[k];
        }
        return full;
    }
};

}  // namespace detail

// Reduced density operator over the subsystems listed in `keep` (to trace the
// paper's rho^AB over B, keep = {A}). The kept subsystems retain their
// original order.
inline DensityOperator partial_trace(const DensityOperator& rho,
                                     const std::vector<std::size_t>& keep) {
    if (keep.empty()) {
        throw argument_error("partial_trace with empty keep set; use trace for the full trace");
    }
    std::vector<std::size_t> kept(keep);
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw argument_error("duplicate subsystem index in keep set");
    }
    if (kept.back() >= rho.dims().size()) {
        throw argument_error("subsystem index out of range");
    }

    std::vector<std::size_t> traced;
    for (std::size_t s = 0; s < rho.dims().size(); ++s) {
        if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
    }

    const detail::SubsystemIndexer keep_ix(rho.dims(), kept);
    const detail::SubsystemIndexer trace_ix(rho.dims(), traced);
    const std::size_t nk = keep_ix.count();
    const std::size_t nt = trace_ix.count();

    ComplexMatrix reduced(nk, nk);
    for (std::size_t a = 0; a < nk; ++a) {
        const std::size_t row_base = keep_ix.expand(a);
        for (std::size_t b = 0; b < nk; ++b) {
            const std::size_t col_base = keep_ix.expand(b);
            cplx sum{0.0, 0.0};
            for (std::size_t t = 0; t < nt; ++t) {
                const std::size_t off = trace_ix.expand(t);
                sum += rho.matrix()(row_base + off, col_base + off);
            }
            reduced(a, b) = sum;
        }
    }

    Dims reduced_dims;
    for (std::size_t s : kept) reduced_dims.push_back(rho.dims()[s]);
    return DensityOperator(std::move(reduced_dims), std::move(reduced));
}

// tr(rho^2); 1 for pure states, 1/dim for the maximally mixed state.
inline double purity(const DensityOperator& rho) {
    return trace(rho.matrix() * rho.matrix()).real();
}

// <psi| rho |psi> — fidelity of rho with the pure state |psi><psi|.
inline double pure_state_fidelity(const DensityOperator& rho, const Ket& psi) {
    if (rho.dim() != psi.dim()) throw shape_error("fidelity dimension mismatch");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            acc += std::conj(psi.amplitude(i)) * rho.matrix()(i, j) * psi.amplitude(j);
        }
    }
    return acc.real();
}

}  // namespace qops
