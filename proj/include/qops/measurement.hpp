// measurement.hpp
// The measurement postulate: general measurement sets {M_m} with
// sum M†M = I, projective measurements built from observables, POVM
// lifts via the spectral square root, selective and nonselective
// application, and observable moments.

#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qops/complex_matrix.hpp"
#include "qops/eigen.hpp"
#include "qops/errors.hpp"
#include "qops/state.hpp"

namespace qops {

inline constexpr double completeness_tol = 1e-10;
inline constexpr double projective_check_tol = 1e-10;
inline constexpr double probability_clamp_tol = 1e-12;
inline constexpr double probability_sum_tol = 1e-9;
inline constexpr double degeneracy_rel_tol = 1e-8;
inline constexpr double povm_eigenvalue_floor = -1e-10;
inline constexpr double observable_reconstruction_tol = 1e-9;
inline constexpr double moment_variance_floor = -1e-12;

enum class MeasurementKind { projective, povm_derived, general };

// Default outcome label: the eigenvalue printed to 12 significant digits.
inline std::string eigenvalue_label(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::string(buf);
}

class MeasurementSet {
public:
    MeasurementSet(std::vector<std::string> labels, std::vector<ComplexMatrix> operators,
                   MeasurementKind kind)
        : labels_(std::move(labels)), operators_(std::move(operators)), kind_(kind) {
        if (operators_.empty()) throw argument_error("measurement set with no operators");
        if (labels_.size() != operators_.size()) {
            throw argument_error("label count does not match operator count");
        }
        const std::size_t d = operators_.front().rows();
        for (const auto& m : operators_) {
            if (!m.square() || m.rows() != d) {
                throw shape_error("measurement operators must be square and share one dimension");
            }
        }
        ComplexMatrix sum(d, d);
        for (const auto& m : operators_) sum += m.adjoint() * m;
        if (max_abs_diff(sum, identity(d)) > completeness_tol) {
            throw completeness_error("measurement operators do not resolve the identity");
        }
        if (kind_ == MeasurementKind::projective) check_projective();
    }

    // Operators labeled by position: "0", "1", ...
    MeasurementSet(std::vector<ComplexMatrix> operators, MeasurementKind kind)
        : MeasurementSet(with_index_labels(std::move(operators), kind)) {}

    std::size_t size() const { return operators_.size(); }
    std::size_t dim() const { return operators_.front().rows(); }
    MeasurementKind kind() const { return kind_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<ComplexMatrix>& operators() const { return operators_; }
    const std::string& label(std::size_t m) const { return labels_[m]; }
    const ComplexMatrix& op(std::size_t m) const { return operators_[m]; }

private:
    static std::vector<std::string> index_labels(std::size_t n) {
        std::vector<std::string> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
        return out;
    }

    // Sequences the size read before the move; ctor argument order is unspecified.
    static MeasurementSet with_index_labels(std::vector<ComplexMatrix> operators,
                                            MeasurementKind kind) {
        auto labels = index_labels(operators.size());
        return MeasurementSet(std::move(labels), std::move(operators), kind);
    }

    void check_projective() const {
        for (std::size_t i = 0; i < operators_.size(); ++i) {
            const auto& p = operators_[i];
            if (p.hermiticity_defect() > projective_check_tol) {
                throw symmetry_error("projective operator is not Hermitian");
            }
            if (max_abs_diff(p * p, p) > projective_check_tol) {
                throw argument_error("projective operator is not idempotent");
            }
            for (std::size_t j = i + 1; j < operators_.size(); ++j) {
                if ((p * operators_[j]).max_abs() > projective_check_tol) {
                    throw argument_error("projective operators are not mutually orthogonal");
                }
            }
        }
    }

    std::vector<std::string> labels_;
    std::vector<ComplexMatrix> operators_;
    MeasurementKind kind_;
};

// Hermitian observable with its eigenvalue outcomes and eigenspace projectors.
class Observable {
public:
    Observable(ComplexMatrix matrix, Spectrum spectral, std::vector<double> outcome_values,
               std::vector<ComplexMatrix> projectors)
        : matrix_(std::move(matrix)),
          spectral_(std::move(spectral)),
          outcome_values_(std::move(outcome_values)),
          projectors_(std::move(projectors)) {
        if (outcome_values_.size() != projectors_.size() || projectors_.empty()) {
            throw argument_error("observable outcome count does not match projector count");
        }
        for (const auto& v : outcome_values_) labels_.push_back(eigenvalue_label(v));
        ComplexMatrix rebuilt(matrix_.rows(), matrix_.cols());
        for (std::size_t m = 0; m < projectors_.size(); ++m) {
            rebuilt += outcome_values_[m] * projectors_[m];
        }
        if (max_abs_diff(rebuilt, matrix_) > observable_reconstruction_tol) {
            throw argument_error("projectors do not reconstruct the observable");
        }
    }

    const ComplexMatrix& matrix() const { return matrix_; }
    const Spectrum& spectral() const { return spectral_; }
    std::size_t dim() const { return matrix_.rows(); }
    std::size_t outcome_count() const { return outcome_values_.size(); }
    const std::vector<double>& outcome_values() const { return outcome_values_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<ComplexMatrix>& projectors() const { return projectors_; }

    // Projective MeasurementSet over the eigenspaces; validates orthogonality.
    MeasurementSet to_measurement() const {
        return MeasurementSet(labels_, projectors_, MeasurementKind::projective);
    }

    bool nondegenerate() const {
        for (const auto& p : projectors_) {
            if (std::abs(trace(p).real() - 1.0) > 1e-6) return false;
        }
        return true;
    }

private:
    ComplexMatrix matrix_;
    Spectrum spectral_;
    std::vector<double> outcome_values_;
    std::vector<std::string> labels_;
    std::vector<ComplexMatrix> projectors_;
};

struct OutcomeEntry {
    std::string label;
    double probability;
    // Empty when the outcome probability is below probability_clamp_tol and
    // the post-state denominator vanishes.
    std::optional<DensityOperator> post_state;
};

struct OutcomeDistribution {
    std::vector<OutcomeEntry> entries;

    const OutcomeEntry& entry(std::size_t m) const { return entries[m]; }
    std::size_t size() const { return entries.size(); }

    double probability_sum() const {
        double s = 0.0;
        for (const auto& e : entries) s += e.probability;
        return s;
    }
};

struct MomentStats {
    double mean;
    double variance;
    double std_dev;
};

// p(m) = tr(M_m rho M_m†), post-state M_m rho M_m† / p(m).
inline OutcomeDistribution outcome_distribution(const MeasurementSet& ms,
                                                const DensityOperator& rho) {
    if (ms.dim() != rho.dim()) throw shape_error("measurement dimension does not match state");
    OutcomeDistribution dist;
    double sum = 0.0;
    for (std::size_t m = 0; m < ms.size(); ++m) {
        ComplexMatrix updated = ms.op(m) * rho.matrix() * ms.op(m).adjoint();
        const double p = trace(updated).real();
        if (p < -probability_clamp_tol) {
            throw positivity_error("negative outcome probability");
        }
        if (p > 1.0 + probability_clamp_tol) {
            throw normalization_error("outcome probability exceeds one");
        }
        OutcomeEntry entry;
        entry.label = ms.label(m);
        entry.probability = std::min(std::max(p, 0.0), 1.0);
        if (p > probability_clamp_tol) {
            entry.post_state = DensityOperator(rho.dims(), (1.0 / p) * updated);
        }
        sum += entry.probability;
        dist.entries.push_back(std::move(entry));
    }
    if (std::abs(sum - 1.0) > probability_sum_tol) {
        throw normalization_error("outcome probabilities do not sum to one");
    }
    return dist;
}

// rho -> sum_m M_m rho M_m†, the measure-and-forget update.
inline DensityOperator nonselective_update(const MeasurementSet& ms, const DensityOperator& rho) {
    if (ms.dim() != rho.dim()) throw shape_error("measurement dimension does not match state");
    ComplexMatrix acc(rho.dim(), rho.dim());
    for (std::size_t m = 0; m < ms.size(); ++m) {
        acc += ms.op(m) * rho.matrix() * ms.op(m).adjoint();
    }
    return DensityOperator(rho.dims(), std::move(acc));
}

// Spectral decomposition with eigenvalues merged into eigenspaces when they
// agree within degeneracy_rel_tol relative to max(1, |lambda|).
inline Observable projective_from_observable(const ComplexMatrix& m,
                                             double hermiticity_tol = 1e-10) {
    if (!m.square()) throw shape_error("observable must be square");
    if (m.hermiticity_defect() > hermiticity_tol) {
        throw symmetry_error("observable is not Hermitian");
    }
    Spectrum sp = eig_hermitian(hermitian_part(m));

    std::vector<double> values;
    std::vector<ComplexMatrix> projectors;
    std::size_t k = 0;
    while (k < sp.eigenvalues.size()) {
        const double rep = sp.eigenvalues[k];
        const double merge_tol = degeneracy_rel_tol * std::max(1.0, std::abs(rep));
        std::size_t end = k + 1;
        while (end < sp.eigenvalues.size() && std::abs(sp.eigenvalues[end] - rep) <= merge_tol) {
            ++end;
        }
        ComplexMatrix proj(m.rows(), m.rows());
        double value_sum = 0.0;
        for (std::size_t c = k; c < end; ++c) {
            const ComplexMatrix v = sp.eigenvector(c);
            proj += v * v.adjoint();
            value_sum += sp.eigenvalues[c];
        }
        values.push_back(value_sum / static_cast<double>(end - k));
        projectors.push_back(std::move(proj));
        k = end;
    }
    return Observable(m, std::move(sp), std::move(values), std::move(projectors));
}

// The computational basis as an observable diag(0..d-1) with outcome k
// exactly the projector |k><k|, so outcome indices read as basis labels.
inline Observable computational_observable(std::size_t dim) {
    if (dim == 0) throw argument_error("observable needs a positive dimension");
    ComplexMatrix m(dim, dim);
    Spectrum sp;
    sp.eigenvectors = identity(dim);
    std::vector<double> values;
    std::vector<ComplexMatrix> projectors;
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = static_cast<double>(k);
        sp.eigenvalues.push_back(static_cast<double>(k));
        values.push_back(static_cast<double>(k));
        projectors.push_back(basis_projector(dim, k));
    }
    return Observable(std::move(m), std::move(sp), std::move(values), std::move(projectors));
}

// M_m = sqrt(E_m). The POVM statistics tr(E_m rho) are preserved by
// construction since M†M = E.
inline MeasurementSet povm_to_measurement(const std::vector<ComplexMatrix>& elements) {
    if (elements.empty()) throw argument_error("POVM with no elements");
    const std::size_t d = elements.front().rows();
    ComplexMatrix sum(d, d);
    std::vector<ComplexMatrix> ops;
    for (const auto& e : elements) {
        if (!e.square() || e.rows() != d) {
            throw shape_error("POVM elements must be square and share one dimension");
        }
        if (e.hermiticity_defect() > completeness_tol) {
            throw symmetry_error("POVM element is not Hermitian");
        }
        sum += e;
        ops.push_back(hermitian_sqrt(hermitian_part(e), povm_eigenvalue_floor));
    }
    if (max_abs_diff(sum, identity(d)) > completeness_tol) {
        throw completeness_error("POVM elements do not sum to the identity");
    }
    return MeasurementSet(std::move(ops), MeasurementKind::povm_derived);
}

// Lift each operator to I x ... x M x ... x I acting on subsystem `target`
// of a register with the given dimensions (big-endian ordering).
inline MeasurementSet subsystem_measurement(const MeasurementSet& ms, std::size_t target,
                                            const Dims& dims) {
    if (target >= dims.size()) throw argument_error("target subsystem out of range");
    if (ms.dim() != dims[target]) {
        throw shape_error("measurement dimension does not match target subsystem");
    }
    std::size_t before = 1, after = 1;
    for (std::size_t s = 0; s < target; ++s) before *= dims[s];
    for (std::size_t s = target + 1; s < dims.size(); ++s) after *= dims[s];

    std::vector<ComplexMatrix> lifted;
    lifted.reserve(ms.size());
    for (const auto& op : ms.operators()) {
        lifted.push_back(kron(kron(identity(before), op), identity(after)));
    }
    return MeasurementSet(ms.labels(), std::move(lifted), ms.kind());
}

// mean = tr(M rho), variance = tr(M^2 rho) - mean^2.
inline MomentStats moment_stats(const Observable& obs, const DensityOperator& rho) {
    if (obs.dim() != rho.dim()) throw shape_error("observable dimension does not match state");
    const double mean = trace(obs.matrix() * rho.matrix()).real();
    const double second = trace(obs.matrix() * obs.matrix() * rho.matrix()).real();
    double variance = second - mean * mean;
    if (variance < moment_variance_floor) {
        throw positivity_error("variance below roundoff floor");
    }
    variance = std::max(variance, 0.0);
    return MomentStats{mean, variance, std::sqrt(variance)};
}

}  // namespace qops
