// channel.hpp
// Quantum operations as Kraus sets, the erasure channel, erasure as
// measurement followed by a permutation unitary, and the equivalence of
// partial trace with nonselective subsystem measurement.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qops/complex_matrix.hpp"
#include "qops/errors.hpp"
#include "qops/measurement.hpp"
#include "qops/rng.hpp"
#include "qops/state.hpp"

namespace qops {

inline constexpr double kraus_completeness_tol = 1e-10;

namespace detail {

// Unit vector spanning the range of a rank-1 projector |v><v|: the column
// of largest norm, normalized. Phase is arbitrary and unused downstream.
inline ComplexMatrix rank_one_vector(const ComplexMatrix& projector) {
    const std::size_t d = projector.rows();
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < d; ++c) {
        double n = 0.0;
        for (std::size_t r = 0; r < d; ++r) n += std::norm(projector(r, c));
        if (n > best_norm) {
            best_norm = n;
            best = c;
        }
    }
    if (best_norm <= 0.0) throw argument_error("projector has empty range");
    ComplexMatrix v(d, 1);
    const double scale = 1.0 / std::sqrt(best_norm);
    for (std::size_t r = 0; r < d; ++r) v(r, 0) = projector(r, best) * scale;
    return v;
}

}  // namespace detail

class KrausChannel {
public:
    // Elements may be rectangular (input_dim columns, output_dim rows).
    explicit KrausChannel(std::vector<ComplexMatrix> elements, bool trace_preserving = true)
        : elements_(std::move(elements)), trace_preserving_(trace_preserving) {
        if (elements_.empty()) throw argument_error("channel with no Kraus elements");
        const std::size_t out = elements_.front().rows();
        const std::size_t in = elements_.front().cols();
        for (const auto& k : elements_) {
            if (k.rows() != out || k.cols() != in) {
                throw shape_error("Kraus elements have mismatched shapes");
            }
        }
        if (trace_preserving_) {
            ComplexMatrix sum(in, in);
            for (const auto& k : elements_) sum += k.adjoint() * k;
            if (max_abs_diff(sum, identity(in)) > kraus_completeness_tol) {
                throw completeness_error("Kraus elements do not satisfy sum K†K = I");
            }
        }
    }

    const std::vector<ComplexMatrix>& elements() const { return elements_; }
    std::size_t input_dim() const { return elements_.front().cols(); }
    std::size_t output_dim() const { return elements_.front().rows(); }
    bool trace_preserving() const { return trace_preserving_; }

private:
    std::vector<ComplexMatrix> elements_;
    bool trace_preserving_;
};

// rho -> sum_k K rho K† as a raw matrix; no density-operator validation.
inline ComplexMatrix apply_matrix(const KrausChannel& ch, const ComplexMatrix& rho) {
    if (!rho.square() || rho.rows() != ch.input_dim()) {
        throw shape_error("state dimension does not match channel input");
    }
    ComplexMatrix acc(ch.output_dim(), ch.output_dim());
    for (const auto& k : ch.elements()) acc += k * rho * k.adjoint();
    return acc;
}

inline DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho) {
    ComplexMatrix out = apply_matrix(ch, rho.matrix());
    Dims dims = (ch.output_dim() == rho.dim()) ? rho.dims() : Dims{ch.output_dim()};
    return DensityOperator(std::move(dims), std::move(out));
}

// Elements {|0><i|}: every input collapses to the standard state |0><0|.
inline KrausChannel erasure_channel(std::size_t input_dim) {
    if (input_dim == 0) throw argument_error("erasure channel needs a positive dimension");
    std::vector<ComplexMatrix> elements;
    elements.reserve(input_dim);
    for (std::size_t i = 0; i < input_dim; ++i) {
        elements.push_back(basis_matrix(input_dim, 0, i));
    }
    return KrausChannel(std::move(elements), true);
}

// Record of one sampled erasure: which outcome occurred and which basis
// permutation was applied. permutation[k] is where basis vector k is sent.
struct EraseTranscript {
    std::size_t outcome_index;
    std::string outcome_label;
    std::vector<std::size_t> permutation;
    std::uint64_t seed;
};

struct EraseResult {
    DensityOperator erased;
    EraseTranscript transcript;
};

// Measure in the given nondegenerate basis, then rotate the collapsed state
// onto |0> with the transposition permutation (outcome <-> 0). The sampled
// outcome makes the procedure stochastic; the seed makes it reproducible.
inline EraseResult erase_via_measure_rotate(const DensityOperator& rho, const Observable& basis,
                                            std::uint64_t seed) {
    if (basis.dim() != rho.dim()) throw shape_error("basis dimension does not match state");
    if (!basis.nondegenerate()) {
        throw argument_error("erasure basis must be nondegenerate (rank-1 projectors)");
    }
    const OutcomeDistribution dist = outcome_distribution(basis.to_measurement(), rho);

    SplitMix64 rng(seed);
    const std::size_t j = rng.pick_weighted(
        dist.size(), [&](std::size_t m) { return dist.entry(m).probability; });
    const DensityOperator& collapsed = *dist.entry(j).post_state;

    const std::size_t d = rho.dim();
    // U = sum_k |perm[k]><v_k| sends basis vector v_k to computational
    // |perm[k]>; the transposition (0 j) lands the sampled outcome on |0>.
    // v_k is read off the rank-1 projector |v_k><v_k| (outcome order), so a
    // hand-assembled Observable works too. Global phases cancel in U rho U†.
    std::vector<std::size_t> perm(d);
    for (std::size_t k = 0; k < d; ++k) perm[k] = k;
    std::swap(perm[0], perm[j]);

    ComplexMatrix u(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const ComplexMatrix v = detail::rank_one_vector(basis.projectors()[k]);
        for (std::size_t c = 0; c < d; ++c) u(perm[k], c) += std::conj(v(c, 0));
    }

    ComplexMatrix erased = u * collapsed.matrix() * u.adjoint();
    EraseTranscript transcript{j, dist.entry(j).label, std::move(perm), seed};
    return EraseResult{DensityOperator(rho.dims(), std::move(erased)), std::move(transcript)};
}

struct EquivalenceResult {
    DensityOperator via_trace;
    DensityOperator via_measurement;
    double max_abs_diff;
};

// Reduce a joint state two ways: by tracing out `target`, and by measuring
// `target` nonselectively in the given basis before tracing it out. The two
// reductions agree identically; the returned difference is roundoff.
inline EquivalenceResult trace_measurement_equivalence(const DensityOperator& rho_joint,
                                                       std::size_t target,
                                                       const Observable& basis) {
    if (target >= rho_joint.dims().size()) throw argument_error("target subsystem out of range");
    if (basis.dim() != rho_joint.dims()[target]) {
        throw shape_error("basis dimension does not match target subsystem");
    }
    std::vector<std::size_t> keep;
    for (std::size_t s = 0; s < rho_joint.dims().size(); ++s) {
        if (s != target) keep.push_back(s);
    }

    DensityOperator via_trace = partial_trace(rho_joint, keep);
    const MeasurementSet lifted =
        subsystem_measurement(basis.to_measurement(), target, rho_joint.dims());
    DensityOperator via_measurement = partial_trace(nonselective_update(lifted, rho_joint), keep);

    const double diff = max_abs_diff(via_trace.matrix(), via_measurement.matrix());
    return EquivalenceResult{std::move(via_trace), std::move(via_measurement), diff};
}

}  // namespace qops
