// scenarios.hpp
// Named, seeded demonstration scenarios behind the CLI. Each one builds a
// ScenarioReport whose checks encode the claims the scenario demonstrates.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qops/channel.hpp"
#include "qops/demon.hpp"
#include "qops/entropy.hpp"
#include "qops/measurement.hpp"
#include "qops/report.hpp"
#include "qops/sampling.hpp"
#include "qops/state.hpp"

namespace qops {

struct ScenarioOptions {
    std::uint64_t seed = 1;
    DemonConfig demon{};  // seed field is overridden by `seed`
};

inline std::vector<std::string> scenario_names() {
    return {"ghz-trace",  "w-trace",      "povm-three",        "erasure",
            "trace-equivalence", "entropy-gain", "conservation-demo", "demon"};
}

// The three-element qubit POVM {c|1><1|, c|-><-|, I - E1 - E2} with
// c = sqrt(2)/(1+sqrt(2)).
inline std::vector<ComplexMatrix> three_element_povm() {
    const double c = std::sqrt(2.0) / (1.0 + std::sqrt(2.0));
    const ComplexMatrix e1 = c * basis_projector(2, 1);
    const ComplexMatrix minus{{cplx{0.5, 0.0}, cplx{-0.5, 0.0}},
                              {cplx{-0.5, 0.0}, cplx{0.5, 0.0}}};
    const ComplexMatrix e2 = c * minus;
    const ComplexMatrix e3 = identity(2) - e1 - e2;
    return {e1, e2, e3};
}

namespace scenario_detail {

inline JsonValue entropy_json(const EntropyValue& e) {
    JsonValue v = JsonValue::object();
    v.add("bits", JsonValue::number(e.bits));
    v.add("nats", JsonValue::number(e.nats));
    return v;
}

// Dims plus the matrix in text-row form, one "re+imj ..." string per row.
inline JsonValue state_json(const DensityOperator& rho) {
    JsonValue v = JsonValue::object();
    JsonValue dims = JsonValue::array();
    for (std::size_t d : rho.dims()) dims.push(JsonValue::uinteger(d));
    v.add("dims", std::move(dims));
    JsonValue rows = JsonValue::array();
    const ComplexMatrix& m = rho.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string line;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) line += ' ';
            line += format_complex(m(i, j));
        }
        rows.push(JsonValue::string(std::move(line)));
    }
    v.add("matrix", std::move(rows));
    return v;
}

inline double max_deviation(const std::vector<double>& values,
                            const std::vector<double>& expected) {
    double worst = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        worst = std::max(worst, std::abs(values[i] - expected[i]));
    }
    return worst;
}

inline ScenarioReport ghz_trace(const ScenarioOptions&) {
    ScenarioReport rep;
    rep.scenario = "ghz-trace";
    rep.inputs.add("n_qubits", JsonValue::integer(3));
    rep.inputs.add("traced_subsystem", JsonValue::integer(0));

    const DensityOperator rho = density_from_ket(ghz_state(3));
    const DensityOperator reduced = partial_trace(rho, {1, 2});
    const Spectrum sp = eig_hermitian(hermitian_part(reduced.matrix()));

    rep.checks.push_back(make_check(
        "eigenvalues-half-half-zero-zero",
        max_deviation(sp.eigenvalues, {0.5, 0.5, 0.0, 0.0}), 1e-10));

    // The half-half eigenspace must live on |00> and |11> (indices 0, 3).
    double off_support = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
        const ComplexMatrix v = sp.eigenvector(k);
        off_support = std::max({off_support, std::abs(v(1, 0)), std::abs(v(2, 0))});
    }
    rep.checks.push_back(make_check("eigenvector-support", off_support, 1e-10));

    ComplexMatrix expected(4, 4);
    expected(0, 0) = 0.5;
    expected(3, 3) = 0.5;
    rep.checks.push_back(
        make_check("reduced-matrix-equals-even-mixture",
                   max_abs_diff(reduced.matrix(), expected), 1e-12));

    const EntropyValue s = von_neumann_entropy(reduced);
    rep.checks.push_back(make_check("reduced-entropy-one-bit", std::abs(s.bits - 1.0), 1e-10));

    rep.results.add("reduced_state", state_json(reduced));
    rep.results.add("eigenvalues", JsonValue::real_list(sp.eigenvalues));
    rep.results.add("entropy", entropy_json(s));
    return rep;
}

inline ScenarioReport w_trace(const ScenarioOptions&) {
    ScenarioReport rep;
    rep.scenario = "w-trace";
    rep.inputs.add("n_qubits", JsonValue::integer(3));
    rep.inputs.add("traced_subsystem", JsonValue::integer(0));

    const DensityOperator rho = density_from_ket(w_state(3));
    const DensityOperator reduced = partial_trace(rho, {1, 2});
    const Spectrum sp = eig_hermitian(hermitian_part(reduced.matrix()));

    const double third = 1.0 / 3.0;
    rep.checks.push_back(make_check(
        "eigenvalues-two-thirds-one-third",
        max_deviation(sp.eigenvalues, {2.0 * third, third, 0.0, 0.0}), 1e-10));

    // Leading eigenvector against (|01> + |10>)/sqrt(2).
    const ComplexMatrix v = sp.eigenvector(0);
    const double r = 1.0 / std::sqrt(2.0);
    const cplx overlap = std::conj(v(1, 0)) * r + std::conj(v(2, 0)) * r;
    rep.checks.push_back(
        make_check("leading-eigenvector-bell-overlap", 1.0 - std::abs(overlap), 1e-9));

    const EntropyValue s = von_neumann_entropy(reduced);
    const EntropyValue closed = shannon_entropy({third, 2.0 * third});
    rep.checks.push_back(
        make_check("entropy-matches-eigenvalue-formula", std::abs(s.bits - closed.bits), 1e-10));
    rep.checks.push_back(make_check("entropy-value", std::abs(s.bits - 0.91830), 1e-4));

    rep.results.add("reduced_state", state_json(reduced));
    rep.results.add("eigenvalues", JsonValue::real_list(sp.eigenvalues));
    rep.results.add("bell_overlap", JsonValue::number(std::abs(overlap)));
    rep.results.add("entropy", entropy_json(s));
    return rep;
}

inline ScenarioReport povm_three(const ScenarioOptions&) {
    ScenarioReport rep;
    rep.scenario = "povm-three";
    const double c = std::sqrt(2.0) / (1.0 + std::sqrt(2.0));
    rep.inputs.add("element_weight_c", JsonValue::number(c));
    rep.inputs.add("probe_state", JsonValue::string("|1><1|"));

    const auto elements = three_element_povm();
    ComplexMatrix sum(2, 2);
    double min_eigenvalue = 0.0;
    for (const auto& e : elements) {
        sum += e;
        const Spectrum sp = eig_hermitian(hermitian_part(e));
        min_eigenvalue = std::min(min_eigenvalue, sp.eigenvalues.back());
    }
    rep.checks.push_back(
        make_check("elements-sum-to-identity", max_abs_diff(sum, identity(2)), 1e-12));
    rep.checks.push_back(make_check("elements-positive", -min_eigenvalue, 1e-10));

    const MeasurementSet ms = povm_to_measurement(elements);
    const DensityOperator one = density_from_ket(basis_ket({2}, 1));
    const OutcomeDistribution dist = outcome_distribution(ms, one);

    // Probabilities on |1> by direct evaluation <1|E|1>: c, c/2, 1 - 3c/2.
    rep.checks.push_back(
        make_check("p1-closed-form", std::abs(dist.entry(0).probability - c), 1e-12));
    rep.checks.push_back(
        make_check("p2-closed-form", std::abs(dist.entry(1).probability - 0.5 * c), 1e-12));
    rep.checks.push_back(make_check(
        "p3-closed-form", std::abs(dist.entry(2).probability - (1.0 - 1.5 * c)), 1e-12));
    rep.checks.push_back(
        make_check("probability-sum", std::abs(dist.probability_sum() - 1.0), 1e-12));

    // Nonselective application to |+><+| keeps strictly partial coherence.
    const DensityOperator plus = density_from_ket(plus_ket());
    const double l1 = l1_coherence(nonselective_update(ms, plus), identity(2));
    rep.checks.push_back(make_check("plus-keeps-partial-coherence",
                                    std::max(1e-6 - l1, l1 - (1.0 - 1e-6)), 0.0));

    JsonValue probs = JsonValue::array();
    for (const auto& entry : dist.entries) probs.push(JsonValue::number(entry.probability));
    rep.results.add("probabilities", std::move(probs));
    rep.results.add("closed_forms",
                    JsonValue::real_list({c, 0.5 * c, 1.0 - 1.5 * c}));
    rep.results.add("plus_l1_coherence_after", JsonValue::number(l1));
    return rep;
}

inline ScenarioReport erasure(const ScenarioOptions& opt) {
    ScenarioReport rep;
    rep.scenario = "erasure";
    const std::size_t dim = 3;
    const std::size_t n_states = 20;
    const std::size_t n_trials = 10000;
    rep.inputs.add("dimension", JsonValue::integer(static_cast<long long>(dim)));
    rep.inputs.add("random_states", JsonValue::integer(static_cast<long long>(n_states)));
    rep.inputs.add("frequency_trials", JsonValue::integer(static_cast<long long>(n_trials)));
    rep.inputs.add("seed", JsonValue::uinteger(opt.seed));

    SplitMix64 rng(opt.seed);
    const KrausChannel channel = erasure_channel(dim);
    const Ket zero = basis_ket({dim}, 0);
    const Observable basis = computational_observable(dim);

    double worst_channel = 0.0;
    double worst_rotate = 0.0;
    double worst_entropy = 0.0;
    for (std::size_t k = 0; k < n_states; ++k) {
        const DensityOperator rho = random_density({dim}, rng);
        const DensityOperator via_channel = apply(channel, rho);
        worst_channel = std::max(worst_channel, 1.0 - pure_state_fidelity(via_channel, zero));
        worst_entropy = std::max(worst_entropy, von_neumann_entropy(via_channel).bits);

        const EraseResult res = erase_via_measure_rotate(rho, basis, rng.next_u64());
        worst_rotate = std::max(worst_rotate, 1.0 - pure_state_fidelity(res.erased, zero));
    }
    rep.checks.push_back(make_check("channel-resets-to-standard-state", worst_channel, 1e-12));
    rep.checks.push_back(make_check("measure-rotate-resets-to-standard-state", worst_rotate, 1e-12));
    rep.checks.push_back(make_check("erased-entropy-zero", worst_entropy, 1e-10));

    // Outcome frequencies on |+> against the Born probabilities (1/2, 1/2).
    const DensityOperator plus = density_from_ket(plus_ket());
    const Observable qubit_basis = computational_observable(2);
    std::size_t count0 = 0;
    EraseTranscript last{};
    for (std::size_t t = 0; t < n_trials; ++t) {
        EraseResult res = erase_via_measure_rotate(plus, qubit_basis, rng.next_u64());
        if (res.transcript.outcome_index == 0) ++count0;
        last = std::move(res.transcript);
    }
    const double freq0 = static_cast<double>(count0) / static_cast<double>(n_trials);
    rep.checks.push_back(make_check("outcome-frequency-half", std::abs(freq0 - 0.5), 0.02));

    rep.results.add("worst_channel_infidelity", JsonValue::number(worst_channel));
    rep.results.add("worst_measure_rotate_infidelity", JsonValue::number(worst_rotate));
    rep.results.add("frequency_outcome_0", JsonValue::number(freq0));
    JsonValue transcript = JsonValue::object();
    transcript.add("outcome", JsonValue::string(last.outcome_label));
    JsonValue perm = JsonValue::array();
    for (std::size_t p : last.permutation) {
        perm.push(JsonValue::integer(static_cast<long long>(p)));
    }
    transcript.add("permutation", std::move(perm));
    transcript.add("seed", JsonValue::uinteger(last.seed));
    rep.results.add("sample_transcript", std::move(transcript));
    return rep;
}

inline ScenarioReport trace_equivalence(const ScenarioOptions& opt) {
    ScenarioReport rep;
    rep.scenario = "trace-equivalence";
    const std::size_t n_trials = 50;
    rep.inputs.add("random_trials", JsonValue::integer(static_cast<long long>(n_trials)));
    rep.inputs.add("seed", JsonValue::uinteger(opt.seed));

    // Worked three-qubit cases first.
    const Observable qubit_basis = computational_observable(2);
    const EquivalenceResult ghz =
        trace_measurement_equivalence(density_from_ket(ghz_state(3)), 0, qubit_basis);
    rep.checks.push_back(make_check("ghz-equivalence", ghz.max_abs_diff, 1e-12));

    const EquivalenceResult w =
        trace_measurement_equivalence(density_from_ket(w_state(3)), 0, qubit_basis);
    rep.checks.push_back(make_check("w-equivalence", w.max_abs_diff, 1e-12));

    SplitMix64 rng(opt.seed);
    const std::vector<Dims> shapes = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    double worst = 0.0;
    for (std::size_t t = 0; t < n_trials; ++t) {
        const Dims& dims = shapes[t % shapes.size()];
        const std::size_t target = t % dims.size();
        const DensityOperator joint = random_density(dims, rng);
        const Observable basis = random_nondegenerate_basis(dims[target], rng);
        const EquivalenceResult res = trace_measurement_equivalence(joint, target, basis);
        worst = std::max(worst, res.max_abs_diff);
    }
    rep.checks.push_back(make_check("random-sweep-max-difference", worst, 1e-10));

    rep.results.add("ghz_difference", JsonValue::number(ghz.max_abs_diff));
    rep.results.add("w_difference", JsonValue::number(w.max_abs_diff));
    rep.results.add("random_sweep_max_difference", JsonValue::number(worst));
    return rep;
}

inline ScenarioReport entropy_gain(const ScenarioOptions& opt) {
    ScenarioReport rep;
    rep.scenario = "entropy-gain";
    const std::size_t n_trials = 50;
    rep.inputs.add("random_trials", JsonValue::integer(static_cast<long long>(n_trials)));
    rep.inputs.add("seed", JsonValue::uinteger(opt.seed));

    const Observable z = computational_observable(2);
    const EntropyGain plus = projective_entropy_gain(density_from_ket(plus_ket()), z);
    rep.checks.push_back(make_check("plus-before-zero", std::abs(plus.before.bits), 1e-12));
    rep.checks.push_back(make_check("plus-after-one-bit", std::abs(plus.after.bits - 1.0), 1e-12));
    rep.checks.push_back(make_check("plus-gain-one-bit", std::abs(plus.gain_bits - 1.0), 1e-12));

    const DensityOperator zero = density_from_ket(basis_ket({2}, 0));
    const EntropyGain eigen = projective_entropy_gain(zero, z);
    const DensityOperator zero_after = nonselective_update(z.to_measurement(), zero);
    rep.checks.push_back(make_check("eigenstate-gain-zero", std::abs(eigen.gain_bits), 1e-9));
    rep.checks.push_back(make_check("eigenstate-unchanged",
                                    max_abs_diff(zero_after.matrix(), zero.matrix()), 1e-10));

    SplitMix64 rng(opt.seed);
    double min_gain = 0.0;
    for (std::size_t t = 0; t < n_trials; ++t) {
        const DensityOperator rho = random_density({3}, rng);
        const Observable basis = random_nondegenerate_basis(3, rng);
        const EntropyGain g = projective_entropy_gain(rho, basis);
        min_gain = std::min(min_gain, g.gain_bits);
    }
    rep.checks.push_back(make_check("random-sweep-gain-nonnegative", -min_gain, 1e-9));

    rep.results.add("plus_before", entropy_json(plus.before));
    rep.results.add("plus_after", entropy_json(plus.after));
    rep.results.add("random_sweep_min_gain_bits", JsonValue::number(min_gain));
    return rep;
}

inline ScenarioReport conservation_demo(const ScenarioOptions&) {
    ScenarioReport rep;
    rep.scenario = "conservation-demo";
    const double e0 = 1.0;
    const double e1 = 3.0;
    const double delta_e = 0.5 * (e1 - e0);
    rep.inputs.add("ground_energy", JsonValue::number(e0));
    rep.inputs.add("excited_energy", JsonValue::number(e1));
    rep.inputs.add("photon_energy", JsonValue::number(delta_e));

    ComplexMatrix h(2, 2);
    h(0, 0) = e0;
    h(1, 1) = e1;
    const Observable obs = projective_from_observable(h);

    // Exact-rational superposition density matrix: all entries 1/2.
    const DensityOperator super({2}, ComplexMatrix{{cplx{0.5, 0.0}, cplx{0.5, 0.0}},
                                                   {cplx{0.5, 0.0}, cplx{0.5, 0.0}}});
    const double expected = e0 + delta_e;
    const double mean_super = trace(h * super.matrix()).real();
    rep.checks.push_back(
        make_check("superposition-mean-exact", std::abs(mean_super - expected), 0.0));

    const double mean0 = trace(h * density_from_ket(basis_ket({2}, 0)).matrix()).real();
    const double mean1 = trace(h * density_from_ket(basis_ket({2}, 1)).matrix()).real();
    rep.checks.push_back(make_check("definite-ground-misses-by-photon",
                                    std::abs(std::abs(mean0 - expected) - delta_e), 0.0));
    rep.checks.push_back(make_check("definite-excited-misses-by-photon",
                                    std::abs(std::abs(mean1 - expected) - delta_e), 0.0));

    const MomentStats stats = moment_stats(obs, super);
    rep.checks.push_back(
        make_check("superposition-spread-equals-photon", std::abs(stats.std_dev - delta_e), 0.0));

    rep.results.add("superposition_mean", JsonValue::number(mean_super));
    rep.results.add("definite_means", JsonValue::real_list({mean0, mean1}));
    rep.results.add("superposition_std_dev", JsonValue::number(stats.std_dev));
    return rep;
}

inline ScenarioReport demon_scenario(const ScenarioOptions& opt) {
    ScenarioReport rep;
    rep.scenario = "demon";

    DemonConfig cfg = opt.demon;
    cfg.seed = opt.seed;
    const RunReport run_report = run(cfg);
    const DemonConfig& used = run_report.config;

    rep.inputs.add("n_molecules", JsonValue::uinteger(used.n_molecules));
    rep.inputs.add("temperature", JsonValue::number(used.temperature));
    rep.inputs.add("box_length", JsonValue::number(used.box_length));
    rep.inputs.add("mass", JsonValue::number(used.mass));
    rep.inputs.add("speed_threshold", JsonValue::number(used.speed_threshold));
    rep.inputs.add("memory_capacity_bits", JsonValue::uinteger(used.memory_capacity_bits));
    rep.inputs.add("steps", JsonValue::uinteger(used.steps));
    rep.inputs.add("dt", JsonValue::number(used.dt));
    rep.inputs.add("seed", JsonValue::uinteger(used.seed));

    const RunSummary& sum = run_report.summary;
    if (used.steps == 0) {
        rep.checks.push_back(make_check("ledger-zero", std::abs(sum.final_total), 0.0));
    } else {
        rep.checks.push_back(
            make_check("second-law-per-step", -sum.min_step_delta, second_law_tol));
        if (sum.total_erasures > 0) {
            const double expected =
                constants::bits_to_joule_per_kelvin(static_cast<double>(used.memory_capacity_bits));
            double worst = 0.0;
            for (const auto& ev : run_report.erasures) {
                worst = std::max(worst, std::abs(ev.entropy_jump - expected));
            }
            rep.checks.push_back(make_check("erasure-jump-exact", worst, 0.0));
        }
        if (used.steps >= 5000 && std::isfinite(used.speed_threshold)) {
            rep.checks.push_back(
                make_check("hot-cold-separation", -sum.temperature_difference, 0.0));
        }
    }

    JsonValue summary = JsonValue::object();
    summary.add("final_t_a", JsonValue::number(sum.final_t_a));
    summary.add("final_t_b", JsonValue::number(sum.final_t_b));
    summary.add("temperature_difference", JsonValue::number(sum.temperature_difference));
    summary.add("min_step_delta", JsonValue::number(sum.min_step_delta));
    summary.add("final_total", JsonValue::number(sum.final_total));
    summary.add("total_measurements", JsonValue::uinteger(sum.total_measurements));
    summary.add("total_erasures", JsonValue::uinteger(sum.total_erasures));
    summary.add("kick_momentum", JsonValue::number(sum.kick_momentum));
    summary.add("velocity_mean", JsonValue::number(sum.velocity_mean));
    summary.add("velocity_std", JsonValue::number(sum.velocity_std));
    rep.results.add("summary", std::move(summary));

    JsonValue ledger = JsonValue::object();
    ledger.add("gas_entropy", JsonValue::number(run_report.ledger.gas_entropy));
    ledger.add("demon_memory_entropy", JsonValue::number(run_report.ledger.demon_memory_entropy));
    ledger.add("environment_entropy", JsonValue::number(run_report.ledger.environment_entropy));
    ledger.add("total", JsonValue::number(run_report.ledger.total));
    rep.results.add("ledger", std::move(ledger));

    JsonValue erasures = JsonValue::array();
    for (const auto& ev : run_report.erasures) {
        JsonValue e = JsonValue::object();
        e.add("step", JsonValue::uinteger(ev.step));
        e.add("bits_erased", JsonValue::uinteger(ev.bits_erased));
        e.add("entropy_jump", JsonValue::number(ev.entropy_jump));
        erasures.push(std::move(e));
    }
    rep.results.add("erasure_events", std::move(erasures));

    JsonValue series = JsonValue::array();
    for (const auto& rec : run_report.steps) {
        JsonValue row = JsonValue::object();
        row.add("step", JsonValue::uinteger(rec.step));
        row.add("n_a", JsonValue::uinteger(rec.n_a));
        row.add("n_b", JsonValue::uinteger(rec.n_b));
        row.add("t_a", JsonValue::number(rec.t_a));
        row.add("t_b", JsonValue::number(rec.t_b));
        row.add("gas_entropy", JsonValue::number(rec.gas_entropy));
        row.add("memory_entropy", JsonValue::number(rec.memory_entropy));
        row.add("environment_entropy", JsonValue::number(rec.environment_entropy));
        row.add("total", JsonValue::number(rec.total));
        row.add("used_bits", JsonValue::uinteger(rec.used_bits));
        row.add("cumulative_measurements", JsonValue::uinteger(rec.cumulative_measurements));
        row.add("cumulative_erasures", JsonValue::uinteger(rec.cumulative_erasures));
        series.push(std::move(row));
    }
    rep.results.add("time_series", std::move(series));
    return rep;
}

}  // namespace scenario_detail

// CSV rendering of a demon run's time series.
inline void write_demon_csv(std::ostream& os, const RunReport& report) {
    os << "step,n_a,n_b,t_a,t_b,gas_entropy,memory_entropy,environment_entropy,total,used_bits\n";
    for (const auto& r : report.steps) {
        os << r.step << ',' << r.n_a << ',' << r.n_b << ',' << json_number(r.t_a) << ','
           << json_number(r.t_b) << ',' << json_number(r.gas_entropy) << ','
           << json_number(r.memory_entropy) << ',' << json_number(r.environment_entropy) << ','
           << json_number(r.total) << ',' << r.used_bits << "\n";
    }
}

inline ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opt = {}) {
    if (name == "ghz-trace") return scenario_detail::ghz_trace(opt);
    if (name == "w-trace") return scenario_detail::w_trace(opt);
    if (name == "povm-three") return scenario_detail::povm_three(opt);
    if (name == "erasure") return scenario_detail::erasure(opt);
    if (name == "trace-equivalence") return scenario_detail::trace_equivalence(opt);
    if (name == "entropy-gain") return scenario_detail::entropy_gain(opt);
    if (name == "conservation-demo") return scenario_detail::conservation_demo(opt);
    if (name == "demon") return scenario_detail::demon_scenario(opt);
    throw config_error("unknown scenario: " + name);
}

}  // namespace qops
