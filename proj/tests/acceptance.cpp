// Acceptance gate: one test case per criterion, one PASS/FAIL line each.
// CHECK is used throughout so every clause of a criterion is evaluated.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <vector>

#include "qops/qops.hpp"

using namespace qops;

namespace {

class CriterionLineListener : public Catch::EventListenerBase {
public:
    using Catch::EventListenerBase::EventListenerBase;

    void testCaseEnded(const Catch::TestCaseStats& stats) override {
        const bool ok = stats.totals.assertions.allPassed();
        std::printf("%s %s\n", ok ? "PASS" : "FAIL", stats.testInfo->name.c_str());
        std::fflush(stdout);
    }
};

std::vector<ComplexMatrix> three_outcome_povm() {
    const double c = std::sqrt(2.0) / (1.0 + std::sqrt(2.0));
    const ComplexMatrix e1 = c * basis_projector(2, 1);
    ComplexMatrix minus(2, 2);
    minus(0, 0) = 0.5;
    minus(0, 1) = -0.5;
    minus(1, 0) = -0.5;
    minus(1, 1) = 0.5;
    const ComplexMatrix e2 = c * minus;
    return {e1, e2, identity(2) - e1 - e2};
}

}  // namespace

CATCH_REGISTER_LISTENER(CriterionLineListener)

TEST_CASE("criterion 1: ghz reduction has the even two-outcome spectrum") {
    const DensityOperator reduced = partial_trace(density_from_ket(ghz_state(3)), {0, 1});
    const Spectrum sp = eig_hermitian(hermitian_part(reduced.matrix()));

    REQUIRE(sp.eigenvalues.size() == 4);
    CHECK(std::abs(sp.eigenvalues[0] - 0.5) <= 1e-10);
    CHECK(std::abs(sp.eigenvalues[1] - 0.5) <= 1e-10);
    CHECK(std::abs(sp.eigenvalues[2]) <= 1e-10);
    CHECK(std::abs(sp.eigenvalues[3]) <= 1e-10);

    // Support eigenvectors stay inside span{|00>, |11>}.
    for (std::size_t k = 0; k < 2; ++k) {
        const ComplexMatrix v = sp.eigenvector(k);
        const double leak = std::norm(v(1, 0)) + std::norm(v(2, 0));
        CHECK(leak <= 1e-9);
    }
}

TEST_CASE("criterion 2: w reduction spectrum and dominant direction") {
    const DensityOperator reduced = partial_trace(density_from_ket(w_state(3)), {0});
    const Spectrum sp = eig_hermitian(hermitian_part(reduced.matrix()));

    REQUIRE(sp.eigenvalues.size() == 2);
    CHECK(std::abs(sp.eigenvalues[0] - 2.0 / 3.0) <= 1e-10);
    CHECK(std::abs(sp.eigenvalues[1] - 1.0 / 3.0) <= 1e-10);

    const ComplexMatrix v = sp.eigenvector(0);
    CHECK(std::norm(v(0, 0)) >= 1.0 - 1e-9);
}

TEST_CASE("criterion 3: three-outcome povm discriminates the excited state") {
    const auto elements = three_outcome_povm();

    ComplexMatrix sum(2, 2);
    double min_eig = 0.0;
    for (const auto& e : elements) {
        sum += e;
        const Spectrum sp = eig_hermitian(hermitian_part(e));
        min_eig = std::min(min_eig, sp.eigenvalues.back());
    }
    CHECK(max_abs_diff(sum, identity(2)) <= 1e-12);
    CHECK(min_eig >= -1e-10);

    const MeasurementSet ms = povm_to_measurement(elements);
    const OutcomeDistribution dist =
        outcome_distribution(ms, density_from_ket(basis_ket({2}, 1)));
    const double c = std::sqrt(2.0) / (1.0 + std::sqrt(2.0));
    CHECK(std::abs(dist.entry(0).probability - c) <= 1e-12);
    CHECK(dist.entry(1).probability <= 1e-12);
}

TEST_CASE("criterion 4: partial trace equals blind subsystem measurement") {
    SplitMix64 rng(104);
    const std::vector<Dims> shapes{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const Dims& dims = shapes[static_cast<std::size_t>(t) % shapes.size()];
        const DensityOperator rho = random_density(dims, rng);
        const std::size_t target = static_cast<std::size_t>(t) % 2;
        const Observable basis = random_nondegenerate_basis(dims[target], rng);
        const EquivalenceResult r = trace_measurement_equivalence(rho, target, basis);
        worst = std::max(worst, r.max_abs_diff);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("criterion 5: erasure resets states and samples fairly") {
    SplitMix64 rng(105);
    double worst_infidelity = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
        const DensityOperator out = apply(erasure_channel(d), random_density({d}, rng));
        const double fidelity = out.matrix()(0, 0).real();
        worst_infidelity = std::max(worst_infidelity, std::abs(1.0 - fidelity));
    }
    CHECK(worst_infidelity <= 1e-12);

    const DensityOperator plus = density_from_ket(plus_ket());
    const Observable basis = computational_observable(2);
    std::size_t zeros = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const EraseResult r = erase_via_measure_rotate(plus, basis, static_cast<std::uint64_t>(t));
        if (r.transcript.outcome_index == 0) ++zeros;
    }
    const double freq = static_cast<double>(zeros) / trials;
    CHECK(std::abs(freq - 0.5) <= 0.02);
    CHECK(std::abs((1.0 - freq) - 0.5) <= 0.02);
}

TEST_CASE("criterion 6: blind projective measurement never lowers entropy") {
    SplitMix64 rng(106);
    double worst_gain = 0.0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
        const DensityOperator rho = random_density({d}, rng);
        const Observable basis = random_nondegenerate_basis(d, rng);
        worst_gain = std::min(worst_gain, projective_entropy_gain(rho, basis).gain_bits);
    }
    CHECK(worst_gain >= -1e-9);

    for (int t = 0; t < 20; ++t) {
        const Observable basis = random_nondegenerate_basis(3, rng);
        double raw[3] = {rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)};
        const double norm = raw[0] + raw[1] + raw[2];
        ComplexMatrix m(3, 3);
        for (std::size_t k = 0; k < 3; ++k) m += (raw[k] / norm) * basis.projectors()[k];
        const DensityOperator rho({3}, hermitian_part(m));

        CHECK(std::abs(projective_entropy_gain(rho, basis).gain_bits) <= 1e-9);
        const DensityOperator updated = nonselective_update(basis.to_measurement(), rho);
        CHECK(max_abs_diff(updated.matrix(), rho.matrix()) <= 1e-10);
    }
}

TEST_CASE("criterion 7: entropy benchmarks") {
    CHECK(std::abs(von_neumann_entropy(density_from_ket(ghz_state(3))).bits) <= 1e-10);
    CHECK(std::abs(von_neumann_entropy(density_from_ket(basis_ket({2}, 0))).bits) <= 1e-10);
    CHECK(std::abs(von_neumann_entropy(maximally_mixed({2})).bits - 1.0) <= 1e-12);

    const DensityOperator w_qubit = partial_trace(density_from_ket(w_state(3)), {0});
    CHECK(std::abs(von_neumann_entropy(w_qubit).bits - 0.91830) <= 1e-4);
}

TEST_CASE("criterion 8: landauer bound at room temperature") {
    const LandauerCost cost = landauer_cost(1, 300.0);
    CHECK(std::abs(cost.min_heat - 2.8711e-21) / 2.8711e-21 <= 1e-4);
}

TEST_CASE("criterion 9: the demon pays for its sorting") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        DemonConfig cfg;
        cfg.seed = seed;
        const RunReport report = run(cfg);

        double prev = 0.0;
        double min_delta = 0.0;
        for (const auto& r : report.steps) {
            min_delta = std::min(min_delta, r.total - prev);
            prev = r.total;
        }
        CHECK(min_delta >= -1e-12);
        CHECK(report.summary.temperature_difference > 0.0);
        CHECK(report.summary.total_erasures >= 1);

        const double expected =
            constants::bits_to_joule_per_kelvin(static_cast<double>(cfg.memory_capacity_bits));
        for (const auto& ev : report.erasures) {
            CHECK(ev.bits_erased == cfg.memory_capacity_bits);
            CHECK(ev.entropy_jump == expected);
        }
    }
}

TEST_CASE("criterion 10: energy accounting of a two-level emitter is exact") {
    ComplexMatrix h(2, 2);
    h(0, 0) = 1.0;
    h(1, 1) = 3.0;
    const Observable obs = projective_from_observable(h);
    const double photon = 1.0;  // (E1 - E0) / 2
    const double expected_mean = 2.0;

    const DensityOperator super({2}, ComplexMatrix{{cplx{0.5, 0.0}, cplx{0.5, 0.0}},
                                                   {cplx{0.5, 0.0}, cplx{0.5, 0.0}}});
    const MomentStats stats = moment_stats(obs, super);
    CHECK(stats.mean == expected_mean);
    CHECK(stats.std_dev == photon);

    const double mean0 = moment_stats(obs, density_from_ket(basis_ket({2}, 0))).mean;
    const double mean1 = moment_stats(obs, density_from_ket(basis_ket({2}, 1))).mean;
    CHECK(std::abs(mean0 - expected_mean) == photon);
    CHECK(std::abs(mean1 - expected_mean) == photon);
}

TEST_CASE("criterion 11: eigensolver accuracy across dimensions") {
    SplitMix64 rng(111);
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t) % 63;
        const ComplexMatrix a = hermitian_part(random_gaussian_matrix(d, d, rng));
        const Spectrum sp = eig_hermitian(a);
        ComplexMatrix rebuilt(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            const ComplexMatrix v = sp.eigenvector(k);
            rebuilt += sp.eigenvalues[k] * (v * v.adjoint());
        }
        worst = std::max(worst, max_abs_diff(rebuilt, a));
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(worst <= 1e-9);
    CHECK(elapsed < 10.0);
}
