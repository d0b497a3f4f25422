// Kraus channels, the erasure channel, and the two reduction equivalences.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <vector>

#include "qops/channel.hpp"
#include "qops/eigen.hpp"
#include "qops/rng.hpp"
#include "qops/sampling.hpp"
#include "qops/state.hpp"

using namespace qops;

TEST_CASE("identity channel leaves states alone") {
    const KrausChannel id({identity(3)});
    SplitMix64 rng(41);
    const DensityOperator rho = random_density({3}, rng);
    CHECK(max_abs_diff(apply(id, rho).matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("dephasing channel kills off-diagonals") {
    const KrausChannel dephase({basis_projector(2, 0), basis_projector(2, 1)});
    const DensityOperator out = apply(dephase, density_from_ket(plus_ket()));
    CHECK(max_abs_diff(out.matrix(), maximally_mixed({2}).matrix()) <= 1e-15);

    SplitMix64 rng(42);
    const DensityOperator rho = random_density({2}, rng);
    const DensityOperator deph = apply(dephase, rho);
    CHECK(deph.matrix()(0, 1) == cplx{0.0, 0.0});
    CHECK(deph.matrix()(0, 0) == rho.matrix()(0, 0));
}

TEST_CASE("kraus construction validates") {
    CHECK_THROWS_AS(KrausChannel({}), argument_error);
    CHECK_THROWS_AS(KrausChannel({identity(2), identity(3)}), shape_error);
    CHECK_THROWS_AS(KrausChannel({0.5 * identity(2)}), completeness_error);
    const KrausChannel scaled({0.5 * identity(2)}, false);
    CHECK_FALSE(scaled.trace_preserving());
}

TEST_CASE("channel application validates shape") {
    const KrausChannel id({identity(2)});
    CHECK_THROWS_AS(apply_matrix(id, identity(3)), shape_error);
}

TEST_CASE("rectangular channel retargets the dims") {
    // Full trace as a channel into a one-dimensional space.
    ComplexMatrix bra0(1, 2);
    bra0(0, 0) = 1.0;
    ComplexMatrix bra1(1, 2);
    bra1(0, 1) = 1.0;
    const KrausChannel total({bra0, bra1});
    const DensityOperator out = apply(total, density_from_ket(plus_ket()));
    CHECK(out.dims() == Dims{1});
    CHECK(std::abs(out.matrix()(0, 0).real() - 1.0) <= 1e-15);
}

TEST_CASE("erasure channel resets every input") {
    CHECK_THROWS_AS(erasure_channel(0), argument_error);

    const KrausChannel e1 = erasure_channel(1);
    CHECK(e1.elements().size() == 1);
    CHECK(max_abs_diff(apply_matrix(e1, identity(1)), identity(1)) == 0.0);

    SplitMix64 rng(43);
    for (std::size_t d : {std::size_t{2}, std::size_t{4}}) {
        const KrausChannel ch = erasure_channel(d);
        CHECK(ch.elements().size() == d);
        for (int t = 0; t < 10; ++t) {
            const DensityOperator rho = random_density({d}, rng);
            const DensityOperator out = apply(ch, rho);
            CHECK(max_abs_diff(out.matrix(), basis_projector(d, 0)) <= 1e-15);
        }
    }

    const DensityOperator plus = density_from_ket(plus_ket());
    CHECK(max_abs_diff(apply(erasure_channel(2), plus).matrix(), basis_projector(2, 0)) <= 1e-15);
}

TEST_CASE("erasure channel properties") {
    SplitMix64 rng(44);
    const KrausChannel ch = erasure_channel(3);
    for (int t = 0; t < 20; ++t) {
        const DensityOperator rho = random_density({3}, rng);
        const DensityOperator once = apply(ch, rho);

        CHECK(std::abs(trace(once.matrix()).real() - 1.0) <= 1e-12);
        CHECK(max_abs_diff(apply(ch, once).matrix(), once.matrix()) <= 1e-15);

        const Spectrum sp = eig_hermitian(hermitian_part(once.matrix()));
        for (std::size_t k = 1; k < sp.eigenvalues.size(); ++k) {
            CHECK(std::abs(sp.eigenvalues[k]) <= 1e-14);
        }
    }
}

TEST_CASE("trace is preserved by trace-preserving channels") {
    SplitMix64 rng(45);
    const KrausChannel dephase({basis_projector(2, 0), basis_projector(2, 1)});
    for (int t = 0; t < 20; ++t) {
        const DensityOperator rho = random_density({2}, rng);
        CHECK(std::abs(trace(apply(dephase, rho).matrix()).real() - 1.0) <= 1e-12);
    }
}

TEST_CASE("erase by measuring a state already reset") {
    const DensityOperator zero = density_from_ket(basis_ket({2}, 0));
    const EraseResult r = erase_via_measure_rotate(zero, computational_observable(2), 7);
    CHECK(r.transcript.outcome_index == 0);
    CHECK(r.transcript.outcome_label == "0");
    CHECK(r.transcript.permutation == std::vector<std::size_t>{0, 1});
    CHECK(r.transcript.seed == 7);
    CHECK(max_abs_diff(r.erased.matrix(), basis_projector(2, 0)) <= 1e-15);
}

TEST_CASE("erase swaps a definite excited state down") {
    const DensityOperator one = density_from_ket(basis_ket({2}, 1));
    const EraseResult r = erase_via_measure_rotate(one, computational_observable(2), 7);
    CHECK(r.transcript.outcome_index == 1);
    CHECK(r.transcript.permutation == std::vector<std::size_t>{1, 0});
    CHECK(max_abs_diff(r.erased.matrix(), basis_projector(2, 0)) <= 1e-15);
}

TEST_CASE("erase sampling matches the outcome distribution") {
    const DensityOperator plus = density_from_ket(plus_ket());
    const Observable basis = computational_observable(2);
    std::size_t zeros = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const EraseResult r = erase_via_measure_rotate(plus, basis, static_cast<std::uint64_t>(t));
        if (r.transcript.outcome_index == 0) ++zeros;
        CHECK(max_abs_diff(r.erased.matrix(), basis_projector(2, 0)) <= 1e-12);
    }
    const double freq = static_cast<double>(zeros) / trials;
    CHECK(std::abs(freq - 0.5) <= 0.02);
}

TEST_CASE("erase lands on the standard state in any basis") {
    SplitMix64 rng(46);
    for (int t = 0; t < 20; ++t) {
        const Observable basis = random_nondegenerate_basis(3, rng);
        const DensityOperator rho = random_density({3}, rng);
        const EraseResult r = erase_via_measure_rotate(rho, basis, rng.next_u64());
        CHECK(max_abs_diff(r.erased.matrix(), basis_projector(3, 0)) <= 1e-10);
    }
}

TEST_CASE("erase is reproducible for a fixed seed") {
    const DensityOperator plus = density_from_ket(plus_ket());
    const Observable basis = computational_observable(2);
    const EraseResult a = erase_via_measure_rotate(plus, basis, 99);
    const EraseResult b = erase_via_measure_rotate(plus, basis, 99);
    CHECK(a.transcript.outcome_index == b.transcript.outcome_index);
    CHECK(max_abs_diff(a.erased.matrix(), b.erased.matrix()) == 0.0);
}

TEST_CASE("erase validates its inputs") {
    const DensityOperator plus = density_from_ket(plus_ket());
    CHECK_THROWS_AS(erase_via_measure_rotate(plus, computational_observable(3), 1), shape_error);

    const ComplexMatrix deg{{2.0, 0.0, 0.0}, {0.0, 2.0, 0.0}, {0.0, 0.0, 5.0}};
    SplitMix64 rng(47);
    CHECK_THROWS_AS(
        erase_via_measure_rotate(random_density({3}, rng), projective_from_observable(deg), 1),
        argument_error);
}

TEST_CASE("tracing and blind measurement reduce ghz identically") {
    const DensityOperator ghz = density_from_ket(ghz_state(3));
    const EquivalenceResult r =
        trace_measurement_equivalence(ghz, 0, computational_observable(2));
    CHECK(r.max_abs_diff <= 1e-12);
    ComplexMatrix expected(4, 4);
    expected(0, 0) = 0.5;
    expected(3, 3) = 0.5;
    CHECK(max_abs_diff(r.via_trace.matrix(), expected) <= 1e-12);
}

TEST_CASE("tracing and blind measurement reduce w identically") {
    const DensityOperator w = density_from_ket(w_state(3));
    for (std::size_t target : {std::size_t{0}, std::size_t{1}, std::size_t{2}}) {
        const EquivalenceResult r =
            trace_measurement_equivalence(w, target, computational_observable(2));
        CHECK(r.max_abs_diff <= 1e-12);
    }
}

TEST_CASE("reduction equivalence holds for random states and bases") {
    SplitMix64 rng(48);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const DensityOperator rho = random_density({3, 3}, rng);
        const std::size_t target = t % 2;
        const Observable basis = random_nondegenerate_basis(3, rng);
        const EquivalenceResult r = trace_measurement_equivalence(rho, target, basis);
        worst = std::max(worst, r.max_abs_diff);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("reduction equivalence validates its inputs") {
    const DensityOperator ghz = density_from_ket(ghz_state(3));
    CHECK_THROWS_AS(trace_measurement_equivalence(ghz, 3, computational_observable(2)),
                    argument_error);
    CHECK_THROWS_AS(trace_measurement_equivalence(ghz, 0, computational_observable(3)),
                    shape_error);
}
