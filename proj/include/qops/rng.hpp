// rng.hpp
// Seeded deterministic pseudorandom generator: SplitMix64. A 64-bit mixing
// generator with a fixed, documented algorithm, so sampled transcripts and
// simulation runs reproduce bit-for-bit from a seed on any platform.

#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>

namespace qops {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    bool coin() { return (next_u64() & 1ull) != 0; }

    // Standard normal via Box-Muller; two uniforms per sample, no cached
    // spare, so the draw count per sample is fixed.
    double gaussian() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    // Index into [0, n) by cumulative weight; weights need not be normalized.
    template <typename WeightAt>
    std::size_t pick_weighted(std::size_t n, WeightAt weight_at) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) total += weight_at(i);
        double r = uniform() * total;
        for (std::size_t i = 0; i < n; ++i) {
            r -= weight_at(i);
            if (r < 0.0) return i;
        }
        return n - 1;  // r landed on the accumulated roundoff tail
    }

private:
    std::uint64_t state_;
};

}  // namespace qops
