// demon.hpp
// A 1-D two-chamber kinetic gas with a speed-sorting demon at the dividing
// wall. Every gate arbitration costs one memory bit, every measurement kicks
// the molecule by hbar/L, and a full memory is erased into the environment
// at k_B ln2 per bit. The entropy ledger tracks gas, memory, and
// environment so the second law can be checked step by step.
//
// Chamber A is [0, L), chamber B is [L, 2L]. A speed_threshold of +infinity
// disables the demon entirely: the dividing wall becomes solid and no
// measurement happens.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qops/constants.hpp"
#include "qops/errors.hpp"
#include "qops/rng.hpp"

namespace qops {

inline constexpr double second_law_tol = 1e-12;  // J/K, per-step ledger slack

enum class Chamber { A, B };

struct Molecule {
    double position;  // [0, 2L]
    double velocity;  // m/s, signed
};

struct GasState {
    std::vector<Molecule> molecules;
    double box_length;  // L, meters per chamber
    double mass;        // kg per molecule
    bool gate_open;     // last arbitration result
};

inline Chamber chamber_of(double position, double box_length) {
    return position < box_length ? Chamber::A : Chamber::B;
}

struct DemonMemory {
    std::size_t capacity_bits = 0;
    std::size_t used_bits = 0;
    std::vector<bool> records;  // true = fast
};

// All components are measured relative to the initial microstate; only
// differences are physical, so the additive convention drops out.
struct EntropyLedger {
    double gas_entropy = 0.0;          // S_gas(t) - S_gas(0), J/K
    double demon_memory_entropy = 0.0; // used_bits * k_B ln2
    double environment_entropy = 0.0;  // accumulated erasure dumps
    double total = 0.0;                // sum of the three
    double gas_reference = 0.0;        // absolute S_gas(0), fixed at init
};

struct DemonConfig {
    std::size_t n_molecules = 2000;
    double temperature = 300.0;  // kelvin
    double box_length = 1e-6;    // meters per chamber
    double mass = 4.6518e-26;    // kg, one nitrogen molecule
    // 0 selects the default sqrt(k_B T / m); +infinity disables the demon.
    double speed_threshold = 0.0;
    std::size_t memory_capacity_bits = 64;
    std::size_t steps = 10000;
    double dt = 0.0;  // seconds; 0 selects the default L / (20 v_thermal)
    std::uint64_t seed = 1;
};

// 1-D rms thermal speed sqrt(k_B T / m). The folded-Gaussian mean speed
// sqrt(2 k_B T / (pi m)) times sqrt(pi / 2) reduces to the same value.
inline double thermal_speed(const DemonConfig& cfg) {
    return std::sqrt(constants::k_boltzmann * cfg.temperature / cfg.mass);
}

inline double default_speed_threshold(const DemonConfig& cfg) { return thermal_speed(cfg); }

inline double default_dt(const DemonConfig& cfg) {
    return cfg.box_length / (20.0 * thermal_speed(cfg));
}

// Fills the derived defaults for fields left at 0.
inline DemonConfig normalized(const DemonConfig& raw) {
    DemonConfig cfg = raw;
    if (cfg.speed_threshold == 0.0) cfg.speed_threshold = default_speed_threshold(cfg);
    if (cfg.dt == 0.0) cfg.dt = default_dt(cfg);
    return cfg;
}

inline void validate(const DemonConfig& cfg) {
    if (cfg.n_molecules == 0) throw config_error("n_molecules must be positive");
    if (!(cfg.temperature > 0.0)) throw config_error("temperature must be positive");
    if (!(cfg.box_length > 0.0)) throw config_error("box_length must be positive");
    if (!(cfg.mass > 0.0)) throw config_error("mass must be positive");
    if (!(cfg.speed_threshold > 0.0)) throw config_error("speed_threshold must be positive");
    if (cfg.memory_capacity_bits == 0) throw config_error("memory capacity must be positive");
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw config_error("dt must be positive");
    if (!(cfg.dt * thermal_speed(cfg) < cfg.box_length / 10.0)) {
        throw config_error("dt too large: a thermal molecule could skip the gate region");
    }
}

// Minimum momentum disturbance of a position measurement at resolution L.
inline double heisenberg_floor(const DemonConfig& cfg) {
    if (!(cfg.box_length > 0.0)) throw argument_error("box length must be positive");
    return constants::hbar / cfg.box_length;
}

struct ChamberStats {
    std::size_t n_a = 0, n_b = 0;
    double sum_v2_a = 0.0, sum_v2_b = 0.0;
    double t_a = 0.0, t_b = 0.0;  // kelvin; 0 for an empty chamber
};

inline ChamberStats chamber_stats(const GasState& gas) {
    ChamberStats cs;
    for (const auto& m : gas.molecules) {
        if (chamber_of(m.position, gas.box_length) == Chamber::A) {
            ++cs.n_a;
            cs.sum_v2_a += m.velocity * m.velocity;
        } else {
            ++cs.n_b;
            cs.sum_v2_b += m.velocity * m.velocity;
        }
    }
    const double scale = gas.mass / constants::k_boltzmann;
    if (cs.n_a > 0) cs.t_a = scale * cs.sum_v2_a / static_cast<double>(cs.n_a);
    if (cs.n_b > 0) cs.t_b = scale * cs.sum_v2_b / static_cast<double>(cs.n_b);
    return cs;
}

namespace detail {

// 1-D ideal-gas entropy of one chamber, S = N k_B (ln(l / (N lambda)) + 3/2)
// with the thermal wavelength lambda = h / sqrt(2 pi m k_B T). The additive
// convention is fixed; only differences enter the ledger.
inline double chamber_entropy(std::size_t n, double t, double length, double mass) {
    if (n == 0 || !(t > 0.0)) return 0.0;
    const double lambda =
        constants::planck_h / std::sqrt(2.0 * std::numbers::pi * mass * constants::k_boltzmann * t);
    return static_cast<double>(n) * constants::k_boltzmann *
           (std::log(length / (static_cast<double>(n) * lambda)) + 1.5);
}

inline double gas_entropy_absolute(const GasState& gas) {
    const ChamberStats cs = chamber_stats(gas);
    return chamber_entropy(cs.n_a, cs.t_a, gas.box_length, gas.mass) +
           chamber_entropy(cs.n_b, cs.t_b, gas.box_length, gas.mass);
}

inline GasState init_gas_with(const DemonConfig& cfg, SplitMix64& rng) {
    GasState gas;
    gas.box_length = cfg.box_length;
    gas.mass = cfg.mass;
    gas.gate_open = false;
    gas.molecules.reserve(cfg.n_molecules);
    const double sigma = thermal_speed(cfg);
    for (std::size_t i = 0; i < cfg.n_molecules; ++i) {
        const double x = rng.uniform(0.0, 2.0 * cfg.box_length);
        const double v = rng.gaussian(0.0, sigma);
        gas.molecules.push_back(Molecule{x, v});
    }
    return gas;
}

}  // namespace detail

// Maxwell-Boltzmann velocities at cfg.temperature, uniform positions.
inline GasState init_gas(const DemonConfig& raw) {
    DemonConfig cfg = normalized(raw);
    validate(cfg);
    SplitMix64 rng(cfg.seed);
    return detail::init_gas_with(cfg, rng);
}

inline EntropyLedger make_ledger(const GasState& gas) {
    EntropyLedger ledger;
    ledger.gas_reference = detail::gas_entropy_absolute(gas);
    return ledger;
}

inline void refresh_ledger(EntropyLedger& ledger, const GasState& gas, const DemonMemory& mem) {
    ledger.gas_entropy = detail::gas_entropy_absolute(gas) - ledger.gas_reference;
    ledger.demon_memory_entropy =
        constants::bits_to_joule_per_kelvin(static_cast<double>(mem.used_bits));
    ledger.total = ledger.gas_entropy + ledger.demon_memory_entropy + ledger.environment_entropy;
}

struct ErasureRecord {
    std::size_t bits_erased;
    double entropy_jump;  // J/K dumped into the environment
};

struct StepEffects {
    std::size_t measurements = 0;
    std::vector<ErasureRecord> erasures;
};

// One dt of evolution: ballistic advance with elastic walls, demon
// arbitration at the dividing wall, memory writes with erase-all-when-full,
// and a ledger refresh. Returns what the bookkeeping needs to log.
inline StepEffects demon_step(GasState& gas, DemonMemory& mem, EntropyLedger& ledger,
                              const DemonConfig& cfg, SplitMix64& rng) {
    StepEffects effects;
    const bool demon_active = std::isfinite(cfg.speed_threshold);
    const double l = gas.box_length;
    const double two_l = 2.0 * l;
    const double kick_dv = constants::hbar / l / gas.mass;

    auto write_bit = [&](bool fast) {
        if (mem.used_bits == mem.capacity_bits) {
            const double jump =
                constants::bits_to_joule_per_kelvin(static_cast<double>(mem.used_bits));
            ledger.environment_entropy += jump;
            effects.erasures.push_back(ErasureRecord{mem.used_bits, jump});
            mem.records.clear();
            mem.used_bits = 0;
        }
        mem.records.push_back(fast);
        ++mem.used_bits;
        ++effects.measurements;
    };

    for (auto& mol : gas.molecules) {
        double t_left = cfg.dt;
        int guard = 0;
        while (t_left > 0.0 && mol.velocity != 0.0 && ++guard < 64) {
            const bool moving_right = mol.velocity > 0.0;
            double boundary;
            if (moving_right) {
                boundary = (mol.position < l) ? l : two_l;
            } else {
                boundary = (mol.position > l) ? l : 0.0;
            }
            const double t_hit = (boundary - mol.position) / mol.velocity;
            if (t_hit > t_left) {
                mol.position += mol.velocity * t_left;
                break;
            }
            mol.position = boundary;
            t_left -= t_hit;
            if (boundary == l && demon_active) {
                // Speed class is read before the measurement back-action.
                const bool fast = std::abs(mol.velocity) > cfg.speed_threshold;
                const bool from_a = moving_right;
                write_bit(fast);
                mol.velocity += (rng.coin() ? kick_dv : -kick_dv);
                const bool open = (fast && from_a) || (!fast && !from_a);
                gas.gate_open = open;
                if (!open) {
                    mol.velocity = moving_right ? -std::abs(mol.velocity) : std::abs(mol.velocity);
                }
            } else {
                // Solid wall: outer walls always, the divider when inert.
                mol.velocity = -mol.velocity;
            }
        }
    }

    refresh_ledger(ledger, gas, mem);
    return effects;
}

struct ErasureEvent {
    std::size_t step;
    std::size_t bits_erased;
    double entropy_jump;
};

struct DemonStepRecord {
    std::size_t step;
    std::size_t n_a, n_b;
    double t_a, t_b;
    double gas_entropy, memory_entropy, environment_entropy, total;
    std::size_t used_bits;
    std::size_t cumulative_measurements;
    std::size_t cumulative_erasures;
};

struct RunSummary {
    std::size_t steps_run = 0;
    std::size_t total_measurements = 0;
    std::size_t total_erasures = 0;
    double final_t_a = 0.0, final_t_b = 0.0;
    double temperature_difference = 0.0;  // T_B - T_A at the final step
    double min_step_delta = 0.0;          // most negative per-step ledger change
    double final_total = 0.0;
    double kick_momentum = 0.0;  // hbar / L
    double velocity_mean = 0.0, velocity_std = 0.0;  // final microstate
};

struct RunReport {
    DemonConfig config;  // normalized: derived defaults filled in
    std::vector<DemonStepRecord> steps;
    std::vector<ErasureEvent> erasures;
    EntropyLedger ledger;  // final state
    RunSummary summary;
};

inline RunReport run(const DemonConfig& raw) {
    DemonConfig cfg = normalized(raw);
    validate(cfg);

    SplitMix64 rng(cfg.seed);
    GasState gas = detail::init_gas_with(cfg, rng);
    DemonMemory mem;
    mem.capacity_bits = cfg.memory_capacity_bits;
    EntropyLedger ledger = make_ledger(gas);

    RunReport report;
    report.config = cfg;
    report.steps.reserve(cfg.steps);

    double prev_total = 0.0;
    bool have_delta = false;
    std::size_t cumulative_measurements = 0;
    std::size_t cumulative_erasures = 0;

    for (std::size_t s = 1; s <= cfg.steps; ++s) {
        const StepEffects fx = demon_step(gas, mem, ledger, cfg, rng);
        cumulative_measurements += fx.measurements;
        for (const auto& er : fx.erasures) {
            report.erasures.push_back(ErasureEvent{s, er.bits_erased, er.entropy_jump});
            ++cumulative_erasures;
        }

        const ChamberStats cs = chamber_stats(gas);
        report.steps.push_back(DemonStepRecord{
            s, cs.n_a, cs.n_b, cs.t_a, cs.t_b, ledger.gas_entropy, ledger.demon_memory_entropy,
            ledger.environment_entropy, ledger.total, mem.used_bits, cumulative_measurements,
            cumulative_erasures});

        const double delta = ledger.total - prev_total;
        if (!have_delta || delta < report.summary.min_step_delta) {
            report.summary.min_step_delta = delta;
            have_delta = true;
        }
        prev_total = ledger.total;
    }

    report.ledger = ledger;

    const ChamberStats cs = chamber_stats(gas);
    RunSummary& sum = report.summary;
    sum.steps_run = cfg.steps;
    sum.total_measurements = cumulative_measurements;
    sum.total_erasures = cumulative_erasures;
    sum.final_t_a = cs.t_a;
    sum.final_t_b = cs.t_b;
    sum.temperature_difference = cs.t_b - cs.t_a;
    sum.final_total = ledger.total;
    sum.kick_momentum = heisenberg_floor(cfg);

    double vmean = 0.0;
    for (const auto& m : gas.molecules) vmean += m.velocity;
    vmean /= static_cast<double>(gas.molecules.size());
    double vvar = 0.0;
    for (const auto& m : gas.molecules) {
        const double d = m.velocity - vmean;
        vvar += d * d;
    }
    vvar /= static_cast<double>(gas.molecules.size());
    sum.velocity_mean = vmean;
    sum.velocity_std = std::sqrt(vvar);

    return report;
}

}  // namespace qops
