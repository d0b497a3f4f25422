// qops_cli: run a named demonstration scenario and emit its report.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or config
// error. Output is deterministic for a fixed seed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qops/qops.hpp"

namespace {

// JSON config file for the demon scenario; all keys optional.
qops::DemonConfig demon_config_from_json(const std::string& path, qops::DemonConfig base) {
    std::ifstream in(path);
    if (!in) throw qops::config_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw qops::config_error(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw qops::config_error("config file must hold a JSON object");
    const auto get_num = [&](const char* key, double& out) {
        if (j.contains(key)) out = j.at(key).get<double>();
    };
    const auto get_count = [&](const char* key, std::size_t& out) {
        if (j.contains(key)) out = j.at(key).get<std::size_t>();
    };
    get_count("n_molecules", base.n_molecules);
    get_num("temperature", base.temperature);
    get_num("box_length", base.box_length);
    get_num("mass", base.mass);
    get_num("speed_threshold", base.speed_threshold);
    get_count("memory_capacity_bits", base.memory_capacity_bits);
    get_count("steps", base.steps);
    get_num("dt", base.dt);
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    return base;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum operations scenario runner"};
    app.get_formatter()->column_width(34);

    std::string scenario;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string format = "json";
    std::string config_path;
    std::string csv_path;

    qops::DemonConfig demon{};
    bool seed_given = false;

    app.add_option("--scenario", scenario, "scenario name")
        ->required()
        ->check(CLI::IsMember(qops::scenario_names()));
    app.add_option("--seed", seed, "random seed (default 1)")
        ->each([&](const std::string&) { seed_given = true; });
    app.add_option("--out", out_path, "write the report to this path instead of stdout");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--config", config_path, "demon: JSON config file (flags override it)");
    app.add_option("--csv", csv_path, "demon: also write the time series as CSV");

    auto* mol = app.add_option("--molecules", demon.n_molecules, "demon: molecule count (default 2000)");
    auto* stp = app.add_option("--steps", demon.steps, "demon: step count (default 10000)");
    auto* tmp = app.add_option("--temperature", demon.temperature, "demon: kelvin (default 300)");
    auto* box = app.add_option("--box-length", demon.box_length,
                               "demon: chamber length in meters (default 1e-6)");
    auto* mem = app.add_option("--memory-bits", demon.memory_capacity_bits,
                               "demon: memory capacity in bits (default 64)");
    auto* thr = app.add_option("--threshold", demon.speed_threshold,
                               "demon: speed threshold in m/s (default sqrt(kT/m); inf disables)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, parse errors exit 2
    }

    try {
        qops::ScenarioOptions opt;
        if (!config_path.empty()) {
            qops::DemonConfig from_file = demon_config_from_json(config_path, qops::DemonConfig{});
            if (!seed_given) seed = from_file.seed;
            // Explicit flags override file values.
            if (mol->count() == 0) demon.n_molecules = from_file.n_molecules;
            if (stp->count() == 0) demon.steps = from_file.steps;
            if (tmp->count() == 0) demon.temperature = from_file.temperature;
            if (box->count() == 0) demon.box_length = from_file.box_length;
            if (mem->count() == 0) demon.memory_capacity_bits = from_file.memory_capacity_bits;
            if (thr->count() == 0) demon.speed_threshold = from_file.speed_threshold;
            demon.mass = from_file.mass;
            demon.dt = from_file.dt;
        }
        opt.seed = seed;
        opt.demon = demon;

        if (!csv_path.empty() && scenario != "demon") {
            throw qops::config_error("--csv only applies to the demon scenario");
        }

        const qops::ScenarioReport report = qops::run_scenario(scenario, opt);

        std::ofstream out_file;
        std::ostream* os = &std::cout;
        if (!out_path.empty()) {
            out_file.open(out_path);
            if (!out_file) throw qops::config_error("cannot open output path: " + out_path);
            os = &out_file;
        }
        if (format == "json") {
            report.write_json(*os);
        } else {
            report.write_text(*os);
        }

        if (!csv_path.empty()) {
            qops::DemonConfig cfg = opt.demon;
            cfg.seed = opt.seed;
            const qops::RunReport run_report = qops::run(cfg);
            std::ofstream csv(csv_path);
            if (!csv) throw qops::config_error("cannot open csv path: " + csv_path);
            qops::write_demon_csv(csv, run_report);
        }

        return report.all_pass() ? 0 : 1;
    } catch (const qops::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
