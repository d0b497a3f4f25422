// End-to-end runs of the scenario CLI: exit codes, output routing, config
// precedence, and determinism.

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "qops/scenarios.hpp"

using nlohmann::json;

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_command(const std::string& args) {
    const std::string cmd = std::string(QOPS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return CommandResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("help exits cleanly") {
    const CommandResult r = run_command("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("--scenario") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_command("").exit_code == 2);
    CHECK(run_command("--scenario no-such-thing").exit_code == 2);
    CHECK(run_command("--scenario erasure --format yaml").exit_code == 2);
}

TEST_CASE("every scenario runs green") {
    for (const std::string& name : qops::scenario_names()) {
        std::string args = "--scenario " + name;
        if (name == "demon") args += " --molecules 60 --steps 40";
        INFO(args);
        const CommandResult r = run_command(args);
        CHECK(r.exit_code == 0);
        const json parsed = json::parse(r.output);
        CHECK(parsed["scenario"].get<std::string>() == name);
        CHECK(parsed["all_pass"].get<bool>());
    }
}

TEST_CASE("output is byte-identical across reruns") {
    const CommandResult a = run_command("--scenario erasure --seed 9");
    const CommandResult b = run_command("--scenario erasure --seed 9");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("text format renders the report table") {
    const CommandResult r = run_command("--scenario ghz-trace --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("scenario: ghz-trace") != std::string::npos);
    CHECK(r.output.find("result: all checks passed") != std::string::npos);
}

TEST_CASE("reports can be routed to a file") {
    const std::string path = "/tmp/qops_cli_out.json";
    std::remove(path.c_str());
    const CommandResult r = run_command("--scenario conservation-demo --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    const json parsed = json::parse(in);
    CHECK(parsed["all_pass"].get<bool>());

    CHECK(run_command("--scenario conservation-demo --out /no-such-dir/x.json").exit_code == 2);
}

TEST_CASE("a zero-step demon reports a zero ledger") {
    const CommandResult r = run_command("--scenario demon --molecules 10 --steps 0");
    CHECK(r.exit_code == 0);
    const json parsed = json::parse(r.output);
    CHECK(parsed["checks"][0]["name"].get<std::string>() == "ledger-zero");
    CHECK(parsed["all_pass"].get<bool>());
}

TEST_CASE("config file fills in whatever flags leave open") {
    const std::string path = "/tmp/qops_cli_cfg.json";
    write_file(path, R"({"steps": 300, "n_molecules": 80, "memory_capacity_bits": 16, "seed": 4})");

    const CommandResult r = run_command("--scenario demon --config " + path + " --steps 50");
    CHECK(r.exit_code == 0);
    const json parsed = json::parse(r.output);
    CHECK(parsed["inputs"]["steps"].get<std::size_t>() == 50);
    CHECK(parsed["inputs"]["n_molecules"].get<std::size_t>() == 80);
    CHECK(parsed["inputs"]["memory_capacity_bits"].get<std::size_t>() == 16);
    CHECK(parsed["inputs"]["seed"].get<std::uint64_t>() == 4);

    const CommandResult with_seed =
        run_command("--scenario demon --config " + path + " --steps 50 --seed 9");
    const json parsed2 = json::parse(with_seed.output);
    CHECK(parsed2["inputs"]["seed"].get<std::uint64_t>() == 9);
}

TEST_CASE("broken config files exit with 2") {
    CHECK(run_command("--scenario demon --config /tmp/qops_absent.json").exit_code == 2);

    const std::string bad = "/tmp/qops_cli_bad.json";
    write_file(bad, "{not json");
    const CommandResult r = run_command("--scenario demon --config " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("not valid JSON") != std::string::npos);

    const std::string arr = "/tmp/qops_cli_arr.json";
    write_file(arr, "[1, 2]");
    CHECK(run_command("--scenario demon --config " + arr).exit_code == 2);
}

TEST_CASE("csv export writes the time series") {
    const std::string path = "/tmp/qops_cli_ts.csv";
    std::remove(path.c_str());
    const CommandResult r =
        run_command("--scenario demon --molecules 40 --steps 25 --csv " + path);
    CHECK(r.exit_code == 0);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line ==
          "step,n_a,n_b,t_a,t_b,gas_entropy,memory_entropy,environment_entropy,total,used_bits");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 25);

    const CommandResult wrong = run_command("--scenario erasure --csv /tmp/qops_cli_x.csv");
    CHECK(wrong.exit_code == 2);
    CHECK(wrong.output.find("only applies to the demon scenario") != std::string::npos);
}
