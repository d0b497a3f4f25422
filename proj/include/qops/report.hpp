// report.hpp
// Scenario reports: a named set of inputs, results, and pass/fail checks,
// rendered to JSON (schema_version 1) or an aligned text table.

#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qops/json_writer.hpp"

namespace qops {

inline constexpr int report_schema_version = 1;

struct Check {
    std::string name;
    bool pass;
    double measured;
    double tolerance;
};

// `measured` is the deviation actually observed, `tolerance` the bound it
// was held to; pass iff measured <= tolerance (recorded, not recomputed,
// so a check can encode one-sided or exact comparisons).
inline Check make_check(std::string name, double measured, double tolerance) {
    const bool pass = measured <= tolerance;
    return Check{std::move(name), pass, measured, tolerance};
}

struct ScenarioReport {
    std::string scenario;
    JsonValue inputs = JsonValue::object();
    JsonValue results = JsonValue::object();
    std::vector<Check> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }

    JsonValue to_json() const {
        JsonValue root = JsonValue::object();
        root.add("schema_version", JsonValue::integer(report_schema_version));
        root.add("scenario", JsonValue::string(scenario));
        root.add("inputs", inputs);
        root.add("results", results);
        JsonValue checks_json = JsonValue::array();
        for (const auto& c : checks) {
            JsonValue entry = JsonValue::object();
            entry.add("name", JsonValue::string(c.name));
            entry.add("pass", JsonValue::boolean(c.pass));
            entry.add("measured", JsonValue::number(c.measured));
            entry.add("tolerance", JsonValue::number(c.tolerance));
            checks_json.push(std::move(entry));
        }
        root.add("checks", std::move(checks_json));
        root.add("all_pass", JsonValue::boolean(all_pass()));
        return root;
    }

    void write_json(std::ostream& os) const {
        to_json().write(os);
        os << "\n";
    }

    void write_text(std::ostream& os) const {
        os << "scenario: " << scenario << "\n";
        write_section(os, "inputs", inputs, 1);
        write_section(os, "results", results, 1);
        os << "checks:\n";
        std::size_t width = 0;
        for (const auto& c : checks) width = std::max(width, c.name.size());
        for (const auto& c : checks) {
            os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name
               << std::string(width - c.name.size() + 2, ' ') << "measured="
               << json_number(c.measured) << "  tolerance=" << json_number(c.tolerance) << "\n";
        }
        os << "result: " << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    }

private:
    static void write_section(std::ostream& os, const std::string& title, const JsonValue& v,
                              int depth) {
        os << title << ":\n";
        write_value_lines(os, v, depth);
    }

    static void write_value_lines(std::ostream& os, const JsonValue& v, int depth) {
        const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        switch (v.kind()) {
            case JsonValue::Kind::object:
                for (const auto& [key, val] : v.members()) {
                    if (val.kind() == JsonValue::Kind::object ||
                        val.kind() == JsonValue::Kind::array) {
                        os << pad << key << ":\n";
                        write_value_lines(os, val, depth + 1);
                    } else {
                        os << pad << key << ": " << scalar_text(val) << "\n";
                    }
                }
                break;
            case JsonValue::Kind::array: {
                std::size_t i = 0;
                for (const auto& item : v.items()) {
                    if (item.kind() == JsonValue::Kind::object ||
                        item.kind() == JsonValue::Kind::array) {
                        os << pad << "- [" << i << "]\n";
                        write_value_lines(os, item, depth + 1);
                    } else {
                        os << pad << "- " << scalar_text(item) << "\n";
                    }
                    ++i;
                }
                break;
            }
            default:
                os << pad << scalar_text(v) << "\n";
        }
    }

    static std::string scalar_text(const JsonValue& v) {
        std::ostringstream os;
        v.write(os);
        return os.str();
    }
};

}  // namespace qops
