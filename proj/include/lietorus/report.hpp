#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lietorus {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // serialized counterexample on failure, empty on pass

    static CheckResult ok(std::string name) { return {std::move(name), true, {}}; }
    static CheckResult fail(std::string name, std::string witness) {
        return {std::move(name), false, std::move(witness)};
    }
};

/// Outcome of one scenario or verification sweep. Deterministic for a fixed
/// (spec, window, seed); wall-clock duration is tracked separately so the
/// serialized report stays byte-identical across runs.
struct Report {
    std::string name;
    std::vector<CheckResult> checks;
    long long duration_ms = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& c : other.checks)
            checks.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.pass, c.witness});
    }

    nlohmann::json to_json(bool with_timings = false) const {
        nlohmann::json checks_json = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json entry;
            entry["name"] = c.name;
            entry["status"] = c.pass ? "pass" : "fail";
            if (!c.witness.empty()) entry["witness"] = c.witness;
            checks_json.push_back(entry);
        }
        nlohmann::json j;
        j["name"] = name;
        j["pass"] = all_pass();
        j["checks"] = checks_json;
        if (with_timings) j["duration_ms"] = duration_ms;
        return j;
    }

    std::string text() const {
        std::string out = name + ": " + (all_pass() ? "PASS" : "FAIL") + "\n";
        for (const auto& c : checks) {
            out += "  [" + std::string(c.pass ? "pass" : "FAIL") + "] " + c.name;
            if (!c.pass && !c.witness.empty()) out += "  witness: " + c.witness;
            out += "\n";
        }
        return out;
    }
};

} // namespace lietorus
