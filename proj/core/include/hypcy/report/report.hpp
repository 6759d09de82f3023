#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hypcy {

enum class CheckStatus { Pass, Fail, Skip };
/// Where an expected value comes from: a quoted source claim, a trivial
/// fact, or an independent computation.
enum class Provenance { Paper, Trivial, Derived };

std::string to_string(CheckStatus s);
std::string to_string(Provenance p);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    nlohmann::json expected;
    nlohmann::json actual;
    Provenance provenance = Provenance::Derived;
    nlohmann::json witness;  // null when absent

    nlohmann::json to_json() const;
};

/**
 * Verification report: a list of named checks plus free-form results.
 * JSON keys are sorted, so equal reports serialize to equal bytes.
 */
struct Report {
    std::string tool = "hypcy";
    std::string version = HYPCY_VERSION;
    std::string command;
    std::vector<Check> checks;
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> summary;  // human-readable lines, text output only

    explicit Report(std::string cmd = {}) : command(std::move(cmd)) {}

    /// Pass iff expected == actual. A failing check always gets a witness;
    /// when none is given it records the command and both values.
    Check& expect(const std::string& name, const nlohmann::json& expected, const nlohmann::json& actual,
                  Provenance p, nlohmann::json witness = nullptr);
    /// Pass iff ok; expected/actual are descriptive.
    Check& require(const std::string& name, bool ok, const nlohmann::json& expected, const nlohmann::json& actual,
                   Provenance p, nlohmann::json witness = nullptr);
    Check& skip(const std::string& name, const std::string& reason, Provenance p);
    /// Records an exception as a failed check.
    Check& error(const std::string& name, const std::string& what, Provenance p);

    /// Appends other's checks with names prefixed "prefix/".
    void merge(const Report& other, const std::string& prefix);

    int passed() const;
    int failed() const;
    bool ok() const { return failed() == 0; }

    nlohmann::json to_json() const;
    /// Canonical serialization (two-space indent, trailing newline).
    std::string dump() const;
    /// Summary lines, one line per check, then a totals line.
    std::string to_text() const;
};

}  // namespace hypcy
