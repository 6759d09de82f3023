#include "hypcy/report/report.hpp"

#include <sstream>

namespace hypcy {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Paper: return "PAPER";
        case Provenance::Trivial: return "TRIVIAL";
        case Provenance::Derived: return "DERIVED";
    }
    return "?";
}

nlohmann::json Check::to_json() const {
    nlohmann::json j = {{"name", name},
                        {"status", to_string(status)},
                        {"expected", expected},
                        {"actual", actual},
                        {"provenance", to_string(provenance)}};
    if (!witness.is_null()) j["witness"] = witness;
    return j;
}

Check& Report::require(const std::string& name, bool ok, const nlohmann::json& expected,
                       const nlohmann::json& actual, Provenance p, nlohmann::json witness) {
    Check c{name, ok ? CheckStatus::Pass : CheckStatus::Fail, expected, actual, p, std::move(witness)};
    if (!ok && c.witness.is_null())
        c.witness = {{"command", command}, {"check", name}, {"expected", expected}, {"actual", actual}};
    checks.push_back(std::move(c));
    return checks.back();
}

Check& Report::expect(const std::string& name, const nlohmann::json& expected, const nlohmann::json& actual,
                      Provenance p, nlohmann::json witness) {
    return require(name, expected == actual, expected, actual, p, std::move(witness));
}

Check& Report::skip(const std::string& name, const std::string& reason, Provenance p) {
    checks.push_back({name, CheckStatus::Skip, nullptr, reason, p, nullptr});
    return checks.back();
}

Check& Report::error(const std::string& name, const std::string& what, Provenance p) {
    return require(name, false, "no error", what, p, {{"command", command}, {"check", name}, {"exception", what}});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (Check c : other.checks) {
        c.name = prefix + "/" + c.name;
        checks.push_back(std::move(c));
    }
}

int Report::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::Pass;
    return n;
}

int Report::failed() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::Fail;
    return n;
}

nlohmann::json Report::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) cs.push_back(c.to_json());
    nlohmann::json j = {{"tool", tool}, {"version", version}, {"command", command}, {"checks", cs}};
    if (!results.empty()) j["results"] = results;
    return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& line : summary) os << line << "\n";
    for (const auto& c : checks) {
        os << "[" << to_string(c.status) << "] " << c.name << " (" << to_string(c.provenance) << ")";
        if (c.status == CheckStatus::Fail)
            os << ": expected " << c.expected.dump() << ", got " << c.actual.dump();
        else if (c.status == CheckStatus::Pass)
            os << ": " << (c.actual.is_string() ? c.actual.get<std::string>() : c.actual.dump());
        os << "\n";
    }
    int skipped = static_cast<int>(checks.size()) - passed() - failed();
    os << command << ": " << passed() << " passed, " << failed() << " failed";
    if (skipped) os << ", " << skipped << " skipped";
    os << "\n";
    return os.str();
}

}  // namespace hypcy
