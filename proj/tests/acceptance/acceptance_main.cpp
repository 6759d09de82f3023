// Acceptance criteria 1..11, one line each. Exit 0 iff all pass.

#include <cstdio>
#include <iostream>

#include "hypcy/report/selftest.hpp"

int main() {
    hypcy::AcceptanceRun run = hypcy::run_acceptance({}, [](const hypcy::Criterion& c) {
        std::cout << c.line() << std::endl;
        if (!c.passed())
            for (const auto& k : c.report.checks)
                if (k.status == hypcy::CheckStatus::Fail) std::cout << "    " << k.to_json().dump() << "\n";
    });
    std::printf("acceptance: %s (%.1f s)\n", run.passed() ? "all criteria pass" : "FAILED", run.seconds);
    return run.passed() ? 0 : 1;
}
