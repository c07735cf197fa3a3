// Runs the acceptance battery and prints one status line per criterion,
// followed by its details.  Exit status 1 if any fatal criterion fails.
#include <shv/cli/checks.hpp>

#include <cstdio>
#include <iostream>

int main() {
    using namespace shv::cli;
    AcceptanceOptions opt;
    const auto checks = acceptance_battery(opt);
    bool ok = true;
    for (const auto& c : checks) {
        const char* tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "WARN (non-fatal)";
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f s", c.seconds);
        std::cout << tag << "  " << c.name << "  [" << secs << "]\n";
        for (const auto& d : c.details) std::cout << "      " << d << "\n";
        ok = ok && c.status != Status::fail;
    }
    std::cout << (ok ? "acceptance: all criteria pass\n" : "acceptance: some criteria FAIL\n");
    return ok ? 0 : 1;
}
