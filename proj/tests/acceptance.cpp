// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: acceptance [golden-table1.json]

#include <iostream>

#include "ffreiman/acceptance.hpp"

int main(int argc, char** argv) {
    ffreiman::AcceptanceOptions opt;
    if (argc > 1) opt.golden_table1 = argv[1];
    const auto results = ffreiman::run_acceptance(opt);
    int failed = 0;
    for (const auto& r : results) {
        std::cout << ffreiman::format_criterion(r) << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
    return failed == 0 ? 0 : 1;
}
