// Acceptance criteria 1..9, one line each. All comparisons are exact
// (tolerance zero); sampled cocycle checks use 10^6 seeded trials.

#include "gmodels/acceptance.hpp"

#include <iostream>

int main() {
    gmodels::AcceptanceOptions options;
    options.seed = 1;
    bool ok = true;
    for (const auto& r : gmodels::run_acceptance(options)) {
        std::cout << gmodels::format_line(r) << '\n';
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
