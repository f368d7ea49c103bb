// Release gate: recompute every published quantity at its stated tolerance,
// one line per criterion.  Exit status 0 iff all pass.
#include <cstdio>

#include "zetagaps/repro.hpp"

int main() {
    const auto rows = zetagaps::acceptance_table(ZG_DATA_DIR);
    int failed = 0;
    for (const auto& r : rows) {
        failed += r.passed ? 0 : 1;
        std::printf("%s  criterion-%02d  [%6.2fs/%gs]  %s: %s\n", r.passed ? "PASS" : "FAIL",
                    r.index, r.seconds, r.budget_seconds, r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", static_cast<int>(rows.size()) - failed,
                static_cast<int>(rows.size()));
    return failed == 0 ? 0 : 1;
}
