// Acceptance suite: runs the full verification battery and prints one
// pass/fail line per criterion.

#include <cstdio>

#include "mhl/battery.hpp"

int main() {
    auto results = mhl::run_battery(mhl::Suite::Full);
    bool all_ok = true;
    for (const auto& r : results) {
        all_ok = all_ok && r.pass;
        std::printf("%s criterion %d (%s) [%.2fs]%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.empty() ? "" : ": ", r.detail.c_str());
    }
    if (!all_ok) {
        std::printf("acceptance: FAILED\n");
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
