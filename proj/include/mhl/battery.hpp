#ifndef MHL_BATTERY_HPP
#define MHL_BATTERY_HPP

#include <string>
#include <vector>

namespace mhl {

enum class Suite { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the verification battery. Quick restricts to the small shapes and
// finishes well under a minute; Full runs every criterion at the sizes the
// acceptance gate demands.
std::vector<CriterionResult> run_battery(Suite suite);

} // namespace mhl

#endif
