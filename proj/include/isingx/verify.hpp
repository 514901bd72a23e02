#ifndef ISINGX_VERIFY_HPP
#define ISINGX_VERIFY_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace isingx {
namespace verify {

struct CheckResult {
    int criterion = 0;
    std::string id;
    bool pass = false;
    std::string detail;  // expected vs actual, or the convention note
    double seconds = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass = false;
    double total_seconds = 0.0;

    nlohmann::json to_json() const;
    // One line per criterion, aggregated over its sub-checks.
    std::string summary() const;
};

// suite: "fast" skips the large enumerations, "all" runs everything.
VerifyReport run_verification(const std::string& suite);

}  // namespace verify
}  // namespace isingx

#endif
