#ifndef PVI_CHECKS_HPP
#define PVI_CHECKS_HPP

#include <string>
#include <vector>

namespace pvi {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst measured error/residual
    double threshold = 0.0;  // pinned acceptance tolerance
    std::string detail;
    double elapsed_ms = 0.0;
};

struct CheckOptions {
    bool full = true;          // fast suite trims the draw counts
    unsigned seed = 42;
    bool inject_perturbation = false;  // harness sanity hook: forces a failure
    bool concurrent = true;
};

// The acceptance criteria, one CheckResult per numbered criterion (some
// criteria emit one result per sub-protocol).  Results are ordered by name.
std::vector<CheckResult> run_acceptance_checks(const CheckOptions& opt = {});

} // namespace pvi

#endif
