#ifndef SKEWPAIR_ACCEPTANCE_HPP
#define SKEWPAIR_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// The library's acceptance gate: one entry per verification criterion, run at
// pinned parameter points and tolerances. The CLI `verify --suite acceptance`
// and the acceptance test binary both drive this.

namespace skewpair {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // statistic vs tolerance summary
    double wall_s = 0.0;
};

inline constexpr uint64_t kAcceptanceSeed = 424242;

/// Runs all acceptance criteria, streaming one pass/fail line per criterion to
/// `log` as they finish.
std::vector<CriterionResult> run_acceptance(std::ostream& log, uint64_t seed = kAcceptanceSeed);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace skewpair

#endif
