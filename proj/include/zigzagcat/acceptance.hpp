#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zzc {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Runs the numbered acceptance criteria (all of them when `only` is empty). When `live` is set,
/// each result line is written there as soon as it is known.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {}, std::ostream* live = nullptr,
                                            bool timing = true);
std::string format_line(const CriterionResult& r, bool timing = true);
int criterion_count();

}  // namespace zzc
