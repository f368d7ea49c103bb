#pragma once

#include <string>
#include <vector>

namespace zetagaps {

// One row of the release checklist: a named quantity recomputed and compared
// at its stated tolerance, with a wall-clock budget.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;       // comparison and budget both satisfied
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;        // measured values vs targets, or the exception text
};

// Runs the full checklist in order.  data_dir must contain zeros_100k.txt.
// Deterministic apart from the timing fields.
std::vector<CriterionResult> acceptance_table(const std::string& data_dir);

}  // namespace zetagaps
