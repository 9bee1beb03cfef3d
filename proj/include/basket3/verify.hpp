#pragma once

#include <set>
#include <string>
#include <vector>

#include "basket3/classify.hpp"
#include "basket3/wps.hpp"

namespace basket3 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::set<std::string> skip;  // {"fletcher-sweep", ...}
    int threads = 0;
};

// Runs the seven acceptance checks, one CheckResult per criterion.
std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opt);

// Row-level diffs of classification output against the golden tables; empty
// means exact match.
std::vector<std::string> diff_chi1(const std::vector<ClassificationRecord>& recs);
std::vector<std::string> diff_tableb(const std::vector<TableBRow>& rows);

}  // namespace basket3
