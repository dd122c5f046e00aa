#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pba {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    int oracle_max_n = 5;
};

/// Runs the full verification grid and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// Prints one line per criterion; returns true when everything passed.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace pba
