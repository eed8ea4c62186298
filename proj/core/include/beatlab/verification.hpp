// verification.hpp — End-to-end verification suite (also behind the CLI
// `verify` subcommand)

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beatlab::verify {

struct CriterionResult {
    int id{0};
    std::string name;
    bool passed{false};
    std::string detail;
};

// Runs every criterion, printing one "PASS"/"FAIL" line per criterion.
std::vector<CriterionResult> run_all(std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace beatlab::verify
