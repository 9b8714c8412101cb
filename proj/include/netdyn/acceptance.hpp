#pragma once

#include <string>
#include <vector>

namespace netdyn {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    long elapsed_ms = 0;
    std::string detail;  // failure reasons or a short summary
};

/// Runs the corpus verification suite (criteria A1..A13). `only` restricts to
/// a single criterion id when non-empty. Every tolerance is pinned in code.
std::vector<CriterionResult> run_acceptance(const std::string& only = "");

/// Formats one "Axx PASS/FAIL (ms)" line per criterion.
std::string format_acceptance_table(const std::vector<CriterionResult>& results);

}  // namespace netdyn
