#pragma once

// Acceptance suite: one entry per criterion, each an exact property check
// against an independent brute-force computation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ck {

struct SelftestOptions {
    std::uint64_t seed = 20240611;
    unsigned workers = 0;  // 0 = hardware concurrency
    // flip the sign of the closed-form commutator for the pair (first Cartan element, first root)
    bool mutate_commutator = false;
};

struct CheckFailure {
    std::string where;
    std::string lhs, rhs;
};

struct CriterionReport {
    int id = 0;
    std::string title;
    std::string checks;  // what is compared against what
    bool pass = false;
    std::size_t cases = 0;
    double seconds = 0;
    double budget_seconds = 0;  // 0 = no runtime bound
    std::vector<std::string> notes;
    std::vector<CheckFailure> failures;  // first few offending cases
    std::size_t failure_count = 0;
};

struct SelftestReport {
    std::vector<CriterionReport> criteria;
    bool pass() const;
};

// criteria implemented in-process (1..10); the CLI golden-file criterion lives in the acceptance driver
std::vector<int> library_criteria();
std::string criterion_title(int id);
CriterionReport run_criterion(int id, const SelftestOptions& opt = {});
SelftestReport run_selftest(const SelftestOptions& opt = {}, const std::vector<int>& ids = {});

// "criterion 3 PASS (1234 cases, 12.3 s) ..." one line
std::string summary_line(const CriterionReport& r);

}  // namespace ck
