#pragma once

#include "zassen/solve.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zassen {

struct CheckResult {
    std::string label;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
    double elapsed_s = 0.0;

    bool passed() const
    {
        for (const auto &c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

/// Reference entry of a published coefficient table.
struct TableFixtureEntry {
    unsigned k, l, n, i;
    const char *value;
};

/// The pi table, k+l = 1..4 (rows with k >= l).
const std::vector<TableFixtureEntry> &pi_table_fixture();
/// The lambda table, k+l = 1..6 (rows with k >= l; the (4,0) n=1 i=1 entry is
/// -6, consistent with lambda = 2 pi and the pi table).
const std::vector<TableFixtureEntry> &lambda_table_fixture();

std::vector<std::string> suite_names(); // coeffs, algebra, matrix, numeric
/// Runs one named suite ("all" runs every suite back to back).
std::vector<SuiteReport> run_suites(const std::string &name, std::uint64_t seed);

// Individual checks shared by the CLI verify suites and the acceptance runner.
std::vector<CheckResult> checks_coeff_tables();       // both routes vs fixtures
std::vector<CheckResult> checks_symmetry(unsigned kmax);
CheckResult check_triple_oracle(unsigned kmax);
CheckResult check_bernoulli_identities(unsigned bmax);
std::vector<CheckResult> checks_algebra_properties(std::uint64_t seed);
std::vector<CheckResult> checks_sbch();
std::vector<CheckResult> checks_zassenhaus();
std::vector<CheckResult> checks_magnus();
std::vector<CheckResult> checks_cost();
std::vector<CheckResult> checks_matrix(std::uint64_t seed);
std::vector<CheckResult> checks_numeric_structure(std::uint64_t seed);
std::vector<CheckResult> checks_skew_unitarity(std::uint64_t seed);
std::vector<CheckResult> checks_eps_scaling();
std::vector<CheckResult> checks_convergence();

} // namespace zassen
