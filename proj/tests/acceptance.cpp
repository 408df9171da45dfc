// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include "zassen/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace zassen;

namespace {

struct Criterion {
    std::string name;
    std::function<std::vector<CheckResult>()> run;
    double time_limit_s = 0.0; // 0 = unlimited
};

int run_all(const std::vector<Criterion> &criteria)
{
    int failures = 0;
    for (const auto &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        std::string thrown;
        try {
            results = c.run();
        } catch (const std::exception &e) {
            thrown = e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        bool ok = thrown.empty();
        std::string detail = thrown;
        for (const auto &r : results)
            if (!r.passed) {
                ok = false;
                detail = r.label + (r.detail.empty() ? "" : ": " + r.detail);
                break;
            }
        if (ok && c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
            ok = false;
            detail = "exceeded time limit of " + std::to_string(c.time_limit_s) + " s";
        }
        std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), elapsed,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    return failures;
}

} // namespace

int main()
{
    const std::uint64_t seed = 20240817;
    std::vector<Criterion> criteria = {
        {"C1 coefficient tables reproduced by both routes", [] { return checks_coeff_tables(); }, 5.0},
        {"C2 triple-oracle agreement for k+l <= 8", [] { return std::vector<CheckResult>{check_triple_oracle(8)}; }, 30.0},
        {"C3 symmetry and grading for k+l <= 12", [] { return checks_symmetry(12); }},
        {"C4 algebra property suite", [seed] { return checks_algebra_properties(seed); }},
        {"C5 sBCH fidelity (degree-3 rule and the TDSE exponent)", [] { return checks_sbch(); }},
        {"C6 matrix-example oracle (n <= 4, k+l <= 8, 20 trials)", [seed] { return checks_matrix(seed); }},
        {"C7 auxiliary Bernoulli identities up to b = 30", [] { return std::vector<CheckResult>{check_bernoulli_identities(30)}; }},
        {"C8 cost model values and quadratic bound", [] { return checks_cost(); }},
        {"C9 convergence orders vs the dense oracle", [] { return checks_convergence(); }, 120.0},
        {"C10 skew-Hermiticity and unitarity", [seed] { return checks_skew_unitarity(seed); }},
        {"C11 spectral-radius scaling proxy", [] { return checks_eps_scaling(); }},
    };
    int failures = run_all(criteria);
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
