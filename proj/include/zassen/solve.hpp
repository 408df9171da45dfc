#pragma once

#include "zassen/spectral.hpp"

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>

namespace zassen {

/// Validated parameters of one integration run.
struct RunConfig {
    int m = 128;
    double eps = 0.0625;
    double dt = 0.01;
    int steps = 100;
    std::string potential = "cos(pi*x)";
    std::string scheme = "zassenhaus"; // or "strang"
    unsigned order_n = 1;              // Zassenhaus n
    Rational sigma = Rational(1, 2);
    int lanczos_override = -1;
    std::uint64_t seed = 1;

    void validate() const;
};

struct SolveResult {
    RunConfig config;
    double error_l2 = std::numeric_limits<double>::quiet_NaN(); // vs dense oracle, when available
    double norm_drift = 0.0;
    double wall_ms = 0.0;
    StateVector final_state;
};

/// Default initial wavepacket: normalized Gaussian exp(-x^2/(2 delta^2)) exp(i p x / eps),
/// delta = 0.1, p = 1.
StateVector initial_wavepacket(Grid g, double eps);

/// Runs the configured scheme for `steps` steps. When M <= 512 the dense
/// oracle supplies the exact semidiscrete solution for error_l2.
SolveResult solve_run(const RunConfig &config);

/// CSV header and row: M, eps, dt, steps, scheme, error_l2, norm_drift, wall_ms.
std::string csv_header();
std::string csv_row(const SolveResult &r);

/// Binary state dump (little-endian): 16-byte header ("ZASS" padded to 8
/// bytes, u32 M, u32 reserved) followed by interleaved float64 re,im pairs.
void write_state(std::ostream &out, const StateVector &u);
StateVector read_state(std::istream &in);

} // namespace zassen
