#pragma once

#include "zassen/series.hpp"

#include <set>
#include <vector>

namespace zassen {

/// Symmetric Zassenhaus splitting exp(a+b) ~ e^{W0/2}...e^{Wn/2} e^{W_{n+1}} e^{Wn/2}...e^{W0/2}.
struct Splitting {
    std::vector<FTerm> exponents; // W[0..n+1]
    unsigned n = 0;
    Rational sigma;
    Rational order_target; // (2n+3) sigma - 1

    /// Minimal sigma-order of exponent k.
    Rational exponent_order(size_t k) const { return exponents.at(k).min_sigma_order(sigma); }

    /// Default Lanczos iteration count for exponent k >= 2:
    /// ceil(((2n+3)sigma-1) / ((2k-1)sigma-1)).
    unsigned lanczos_iterations(size_t k) const;

    /// Derivative orders of the coefficient symbols appearing across all
    /// exponents (the manifest the spectral backend must sample).
    std::set<unsigned> derivative_orders() const;

    std::string formula(size_t k) const { return exponents.at(k).str(); }
};

/// Derives the splitting by symmetric sBCH peeling of exp(a+b), truncating
/// the series at t-degree 2n+1. Exponent k >= 2 collects the whole t^(2k-1)
/// block of the running exponent. Requires sigma > 0 and single-term even
/// inputs carrying t^1.
Splitting zassenhaus(const FTerm &a, const FTerm &b, unsigned n, const Rational &sigma);

/// FFT count per time step: C_sigma(n) = 4 + 2 sum_{k=2..n} 4(k-1) ceil(((2n+3)s-1)/((2k-1)s-1))
/// + 4n ceil(((2n+3)s-1)/((2n+1)s-1)). Requires n >= 1 and every denominator positive.
long long cost(unsigned n, const Rational &sigma);

/// One term of the graded Magnus expansion with its nested commutators
/// simplified to commutator-free form.
struct MagnusTerm {
    unsigned depth = 1;          // number of nested integrals
    Rational coefficient;        // 1, -1/2, 1/12, 1/4
    std::vector<int> upper_bounds; // per level: 0 means t, j>0 means xi_j
    std::vector<std::string> labels; // xi_1..xi_depth
    FTerm integrand;

    std::string str() const;
};

/// The displayed Magnus integrands for A(xi) = i t eps <1>_2 - i t eps^-1 <V(xi)>_0,
/// depth 1..3. Throws std::domain_error beyond depth 3.
std::vector<MagnusTerm> magnus_symbolic(unsigned depth);

} // namespace zassen
