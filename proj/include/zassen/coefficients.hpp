#pragma once

#include "zassen/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace zassen {

/// Bernoulli number B_r under the convention B_1 = -1/2
/// (the one forced by P_1 = 1/2). Memoized.
Rational bernoulli(unsigned r);

/// P_r = (-1)^r (2^r - 1) B_r.
Rational p_r(unsigned r);

/// L_{a,p}^{k,l} = delta_{p,0} (C(k,a) + C(k+l,a)) + C(k,p) (C(k-p,a-p) + C(k+l-p,a-p)).
/// Requires a <= k+l and p <= a.
Rational l_value(unsigned k, unsigned l, unsigned a, unsigned p);

/// Index quadruple of a structure coefficient. Valid when n <= k+l and i <= n.
struct CoeffKey {
    unsigned k = 0;
    unsigned l = 0;
    unsigned n = 0;
    unsigned i = 0;

    void validate() const
    {
        if (n > k + l || i > n)
            throw std::out_of_range("CoeffKey: need n <= k+l and i <= n");
    }
    friend auto operator<=>(const CoeffKey &, const CoeffKey &) = default;
};

/// pi via the recursion pi_{a,p} = (L_{a,p} - 2 sum_{n<a} C(k+l-n,a-n) sum_i pi_{n,i} C(a-n,p-i)) / 4,
/// starting from pi_{0,0} = 1. Results are memoized in a process-wide table that is
/// safe for concurrent readers.
Rational pi_recursive(const CoeffKey &key);

/// pi via the closed form pi_{n,i} = (1/2) sum_{s,j} A_{(n,i),(s,j)}^{k+l} L_{s,j},
/// with the lower-triangular, P_r-weighted kernel A. Not memoized; serves as an
/// independent route to the same values.
Rational pi_explicit(const CoeffKey &key);

inline Rational pi_coeff(unsigned k, unsigned l, unsigned n, unsigned i)
{
    return pi_recursive(CoeffKey{k, l, n, i});
}

/// Total version of pi: 0 outside the valid index range (for series code).
Rational pi_total(unsigned k, unsigned l, long long n, long long i);

/// lambda_{n,i}^{k,l} = 2 pi_{2n+1,i}^{k,l}. Requires 2n+1 <= k+l and i <= 2n+1.
Rational lambda_coeff(unsigned k, unsigned l, unsigned n, unsigned i);

/// mu_{n,i}^{k,l} = pi_{n,i}^{k,l} - pi_{n,n-i}^{l,k}; vanishes for even n.
Rational mu_coeff(unsigned k, unsigned l, unsigned n, unsigned i);

/// gamma_{n,i}^{k,l} = (pi_{n,i}^{k,l} + pi_{n,n-i}^{l,k}) / 2; vanishes for odd n.
Rational gamma_coeff(unsigned k, unsigned l, unsigned n, unsigned i);

enum class CoeffKind { pi, lambda, mu, gamma };

const char *to_string(CoeffKind kind);
CoeffKind coeff_kind_from_string(const std::string &s);

/// A rendered table of structure coefficients for every k+l <= kmax.
struct CoeffTable {
    CoeffKind kind = CoeffKind::pi;
    std::map<CoeffKey, Rational> entries;

    static CoeffTable build(CoeffKind kind, unsigned kmax);
    /// Plain-text layout mirroring the coefficient tables: one (k,l) block,
    /// one row per n, columns i.
    std::string render_text() const;
};

/// Evaluates one coefficient of the requested kind (range-checked).
Rational coeff_value(CoeffKind kind, const CoeffKey &key);

/// Report of an exact verification sweep.
struct IdentityReport {
    bool passed = true;
    std::string first_failure; // empty when passed
};

/// Exact check of the three auxiliary identities behind the explicit coefficient formula:
/// the Vandermonde-style factorial sum, the Bernoulli-binomial sum
/// (value -1/2 at b = 0), and the P_r convolution, for all parameters up to b_max.
IdentityReport verify_bernoulli_identities(unsigned b_max);

} // namespace zassen
