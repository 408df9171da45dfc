#pragma once

#include "zassen/falgebra.hpp"

namespace zassen {

/// t-graded truncated series with FTerm coefficients. Each stored FTerm's
/// scalar gradings carry exactly the matching t power; truncated products
/// discard degrees beyond the truncation.
class ExpSeries {
  public:
    explicit ExpSeries(unsigned truncation) : trunc_(truncation) {}

    /// The multiplicative identity <1>_0 at degree 0.
    static ExpSeries identity(unsigned truncation);
    /// Splits an FTerm into degrees by its t gradings.
    static ExpSeries from_fterm(const FTerm &a, unsigned truncation);

    unsigned truncation() const { return trunc_; }
    FTerm at(unsigned degree) const;
    bool is_zero() const { return terms_.empty(); }
    unsigned min_degree() const; // trunc_+1 when zero

    ExpSeries &operator+=(const ExpSeries &o);
    ExpSeries &operator-=(const ExpSeries &o);
    friend ExpSeries operator+(ExpSeries a, const ExpSeries &b) { return a += b; }
    friend ExpSeries operator-(ExpSeries a, const ExpSeries &b) { return a -= b; }
    ExpSeries operator*(const ExpSeries &o) const;
    ExpSeries scaled(const Rational &c) const;

    friend bool operator==(const ExpSeries &, const ExpSeries &) = default;

    /// Sum of all degrees into one FTerm (the t grading keeps them apart).
    FTerm to_fterm() const;

  private:
    void insert(unsigned degree, const FTerm &f);
    std::map<unsigned, FTerm> terms_;
    unsigned trunc_;
};

/// exp of a series with no degree-0 part (throws std::domain_error otherwise).
ExpSeries exp_series(const ExpSeries &a);

/// log of a series whose degree-0 part is the identity (throws std::domain_error otherwise).
ExpSeries log_series(const ExpSeries &e);

/// Symmetric BCH exponent log(exp(a/2) exp(b) exp(a/2)) truncated at t-degree
/// n_max; inputs must carry t^1 on every component. The result contains only
/// odd t-degrees.
FTerm sbch(const FTerm &a, const FTerm &b, unsigned n_max);

/// log(exp(-w/2) exp(x) exp(-w/2)) for an exponent series x: the symmetric
/// conjugation that peels w off the splitting.
ExpSeries sbch_conjugate(const FTerm &w, const ExpSeries &x);

} // namespace zassen
