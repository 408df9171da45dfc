#pragma once

#include "zassen/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace zassen {

/// Abstract symbol of the commutative differential ring. The name "1" is
/// reserved for the ring unit and never appears inside a monomial factor.
struct Symbol {
    std::string name;
    friend auto operator<=>(const Symbol &, const Symbol &) = default;
};

/// One factor of a monomial: symbol, derivative order, positive exponent.
struct Factor {
    std::string sym;
    unsigned deriv = 0;
    unsigned exp = 1;
    friend auto operator<=>(const Factor &, const Factor &) = default;
};

/// Product of factors in canonical order (by symbol name, then derivative
/// order); the empty monomial is the ring unit.
class Monomial {
  public:
    Monomial() = default;
    static Monomial unit() { return Monomial(); }
    static Monomial var(const std::string &sym, unsigned deriv = 0, unsigned exp = 1);

    Monomial operator*(const Monomial &o) const;
    bool is_unit() const { return factors_.empty(); }
    const std::vector<Factor> &factors() const { return factors_; }
    unsigned total_degree() const;

    friend auto operator<=>(const Monomial &, const Monomial &) = default;

    std::string str() const;

  private:
    std::vector<Factor> factors_; // canonical: sorted, merged, exponents >= 1
};

/// Element of the free commutative differential polynomial ring: a finite
/// rational combination of monomials. No zero coefficients are stored, so
/// equality is structural.
class DiffPoly {
  public:
    DiffPoly() = default;
    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly one() { return constant(Rational(1)); }
    static DiffPoly constant(const Rational &c);
    static DiffPoly var(const std::string &sym, unsigned deriv = 0, unsigned exp = 1);
    static DiffPoly term(const Rational &c, const Monomial &m);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational> &terms() const { return terms_; }

    DiffPoly &operator+=(const DiffPoly &o);
    DiffPoly &operator-=(const DiffPoly &o);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly &b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly &b) { return a -= b; }
    DiffPoly operator-() const;
    DiffPoly operator*(const DiffPoly &o) const;
    DiffPoly scaled(const Rational &c) const;

    friend bool operator==(const DiffPoly &, const DiffPoly &) = default;
    friend bool operator<(const DiffPoly &a, const DiffPoly &b) { return a.terms_ < b.terms_; }

    /// Greatest common rational content (positive, matching the sign of the
    /// leading term); Rational(1) for the zero polynomial. Used by renderers.
    Rational content() const;

    std::string str() const;

  private:
    void add_term(const Monomial &m, const Rational &c);
    std::map<Monomial, Rational> terms_;
};

/// The derivation (Leibniz rule factor-wise, linear over terms).
DiffPoly derive(const DiffPoly &p);
DiffPoly derive(const DiffPoly &p, unsigned order);

inline DiffPoly mul(const DiffPoly &p, const DiffPoly &q) { return p * q; }
inline DiffPoly add(const DiffPoly &p, const DiffPoly &q) { return p + q; }

} // namespace zassen
