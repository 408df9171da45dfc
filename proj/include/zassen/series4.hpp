#pragma once

#include "zassen/rational.hpp"

#include <array>
#include <vector>

namespace zassen {

/// Truncated rational power series in the four generating-function variables
/// (u, w, y, x), stored densely over the exponent box [0,du] x [0,dw] x [0,dy] x [0,dx].
/// Addition and multiplication close over the truncation (overflowing exponents drop).
class Series4 {
  public:
    Series4(unsigned du, unsigned dw, unsigned dy, unsigned dx);

    static Series4 constant(const Rational &c, unsigned du, unsigned dw, unsigned dy, unsigned dx);
    /// c * u^eu w^ew y^ey x^ex (zero series if the exponent exceeds the box).
    static Series4 monomial(const Rational &c, unsigned eu, unsigned ew, unsigned ey, unsigned ex,
                            unsigned du, unsigned dw, unsigned dy, unsigned dx);

    const Rational &coeff(unsigned eu, unsigned ew, unsigned ey, unsigned ex) const;
    void set(unsigned eu, unsigned ew, unsigned ey, unsigned ex, const Rational &c);

    std::array<unsigned, 4> bounds() const { return {du_, dw_, dy_, dx_}; }
    bool is_zero() const;
    /// Minimal total degree among nonzero terms; bounds sum + 1 if zero.
    unsigned min_total_degree() const;

    Series4 &operator+=(const Series4 &o);
    Series4 &operator-=(const Series4 &o);
    friend Series4 operator+(Series4 a, const Series4 &b) { return a += b; }
    friend Series4 operator-(Series4 a, const Series4 &b) { return a -= b; }
    Series4 operator*(const Series4 &o) const;
    Series4 scaled(const Rational &c) const;

    friend bool operator==(const Series4 &a, const Series4 &b) = default;

    /// Multiplicative inverse; requires a nonzero constant term.
    Series4 inverse() const;
    /// exp of a series with zero constant term.
    Series4 exp() const;
    /// cosh of a series with zero constant term.
    Series4 cosh() const;

  private:
    size_t index(unsigned eu, unsigned ew, unsigned ey, unsigned ex) const
    {
        return ((size_t(eu) * (dw_ + 1) + ew) * (dy_ + 1) + ey) * (dx_ + 1) + ex;
    }
    void check_compatible(const Series4 &o) const;

    unsigned du_, dw_, dy_, dx_;
    std::vector<Rational> c_;
};

/// Truncated expansion of the closed-form generating function
///   exp((wy - uxy)/2) / (1 - (w + u)) * cosh(uy/2) cosh(wxy/2) / cosh(y(u+w)(1+x)/2),
/// whose coefficient of u^l w^k y^n x^i equals (k+l-n)! pi_{n,i}^{k,l} / (l! k!).
Series4 genfun_series(unsigned deg_u, unsigned deg_w, unsigned deg_y, unsigned deg_x);

/// Extracts pi_{n,i}^{k,l} from a generating-function expansion.
Rational genfun_pi(const Series4 &h, unsigned k, unsigned l, unsigned n, unsigned i);

} // namespace zassen
