#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zassen {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar over arbitrary-precision integers.
/// Always stored in lowest terms with a positive denominator.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt &n) : v_(n) {}
    Rational(const BigInt &num, const BigInt &den)
    {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den < 0)
            v_ = boost::multiprecision::cpp_rational(-num, -den);
        else
            v_ = boost::multiprecision::cpp_rational(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "num", "num/den" or a decimal literal like "-1.25" exactly.
    static Rational parse(std::string_view s);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(-v_); }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        if (a.v_ < b.v_)
            return std::strong_ordering::less;
        if (a.v_ > b.v_)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "-3/4" for proper fractions, "7" for integers.
    std::string str() const;
    double to_double() const { return v_.convert_to<double>(); }

    /// Smallest integer >= *this.
    BigInt ceil() const;
    /// Largest integer <= *this.
    BigInt floor() const;

  private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

/// Binomial coefficient with the convention C(n,m) = 0 for m < 0 or m > n.
Rational binomial(long long n, long long m);
BigInt binomial_int(long long n, long long m);
BigInt factorial(unsigned n);

} // namespace zassen
