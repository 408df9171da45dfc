#include "zassen/series4.hpp"

#include <stdexcept>

namespace zassen {

Series4::Series4(unsigned du, unsigned dw, unsigned dy, unsigned dx)
    : du_(du), dw_(dw), dy_(dy), dx_(dx),
      c_(size_t(du + 1) * (dw + 1) * (dy + 1) * (dx + 1))
{
}

Series4 Series4::constant(const Rational &c, unsigned du, unsigned dw, unsigned dy, unsigned dx)
{
    Series4 s(du, dw, dy, dx);
    s.c_[0] = c;
    return s;
}

Series4 Series4::monomial(const Rational &c, unsigned eu, unsigned ew, unsigned ey, unsigned ex,
                          unsigned du, unsigned dw, unsigned dy, unsigned dx)
{
    Series4 s(du, dw, dy, dx);
    if (eu <= du && ew <= dw && ey <= dy && ex <= dx)
        s.c_[s.index(eu, ew, ey, ex)] = c;
    return s;
}

const Rational &Series4::coeff(unsigned eu, unsigned ew, unsigned ey, unsigned ex) const
{
    static const Rational zero(0);
    if (eu > du_ || ew > dw_ || ey > dy_ || ex > dx_)
        return zero;
    return c_[index(eu, ew, ey, ex)];
}

void Series4::set(unsigned eu, unsigned ew, unsigned ey, unsigned ex, const Rational &c)
{
    if (eu > du_ || ew > dw_ || ey > dy_ || ex > dx_)
        throw std::out_of_range("Series4::set: exponent outside truncation box");
    c_[index(eu, ew, ey, ex)] = c;
}

bool Series4::is_zero() const
{
    for (const auto &v : c_)
        if (!v.is_zero())
            return false;
    return true;
}

unsigned Series4::min_total_degree() const
{
    unsigned best = du_ + dw_ + dy_ + dx_ + 1;
    for (unsigned eu = 0; eu <= du_; ++eu)
        for (unsigned ew = 0; ew <= dw_; ++ew)
            for (unsigned ey = 0; ey <= dy_; ++ey)
                for (unsigned ex = 0; ex <= dx_; ++ex)
                    if (!c_[index(eu, ew, ey, ex)].is_zero())
                        best = std::min(best, eu + ew + ey + ex);
    return best;
}

void Series4::check_compatible(const Series4 &o) const
{
    if (du_ != o.du_ || dw_ != o.dw_ || dy_ != o.dy_ || dx_ != o.dx_)
        throw std::invalid_argument("Series4: mismatched truncation boxes");
}

Series4 &Series4::operator+=(const Series4 &o)
{
    check_compatible(o);
    for (size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

Series4 &Series4::operator-=(const Series4 &o)
{
    check_compatible(o);
    for (size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

Series4 Series4::operator*(const Series4 &o) const
{
    check_compatible(o);
    struct Term {
        unsigned e[4];
        const Rational *c;
    };
    std::vector<Term> a, b;
    for (unsigned eu = 0; eu <= du_; ++eu)
        for (unsigned ew = 0; ew <= dw_; ++ew)
            for (unsigned ey = 0; ey <= dy_; ++ey)
                for (unsigned ex = 0; ex <= dx_; ++ex) {
                    if (!c_[index(eu, ew, ey, ex)].is_zero())
                        a.push_back({{eu, ew, ey, ex}, &c_[index(eu, ew, ey, ex)]});
                    if (!o.c_[index(eu, ew, ey, ex)].is_zero())
                        b.push_back({{eu, ew, ey, ex}, &o.c_[index(eu, ew, ey, ex)]});
                }
    Series4 r(du_, dw_, dy_, dx_);
    for (const auto &ta : a)
        for (const auto &tb : b) {
            unsigned eu = ta.e[0] + tb.e[0];
            unsigned ew = ta.e[1] + tb.e[1];
            unsigned ey = ta.e[2] + tb.e[2];
            unsigned ex = ta.e[3] + tb.e[3];
            if (eu > du_ || ew > dw_ || ey > dy_ || ex > dx_)
                continue;
            r.c_[r.index(eu, ew, ey, ex)] += *ta.c * *tb.c;
        }
    return r;
}

Series4 Series4::scaled(const Rational &c) const
{
    Series4 r = *this;
    for (auto &v : r.c_)
        v *= c;
    return r;
}

Series4 Series4::inverse() const
{
    const Rational c0 = coeff(0, 0, 0, 0);
    if (c0.is_zero())
        throw std::domain_error("Series4::inverse: zero constant term");
    // 1/f = (1/c0) sum_m (1 - f/c0)^m; the bracket has no constant term so the
    // powers run off the truncation box.
    Series4 g = Series4::constant(Rational(1), du_, dw_, dy_, dx_) - scaled(Rational(1) / c0);
    Series4 acc = Series4::constant(Rational(1) / c0, du_, dw_, dy_, dx_);
    Series4 pw = Series4::constant(Rational(1) / c0, du_, dw_, dy_, dx_);
    if (g.is_zero())
        return acc;
    const unsigned step = g.min_total_degree();
    const unsigned max_m = (du_ + dw_ + dy_ + dx_) / std::max(1u, step) + 1;
    for (unsigned m = 1; m <= max_m; ++m) {
        pw = pw * g;
        if (pw.is_zero())
            break;
        acc += pw;
    }
    return acc;
}

Series4 Series4::exp() const
{
    if (!coeff(0, 0, 0, 0).is_zero())
        throw std::domain_error("Series4::exp: nonzero constant term");
    Series4 acc = Series4::constant(Rational(1), du_, dw_, dy_, dx_);
    Series4 pw = acc;
    if (is_zero())
        return acc;
    const unsigned step = min_total_degree();
    const unsigned max_m = (du_ + dw_ + dy_ + dx_) / std::max(1u, step) + 1;
    for (unsigned m = 1; m <= max_m; ++m) {
        pw = pw * *this;
        if (pw.is_zero())
            break;
        acc += pw.scaled(Rational(BigInt(1), factorial(m)));
    }
    return acc;
}

Series4 Series4::cosh() const
{
    if (!coeff(0, 0, 0, 0).is_zero())
        throw std::domain_error("Series4::cosh: nonzero constant term");
    Series4 acc = Series4::constant(Rational(1), du_, dw_, dy_, dx_);
    Series4 sq = *this * *this;
    Series4 pw = Series4::constant(Rational(1), du_, dw_, dy_, dx_);
    if (sq.is_zero())
        return acc;
    const unsigned step = sq.min_total_degree();
    const unsigned max_m = (du_ + dw_ + dy_ + dx_) / std::max(1u, step) + 1;
    for (unsigned m = 1; m <= max_m; ++m) {
        pw = pw * sq;
        if (pw.is_zero())
            break;
        acc += pw.scaled(Rational(BigInt(1), factorial(2 * m)));
    }
    return acc;
}

Series4 genfun_series(unsigned deg_u, unsigned deg_w, unsigned deg_y, unsigned deg_x)
{
    const unsigned du = deg_u, dw = deg_w, dy = deg_y, dx = deg_x;
    auto mono = [&](long long num, long long den, unsigned eu, unsigned ew, unsigned ey, unsigned ex) {
        return Series4::monomial(Rational(num, den), eu, ew, ey, ex, du, dw, dy, dx);
    };

    // exp((wy - uxy)/2)
    Series4 arg1 = mono(1, 2, 0, 1, 1, 0) - mono(1, 2, 1, 0, 1, 1);
    Series4 e1 = arg1.exp();

    // 1 / (1 - (w + u))
    Series4 lin = Series4::constant(Rational(1), du, dw, dy, dx) - mono(1, 1, 0, 1, 0, 0) -
                  mono(1, 1, 1, 0, 0, 0);
    Series4 geom = lin.inverse();

    // cosh(uy/2), cosh(wxy/2)
    Series4 c1 = mono(1, 2, 1, 0, 1, 0).cosh();
    Series4 c2 = mono(1, 2, 0, 1, 1, 1).cosh();

    // 1 / cosh(y(u+w)(1+x)/2)
    Series4 arg3 = mono(1, 2, 1, 0, 1, 0) + mono(1, 2, 0, 1, 1, 0) + mono(1, 2, 1, 0, 1, 1) +
                   mono(1, 2, 0, 1, 1, 1);
    Series4 c3inv = arg3.cosh().inverse();

    return e1 * geom * c1 * c2 * c3inv;
}

Rational genfun_pi(const Series4 &h, unsigned k, unsigned l, unsigned n, unsigned i)
{
    // coeff of u^l w^k y^n x^i is (k+l-n)! pi / (l! k!)
    const Rational c = h.coeff(l, k, n, i);
    return c * Rational(factorial(l)) * Rational(factorial(k)) / Rational(factorial(k + l - n));
}

} // namespace zassen
