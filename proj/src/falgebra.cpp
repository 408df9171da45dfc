#include "zassen/falgebra.hpp"

#include <sstream>

namespace zassen {

std::complex<double> ScaledScalar::value(double t, double eps) const
{
    double mag = q.to_double() * std::pow(t, t_pow) * std::pow(eps, eps_pow);
    return i_pow == 1 ? std::complex<double>(0.0, mag) : std::complex<double>(mag, 0.0);
}

std::string ScaledScalar::str() const
{
    std::string s;
    if (!(q == Rational(1)) || (i_pow == 0 && t_pow == 0 && eps_pow == 0))
        s = q.is_integer() ? q.str() : "(" + q.str() + ")";
    auto append = [&](const std::string &part) {
        if (!s.empty())
            s += " ";
        s += part;
    };
    if (i_pow == 1)
        append("i");
    if (t_pow == 1)
        append("t");
    else if (t_pow != 0)
        append("t^" + std::to_string(t_pow));
    if (eps_pow == 1)
        append("eps");
    else if (eps_pow != 0)
        append("eps^" + std::to_string(eps_pow));
    return s;
}

const char *to_string(Parity p)
{
    switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
    }
    return "?";
}

int FTerm::height() const
{
    if (comps_.empty())
        return -1;
    return comps_.rbegin()->first;
}

Parity FTerm::parity() const
{
    bool has_even = false, has_odd = false;
    for (const auto &[k, gp] : comps_)
        (k % 2 == 0 ? has_even : has_odd) = true;
    if (has_even && has_odd)
        return Parity::mixed;
    return has_odd ? Parity::odd : Parity::even;
}

std::set<int> FTerm::t_degrees() const
{
    std::set<int> ds;
    for (const auto &[k, gp] : comps_)
        for (const auto &[g, poly] : gp)
            ds.insert(g.t_pow);
    return ds;
}

FTerm FTerm::t_component(int d) const
{
    FTerm r;
    for (const auto &[k, gp] : comps_)
        for (const auto &[g, poly] : gp)
            if (g.t_pow == d)
                r.accumulate(k, g, poly);
    return r;
}

void FTerm::accumulate(int k, const Grading &g, const DiffPoly &poly)
{
    if (poly.is_zero())
        return;
    auto &slot = comps_[k][g];
    slot += poly;
    if (slot.is_zero()) {
        comps_[k].erase(g);
        if (comps_[k].empty())
            comps_.erase(k);
    }
}

FTerm &FTerm::operator+=(const FTerm &o)
{
    if (this == &o) {
        FTerm copy = o;
        return *this += copy;
    }
    for (const auto &[k, gp] : o.comps_)
        for (const auto &[g, poly] : gp)
            accumulate(k, g, poly);
    return *this;
}

FTerm &FTerm::operator-=(const FTerm &o)
{
    if (this == &o) {
        comps_.clear();
        return *this;
    }
    for (const auto &[k, gp] : o.comps_)
        for (const auto &[g, poly] : gp)
            accumulate(k, g, -poly);
    return *this;
}

FTerm FTerm::operator-() const
{
    FTerm r;
    for (const auto &[k, gp] : comps_)
        for (const auto &[g, poly] : gp)
            r.comps_[k].emplace(g, -poly);
    return r;
}

FTerm FTerm::scaled(const Rational &c) const
{
    FTerm r;
    if (c.is_zero())
        return r;
    for (const auto &[k, gp] : comps_)
        for (const auto &[g, poly] : gp)
            r.comps_[k].emplace(g, poly.scaled(c));
    return r;
}

FTerm FTerm::scaled(const ScaledScalar &s) const
{
    ScaledScalar cs = s;
    cs.canonicalize();
    FTerm r;
    if (cs.q.is_zero())
        return r;
    for (const auto &[k, gp] : comps_) {
        for (const auto &[g, poly] : gp) {
            int isum = g.i_pow + cs.i_pow;
            Rational weight = cs.q;
            if (isum >= 2) {
                isum -= 2;
                weight = -weight;
            }
            Grading ng{isum, g.t_pow + cs.t_pow, g.eps_pow + cs.eps_pow};
            r.accumulate(k, ng, poly.scaled(weight));
        }
    }
    return r;
}

Rational FTerm::min_sigma_order(const Rational &sigma) const
{
    if (comps_.empty())
        throw std::domain_error("min_sigma_order: zero element");
    bool first = true;
    Rational best(0);
    for (const auto &[k, gp] : comps_) {
        for (const auto &[g, poly] : gp) {
            Rational v = Rational(g.t_pow) * sigma + Rational(g.eps_pow) - Rational(k);
            if (first || v < best) {
                best = v;
                first = false;
            }
        }
    }
    return best;
}

std::string FTerm::str() const
{
    if (comps_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto &[k, gp] : comps_) {
        for (const auto &[g, poly] : gp) {
            Rational c = poly.content();
            DiffPoly body = poly.scaled(Rational(1) / c);
            ScaledScalar s(c, g.i_pow, g.t_pow, g.eps_pow);
            if (s.q.sign() < 0) {
                out << (first ? "-" : " - ");
                s.q = -s.q;
            } else if (!first) {
                out << " + ";
            }
            first = false;
            bool trivial = s.q == Rational(1) && s.i_pow == 0 && s.t_pow == 0 && s.eps_pow == 0;
            if (!trivial)
                out << s.str() << " ";
            out << "<" << body.str() << ">_" << k;
        }
    }
    return out.str();
}

FTerm ang(const DiffPoly &f, int k) { return ang(f, k, ScaledScalar::one()); }

FTerm ang(const DiffPoly &f, int k, const ScaledScalar &s)
{
    if (k < 0)
        throw std::out_of_range("ang: height must be non-negative");
    ScaledScalar cs = s;
    cs.canonicalize();
    FTerm r;
    r.accumulate(k, Grading{cs.i_pow, cs.t_pow, cs.eps_pow}, f.scaled(cs.q));
    return r;
}

namespace {

// Shared bilinear driver: combines every component pair through `rule`.
template <typename Rule>
FTerm bilinear(const FTerm &a, const FTerm &b, Rule &&rule)
{
    FTerm out;
    for (const auto &[k, gpa] : a.components()) {
        for (const auto &[ga, pa] : gpa) {
            for (const auto &[l, gpb] : b.components()) {
                for (const auto &[gb, pb] : gpb) {
                    int isum = ga.i_pow + gb.i_pow;
                    Rational sign(1);
                    if (isum >= 2) {
                        isum -= 2;
                        sign = Rational(-1);
                    }
                    Grading g{isum, ga.t_pow + gb.t_pow, ga.eps_pow + gb.eps_pow};
                    rule(out, (unsigned)k, (unsigned)l, g, pa.scaled(sign), pb);
                }
            }
        }
    }
    return out;
}

std::vector<DiffPoly> derivative_ladder(const DiffPoly &p, unsigned max_order)
{
    std::vector<DiffPoly> d;
    d.reserve(max_order + 1);
    d.push_back(p);
    for (unsigned j = 1; j <= max_order; ++j)
        d.push_back(derive(d.back()));
    return d;
}

} // namespace

FTerm assoc_mul(const FTerm &a, const FTerm &b)
{
    return bilinear(a, b, [](FTerm &out, unsigned k, unsigned l, const Grading &g,
                             const DiffPoly &x, const DiffPoly &y) {
        auto dx = derivative_ladder(x, k + l);
        auto dy = derivative_ladder(y, k + l);
        for (unsigned n = 0; n <= k + l; ++n) {
            DiffPoly z;
            for (unsigned i = 0; i <= n; ++i) {
                Rational c = pi_coeff(k, l, n, i);
                if (!c.is_zero())
                    z += (dx[i] * dy[n - i]).scaled(c);
            }
            out.accumulate((int)(k + l - n), g, z);
        }
    });
}

FTerm commutator(const FTerm &a, const FTerm &b)
{
    return bilinear(a, b, [](FTerm &out, unsigned k, unsigned l, const Grading &g,
                             const DiffPoly &x, const DiffPoly &y) {
        if (k + l == 0)
            return; // <x>_0 and <y>_0 commute
        auto dx = derivative_ladder(x, k + l);
        auto dy = derivative_ladder(y, k + l);
        for (unsigned n = 0; 2 * n + 1 <= k + l; ++n) {
            DiffPoly z;
            for (unsigned i = 0; i <= 2 * n + 1; ++i) {
                Rational c = lambda_coeff(k, l, n, i);
                if (!c.is_zero())
                    z += (dx[i] * dy[2 * n + 1 - i]).scaled(c);
            }
            out.accumulate((int)(k + l - 2 * n - 1), g, z);
        }
    });
}

FTerm jordan(const FTerm &a, const FTerm &b)
{
    return bilinear(a, b, [](FTerm &out, unsigned k, unsigned l, const Grading &g,
                             const DiffPoly &x, const DiffPoly &y) {
        auto dx = derivative_ladder(x, k + l);
        auto dy = derivative_ladder(y, k + l);
        for (unsigned n = 0; n <= k + l; n += 2) { // odd-n gamma vanishes
            DiffPoly z;
            for (unsigned i = 0; i <= n; ++i) {
                Rational c = gamma_coeff(k, l, n, i);
                if (!c.is_zero())
                    z += (dx[i] * dy[n - i]).scaled(c);
            }
            out.accumulate((int)(k + l - n), g, z);
        }
    });
}

bool skew_hermitian_check(const FTerm &a)
{
    for (const auto &[k, gp] : a.components())
        for (const auto &[g, poly] : gp)
            if (g.i_pow != (k + 1) % 2)
                return false;
    return true;
}

bool lies_in(const FTerm &a, Parity p)
{
    if (a.is_zero())
        return true;
    return a.parity() == p;
}

bool fla_reconstruct_check(const DiffPoly &x, unsigned n)
{
    if (n < 1)
        throw std::out_of_range("fla_reconstruct_check: n >= 1");
    auto check_height = [&](unsigned m, unsigned target_height) {
        // [d^m, <x>_0] = lam_{0,0}^{m,0} <D x>_{m-1} + sum_{s>=1} lam_{s,0}^{m,0} <D^{2s+1} x>_{m-1-2s}
        FTerm bracket = commutator(ang(DiffPoly::one(), (int)m), ang(x, 0));
        Rational lam00 = lambda_coeff(m, 0, 0, 0);
        FTerm rhs = bracket.scaled(Rational(1) / lam00);
        for (unsigned s = 1; 2 * s + 1 <= m; ++s) {
            Rational lam = lambda_coeff(m, 0, s, 0);
            rhs -= ang(derive(x, 2 * s + 1), (int)(m - 1 - 2 * s)).scaled(lam / lam00);
        }
        return rhs == ang(derive(x), (int)target_height);
    };
    return check_height(2 * n + 1, 2 * n) && check_height(2 * n + 2, 2 * n + 1);
}

} // namespace zassen
