#include "zassen/series.hpp"

namespace zassen {

ExpSeries ExpSeries::identity(unsigned truncation)
{
    ExpSeries s(truncation);
    s.insert(0, ang(DiffPoly::one(), 0));
    return s;
}

ExpSeries ExpSeries::from_fterm(const FTerm &a, unsigned truncation)
{
    ExpSeries s(truncation);
    for (int d : a.t_degrees()) {
        if (d < 0)
            throw std::domain_error("ExpSeries: negative t power");
        if ((unsigned)d <= truncation)
            s.insert((unsigned)d, a.t_component(d));
    }
    return s;
}

FTerm ExpSeries::at(unsigned degree) const
{
    auto it = terms_.find(degree);
    return it == terms_.end() ? FTerm::zero() : it->second;
}

unsigned ExpSeries::min_degree() const
{
    return terms_.empty() ? trunc_ + 1 : terms_.begin()->first;
}

void ExpSeries::insert(unsigned degree, const FTerm &f)
{
    if (degree > trunc_ || f.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(degree, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ExpSeries &ExpSeries::operator+=(const ExpSeries &o)
{
    for (const auto &[d, f] : o.terms_)
        insert(d, f);
    return *this;
}

ExpSeries &ExpSeries::operator-=(const ExpSeries &o)
{
    for (const auto &[d, f] : o.terms_)
        insert(d, -f);
    return *this;
}

ExpSeries ExpSeries::operator*(const ExpSeries &o) const
{
    ExpSeries r(std::min(trunc_, o.trunc_));
    for (const auto &[da, fa] : terms_) {
        for (const auto &[db, fb] : o.terms_) {
            if (da + db > r.trunc_)
                continue;
            r.insert(da + db, assoc_mul(fa, fb));
        }
    }
    return r;
}

ExpSeries ExpSeries::scaled(const Rational &c) const
{
    ExpSeries r(trunc_);
    if (c.is_zero())
        return r;
    for (const auto &[d, f] : terms_)
        r.terms_.emplace(d, f.scaled(c));
    return r;
}

FTerm ExpSeries::to_fterm() const
{
    FTerm sum;
    for (const auto &[d, f] : terms_)
        sum += f;
    return sum;
}

ExpSeries exp_series(const ExpSeries &a)
{
    if (!a.at(0).is_zero())
        throw std::domain_error("exp_series: argument has a degree-0 term");
    ExpSeries r = ExpSeries::identity(a.truncation());
    ExpSeries inc = r;
    for (unsigned m = 1; m <= a.truncation(); ++m) {
        inc = inc * a;
        if (inc.is_zero())
            break;
        inc = inc.scaled(Rational(1, (long long)m));
        r += inc;
    }
    return r;
}

ExpSeries log_series(const ExpSeries &e)
{
    if (!(e.at(0) == ang(DiffPoly::one(), 0)))
        throw std::domain_error("log_series: degree-0 term is not the identity");
    ExpSeries rem = e - ExpSeries::identity(e.truncation());
    ExpSeries acc(e.truncation());
    ExpSeries pw = ExpSeries::identity(e.truncation());
    for (unsigned m = 1; m <= e.truncation(); ++m) {
        pw = pw * rem;
        if (pw.is_zero())
            break;
        Rational c(m % 2 == 1 ? 1 : -1, (long long)m);
        acc += pw.scaled(c);
    }
    return acc;
}

FTerm sbch(const FTerm &a, const FTerm &b, unsigned n_max)
{
    for (const FTerm *f : {&a, &b})
        for (int d : f->t_degrees())
            if (d != 1)
                throw std::domain_error("sbch: inputs must carry t^1 on all components");
    ExpSeries half_a = ExpSeries::from_fterm(a.scaled(Rational(1, 2)), n_max);
    ExpSeries eb = exp_series(ExpSeries::from_fterm(b, n_max));
    ExpSeries ea = exp_series(half_a);
    return log_series(ea * eb * ea).to_fterm();
}

ExpSeries sbch_conjugate(const FTerm &w, const ExpSeries &x)
{
    ExpSeries half_w = ExpSeries::from_fterm(w.scaled(Rational(-1, 2)), x.truncation());
    ExpSeries ew = exp_series(half_w);
    return log_series(ew * exp_series(x) * ew);
}

} // namespace zassen
