#include "zassen/diffpoly.hpp"

#include <algorithm>
#include <sstream>

namespace zassen {

Monomial Monomial::var(const std::string &sym, unsigned deriv, unsigned exp)
{
    Monomial m;
    if (sym.empty())
        throw std::invalid_argument("Monomial: empty symbol name");
    if (sym == "1")
        return m; // ring unit
    if (exp == 0)
        return m;
    m.factors_.push_back(Factor{sym, deriv, exp});
    return m;
}

Monomial Monomial::operator*(const Monomial &o) const
{
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = o.factors_.begin(), be = o.factors_.end();
    while (a != ae && b != be) {
        if (std::tie(a->sym, a->deriv) < std::tie(b->sym, b->deriv))
            r.factors_.push_back(*a++);
        else if (std::tie(b->sym, b->deriv) < std::tie(a->sym, a->deriv))
            r.factors_.push_back(*b++);
        else {
            r.factors_.push_back(Factor{a->sym, a->deriv, a->exp + b->exp});
            ++a, ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, ae);
    r.factors_.insert(r.factors_.end(), b, be);
    return r;
}

unsigned Monomial::total_degree() const
{
    unsigned d = 0;
    for (const auto &f : factors_)
        d += f.exp;
    return d;
}

std::string Monomial::str() const
{
    if (factors_.empty())
        return "1";
    std::string s;
    for (const auto &f : factors_) {
        if (!s.empty())
            s += " ";
        if (f.deriv == 0)
            s += f.sym;
        else if (f.deriv == 1)
            s += "D[" + f.sym + "]";
        else
            s += "D^" + std::to_string(f.deriv) + "[" + f.sym + "]";
        if (f.exp > 1)
            s += "^" + std::to_string(f.exp);
    }
    return s;
}

DiffPoly DiffPoly::constant(const Rational &c)
{
    DiffPoly p;
    p.add_term(Monomial::unit(), c);
    return p;
}

DiffPoly DiffPoly::var(const std::string &sym, unsigned deriv, unsigned exp)
{
    DiffPoly p;
    p.add_term(Monomial::var(sym, deriv, exp), Rational(1));
    return p;
}

DiffPoly DiffPoly::term(const Rational &c, const Monomial &m)
{
    DiffPoly p;
    p.add_term(m, c);
    return p;
}

void DiffPoly::add_term(const Monomial &m, const Rational &c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

DiffPoly &DiffPoly::operator+=(const DiffPoly &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

DiffPoly &DiffPoly::operator-=(const DiffPoly &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

DiffPoly DiffPoly::operator-() const
{
    DiffPoly r;
    for (const auto &[m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly &o) const
{
    DiffPoly r;
    for (const auto &[ma, ca] : terms_)
        for (const auto &[mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

DiffPoly DiffPoly::scaled(const Rational &c) const
{
    DiffPoly r;
    if (c.is_zero())
        return r;
    for (const auto &[m, v] : terms_)
        r.terms_.emplace(m, v * c);
    return r;
}

Rational DiffPoly::content() const
{
    if (terms_.empty())
        return Rational(1);
    // gcd of numerators over lcm of denominators, signed by the leading term
    BigInt g = 0, l = 1;
    for (const auto &[m, c] : terms_) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c.num()));
        l = boost::multiprecision::lcm(l, c.den());
    }
    Rational r(g, l);
    if (terms_.begin()->second.sign() < 0)
        r = -r;
    return r;
}

std::string DiffPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0)
                a = -a;
        }
        if (m.is_unit())
            out << a.str();
        else {
            if (!(a == Rational(1)))
                out << (a.is_integer() ? a.str() : "(" + a.str() + ")") << " ";
            out << m.str();
        }
    }
    return out.str();
}

DiffPoly derive(const DiffPoly &p)
{
    DiffPoly r;
    for (const auto &[m, c] : p.terms()) {
        const auto &fs = m.factors();
        for (size_t j = 0; j < fs.size(); ++j) {
            // d/dx of f^e contributes e f^{e-1} f' times the other factors
            Monomial rest;
            for (size_t t = 0; t < fs.size(); ++t) {
                if (t == j)
                    continue;
                rest = rest * Monomial::var(fs[t].sym, fs[t].deriv, fs[t].exp);
            }
            Monomial bumped = Monomial::var(fs[j].sym, fs[j].deriv + 1, 1);
            if (fs[j].exp > 1)
                bumped = bumped * Monomial::var(fs[j].sym, fs[j].deriv, fs[j].exp - 1);
            r += DiffPoly::term(c * Rational(fs[j].exp), rest * bumped);
        }
    }
    return r;
}

DiffPoly derive(const DiffPoly &p, unsigned order)
{
    DiffPoly r = p;
    for (unsigned j = 0; j < order; ++j)
        r = derive(r);
    return r;
}

} // namespace zassen
