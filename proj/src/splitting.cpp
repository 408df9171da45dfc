#include "zassen/splitting.hpp"

#include <sstream>

namespace zassen {

namespace {

void require_shape(const FTerm &f, const char *which)
{
    if (f.is_zero())
        throw std::domain_error(std::string("zassenhaus: ") + which + " is zero");
    if (f.components().size() != 1 || f.components().begin()->second.size() != 1)
        throw std::domain_error(std::string("zassenhaus: ") + which + " must be a single term");
    int k = f.components().begin()->first;
    if (k % 2 != 0)
        throw std::domain_error(std::string("zassenhaus: ") + which + " must have even height");
    const Grading &g = f.components().begin()->second.begin()->first;
    if (g.t_pow != 1)
        throw std::domain_error(std::string("zassenhaus: ") + which + " must carry t^1");
}

} // namespace

unsigned Splitting::lanczos_iterations(size_t k) const
{
    if (k < 2)
        throw std::out_of_range("lanczos_iterations: defined for k >= 2");
    Rational denom = Rational(2 * (long long)k - 1) * sigma - Rational(1);
    if (!(denom > Rational(0)))
        throw std::domain_error("lanczos_iterations: (2k-1) sigma - 1 must be positive");
    BigInt it = (order_target / denom).ceil();
    return (unsigned)it.convert_to<unsigned long>();
}

std::set<unsigned> Splitting::derivative_orders() const
{
    std::set<unsigned> orders;
    for (const auto &w : exponents)
        for (const auto &[k, gp] : w.components())
            for (const auto &[g, poly] : gp)
                for (const auto &[mono, c] : poly.terms())
                    for (const auto &factor : mono.factors())
                        orders.insert(factor.deriv);
    return orders;
}

Splitting zassenhaus(const FTerm &a, const FTerm &b, unsigned n, const Rational &sigma)
{
    if (!(sigma > Rational(0)))
        throw std::domain_error("zassenhaus: sigma must be positive");
    require_shape(a, "a");
    require_shape(b, "b");

    const unsigned trunc = 2 * n + 1;
    Splitting sp;
    sp.n = n;
    sp.sigma = sigma;
    sp.order_target = Rational(2 * (long long)n + 3) * sigma - Rational(1);

    ExpSeries cur = ExpSeries::from_fterm(a + b, trunc);

    sp.exponents.push_back(a);
    cur = sbch_conjugate(a, cur);
    if (n == 0) {
        sp.exponents.push_back(cur.to_fterm()); // the whole remainder at truncation 1
        return sp;
    }

    if (!(cur.at(1) == b))
        throw std::logic_error("zassenhaus: degree-1 remainder after peeling a should be b");
    sp.exponents.push_back(b);
    cur = sbch_conjugate(b, cur);

    for (unsigned k = 2; k + 1 <= n + 1; ++k) {
        if (cur.min_degree() < 2 * k - 1)
            throw std::logic_error("zassenhaus: unexpected low-degree remainder");
        FTerm w = cur.at(2 * k - 1);
        sp.exponents.push_back(w);
        cur = sbch_conjugate(w, cur);
    }
    // Final exponent: everything that remains (pure degree 2n+1).
    if (cur.min_degree() < 2 * n + 1)
        throw std::logic_error("zassenhaus: final remainder has low-degree terms");
    sp.exponents.push_back(cur.to_fterm());
    return sp;
}

long long cost(unsigned n, const Rational &sigma)
{
    if (n < 1)
        throw std::domain_error("cost: n >= 1 required");
    if (!(sigma > Rational(0)))
        throw std::domain_error("cost: sigma must be positive");
    Rational target = Rational(2 * (long long)n + 3) * sigma - Rational(1);
    auto ceil_ratio = [&](unsigned k) -> long long {
        Rational denom = Rational(2 * (long long)k - 1) * sigma - Rational(1);
        if (!(denom > Rational(0)))
            throw std::domain_error("cost: (2k-1) sigma - 1 must be positive");
        return (target / denom).ceil().convert_to<long long>();
    };
    long long c = 4;
    for (unsigned k = 2; k <= n; ++k)
        c += 8LL * (k - 1) * ceil_ratio(k);
    c += 4LL * n * ceil_ratio(n + 1); // the (2n+1) sigma - 1 middle exponent
    return c;
}

namespace {

FTerm magnus_a(const std::string &label)
{
    FTerm kin = ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 1, 1));
    FTerm pot = ang(DiffPoly::var("V(" + label + ")"), 0, ScaledScalar(Rational(-1), 1, 1, -1));
    return kin + pot;
}

} // namespace

std::string MagnusTerm::str() const
{
    std::ostringstream out;
    if (!(coefficient == Rational(1)))
        out << "(" << coefficient.str() << ") ";
    for (unsigned j = 0; j < depth; ++j) {
        out << "int_0^" << (upper_bounds[j] == 0 ? "t" : "xi_" + std::to_string(upper_bounds[j]));
        out << " ";
    }
    out << "[ " << integrand.str() << " ] ";
    for (unsigned j = depth; j > 0; --j)
        out << "d" << labels[j - 1] << (j > 1 ? " " : "");
    return out.str();
}

std::vector<MagnusTerm> magnus_symbolic(unsigned depth)
{
    if (depth < 1 || depth > 3)
        throw std::domain_error("magnus_symbolic: depth 1..3 supported");
    std::vector<MagnusTerm> terms;

    FTerm a1 = magnus_a("xi_1");
    FTerm a2 = magnus_a("xi_2");
    FTerm a3 = magnus_a("xi_3");

    {
        MagnusTerm t;
        t.depth = 1;
        t.coefficient = Rational(1);
        t.upper_bounds = {0};
        t.labels = {"xi_1"};
        t.integrand = a1;
        terms.push_back(std::move(t));
    }
    if (depth >= 2) {
        MagnusTerm t;
        t.depth = 2;
        t.coefficient = Rational(-1, 2);
        t.upper_bounds = {0, 1};
        t.labels = {"xi_1", "xi_2"};
        t.integrand = commutator(a2, a1);
        terms.push_back(std::move(t));
    }
    if (depth >= 3) {
        MagnusTerm t;
        t.depth = 3;
        t.coefficient = Rational(1, 12);
        t.upper_bounds = {0, 1, 1};
        t.labels = {"xi_1", "xi_2", "xi_3"};
        t.integrand = commutator(a2, commutator(a3, a1));
        terms.push_back(std::move(t));

        MagnusTerm u;
        u.depth = 3;
        u.coefficient = Rational(1, 4);
        u.upper_bounds = {0, 1, 2};
        u.labels = {"xi_1", "xi_2", "xi_3"};
        u.integrand = commutator(commutator(a3, a2), a1);
        terms.push_back(std::move(u));
    }
    return terms;
}

} // namespace zassen
