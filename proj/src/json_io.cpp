#include "zassen/json_io.hpp"

namespace zassen {

json coeff_table_to_json(const CoeffTable &t)
{
    json entries = json::array();
    for (const auto &[key, value] : t.entries)
        entries.push_back({{"k", key.k}, {"l", key.l}, {"n", key.n}, {"i", key.i}, {"value", value.str()}});
    return json{{"kind", to_string(t.kind)}, {"entries", entries}};
}

CoeffTable coeff_table_from_json(const json &j)
{
    CoeffTable t;
    t.kind = coeff_kind_from_string(j.at("kind").get<std::string>());
    for (const auto &e : j.at("entries")) {
        CoeffKey key{e.at("k").get<unsigned>(), e.at("l").get<unsigned>(), e.at("n").get<unsigned>(),
                     e.at("i").get<unsigned>()};
        t.entries[key] = Rational::parse(e.at("value").get<std::string>());
    }
    return t;
}

json fterm_to_json(const FTerm &f)
{
    json out = json::array();
    for (const auto &[k, gp] : f.components()) {
        for (const auto &[g, poly] : gp) {
            Rational content = poly.content();
            DiffPoly body = poly.scaled(Rational(1) / content);
            json terms = json::array();
            for (const auto &[mono, c] : body.terms()) {
                json factors = json::array();
                for (const auto &factor : mono.factors())
                    factors.push_back({{"sym", factor.sym}, {"d", factor.deriv}, {"e", factor.exp}});
                terms.push_back({{"coeff", c.str()}, {"mono", factors}});
            }
            out.push_back({{"k", k},
                           {"scalar", {{"q", content.str()},
                                       {"i", g.i_pow},
                                       {"t", g.t_pow},
                                       {"eps", g.eps_pow}}},
                           {"poly", terms}});
        }
    }
    return out;
}

FTerm fterm_from_json(const json &j)
{
    FTerm f;
    for (const auto &comp : j) {
        int k = comp.at("k").get<int>();
        const json &s = comp.at("scalar");
        ScaledScalar scalar(Rational::parse(s.at("q").get<std::string>()), s.at("i").get<int>(),
                            s.at("t").get<int>(), s.at("eps").get<int>());
        DiffPoly poly;
        for (const auto &term : comp.at("poly")) {
            Monomial m;
            for (const auto &factor : term.at("mono"))
                m = m * Monomial::var(factor.at("sym").get<std::string>(), factor.at("d").get<unsigned>(),
                                      factor.at("e").get<unsigned>());
            poly += DiffPoly::term(Rational::parse(term.at("coeff").get<std::string>()), m);
        }
        f += ang(poly, k, scalar);
    }
    return f;
}

json splitting_to_json(const Splitting &sp)
{
    json exps = json::array();
    for (size_t k = 0; k < sp.exponents.size(); ++k) {
        const FTerm &w = sp.exponents[k];
        json heights = json::array();
        for (const auto &[h, gp] : w.components())
            heights.push_back(h);
        json e{{"index", k},
               {"heights", heights},
               {"sigma_order", w.is_zero() ? "0" : sp.exponent_order(k).str()},
               {"formula", w.str()},
               {"terms", fterm_to_json(w)}};
        if (k >= 2)
            e["lanczos_iterations"] = sp.lanczos_iterations(k);
        exps.push_back(std::move(e));
    }
    json orders = json::array();
    for (unsigned d : sp.derivative_orders())
        orders.push_back(d);
    return json{{"n", sp.n},
                {"sigma", sp.sigma.str()},
                {"order_target", sp.order_target.str()},
                {"exponents", exps},
                {"derivative_orders", orders}};
}

Splitting splitting_from_json(const json &j)
{
    Splitting sp;
    sp.n = j.at("n").get<unsigned>();
    sp.sigma = Rational::parse(j.at("sigma").get<std::string>());
    sp.order_target = Rational::parse(j.at("order_target").get<std::string>());
    for (const auto &e : j.at("exponents"))
        sp.exponents.push_back(fterm_from_json(e.at("terms")));
    return sp;
}

json magnus_to_json(const std::vector<MagnusTerm> &terms)
{
    json out = json::array();
    for (const auto &t : terms) {
        json bounds = json::array();
        for (int b : t.upper_bounds)
            bounds.push_back(b == 0 ? "t" : "xi_" + std::to_string(b));
        out.push_back({{"depth", t.depth},
                       {"coefficient", t.coefficient.str()},
                       {"upper_bounds", bounds},
                       {"integrand", fterm_to_json(t.integrand)},
                       {"rendered", t.str()}});
    }
    return out;
}

} // namespace zassen
