#include "zassen/expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace zassen {

struct ClosedExpr::Node {
    enum class Kind { constant, pi_const, variable, add, sub, mul, div, pow, sin, cos, exp };
    Kind kind;
    Rational value;     // constant
    long long expo = 0; // pow
    std::shared_ptr<const Node> a, b;
};

using Node = ClosedExpr::Node;
using Kind = Node::Kind;

struct ExprOps {
    static ClosedExpr wrap(std::shared_ptr<const Node> n) { return ClosedExpr(std::move(n)); }
    static const Node *get(const ClosedExpr &e) { return e.node_.get(); }
    static std::shared_ptr<const Node> share(const ClosedExpr &e) { return e.node_; }
};

namespace {

const Rational *as_const(const std::shared_ptr<const Node> &n)
{
    return n->kind == Kind::constant ? &n->value : nullptr;
}

std::shared_ptr<Node> make(Kind k)
{
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
}

} // namespace

ClosedExpr ClosedExpr::constant(const Rational &c)
{
    auto n = make(Kind::constant);
    n->value = c;
    return ExprOps::wrap(n);
}

ClosedExpr ClosedExpr::pi() { return ExprOps::wrap(make(Kind::pi_const)); }
ClosedExpr ClosedExpr::variable() { return ExprOps::wrap(make(Kind::variable)); }

ClosedExpr ClosedExpr::add(const ClosedExpr &a, const ClosedExpr &b)
{
    if (auto ca = as_const(a.node_)) {
        if (auto cb = as_const(b.node_))
            return constant(*ca + *cb);
        if (ca->is_zero())
            return b;
    }
    if (auto cb = as_const(b.node_); cb && cb->is_zero())
        return a;
    auto n = make(Kind::add);
    n->a = a.node_;
    n->b = b.node_;
    return ExprOps::wrap(n);
}

ClosedExpr ClosedExpr::sub(const ClosedExpr &a, const ClosedExpr &b)
{
    if (auto ca = as_const(a.node_))
        if (auto cb = as_const(b.node_))
            return constant(*ca - *cb);
    if (auto cb = as_const(b.node_); cb && cb->is_zero())
        return a;
    auto n = make(Kind::sub);
    n->a = a.node_;
    n->b = b.node_;
    return ExprOps::wrap(n);
}

ClosedExpr ClosedExpr::mul(const ClosedExpr &a, const ClosedExpr &b)
{
    if (auto ca = as_const(a.node_)) {
        if (auto cb = as_const(b.node_))
            return constant(*ca * *cb);
        if (ca->is_zero())
            return constant(Rational(0));
        if (*ca == Rational(1))
            return b;
    }
    if (auto cb = as_const(b.node_)) {
        if (cb->is_zero())
            return constant(Rational(0));
        if (*cb == Rational(1))
            return a;
    }
    auto n = make(Kind::mul);
    n->a = a.node_;
    n->b = b.node_;
    return ExprOps::wrap(n);
}

ClosedExpr ClosedExpr::div(const ClosedExpr &a, const ClosedExpr &b)
{
    if (auto cb = as_const(b.node_)) {
        if (cb->is_zero())
            throw std::domain_error("ClosedExpr: division by constant zero");
        if (auto ca = as_const(a.node_))
            return constant(*ca / *cb);
        if (*cb == Rational(1))
            return a;
    }
    if (auto ca = as_const(a.node_); ca && ca->is_zero())
        return constant(Rational(0));
    auto n = make(Kind::div);
    n->a = a.node_;
    n->b = b.node_;
    return ExprOps::wrap(n);
}

ClosedExpr ClosedExpr::pow(const ClosedExpr &a, long long e)
{
    if (e == 0)
        return constant(Rational(1));
    if (e == 1)
        return a;
    if (auto ca = as_const(a.node_)) {
        if (ca->is_zero() && e < 0)
            throw std::domain_error("ClosedExpr: 0 raised to a negative power");
        Rational r(1);
        Rational base = e > 0 ? *ca : Rational(1) / *ca;
        for (long long j = 0; j < std::llabs(e); ++j)
            r *= base;
        return constant(r);
    }
    auto n = make(Kind::pow);
    n->a = a.node_;
    n->expo = e;
    return ExprOps::wrap(n);
}

ClosedExpr ClosedExpr::sin(const ClosedExpr &a)
{
    auto n = make(Kind::sin);
    n->a = a.node_;
    return ExprOps::wrap(n);
}

ClosedExpr ClosedExpr::cos(const ClosedExpr &a)
{
    auto n = make(Kind::cos);
    n->a = a.node_;
    return ExprOps::wrap(n);
}

ClosedExpr ClosedExpr::exp(const ClosedExpr &a)
{
    auto n = make(Kind::exp);
    n->a = a.node_;
    return ExprOps::wrap(n);
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &msg, size_t at) { throw parse_error(msg, at + 1); }

    void skip_ws()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos]))
            ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    ClosedExpr parse_expr()
    {
        skip_ws();
        bool neg = eat('-');
        ClosedExpr e = parse_term();
        if (neg)
            e = ClosedExpr::mul(ClosedExpr::constant(Rational(-1)), e);
        while (true) {
            if (eat('+'))
                e = ClosedExpr::add(e, parse_term());
            else if (eat('-'))
                e = ClosedExpr::sub(e, parse_term());
            else
                return e;
        }
    }

    ClosedExpr parse_term()
    {
        ClosedExpr e = parse_factor();
        while (true) {
            if (eat('*'))
                e = ClosedExpr::mul(e, parse_factor());
            else if (eat('/'))
                e = ClosedExpr::div(e, parse_factor());
            else
                return e;
        }
    }

    ClosedExpr parse_factor()
    {
        ClosedExpr base = parse_base();
        if (eat('^')) {
            skip_ws();
            size_t at = pos;
            bool neg = eat('-');
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
                ++pos;
            if (pos == start)
                fail("expected integer exponent", at);
            long long e = std::stoll(std::string(s.substr(start, pos - start)));
            return ClosedExpr::pow(base, neg ? -e : e);
        }
        return base;
    }

    ClosedExpr parse_base()
    {
        skip_ws();
        if (pos >= s.size())
            fail("unexpected end of input", pos);
        size_t at = pos;
        char c = s[pos];
        if (std::isdigit((unsigned char)c) || c == '.') {
            size_t start = pos;
            while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '.'))
                ++pos;
            try {
                return ClosedExpr::constant(Rational::parse(s.substr(start, pos - start)));
            } catch (const std::invalid_argument &) {
                fail("malformed number", start);
            }
        }
        if (c == '(') {
            ++pos;
            ClosedExpr e = parse_expr();
            if (!eat(')'))
                fail("expected ')'", pos);
            return e;
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isalnum((unsigned char)s[pos]))
                ++pos;
            std::string name(s.substr(start, pos - start));
            if (name == "x")
                return ClosedExpr::variable();
            if (name == "pi")
                return ClosedExpr::pi();
            if (name == "sin" || name == "cos" || name == "exp") {
                if (!eat('('))
                    fail("expected '(' after '" + name + "'", pos);
                ClosedExpr arg = parse_expr();
                if (!eat(')'))
                    fail("expected ')'", pos);
                if (name == "sin")
                    return ClosedExpr::sin(arg);
                if (name == "cos")
                    return ClosedExpr::cos(arg);
                return ClosedExpr::exp(arg);
            }
            fail("unknown identifier '" + name + "'", start);
        }
        fail(std::string("unexpected character '") + c + "'", at);
    }
};

} // namespace

ClosedExpr ClosedExpr::parse(std::string_view text)
{
    Parser p{text};
    ClosedExpr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input", p.pos);
    return e;
}

// ----------------------------------------------------------- derivative

namespace {

ClosedExpr deriv1(const std::shared_ptr<const Node> &n)
{
    auto child_a = [&] { return ExprOps::wrap(n->a); };
    auto child_b = [&] { return ExprOps::wrap(n->b); };
    switch (n->kind) {
    case Kind::constant:
    case Kind::pi_const:
        return ClosedExpr::constant(Rational(0));
    case Kind::variable:
        return ClosedExpr::constant(Rational(1));
    case Kind::add:
        return ClosedExpr::add(child_a().derivative(1), child_b().derivative(1));
    case Kind::sub:
        return ClosedExpr::sub(child_a().derivative(1), child_b().derivative(1));
    case Kind::mul:
        return ClosedExpr::add(ClosedExpr::mul(child_a().derivative(1), child_b()),
                               ClosedExpr::mul(child_a(), child_b().derivative(1)));
    case Kind::div: {
        ClosedExpr num = ClosedExpr::sub(ClosedExpr::mul(child_a().derivative(1), child_b()),
                                         ClosedExpr::mul(child_a(), child_b().derivative(1)));
        return ClosedExpr::div(num, ClosedExpr::pow(child_b(), 2));
    }
    case Kind::pow:
        return ClosedExpr::mul(ClosedExpr::mul(ClosedExpr::constant(Rational(n->expo)),
                                               ClosedExpr::pow(child_a(), n->expo - 1)),
                               child_a().derivative(1));
    case Kind::sin:
        return ClosedExpr::mul(ClosedExpr::cos(child_a()), child_a().derivative(1));
    case Kind::cos:
        return ClosedExpr::mul(
            ClosedExpr::mul(ClosedExpr::constant(Rational(-1)), ClosedExpr::sin(child_a())),
            child_a().derivative(1));
    case Kind::exp:
        return ClosedExpr::mul(ClosedExpr::exp(child_a()), child_a().derivative(1));
    }
    throw std::logic_error("ClosedExpr: bad node");
}

} // namespace

ClosedExpr ClosedExpr::derivative(unsigned order) const
{
    ClosedExpr e = *this;
    for (unsigned j = 0; j < order; ++j)
        e = deriv1(e.node_);
    return e;
}

namespace {

double eval_node(const Node *n, double x)
{
    switch (n->kind) {
    case Kind::constant: return n->value.to_double();
    case Kind::pi_const: return M_PI;
    case Kind::variable: return x;
    case Kind::add: return eval_node(n->a.get(), x) + eval_node(n->b.get(), x);
    case Kind::sub: return eval_node(n->a.get(), x) - eval_node(n->b.get(), x);
    case Kind::mul: return eval_node(n->a.get(), x) * eval_node(n->b.get(), x);
    case Kind::div: return eval_node(n->a.get(), x) / eval_node(n->b.get(), x);
    case Kind::pow: return std::pow(eval_node(n->a.get(), x), (double)n->expo);
    case Kind::sin: return std::sin(eval_node(n->a.get(), x));
    case Kind::cos: return std::cos(eval_node(n->a.get(), x));
    case Kind::exp: return std::exp(eval_node(n->a.get(), x));
    }
    throw std::logic_error("ClosedExpr: bad node");
}

} // namespace

double ClosedExpr::eval(double x) const { return eval_node(node_.get(), x); }

bool ClosedExpr::is_zero() const
{
    return node_->kind == Kind::constant && node_->value.is_zero();
}

namespace {

int precedence(Kind k)
{
    switch (k) {
    case Kind::add:
    case Kind::sub: return 1;
    case Kind::mul:
    case Kind::div: return 2;
    case Kind::pow: return 3;
    default: return 4;
    }
}

void print(const std::shared_ptr<const Node> &n, std::ostream &out, int parent_prec)
{
    int prec = precedence(n->kind);
    bool parens = prec < parent_prec || (n->kind == Kind::constant && n->value.sign() < 0 && parent_prec > 0);
    if (parens)
        out << "(";
    switch (n->kind) {
    case Kind::constant: out << n->value.str(); break;
    case Kind::pi_const: out << "pi"; break;
    case Kind::variable: out << "x"; break;
    case Kind::add:
        print(n->a, out, prec);
        out << "+";
        print(n->b, out, prec);
        break;
    case Kind::sub:
        print(n->a, out, prec);
        out << "-";
        print(n->b, out, prec + 1);
        break;
    case Kind::mul:
        print(n->a, out, prec);
        out << "*";
        print(n->b, out, prec);
        break;
    case Kind::div:
        print(n->a, out, prec);
        out << "/";
        print(n->b, out, prec + 1);
        break;
    case Kind::pow:
        print(n->a, out, prec + 1);
        out << "^" << n->expo;
        break;
    case Kind::sin:
        out << "sin(";
        print(n->a, out, 0);
        out << ")";
        break;
    case Kind::cos:
        out << "cos(";
        print(n->a, out, 0);
        out << ")";
        break;
    case Kind::exp:
        out << "exp(";
        print(n->a, out, 0);
        out << ")";
        break;
    }
    if (parens)
        out << ")";
}

bool node_eq(const Node *a, const Node *b)
{
    if (a == b)
        return true;
    if (a->kind != b->kind)
        return false;
    if (a->kind == Kind::constant && !(a->value == b->value))
        return false;
    if (a->kind == Kind::pow && a->expo != b->expo)
        return false;
    if ((a->a == nullptr) != (b->a == nullptr) || (a->b == nullptr) != (b->b == nullptr))
        return false;
    if (a->a && !node_eq(a->a.get(), b->a.get()))
        return false;
    if (a->b && !node_eq(a->b.get(), b->b.get()))
        return false;
    return true;
}

} // namespace

std::string ClosedExpr::str() const
{
    std::ostringstream out;
    print(node_, out, 0);
    return out.str();
}

bool ClosedExpr::same_as(const ClosedExpr &o) const { return node_eq(node_.get(), o.node_.get()); }

ClosedExpr expr_derivative(const ClosedExpr &e, unsigned order) { return e.derivative(order); }
ClosedExpr parse_expr(std::string_view text) { return ClosedExpr::parse(text); }

} // namespace zassen
