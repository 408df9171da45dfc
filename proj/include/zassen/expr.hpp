#pragma once

#include "zassen/rational.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace zassen {

/// Parse failure with a 1-based column, e.g. "unknown identifier 'q' at column 5".
struct parse_error : std::invalid_argument {
    parse_error(const std::string &msg, size_t column)
        : std::invalid_argument(msg + " at column " + std::to_string(column)), column(column)
    {
    }
    size_t column;
};

/// Closed-form expression in one variable over {constants, x, pi, +, -, *, /, ^, sin, cos, exp}.
/// Immutable tree; smart constructors fold constants and drop trivial nodes so
/// that exhausted derivatives collapse to the literal 0.
class ClosedExpr {
  public:
    struct Node; // tree node, defined in the implementation

    ClosedExpr() : ClosedExpr(constant(Rational(0))) {}

    static ClosedExpr constant(const Rational &c);
    static ClosedExpr pi();
    static ClosedExpr variable();
    static ClosedExpr add(const ClosedExpr &a, const ClosedExpr &b);
    static ClosedExpr sub(const ClosedExpr &a, const ClosedExpr &b);
    static ClosedExpr mul(const ClosedExpr &a, const ClosedExpr &b);
    static ClosedExpr div(const ClosedExpr &a, const ClosedExpr &b);
    static ClosedExpr pow(const ClosedExpr &a, long long e);
    static ClosedExpr sin(const ClosedExpr &a);
    static ClosedExpr cos(const ClosedExpr &a);
    static ClosedExpr exp(const ClosedExpr &a);

    /// Grammar:
    ///   expr   := ('-')? term (('+'|'-') term)*
    ///   term   := factor (('*'|'/') factor)*
    ///   factor := base ('^' integer)?
    ///   base   := number | 'x' | 'pi' | func '(' expr ')' | '(' expr ')'
    ///   func   := sin | cos | exp
    static ClosedExpr parse(std::string_view text);

    /// Exact symbolic derivative, `order` times; order 0 is the identity.
    ClosedExpr derivative(unsigned order = 1) const;

    double eval(double x) const;

    bool is_zero() const;
    std::string str() const;
    bool same_as(const ClosedExpr &o) const; // structural equality

  private:
    friend struct ExprOps;
    explicit ClosedExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

ClosedExpr expr_derivative(const ClosedExpr &e, unsigned order);
ClosedExpr parse_expr(std::string_view text);

} // namespace zassen
