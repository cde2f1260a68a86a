#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dwp/jet.hpp"

namespace dwp {

namespace detail {
struct ExprNode;
}

// Immutable arithmetic expression over chart coordinates. Supports exact
// second-order jet evaluation, symbolic differentiation (used to build
// pullback metrics, whose jets need third derivatives of the map), and
// substitution of expressions for coordinates.
//
// The function set is deliberately closed: +, -, *, /, pow, exp, sin, cos,
// sinh, cosh, sqrt, numeric constants, and coordinates. Expressions are
// value types sharing immutable nodes; evaluation is pure and thread-safe.
class Expr {
public:
    Expr();          // the constant 0

    static Expr constant(double value);
    static Expr var(int index);

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    Expr operator-() const;

    static Expr pow(const Expr& base, const Expr& exponent);
    static Expr pow(const Expr& base, double exponent);
    static Expr exp(const Expr& a);
    static Expr sin(const Expr& a);
    static Expr cos(const Expr& a);
    static Expr sinh(const Expr& a);
    static Expr cosh(const Expr& a);
    static Expr sqrt(const Expr& a);

    double eval(const Eigen::VectorXd& x) const;
    ScalarJet eval_jet(const Eigen::VectorXd& x) const;

    // Symbolic partial derivative with respect to coordinate `index`.
    Expr derivative(int index) const;

    // Replace var(i) with replacements[i]; the result lives on the
    // replacements' chart.
    Expr substitute(const std::vector<Expr>& replacements) const;

    bool is_constant(double* value_out = nullptr) const;

    std::string to_string() const;

private:
    explicit Expr(std::shared_ptr<const detail::ExprNode> node);
    std::shared_ptr<const detail::ExprNode> node_;
};

// Parse `text` over the named coordinates (var indices follow list order).
// Recognizes numeric literals, "pi", the function set above, '^' and
// pow(a, b), and unary minus. Throws ParseError with a byte position.
Expr parse_expression(const std::string& text, const std::vector<std::string>& coord_names);

} // namespace dwp
