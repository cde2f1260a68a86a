#include "dwp/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "dwp/errors.hpp"

namespace dwp {
namespace detail {

enum class Op {
    Const, Var, Add, Sub, Mul, Div, Neg, Pow,
    Exp, Sin, Cos, Sinh, Cosh, Sqrt
};

struct ExprNode {
    Op op = Op::Const;
    double value = 0.0; // Const
    int index = 0;      // Var
    std::shared_ptr<const ExprNode> a, b;
};

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_const(double v) {
    auto n = std::make_shared<ExprNode>();
    n->op = Op::Const;
    n->value = v;
    return n;
}

NodePtr make_var(int i) {
    auto n = std::make_shared<ExprNode>();
    n->op = Op::Var;
    n->index = i;
    return n;
}

NodePtr make_node(Op op, NodePtr a, NodePtr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

bool is_const(const NodePtr& n, double v) {
    return n->op == Op::Const && n->value == v;
}

// Light algebraic simplification keeps symbolic derivatives from blowing up.
NodePtr simplified(Op op, NodePtr a, NodePtr b = nullptr) {
    switch (op) {
    case Op::Add:
        if (is_const(a, 0.0)) return b;
        if (is_const(b, 0.0)) return a;
        if (a->op == Op::Const && b->op == Op::Const) return make_const(a->value + b->value);
        break;
    case Op::Sub:
        if (is_const(b, 0.0)) return a;
        if (a->op == Op::Const && b->op == Op::Const) return make_const(a->value - b->value);
        break;
    case Op::Mul:
        if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
        if (is_const(a, 1.0)) return b;
        if (is_const(b, 1.0)) return a;
        if (a->op == Op::Const && b->op == Op::Const) return make_const(a->value * b->value);
        break;
    case Op::Div:
        if (is_const(a, 0.0)) return make_const(0.0);
        if (is_const(b, 1.0)) return a;
        break;
    case Op::Neg:
        if (a->op == Op::Const) return make_const(-a->value);
        break;
    default:
        break;
    }
    return make_node(op, std::move(a), std::move(b));
}

double eval_node(const ExprNode* n, const Eigen::VectorXd& x) {
    switch (n->op) {
    case Op::Const: return n->value;
    case Op::Var:   return x(n->index);
    case Op::Add:   return eval_node(n->a.get(), x) + eval_node(n->b.get(), x);
    case Op::Sub:   return eval_node(n->a.get(), x) - eval_node(n->b.get(), x);
    case Op::Mul:   return eval_node(n->a.get(), x) * eval_node(n->b.get(), x);
    case Op::Div:   return eval_node(n->a.get(), x) / eval_node(n->b.get(), x);
    case Op::Neg:   return -eval_node(n->a.get(), x);
    case Op::Pow: {
        double base = eval_node(n->a.get(), x);
        double e = eval_node(n->b.get(), x);
        return std::pow(base, e);
    }
    case Op::Exp:  return std::exp(eval_node(n->a.get(), x));
    case Op::Sin:  return std::sin(eval_node(n->a.get(), x));
    case Op::Cos:  return std::cos(eval_node(n->a.get(), x));
    case Op::Sinh: return std::sinh(eval_node(n->a.get(), x));
    case Op::Cosh: return std::cosh(eval_node(n->a.get(), x));
    case Op::Sqrt: return std::sqrt(eval_node(n->a.get(), x));
    }
    return 0.0;
}

ScalarJet eval_jet_node(const ExprNode* n, const Eigen::VectorXd& x) {
    const int dim = static_cast<int>(x.size());
    switch (n->op) {
    case Op::Const: return ScalarJet::constant(dim, n->value);
    case Op::Var:   return ScalarJet::coordinate(dim, n->index, x(n->index));
    case Op::Add:   return eval_jet_node(n->a.get(), x) + eval_jet_node(n->b.get(), x);
    case Op::Sub:   return eval_jet_node(n->a.get(), x) - eval_jet_node(n->b.get(), x);
    case Op::Mul:   return eval_jet_node(n->a.get(), x) * eval_jet_node(n->b.get(), x);
    case Op::Div:   return eval_jet_node(n->a.get(), x) / eval_jet_node(n->b.get(), x);
    case Op::Neg:   return -eval_jet_node(n->a.get(), x);
    case Op::Pow: {
        ScalarJet base = eval_jet_node(n->a.get(), x);
        if (n->b->op == Op::Const) return pow(base, n->b->value);
        return pow(base, eval_jet_node(n->b.get(), x));
    }
    case Op::Exp:  return exp(eval_jet_node(n->a.get(), x));
    case Op::Sin:  return sin(eval_jet_node(n->a.get(), x));
    case Op::Cos:  return cos(eval_jet_node(n->a.get(), x));
    case Op::Sinh: return sinh(eval_jet_node(n->a.get(), x));
    case Op::Cosh: return cosh(eval_jet_node(n->a.get(), x));
    case Op::Sqrt: return sqrt(eval_jet_node(n->a.get(), x));
    }
    return ScalarJet(dim);
}

NodePtr derivative_node(const NodePtr& n, int k) {
    switch (n->op) {
    case Op::Const: return make_const(0.0);
    case Op::Var:   return make_const(n->index == k ? 1.0 : 0.0);
    case Op::Add:   return simplified(Op::Add, derivative_node(n->a, k), derivative_node(n->b, k));
    case Op::Sub:   return simplified(Op::Sub, derivative_node(n->a, k), derivative_node(n->b, k));
    case Op::Mul:
        return simplified(Op::Add,
                          simplified(Op::Mul, derivative_node(n->a, k), n->b),
                          simplified(Op::Mul, n->a, derivative_node(n->b, k)));
    case Op::Div: {
        // (a/b)' = a'/b - a b'/b^2
        NodePtr da = derivative_node(n->a, k);
        NodePtr db = derivative_node(n->b, k);
        NodePtr t1 = simplified(Op::Div, da, n->b);
        NodePtr t2 = simplified(Op::Div, simplified(Op::Mul, n->a, db),
                                simplified(Op::Mul, n->b, n->b));
        return simplified(Op::Sub, t1, t2);
    }
    case Op::Neg:   return simplified(Op::Neg, derivative_node(n->a, k));
    case Op::Pow: {
        NodePtr da = derivative_node(n->a, k);
        if (n->b->op == Op::Const) {
            // e a^(e-1) a'
            double e = n->b->value;
            NodePtr p = make_node(Op::Pow, n->a, make_const(e - 1.0));
            return simplified(Op::Mul, make_const(e), simplified(Op::Mul, p, da));
        }
        // The closed function set has no log node, so symbolic differentiation
        // of pow is limited to constant exponents. Jet evaluation still handles
        // the general case.
        throw DimensionMismatch("symbolic derivative of pow with non-constant exponent is not supported");
    }
    case Op::Exp:
        return simplified(Op::Mul, make_node(Op::Exp, n->a), derivative_node(n->a, k));
    case Op::Sin:
        return simplified(Op::Mul, make_node(Op::Cos, n->a), derivative_node(n->a, k));
    case Op::Cos:
        return simplified(Op::Neg,
                          simplified(Op::Mul, make_node(Op::Sin, n->a), derivative_node(n->a, k)));
    case Op::Sinh:
        return simplified(Op::Mul, make_node(Op::Cosh, n->a), derivative_node(n->a, k));
    case Op::Cosh:
        return simplified(Op::Mul, make_node(Op::Sinh, n->a), derivative_node(n->a, k));
    case Op::Sqrt: {
        // a' / (2 sqrt(a))
        NodePtr da = derivative_node(n->a, k);
        NodePtr denom = simplified(Op::Mul, make_const(2.0), make_node(Op::Sqrt, n->a));
        return simplified(Op::Div, da, denom);
    }
    }
    return make_const(0.0);
}

NodePtr substitute_node(const NodePtr& n, const std::vector<NodePtr>& repl) {
    switch (n->op) {
    case Op::Const: return n;
    case Op::Var:
        if (n->index < 0 || n->index >= static_cast<int>(repl.size()))
            throw DimensionMismatch("substitution has no replacement for coordinate "
                                    + std::to_string(n->index));
        return repl[n->index];
    default: {
        NodePtr a = n->a ? substitute_node(n->a, repl) : nullptr;
        NodePtr b = n->b ? substitute_node(n->b, repl) : nullptr;
        if (n->op == Op::Add || n->op == Op::Sub || n->op == Op::Mul || n->op == Op::Div)
            return simplified(n->op, a, b);
        return make_node(n->op, a, b);
    }
    }
}

std::string node_to_string(const ExprNode* n) {
    std::ostringstream os;
    switch (n->op) {
    case Op::Const: os << n->value; break;
    case Op::Var:   os << "x" << n->index; break;
    case Op::Add:   os << "(" << node_to_string(n->a.get()) << " + " << node_to_string(n->b.get()) << ")"; break;
    case Op::Sub:   os << "(" << node_to_string(n->a.get()) << " - " << node_to_string(n->b.get()) << ")"; break;
    case Op::Mul:   os << "(" << node_to_string(n->a.get()) << " * " << node_to_string(n->b.get()) << ")"; break;
    case Op::Div:   os << "(" << node_to_string(n->a.get()) << " / " << node_to_string(n->b.get()) << ")"; break;
    case Op::Neg:   os << "(-" << node_to_string(n->a.get()) << ")"; break;
    case Op::Pow:   os << "pow(" << node_to_string(n->a.get()) << ", " << node_to_string(n->b.get()) << ")"; break;
    case Op::Exp:   os << "exp(" << node_to_string(n->a.get()) << ")"; break;
    case Op::Sin:   os << "sin(" << node_to_string(n->a.get()) << ")"; break;
    case Op::Cos:   os << "cos(" << node_to_string(n->a.get()) << ")"; break;
    case Op::Sinh:  os << "sinh(" << node_to_string(n->a.get()) << ")"; break;
    case Op::Cosh:  os << "cosh(" << node_to_string(n->a.get()) << ")"; break;
    case Op::Sqrt:  os << "sqrt(" << node_to_string(n->a.get()) << ")"; break;
    }
    return os.str();
}

} // namespace detail

using detail::ExprNode;
using detail::Op;

Expr::Expr() : node_(detail::make_const(0.0)) {}
Expr::Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

Expr Expr::constant(double value) { return Expr(detail::make_const(value)); }
Expr Expr::var(int index) { return Expr(detail::make_var(index)); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(detail::simplified(Op::Add, a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(detail::simplified(Op::Sub, a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(detail::simplified(Op::Mul, a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(detail::simplified(Op::Div, a.node_, b.node_)); }
Expr Expr::operator-() const { return Expr(detail::simplified(Op::Neg, node_)); }

Expr Expr::pow(const Expr& base, const Expr& exponent) {
    return Expr(detail::make_node(Op::Pow, base.node_, exponent.node_));
}
Expr Expr::pow(const Expr& base, double exponent) {
    return Expr(detail::make_node(Op::Pow, base.node_, detail::make_const(exponent)));
}
Expr Expr::exp(const Expr& a) { return Expr(detail::make_node(Op::Exp, a.node_)); }
Expr Expr::sin(const Expr& a) { return Expr(detail::make_node(Op::Sin, a.node_)); }
Expr Expr::cos(const Expr& a) { return Expr(detail::make_node(Op::Cos, a.node_)); }
Expr Expr::sinh(const Expr& a) { return Expr(detail::make_node(Op::Sinh, a.node_)); }
Expr Expr::cosh(const Expr& a) { return Expr(detail::make_node(Op::Cosh, a.node_)); }
Expr Expr::sqrt(const Expr& a) { return Expr(detail::make_node(Op::Sqrt, a.node_)); }

double Expr::eval(const Eigen::VectorXd& x) const { return detail::eval_node(node_.get(), x); }
ScalarJet Expr::eval_jet(const Eigen::VectorXd& x) const { return detail::eval_jet_node(node_.get(), x); }

Expr Expr::derivative(int index) const { return Expr(detail::derivative_node(node_, index)); }

Expr Expr::substitute(const std::vector<Expr>& replacements) const {
    std::vector<detail::NodePtr> nodes;
    nodes.reserve(replacements.size());
    for (const Expr& e : replacements) nodes.push_back(e.node_);
    return Expr(detail::substitute_node(node_, nodes));
}

bool Expr::is_constant(double* value_out) const {
    if (node_->op != Op::Const) return false;
    if (value_out) *value_out = node_->value;
    return true;
}

std::string Expr::to_string() const { return detail::node_to_string(node_.get()); }

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& coords;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }

    Expr parse_expr() {
        Expr lhs = parse_term();
        for (;;) {
            if (consume('+')) {
                lhs = lhs + parse_term();
            } else if (consume('-')) {
                lhs = lhs - parse_term();
            } else {
                return lhs;
            }
        }
    }

    Expr parse_term() {
        Expr lhs = parse_unary();
        for (;;) {
            if (consume('*')) {
                lhs = lhs * parse_unary();
            } else if (consume('/')) {
                lhs = lhs / parse_unary();
            } else {
                return lhs;
            }
        }
    }

    Expr parse_unary() {
        if (consume('-')) return -parse_unary();
        if (consume('+')) return parse_unary();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (consume('^')) {
            Expr e = parse_unary(); // right-associative
            double v = 0.0;
            if (e.is_constant(&v)) return Expr::pow(base, v);
            return Expr::pow(base, e);
        }
        return base;
    }

    Expr parse_primary() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
        char c = text[pos];

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);

            if (peek() == '(') return parse_call(name, start);

            if (name == "pi") return Expr::constant(M_PI);
            for (std::size_t i = 0; i < coords.size(); ++i)
                if (coords[i] == name) return Expr::var(static_cast<int>(i));
            throw ParseError("unknown identifier '" + name + "'", start);
        }

        if (consume('(')) {
            Expr inner = parse_expr();
            expect(')');
            return inner;
        }

        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    Expr parse_call(const std::string& name, std::size_t name_pos) {
        expect('(');
        Expr arg = parse_expr();
        if (name == "pow") {
            expect(',');
            Expr e = parse_expr();
            expect(')');
            double v = 0.0;
            if (e.is_constant(&v)) return Expr::pow(arg, v);
            return Expr::pow(arg, e);
        }
        expect(')');
        if (name == "exp") return Expr::exp(arg);
        if (name == "sin") return Expr::sin(arg);
        if (name == "cos") return Expr::cos(arg);
        if (name == "sinh") return Expr::sinh(arg);
        if (name == "cosh") return Expr::cosh(arg);
        if (name == "sqrt") return Expr::sqrt(arg);
        throw ParseError("unknown function '" + name + "'", name_pos);
    }

    Expr parse_number() {
        const char* begin = text.c_str() + pos;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("invalid number", pos);
        pos += static_cast<std::size_t>(end - begin);
        return Expr::constant(v);
    }
};

} // namespace

Expr parse_expression(const std::string& text, const std::vector<std::string>& coord_names) {
    Parser p{text, coord_names};
    Expr e = p.parse_expr();
    if (!p.at_end())
        throw ParseError("trailing input", p.pos);
    return e;
}

} // namespace dwp
