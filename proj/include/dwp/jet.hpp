#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "dwp/errors.hpp"

namespace dwp {

// Second-order forward jet of a scalar quantity with respect to n chart
// coordinates: value, gradient, and (symmetric) Hessian. All field and metric
// evaluation in the engine propagates these exactly; finite differences exist
// only as a cross-check.
struct ScalarJet {
    double value = 0.0;
    Eigen::VectorXd grad;   // size n
    Eigen::MatrixXd hess;   // n x n, symmetric

    ScalarJet() = default;

    explicit ScalarJet(int n)
        : value(0.0), grad(Eigen::VectorXd::Zero(n)), hess(Eigen::MatrixXd::Zero(n, n)) {}

    static ScalarJet constant(int n, double c) {
        ScalarJet j(n);
        j.value = c;
        return j;
    }

    static ScalarJet coordinate(int n, int index, double x) {
        ScalarJet j(n);
        j.value = x;
        j.grad(index) = 1.0;
        return j;
    }

    int dim() const { return static_cast<int>(grad.size()); }
};

inline ScalarJet operator+(const ScalarJet& a, const ScalarJet& b) {
    ScalarJet r(a.dim());
    r.value = a.value + b.value;
    r.grad = a.grad + b.grad;
    r.hess = a.hess + b.hess;
    return r;
}

inline ScalarJet operator-(const ScalarJet& a, const ScalarJet& b) {
    ScalarJet r(a.dim());
    r.value = a.value - b.value;
    r.grad = a.grad - b.grad;
    r.hess = a.hess - b.hess;
    return r;
}

inline ScalarJet operator-(const ScalarJet& a) {
    ScalarJet r(a.dim());
    r.value = -a.value;
    r.grad = -a.grad;
    r.hess = -a.hess;
    return r;
}

inline ScalarJet operator*(const ScalarJet& a, const ScalarJet& b) {
    ScalarJet r(a.dim());
    r.value = a.value * b.value;
    r.grad = a.value * b.grad + b.value * a.grad;
    r.hess = a.value * b.hess + b.value * a.hess
           + a.grad * b.grad.transpose() + b.grad * a.grad.transpose();
    return r;
}

inline ScalarJet operator*(double c, const ScalarJet& a) {
    ScalarJet r(a.dim());
    r.value = c * a.value;
    r.grad = c * a.grad;
    r.hess = c * a.hess;
    return r;
}

inline ScalarJet operator*(const ScalarJet& a, double c) { return c * a; }

// Chain rule for u(f): needs u, u', u'' at f.value.
inline ScalarJet apply_unary(const ScalarJet& f, double u, double du, double d2u) {
    ScalarJet r(f.dim());
    r.value = u;
    r.grad = du * f.grad;
    r.hess = du * f.hess + d2u * (f.grad * f.grad.transpose());
    return r;
}

inline ScalarJet reciprocal(const ScalarJet& a) {
    double v = a.value;
    return apply_unary(a, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

inline ScalarJet operator/(const ScalarJet& a, const ScalarJet& b) {
    return a * reciprocal(b);
}

inline ScalarJet exp(const ScalarJet& a) {
    double e = std::exp(a.value);
    return apply_unary(a, e, e, e);
}

inline ScalarJet sin(const ScalarJet& a) {
    return apply_unary(a, std::sin(a.value), std::cos(a.value), -std::sin(a.value));
}

inline ScalarJet cos(const ScalarJet& a) {
    return apply_unary(a, std::cos(a.value), -std::sin(a.value), -std::cos(a.value));
}

inline ScalarJet sinh(const ScalarJet& a) {
    return apply_unary(a, std::sinh(a.value), std::cosh(a.value), std::sinh(a.value));
}

inline ScalarJet cosh(const ScalarJet& a) {
    return apply_unary(a, std::cosh(a.value), std::sinh(a.value), std::cosh(a.value));
}

inline ScalarJet sqrt(const ScalarJet& a) {
    double s = std::sqrt(a.value);
    return apply_unary(a, s, 0.5 / s, -0.25 / (s * a.value));
}

// x^k with constant exponent. Integer exponents keep negative bases valid.
inline ScalarJet pow(const ScalarJet& a, double k) {
    double v = a.value;
    double u = std::pow(v, k);
    double du = k * std::pow(v, k - 1.0);
    double d2u = k * (k - 1.0) * std::pow(v, k - 2.0);
    return apply_unary(a, u, du, d2u);
}

// General b^e = exp(e log b); requires b > 0.
inline ScalarJet pow(const ScalarJet& a, const ScalarJet& b) {
    double v = a.value;
    ScalarJet log_a = apply_unary(a, std::log(v), 1.0 / v, -1.0 / (v * v));
    return exp(b * log_a);
}

inline ScalarJet square(const ScalarJet& a) { return a * a; }

} // namespace dwp
