#pragma once

#include <functional>

#include "dwp/geometry.hpp"

namespace dwp {
namespace fd {

// Central-difference cross-check oracles. Everything here consumes metric and
// field VALUES only, never the exact-jet derivative path it is used to audit.

constexpr double kDefaultStep = 1e-4;
constexpr double kDefaultRelTol = 1e-5;

Eigen::VectorXd gradient(const ScalarField& f, const Point& p, double h = kDefaultStep);
Eigen::MatrixXd hessian(const ScalarField& f, const Point& p, double h = kDefaultStep);

// Christoffel symbols from metric values via central differences of g_ij.
Christoffels christoffel(const MetricField& metric, const Point& p, double h = kDefaultStep);

// Riemann up-components from metric values only: Gamma is computed by the FD
// route at stencil points, then differenced again.
CurvatureTensorAt riemann(const MetricField& metric, const Point& p, double h = kDefaultStep);

// max_ij |a_ij - b_ij| / max(1, |a_ij|, |b_ij|)
double max_rel_error(const Christoffels& a, const Christoffels& b);
double max_rel_error(const CurvatureTensorAt& a, const CurvatureTensorAt& b);

} // namespace fd
} // namespace dwp
