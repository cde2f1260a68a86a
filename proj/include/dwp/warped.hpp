#pragma once

#include "dwp/geometry.hpp"

namespace dwp {

struct WarpedFactor {
    int dim = 0;
    MetricField metric;
};

// Doubly warped product M1 x M2 with metric (rho2 o pi2)^2 g1 + (rho1 o pi1)^2 g2
// on the concatenated chart (M1 coords, M2 coords). rho1 lives on the M1 chart,
// rho2 on the M2 chart; both must stay positive wherever they are evaluated.
struct DoublyWarpedProduct {
    WarpedFactor m1, m2;
    ScalarField rho1;
    ScalarField rho2;

    int dim() const { return m1.dim + m2.dim; }

    Point factor_point(int factor, const Point& p) const;

    // Product metric with exact jets propagated through the rho^2 factors.
    // Component evaluation throws NonPositiveWarping if a warping function
    // drops below 1e-12 at the evaluated point.
    MetricField assemble() const;

    // Lift a factor tangent vector to the product chart (zero complement).
    Eigen::VectorXd lift_tangent(int factor, const Eigen::VectorXd& v) const;
};

// Mixed-plane sectional curvature via Olteanu's warped-product formula
//   K(X ^ Z) = (1/rho1)((nabla1_X X) rho1 - X^2 rho1)
//            + (1/rho2)((nabla2_Z Z) rho2 - Z^2 rho2)
// for X in D1, Z in D2, both unit with respect to the product metric.
// Violations are rejected (NotUnit / WrongDistribution), not renormalized.
double mixed_plane_sectional(const DoublyWarpedProduct& dwp, const Point& p,
                             const Eigen::VectorXd& X, const Eigen::VectorXd& Z);

struct MixedScalarIdentity {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

// Warping-Laplacian combination
//   n2 * (Delta_1 rho1) / (rho1 rho2^2) + n1 * (Delta_2 rho2) / (rho2 rho1^2),
// the sum of mixed-pair sectional curvatures of the product metric. Delta_i is
// the component Laplacian of (M_i, g_i); the 1/rho_j^2 factor restates it on
// the leaf M_i x {q}, whose induced metric is rho_j(q)^2 g_i. With rho2 = 1
// this reduces to the familiar singly warped n2 Delta_1 rho1 / rho1.
double warping_laplacian_term(const DoublyWarpedProduct& dwp, const Point& p);

// lhs = warping_laplacian_term, rhs = sum of K(e_i ^ e_j) of the assembled
// metric over mixed pairs of the adapted frame. The two agree identically;
// a residual above tolerance signals an engine bug.
MixedScalarIdentity mixed_scalar_identity_residual(const DoublyWarpedProduct& dwp, const Point& p);

} // namespace dwp
