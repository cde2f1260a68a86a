#pragma once

#include <vector>

#include "dwp/fields.hpp"

namespace dwp {

// gamma[k](i,j) = Gamma^k_ij
using Christoffels = std::vector<Eigen::MatrixXd>;

struct ChristoffelJet {
    Christoffels gamma;
    // dgamma[m][k](i,j) = d_m Gamma^k_ij
    std::vector<Christoffels> dgamma;
};

// Riemann curvature at a point. Sign convention:
//   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
// validated by the round-sphere K = +1 checks. Storage:
//   up(i,j,k,l)      : coefficient of d_l in R(d_i, d_j) d_k
//   lowered(i,j,k,l) : g(R(d_i, d_j) d_l, d_k), so that for an orthonormal
//                      pair K(e_i ^ e_j) = lowered(i,j,i,j).
class CurvatureTensorAt {
public:
    CurvatureTensorAt() = default;
    CurvatureTensorAt(int dim, Eigen::MatrixXd metric);

    int dim() const { return n_; }
    double& up(int i, int j, int k, int l) { return up_[idx(i, j, k, l)]; }
    double up(int i, int j, int k, int l) const { return up_[idx(i, j, k, l)]; }
    double lowered(int i, int j, int k, int l) const;

    // R(X,Y)Z in chart coordinates.
    Eigen::VectorXd apply(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                          const Eigen::VectorXd& Z) const;
    // g(R(X,Y)Z, W)
    double inner(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                 const Eigen::VectorXd& Z, const Eigen::VectorXd& W) const;

    const Eigen::MatrixXd& metric() const { return g_; }

private:
    int idx(int i, int j, int k, int l) const { return ((i * n_ + j) * n_ + k) * n_ + l; }
    int n_ = 0;
    Eigen::MatrixXd g_;
    std::vector<double> up_;
};

// Symmetric-factorization SPD check; throws MetricDegenerate when a pivot
// falls below 1e-12. Returns the inverse.
Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& g);

// Gram-Schmidt over the coordinate basis in ascending index order; columns of
// the result are the frame vectors. Deterministic for fixed inputs.
Eigen::MatrixXd frame_at(const MetricField& metric, const Point& p);

// Metric-orthonormalization of arbitrary spanning vectors (columns). Throws
// DegeneratePlane when the input is rank-deficient.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& g, const std::vector<Eigen::VectorXd>& basis);

Christoffels christoffel(const MetricField& metric, const Point& p);
ChristoffelJet christoffel_jet(const MetricField& metric, const Point& p);
Christoffels christoffel_from_jet(const MetricJet& mj);

CurvatureTensorAt riemann(const MetricField& metric, const Point& p);

double sectional_curvature(const MetricField& metric, const Point& p,
                           const Eigen::VectorXd& X, const Eigen::VectorXd& Y);

// tau(P) = sum_{i<j} K(e_i ^ e_j) over an internally orthonormalized basis.
// A 0- or 1-dimensional subspace has an empty pair sum and yields 0.
double scalar_curvature_subspace(const MetricField& metric, const Point& p,
                                 const std::vector<Eigen::VectorXd>& basis);

// Hessian form H^psi(X, Y) = X^i Y^j (d_i d_j psi - Gamma^k_ij d_k psi).
double hessian(const ScalarField& psi, const MetricField& metric, const Point& p,
               const Eigen::VectorXd& X, const Eigen::VectorXd& Y);

// Laplacian in the sign convention Delta psi = -trace_g Hess psi
// (positive on eigenfunctions of compact manifolds). All inequality code
// uses this sign exclusively.
double laplacian(const ScalarField& psi, const MetricField& metric, const Point& p);

} // namespace dwp
