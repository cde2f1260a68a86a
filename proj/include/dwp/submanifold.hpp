#pragma once

#include <optional>

#include "dwp/contact.hpp"
#include "dwp/warped.hpp"

namespace dwp {

// Ambient manifold: a plain metric, or a generalized (kappa, mu)-space form
// (whose curvature is assembled from the basis tensors). When both routes are
// available the assembled form takes priority; tests cross-check the two.
class AmbientSpace {
public:
    AmbientSpace() = default;
    explicit AmbientSpace(MetricField metric) : metric_(std::move(metric)) {}
    explicit AmbientSpace(GeneralizedKMSpaceForm form)
        : metric_(form.structure.g), form_(std::move(form)) {}

    static AmbientSpace flat(int dim) { return AmbientSpace(MetricField::euclidean(dim)); }

    int dim() const { return metric_.dim(); }
    const MetricField& metric() const { return metric_; }
    bool has_form() const { return form_.has_value(); }
    const GeneralizedKMSpaceForm& form() const;

    // Curvature endomorphism-slots bundle at a fixed ambient point.
    class CurvatureAt {
    public:
        Eigen::VectorXd apply(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                              const Eigen::VectorXd& Z) const;
        double inner(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                     const Eigen::VectorXd& Z, const Eigen::VectorXd& W) const;
    private:
        friend class AmbientSpace;
        Eigen::MatrixXd g;
        std::optional<CurvatureTensorAt> tensor;
        std::optional<std::pair<ContactPointData, CoefficientValues>> form_data;
    };

    CurvatureAt curvature_at(const Point& q) const;
    // Exact-jet Riemann route regardless of the form (cross-check channel).
    CurvatureAt curvature_via_riemann(const Point& q) const;

    // tau of the subspace spanned by the (orthonormal) columns.
    double subspace_scalar_curvature(const Point& q, const Eigen::MatrixXd& onb_columns) const;

private:
    MetricField metric_;
    std::optional<GeneralizedKMSpaceForm> form_;
};

// Isometric immersion of an n-chart into an ambient space. The domain metric
// must equal the pullback of the ambient metric (checked by
// induced_metric_residual). An optional factor split and warped-product data
// drive the product diagnostics and the inequality reports.
struct IsometricImmersion {
    std::vector<ScalarField> map; // ambient components over the domain chart
    AmbientSpace ambient;
    MetricField domain_metric;
    std::optional<int> split_n1;
    std::optional<DoublyWarpedProduct> warp;

    int domain_dim() const { return domain_metric.dim(); }
    int ambient_dim() const { return ambient.dim(); }

    static IsometricImmersion of_warped(DoublyWarpedProduct dwp, std::vector<ScalarField> map,
                                        AmbientSpace ambient);
};

// Everything the per-point operations need, computed once. The adapted frame
// comes from frame_at (ascending Gram-Schmidt); for a block-diagonal product
// metric it respects the D1/D2 split. The normal frame is the deterministic
// Gram-Schmidt of ambient coordinate vectors against the tangent image.
struct ImmersionData {
    Point p;
    Point q;
    Eigen::MatrixXd dF;                // m x n
    std::vector<Eigen::MatrixXd> d2F;  // per ambient component, n x n
    Eigen::MatrixXd g_dom;             // n x n
    Eigen::MatrixXd g_amb;             // m x m
    Eigen::MatrixXd frame;             // n x n, columns = adapted tangent frame
    Eigen::MatrixXd pushed;            // m x n, dF * frame (ambient-orthonormal)
    Eigen::MatrixXd normal_frame;      // m x (m-n)
    std::vector<std::vector<Eigen::VectorXd>> sigma; // sigma(e_i, e_j), ambient vectors

    double sigma_coeff(int r, int i, int j) const; // <sigma(e_i,e_j), nu_r>
    Eigen::VectorXd sigma_apply(const Eigen::VectorXd& X, const Eigen::VectorXd& Y) const;
    double norm_amb(const Eigen::VectorXd& v) const { return std::sqrt(v.dot(g_amb * v)); }
};

ImmersionData immersion_data(const IsometricImmersion& imm, const Point& p);

// Pullback metric minus domain metric (max-entry pass gate is the caller's).
Eigen::MatrixXd induced_metric_residual(const IsometricImmersion& imm, const Point& p);

struct SecondFundamentalFormAt {
    Point point;
    Eigen::MatrixXd frame;
    Eigen::MatrixXd normal_frame;
    std::vector<std::vector<Eigen::VectorXd>> components; // sigma(e_i, e_j)
};

SecondFundamentalFormAt second_fundamental_form(const IsometricImmersion& imm, const Point& p);

// Normal field along the immersion: ambient components as functions of the
// domain chart (first derivatives are used).
struct NormalField {
    std::vector<ScalarField> comp;
};

struct ShapeAndNormalConnection {
    Eigen::MatrixXd shape;                 // A(i,j) = <A_zeta e_i, e_j>
    std::vector<Eigen::VectorXd> normal_d; // D_{e_i} zeta, ambient vectors
};

// Weingarten split of nabla~_X zeta into -A_zeta X + D_X zeta. zeta must be
// normal at p within 1e-9 (NotNormal otherwise).
ShapeAndNormalConnection shape_and_normal_connection(const IsometricImmersion& imm, const Point& p,
                                                     const NormalField& zeta);

struct MeanCurvatureData {
    Eigen::VectorXd H, H1, H2; // ambient vectors
    double norm_H = 0.0, norm_H1 = 0.0, norm_H2 = 0.0;
    double partial_mismatch = 0.0; // |n1 H1 - n2 H2|
};

MeanCurvatureData mean_curvatures(const IsometricImmersion& imm, const Point& p, int n1);
MeanCurvatureData mean_curvatures(const ImmersionData& data, int n1);

// <R~(X,Y)Z,W> - <R(X,Y)Z,W> - <sigma(X,Z),sigma(Y,W)> + <sigma(X,W),sigma(Y,Z)>
// for domain tangent vectors; zero for exact inputs.
double gauss_equation_residual(const IsometricImmersion& imm, const Point& p,
                               const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                               const Eigen::VectorXd& Z, const Eigen::VectorXd& W);

// max |sigma(e_i, e_t)| over mixed frame pairs of the split.
double mixed_totally_geodesic_residual(const IsometricImmersion& imm, int n1, const Point& p);
double mixed_totally_geodesic_residual(const ImmersionData& data, int n1);

struct CTotallyRealReport {
    double max_eta_tangent = 0.0;    // max |eta(dF e_i)|
    double max_phi_tangential = 0.0; // max |tan(phi dF e_i)|
    double shape_h_residual = 0.0;   // |A_xi - (phi h)^T|_F
    bool pass = false;
};

// Requires a contact ambient (InvalidScenario otherwise).
CTotallyRealReport c_totally_real_report(const IsometricImmersion& imm, const Point& p,
                                         double tol = 1e-8);
CTotallyRealReport c_totally_real_report(const IsometricImmersion& imm, const ImmersionData& data,
                                         double tol = 1e-8);

// Frame compression of an ambient endomorphism onto the tangent space:
// out(i,j) = g~(T u_i, u_j).
Eigen::MatrixXd tangential_compression(const ImmersionData& data, const Eigen::MatrixXd& T_ambient);
// Shape operator of the ambient field xi from sigma: out(i,j) = g~(sigma_ij, xi).
Eigen::MatrixXd shape_operator_from_sigma(const ImmersionData& data, const Eigen::VectorXd& xi);

} // namespace dwp
