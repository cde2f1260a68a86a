#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dwp/geometry.hpp"

namespace dwp {

// (1,1)-tensor field: comp[i * dim + j] = T^i_j, so T(d_j) = T^i_j d_i.
struct TensorField11 {
    int dim = 0;
    std::vector<ScalarField> comp;

    static TensorField11 zero(int dim);
    const ScalarField& at(int i, int j) const { return comp[i * dim + j]; }
    ScalarField& at(int i, int j) { return comp[i * dim + j]; }
    Eigen::MatrixXd value(const Point& p) const;
};

struct VectorFieldOnChart {
    int dim = 0;
    std::vector<ScalarField> comp;
    Eigen::VectorXd value(const Point& p) const;
};

struct OneFormField {
    int dim = 0;
    std::vector<ScalarField> comp;
    Eigen::VectorXd value(const Point& p) const;
};

// Pointwise snapshot of an almost contact metric structure; the synthetic
// algebraic tests construct these directly without any underlying fields.
struct ContactPointData {
    Eigen::MatrixXd g;
    Eigen::MatrixXd phi;
    Eigen::MatrixXd h;
    Eigen::VectorXd xi;
    Eigen::VectorXd eta;

    int dim() const { return static_cast<int>(xi.size()); }
    double ip(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const { return a.dot(g * b); }
};

// Almost contact metric structure (phi, xi, eta, g) on an odd-dimensional
// chart, all with exact jets. h may be supplied analytically; when it is,
// h_at uses it (and tests cross-check it against the Lie-derivative route).
struct AlmostContactStructure {
    int dim = 0; // 2m+1
    TensorField11 phi;
    VectorFieldOnChart xi;
    OneFormField eta;
    MetricField g;
    std::optional<TensorField11> analytic_h;

    ContactPointData at(const Point& p) const;
};

struct AxiomReport {
    double phi_square = 0.0;     // phi^2 + I - xi (x) eta
    double eta_xi = 0.0;         // eta(xi) - 1
    double phi_xi = 0.0;         // phi xi
    double eta_phi = 0.0;        // eta o phi
    double metric_compat = 0.0;  // g(phi X, phi Y) - g(X, Y) + eta(X) eta(Y)
    double metric_eta = 0.0;     // g(X, xi) - eta(X)
    double max_residual = 0.0;
    bool pass = false;
};

AxiomReport verify_almost_contact(const AlmostContactStructure& s, const Point& p,
                                  double tol = 1e-10);
AxiomReport verify_almost_contact(const ContactPointData& d, double tol = 1e-10);

// h = (1/2) L_xi phi in coordinates:
// (L_xi phi)^i_j = xi^k d_k phi^i_j - phi^k_j d_k xi^i + phi^i_k d_j xi^k.
Eigen::MatrixXd lie_derivative_h(const AlmostContactStructure& s, const Point& p);

// Analytic h when present, Lie-derivative h otherwise.
Eigen::MatrixXd h_at(const AlmostContactStructure& s, const Point& p);

// d eta(X, Y) - Phi(X, Y) on coordinate pairs, with the convention
// d eta(X,Y) = (X eta(Y) - Y eta(X) - eta([X,Y])) / 2 and Phi(X,Y) = g(X, phi Y).
Eigen::MatrixXd contact_form_residual(const AlmostContactStructure& s, const Point& p);

// Matrix of nabla xi: column a holds (nabla_{d_a} xi)^i.
Eigen::MatrixXd xi_covariant_derivative(const AlmostContactStructure& s, const Point& p);

enum class BasisTensor { R1, R2, R3, R4, R51, R52, R6 };

BasisTensor parse_basis_tensor(const std::string& name); // UnknownTensorName

Eigen::VectorXd basis_tensor_eval(BasisTensor which, const ContactPointData& d,
                                  const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                                  const Eigen::VectorXd& Z);

// Divided-form coefficient values (f5 undivided maps to f51 = f5, f52 = -f5).
struct CoefficientValues {
    double f1 = 0, f2 = 0, f3 = 0, f4 = 0, f51 = 0, f52 = 0, f6 = 0;

    static CoefficientValues undivided(double f1, double f2, double f3, double f4,
                                       double f5, double f6);
};

Eigen::VectorXd assemble_curvature(const ContactPointData& d, const CoefficientValues& f,
                                   const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                                   const Eigen::VectorXd& Z);

// Coefficient presets.
struct KmSpaceFormPreset { double c = 0, kappa = 0, mu = 0; };
struct GeneralizedSasakianPreset { double f1 = 0, f2 = 0, f3 = 0; };
struct NonSasakianKmDividedPreset { double kappa = 0, mu = 0; }; // kappa != 1

using CoefficientPreset =
    std::variant<KmSpaceFormPreset, GeneralizedSasakianPreset, NonSasakianKmDividedPreset>;

CoefficientValues preset_coefficients(const CoefficientPreset& preset); // KappaOne

// Generalized (kappa, mu)-space form: structure plus coefficient functions,
// stored in divided order {f1, f2, f3, f4, f51, f52, f6}.
struct GeneralizedKMSpaceForm {
    AlmostContactStructure structure;
    std::vector<ScalarField> coeff; // size 7
    bool divided_input = false;

    static GeneralizedKMSpaceForm with_constant_coefficients(AlmostContactStructure s,
                                                             const CoefficientValues& f,
                                                             bool divided_input);

    CoefficientValues coefficients_at(const Point& p) const;
    Eigen::VectorXd curvature(const Point& p, const Eigen::VectorXd& X,
                              const Eigen::VectorXd& Y, const Eigen::VectorXd& Z) const;
};

// The standard Sasakian structure on R^{2m+1} with phi-sectional curvature -3:
// coordinates (x_1..x_m, y_1..y_m, z),
//   eta = (dz - sum y_i dx_i) / 2,  xi = 2 d_z,
//   g = eta (x) eta + (1/4) sum (dx_i^2 + dy_i^2),
//   phi d_x_i = -d_y_i, phi d_y_i = d_x_i + y_i d_z, phi d_z = 0.
// Coefficients are the (kappa, mu) preset at c = -3, kappa = 1, mu = 0.
GeneralizedKMSpaceForm standard_sasakian(int m);

// (nabla_X phi) Y - g(X, Y) xi + eta(Y) X; zero iff Sasakian at p in (X, Y).
Eigen::VectorXd sasakian_residual(const AlmostContactStructure& s, const Point& p,
                                  const Eigen::VectorXd& X, const Eigen::VectorXd& Y);

// Sectional curvature of span{X, phi X} for the structure's metric.
double phi_sectional(const AlmostContactStructure& s, const Point& p, const Eigen::VectorXd& X);

} // namespace dwp
