#include "dwp/warped.hpp"

#include "dwp/errors.hpp"

namespace dwp {

namespace {
constexpr double kPositiveTol = 1e-12;
constexpr double kUnitTol = 1e-9;
constexpr double kBlockTol = 1e-12;

ScalarField guarded_positive(const ScalarField& rho, const char* which) {
    std::string name = which;
    return ScalarField(rho.dim(), [rho, name](const Eigen::VectorXd& x) {
        ScalarJet j = rho.jet(Point(x));
        if (!(j.value > kPositiveTol))
            throw NonPositiveWarping(name + " = " + std::to_string(j.value) +
                                     " is not positive at the evaluated point");
        return j;
    });
}
} // namespace

Point DoublyWarpedProduct::factor_point(int factor, const Point& p) const {
    if (p.dim() != dim()) throw DimensionMismatch("product point has wrong dimension");
    if (factor == 1) return Point(p.coords.head(m1.dim).eval());
    if (factor == 2) return Point(p.coords.tail(m2.dim).eval());
    throw DimensionMismatch("factor index must be 1 or 2");
}

MetricField DoublyWarpedProduct::assemble() const {
    const int n1 = m1.dim, n2 = m2.dim, n = n1 + n2;
    ScalarField r1sq = guarded_positive(rho1, "rho1").squared().embed(n, 0);
    ScalarField r2sq = guarded_positive(rho2, "rho2").squared().embed(n, n1);

    std::vector<ScalarField> grid(static_cast<std::size_t>(n) * n, ScalarField::constant(n, 0.0));
    for (int i = 0; i < n1; ++i)
        for (int j = i; j < n1; ++j) {
            ScalarField c = r2sq * m1.metric.component(i, j).embed(n, 0);
            grid[i * n + j] = c;
            grid[j * n + i] = c;
        }
    for (int i = 0; i < n2; ++i)
        for (int j = i; j < n2; ++j) {
            ScalarField c = r1sq * m2.metric.component(i, j).embed(n, n1);
            grid[(n1 + i) * n + (n1 + j)] = c;
            grid[(n1 + j) * n + (n1 + i)] = c;
        }
    return MetricField::from_components(n, grid);
}

Eigen::VectorXd DoublyWarpedProduct::lift_tangent(int factor, const Eigen::VectorXd& v) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
    if (factor == 1) {
        if (v.size() != m1.dim) throw DimensionMismatch("factor-1 vector has wrong dimension");
        out.head(m1.dim) = v;
    } else if (factor == 2) {
        if (v.size() != m2.dim) throw DimensionMismatch("factor-2 vector has wrong dimension");
        out.tail(m2.dim) = v;
    } else {
        throw DimensionMismatch("factor index must be 1 or 2");
    }
    return out;
}

namespace {

// -(1/rho) H^rho(x, x) on the factor chart, the per-direction term of the
// mixed-plane curvature formula.
double factor_term(const WarpedFactor& f, const ScalarField& rho, const Point& fp,
                   const Eigen::VectorXd& x) {
    double rho_val = rho.value(fp);
    if (!(rho_val > kPositiveTol)) throw NonPositiveWarping("warping function not positive");
    return -hessian(rho, f.metric, fp, x, x) / rho_val;
}

} // namespace

double mixed_plane_sectional(const DoublyWarpedProduct& dwp, const Point& p,
                             const Eigen::VectorXd& X, const Eigen::VectorXd& Z) {
    const int n1 = dwp.m1.dim, n2 = dwp.m2.dim;
    if (X.size() != dwp.dim() || Z.size() != dwp.dim())
        throw DimensionMismatch("mixed-plane vectors must live on the product chart");
    if (X.tail(n2).cwiseAbs().maxCoeff() > kBlockTol)
        throw WrongDistribution("X has a component along the second factor");
    if (Z.head(n1).cwiseAbs().maxCoeff() > kBlockTol)
        throw WrongDistribution("Z has a component along the first factor");

    MetricField product = dwp.assemble();
    Eigen::MatrixXd g = product.value(p);
    if (std::abs(X.dot(g * X) - 1.0) > kUnitTol)
        throw NotUnit("X is not unit with respect to the product metric");
    if (std::abs(Z.dot(g * Z) - 1.0) > kUnitTol)
        throw NotUnit("Z is not unit with respect to the product metric");

    Point p1 = dwp.factor_point(1, p);
    Point p2 = dwp.factor_point(2, p);
    return factor_term(dwp.m1, dwp.rho1, p1, X.head(n1))
         + factor_term(dwp.m2, dwp.rho2, p2, Z.tail(n2));
}

double warping_laplacian_term(const DoublyWarpedProduct& dwp, const Point& p) {
    Point p1 = dwp.factor_point(1, p);
    Point p2 = dwp.factor_point(2, p);
    double r1 = dwp.rho1.value(p1);
    double r2 = dwp.rho2.value(p2);
    if (!(r1 > kPositiveTol) || !(r2 > kPositiveTol))
        throw NonPositiveWarping("warping function not positive at the sample point");
    double lap1 = laplacian(dwp.rho1, dwp.m1.metric, p1);
    double lap2 = laplacian(dwp.rho2, dwp.m2.metric, p2);
    return dwp.m2.dim * lap1 / (r1 * r2 * r2) + dwp.m1.dim * lap2 / (r2 * r1 * r1);
}

MixedScalarIdentity mixed_scalar_identity_residual(const DoublyWarpedProduct& dwp, const Point& p) {
    MixedScalarIdentity out;
    out.lhs = warping_laplacian_term(dwp, p);

    MetricField product = dwp.assemble();
    Eigen::MatrixXd frame = frame_at(product, p);
    CurvatureTensorAt R = riemann(product, p);
    const int n1 = dwp.m1.dim, n = dwp.dim();
    double sum = 0.0;
    for (int i = 0; i < n1; ++i)
        for (int j = n1; j < n; ++j)
            sum += R.inner(frame.col(i), frame.col(j), frame.col(j), frame.col(i));
    out.rhs = sum;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

} // namespace dwp
