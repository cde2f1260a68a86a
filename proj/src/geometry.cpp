#include "dwp/geometry.hpp"

#include "dwp/errors.hpp"

namespace dwp {

namespace {
constexpr double kSpdPivotTol = 1e-12;
constexpr double kPlaneTol = 1e-12;
} // namespace

CurvatureTensorAt::CurvatureTensorAt(int dim, Eigen::MatrixXd metric)
    : n_(dim), g_(std::move(metric)), up_(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0) {}

double CurvatureTensorAt::lowered(int i, int j, int k, int l) const {
    double s = 0.0;
    for (int m = 0; m < n_; ++m) s += g_(k, m) * up(i, j, l, m);
    return s;
}

Eigen::VectorXd CurvatureTensorAt::apply(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                                         const Eigen::VectorXd& Z) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < n_; ++i) {
        if (X(i) == 0.0) continue;
        for (int j = 0; j < n_; ++j) {
            if (Y(j) == 0.0) continue;
            double xy = X(i) * Y(j);
            for (int k = 0; k < n_; ++k) {
                if (Z(k) == 0.0) continue;
                double c = xy * Z(k);
                for (int l = 0; l < n_; ++l) out(l) += c * up(i, j, k, l);
            }
        }
    }
    return out;
}

double CurvatureTensorAt::inner(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                                const Eigen::VectorXd& Z, const Eigen::VectorXd& W) const {
    return W.dot(g_ * apply(X, Y, Z));
}

Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& g) {
    Eigen::LDLT<Eigen::MatrixXd> ldlt(g);
    if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() < kSpdPivotTol)
        throw MetricDegenerate("metric is not positive definite (pivot below 1e-12)");
    return ldlt.solve(Eigen::MatrixXd::Identity(g.rows(), g.cols()));
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& g, const std::vector<Eigen::VectorXd>& basis) {
    const int n = static_cast<int>(g.rows());
    const int k = static_cast<int>(basis.size());
    Eigen::MatrixXd frame(n, k);
    for (int i = 0; i < k; ++i) {
        Eigen::VectorXd v = basis[i];
        for (int j = 0; j < i; ++j) {
            Eigen::VectorXd ej = frame.col(j);
            v -= ej.dot(g * v) * ej;
        }
        double norm2 = v.dot(g * v);
        if (norm2 < kPlaneTol) throw DegeneratePlane("basis is rank deficient");
        frame.col(i) = v / std::sqrt(norm2);
    }
    return frame;
}

Eigen::MatrixXd frame_at(const MetricField& metric, const Point& p) {
    Eigen::MatrixXd g = metric.value(p);
    spd_inverse(g); // SPD gate
    std::vector<Eigen::VectorXd> coords;
    coords.reserve(metric.dim());
    for (int i = 0; i < metric.dim(); ++i)
        coords.push_back(Eigen::VectorXd::Unit(metric.dim(), i));
    try {
        return orthonormalize(g, coords);
    } catch (const DegeneratePlane&) {
        throw MetricDegenerate("coordinate basis degenerates under the metric");
    }
}

Christoffels christoffel_from_jet(const MetricJet& mj) {
    const int n = static_cast<int>(mj.g.rows());
    Eigen::MatrixXd ginv = spd_inverse(mj.g);
    Christoffels gamma(n, Eigen::MatrixXd::Zero(n, n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l)
                    s += ginv(k, l) * (mj.dg[i](j, l) + mj.dg[j](i, l) - mj.dg[l](i, j));
                gamma[k](i, j) = 0.5 * s;
                gamma[k](j, i) = gamma[k](i, j);
            }
    return gamma;
}

Christoffels christoffel(const MetricField& metric, const Point& p) {
    return christoffel_from_jet(metric.jet(p));
}

ChristoffelJet christoffel_jet(const MetricField& metric, const Point& p) {
    MetricJet mj = metric.jet(p);
    const int n = static_cast<int>(mj.g.rows());
    Eigen::MatrixXd ginv = spd_inverse(mj.g);

    ChristoffelJet out;
    out.gamma = christoffel_from_jet(mj);
    out.dgamma.assign(n, Christoffels(n, Eigen::MatrixXd::Zero(n, n)));

    // d_m g^{kl} = -g^{ka} (d_m g_ab) g^{bl}
    std::vector<Eigen::MatrixXd> dginv(n);
    for (int m = 0; m < n; ++m) dginv[m] = -ginv * mj.dg[m] * ginv;

    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    double s = 0.0;
                    for (int l = 0; l < n; ++l) {
                        s += dginv[m](k, l) * (mj.dg[i](j, l) + mj.dg[j](i, l) - mj.dg[l](i, j));
                        s += ginv(k, l) * (mj.d2g[m][i](j, l) + mj.d2g[m][j](i, l) - mj.d2g[m][l](i, j));
                    }
                    out.dgamma[m][k](i, j) = 0.5 * s;
                    out.dgamma[m][k](j, i) = out.dgamma[m][k](i, j);
                }
    return out;
}

CurvatureTensorAt riemann(const MetricField& metric, const Point& p) {
    MetricJet mj = metric.jet(p);
    ChristoffelJet cj = christoffel_jet(metric, p);
    const int n = metric.dim();

    CurvatureTensorAt R(n, mj.g);
    // R^l_ijk = d_i Gamma^l_jk - d_j Gamma^l_ik
    //         + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double v = cj.dgamma[i][l](j, k) - cj.dgamma[j][l](i, k);
                    for (int m = 0; m < n; ++m)
                        v += cj.gamma[l](i, m) * cj.gamma[m](j, k)
                           - cj.gamma[l](j, m) * cj.gamma[m](i, k);
                    R.up(i, j, k, l) = v;
                }
        }
    return R;
}

double sectional_curvature(const MetricField& metric, const Point& p,
                           const Eigen::VectorXd& X, const Eigen::VectorXd& Y) {
    Eigen::MatrixXd g = metric.value(p);
    double xx = X.dot(g * X);
    double yy = Y.dot(g * Y);
    double xy = X.dot(g * Y);
    double gram = xx * yy - xy * xy;
    if (gram < kPlaneTol)
        throw DegeneratePlane("vectors do not span a 2-plane (Gram determinant below 1e-12)");
    CurvatureTensorAt R = riemann(metric, p);
    return R.inner(X, Y, Y, X) / gram;
}

double scalar_curvature_subspace(const MetricField& metric, const Point& p,
                                 const std::vector<Eigen::VectorXd>& basis) {
    if (basis.size() < 2) {
        if (!basis.empty()) orthonormalize(metric.value(p), basis); // rank gate
        return 0.0;
    }
    Eigen::MatrixXd g = metric.value(p);
    Eigen::MatrixXd frame = orthonormalize(g, basis);
    CurvatureTensorAt R = riemann(metric, p);
    const int k = static_cast<int>(frame.cols());
    double tau = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            tau += R.inner(frame.col(i), frame.col(j), frame.col(j), frame.col(i));
    return tau;
}

double hessian(const ScalarField& psi, const MetricField& metric, const Point& p,
               const Eigen::VectorXd& X, const Eigen::VectorXd& Y) {
    ScalarJet j = psi.jet(p);
    Christoffels gamma = christoffel(metric, p);
    const int n = metric.dim();
    double s = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double h = j.hess(a, b);
            for (int k = 0; k < n; ++k) h -= gamma[k](a, b) * j.grad(k);
            s += X(a) * Y(b) * h;
        }
    return s;
}

double laplacian(const ScalarField& psi, const MetricField& metric, const Point& p) {
    ScalarJet j = psi.jet(p);
    MetricJet mj = metric.jet(p);
    Eigen::MatrixXd ginv = spd_inverse(mj.g);
    Christoffels gamma = christoffel_from_jet(mj);
    const int n = metric.dim();
    double trace = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double h = j.hess(a, b);
            for (int k = 0; k < n; ++k) h -= gamma[k](a, b) * j.grad(k);
            trace += ginv(a, b) * h;
        }
    return -trace;
}

} // namespace dwp
