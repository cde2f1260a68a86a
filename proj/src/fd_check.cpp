#include "dwp/fd_check.hpp"

#include <algorithm>
#include <cmath>

namespace dwp {
namespace fd {

namespace {

Point shifted(const Point& p, int k, double h) {
    Point q = p;
    q.coords(k) += h;
    return q;
}

Christoffels christoffel_from_values(const MetricField& metric, const Point& p, double h) {
    const int n = metric.dim();
    Eigen::MatrixXd g = metric.value(p);
    Eigen::MatrixXd ginv = spd_inverse(g);

    std::vector<Eigen::MatrixXd> dg(n);
    for (int k = 0; k < n; ++k)
        dg[k] = (metric.value(shifted(p, k, h)) - metric.value(shifted(p, k, -h))) / (2.0 * h);

    Christoffels gamma(n, Eigen::MatrixXd::Zero(n, n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l)
                    s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                gamma[k](i, j) = 0.5 * s;
                gamma[k](j, i) = gamma[k](i, j);
            }
    return gamma;
}

} // namespace

Eigen::VectorXd gradient(const ScalarField& f, const Point& p, double h) {
    const int n = p.dim();
    Eigen::VectorXd g(n);
    for (int k = 0; k < n; ++k)
        g(k) = (f.value(shifted(p, k, h)) - f.value(shifted(p, k, -h))) / (2.0 * h);
    return g;
}

Eigen::MatrixXd hessian(const ScalarField& f, const Point& p, double h) {
    const int n = p.dim();
    Eigen::MatrixXd H(n, n);
    double f0 = f.value(p);
    for (int k = 0; k < n; ++k)
        H(k, k) = (f.value(shifted(p, k, h)) - 2.0 * f0 + f.value(shifted(p, k, -h))) / (h * h);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            double pp = f.value(shifted(shifted(p, a, h), b, h));
            double pm = f.value(shifted(shifted(p, a, h), b, -h));
            double mp = f.value(shifted(shifted(p, a, -h), b, h));
            double mm = f.value(shifted(shifted(p, a, -h), b, -h));
            H(a, b) = (pp - pm - mp + mm) / (4.0 * h * h);
            H(b, a) = H(a, b);
        }
    return H;
}

Christoffels christoffel(const MetricField& metric, const Point& p, double h) {
    return christoffel_from_values(metric, p, h);
}

CurvatureTensorAt riemann(const MetricField& metric, const Point& p, double h) {
    const int n = metric.dim();
    Christoffels gamma = christoffel_from_values(metric, p, h);

    // dgamma[m][k](i,j) by differencing the value-based Christoffels
    std::vector<Christoffels> dgamma(n);
    for (int m = 0; m < n; ++m) {
        Christoffels plus = christoffel_from_values(metric, shifted(p, m, h), h);
        Christoffels minus = christoffel_from_values(metric, shifted(p, m, -h), h);
        dgamma[m].resize(n);
        for (int k = 0; k < n; ++k) dgamma[m][k] = (plus[k] - minus[k]) / (2.0 * h);
    }

    CurvatureTensorAt R(n, metric.value(p));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double v = dgamma[i][l](j, k) - dgamma[j][l](i, k);
                    for (int m = 0; m < n; ++m)
                        v += gamma[l](i, m) * gamma[m](j, k) - gamma[l](j, m) * gamma[m](i, k);
                    R.up(i, j, k, l) = v;
                }
        }
    return R;
}

double max_rel_error(const Christoffels& a, const Christoffels& b) {
    double worst = 0.0;
    const int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double va = a[k](i, j), vb = b[k](i, j);
                double scale = std::max({1.0, std::abs(va), std::abs(vb)});
                worst = std::max(worst, std::abs(va - vb) / scale);
            }
    return worst;
}

double max_rel_error(const CurvatureTensorAt& a, const CurvatureTensorAt& b) {
    double worst = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double va = a.up(i, j, k, l), vb = b.up(i, j, k, l);
                    double scale = std::max({1.0, std::abs(va), std::abs(vb)});
                    worst = std::max(worst, std::abs(va - vb) / scale);
                }
    return worst;
}

} // namespace fd
} // namespace dwp
