#include "dwp/fields.hpp"

#include "dwp/errors.hpp"

namespace dwp {

ScalarField ScalarField::constant(int dim, double c) {
    return ScalarField(dim, [dim, c](const Eigen::VectorXd&) {
        return ScalarJet::constant(dim, c);
    });
}

ScalarField ScalarField::coordinate(int dim, int index) {
    if (index < 0 || index >= dim)
        throw DimensionMismatch("coordinate index out of range");
    return ScalarField(dim, [dim, index](const Eigen::VectorXd& x) {
        return ScalarJet::coordinate(dim, index, x(index));
    });
}

ScalarField ScalarField::from_expr(int dim, const Expr& e) {
    return ScalarField(dim, [e](const Eigen::VectorXd& x) { return e.eval_jet(x); });
}

ScalarJet ScalarField::jet(const Point& p) const {
    if (!eval_) throw DimensionMismatch("evaluating an empty ScalarField");
    if (p.dim() != dim_)
        throw DimensionMismatch("point dimension " + std::to_string(p.dim()) +
                                " does not match field dimension " + std::to_string(dim_));
    return eval_(p.coords);
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("field dimensions differ in +");
    auto ea = a.eval_, eb = b.eval_;
    return ScalarField(a.dim(), [ea, eb](const Eigen::VectorXd& x) { return ea(x) + eb(x); });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("field dimensions differ in *");
    auto ea = a.eval_, eb = b.eval_;
    return ScalarField(a.dim(), [ea, eb](const Eigen::VectorXd& x) { return ea(x) * eb(x); });
}

ScalarField ScalarField::squared() const {
    auto e = eval_;
    return ScalarField(dim_, [e](const Eigen::VectorXd& x) { return square(e(x)); });
}

ScalarField ScalarField::embed(int total_dim, int offset) const {
    if (offset < 0 || offset + dim_ > total_dim)
        throw DimensionMismatch("embed offset out of range");
    auto e = eval_;
    int d = dim_;
    return ScalarField(total_dim, [e, d, total_dim, offset](const Eigen::VectorXd& x) {
        ScalarJet sub = e(x.segment(offset, d));
        ScalarJet out(total_dim);
        out.value = sub.value;
        out.grad.segment(offset, d) = sub.grad;
        out.hess.block(offset, offset, d, d) = sub.hess;
        return out;
    });
}

// ---------------------------------------------------------------------------
// MetricField
// ---------------------------------------------------------------------------

int MetricField::upper_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    // row-major upper triangle offset
    return i * dim_ - i * (i - 1) / 2 + (j - i);
}

MetricField::MetricField(int dim, std::vector<ScalarField> upper_triangle)
    : dim_(dim), upper_(std::move(upper_triangle)) {
    if (static_cast<int>(upper_.size()) != dim * (dim + 1) / 2)
        throw DimensionMismatch("metric upper triangle has wrong size");
    for (const ScalarField& f : upper_)
        if (f.dim() != dim) throw DimensionMismatch("metric component on wrong chart");
}

MetricField MetricField::euclidean(int dim) {
    std::vector<ScalarField> upper;
    upper.reserve(dim * (dim + 1) / 2);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            upper.push_back(ScalarField::constant(dim, i == j ? 1.0 : 0.0));
    return MetricField(dim, std::move(upper));
}

MetricField MetricField::diagonal(const std::vector<ScalarField>& entries) {
    int dim = static_cast<int>(entries.size());
    std::vector<ScalarField> upper;
    upper.reserve(dim * (dim + 1) / 2);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            upper.push_back(i == j ? entries[i] : ScalarField::constant(dim, 0.0));
    return MetricField(dim, std::move(upper));
}

MetricField MetricField::from_components(int dim, const std::vector<ScalarField>& components) {
    if (static_cast<int>(components.size()) != dim * dim)
        throw DimensionMismatch("metric component grid has wrong size");
    std::vector<ScalarField> upper;
    upper.reserve(dim * (dim + 1) / 2);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            upper.push_back(components[i * dim + j]);
    return MetricField(dim, std::move(upper));
}

MetricField MetricField::from_exprs(int dim, const std::vector<Expr>& components) {
    if (static_cast<int>(components.size()) != dim * dim)
        throw DimensionMismatch("metric component grid has wrong size");
    std::vector<ScalarField> fields;
    fields.reserve(components.size());
    for (const Expr& e : components) fields.push_back(ScalarField::from_expr(dim, e));
    return MetricField::from_components(dim, fields);
}

const ScalarField& MetricField::component(int i, int j) const {
    return upper_[upper_index(i, j)];
}

Eigen::MatrixXd MetricField::value(const Point& p) const {
    Eigen::MatrixXd g(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            double v = component(i, j).value(p);
            g(i, j) = v;
            g(j, i) = v;
        }
    return g;
}

MetricJet MetricField::jet(const Point& p) const {
    const int n = dim_;
    MetricJet out;
    out.g = Eigen::MatrixXd::Zero(n, n);
    out.dg.assign(n, Eigen::MatrixXd::Zero(n, n));
    out.d2g.assign(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            ScalarJet cj = component(i, j).jet(p);
            out.g(i, j) = cj.value;
            out.g(j, i) = cj.value;
            for (int k = 0; k < n; ++k) {
                out.dg[k](i, j) = cj.grad(k);
                out.dg[k](j, i) = cj.grad(k);
                for (int l = 0; l < n; ++l) {
                    double h = 0.5 * (cj.hess(k, l) + cj.hess(l, k));
                    out.d2g[k][l](i, j) = h;
                    out.d2g[k][l](j, i) = h;
                }
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Pullbacks
// ---------------------------------------------------------------------------

MetricField pullback_metric(const std::vector<Expr>& map, int domain_dim,
                            const std::vector<Expr>& ambient_metric, int ambient_dim) {
    if (static_cast<int>(map.size()) != ambient_dim)
        throw DimensionMismatch("immersion component count does not match ambient dimension");
    if (static_cast<int>(ambient_metric.size()) != ambient_dim * ambient_dim)
        throw DimensionMismatch("ambient metric grid has wrong size");

    // dF^I_a, symbolic
    std::vector<std::vector<Expr>> dF(ambient_dim, std::vector<Expr>(domain_dim));
    for (int I = 0; I < ambient_dim; ++I)
        for (int a = 0; a < domain_dim; ++a)
            dF[I][a] = map[I].derivative(a);

    std::vector<Expr> components(domain_dim * domain_dim, Expr::constant(0.0));
    for (int a = 0; a < domain_dim; ++a)
        for (int b = a; b < domain_dim; ++b) {
            Expr sum = Expr::constant(0.0);
            for (int I = 0; I < ambient_dim; ++I)
                for (int J = 0; J < ambient_dim; ++J) {
                    const Expr& gIJ = ambient_metric[I * ambient_dim + J];
                    double c = 0.0;
                    if (gIJ.is_constant(&c) && c == 0.0) continue;
                    Expr pulled = gIJ.substitute(map); // g_IJ(F(x))
                    sum = sum + pulled * dF[I][a] * dF[J][b];
                }
            components[a * domain_dim + b] = sum;
            components[b * domain_dim + a] = sum;
        }
    return MetricField::from_exprs(domain_dim, components);
}

MetricField pullback_metric_flat(const std::vector<Expr>& map, int domain_dim, int ambient_dim) {
    std::vector<Expr> flat(ambient_dim * ambient_dim, Expr::constant(0.0));
    for (int i = 0; i < ambient_dim; ++i) flat[i * ambient_dim + i] = Expr::constant(1.0);
    return pullback_metric(map, domain_dim, flat, ambient_dim);
}

} // namespace dwp
