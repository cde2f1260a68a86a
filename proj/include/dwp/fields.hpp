#pragma once

#include <functional>
#include <vector>

#include "dwp/expr.hpp"
#include "dwp/jet.hpp"

namespace dwp {

// A point of a chart. coords.size() is the chart dimension.
struct Point {
    Eigen::VectorXd coords;

    Point() = default;
    explicit Point(Eigen::VectorXd c) : coords(std::move(c)) {}
    Point(std::initializer_list<double> c)
        : coords(Eigen::Map<const Eigen::VectorXd>(c.begin(), static_cast<int>(c.size()))) {}

    int dim() const { return static_cast<int>(coords.size()); }
};

// Smooth scalar field on a chart, evaluable to an exact second-order jet.
// The evaluator must be pure; fields may be shared across threads.
class ScalarField {
public:
    using Evaluator = std::function<ScalarJet(const Eigen::VectorXd&)>;

    ScalarField() = default;
    ScalarField(int dim, Evaluator eval) : dim_(dim), eval_(std::move(eval)) {}

    static ScalarField constant(int dim, double c);
    static ScalarField coordinate(int dim, int index);
    static ScalarField from_expr(int dim, const Expr& e);

    ScalarJet jet(const Point& p) const;
    double value(const Point& p) const { return jet(p).value; }

    int dim() const { return dim_; }
    bool valid() const { return static_cast<bool>(eval_); }

    // Pointwise algebra (exact jet propagation).
    friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
    friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
    ScalarField squared() const;

    // View this field, defined on a sub-chart of dimension dim(), as a field
    // on a chart of dimension total_dim whose coordinates [offset,
    // offset+dim()) are the sub-chart coordinates.
    ScalarField embed(int total_dim, int offset) const;

private:
    int dim_ = 0;
    Evaluator eval_;
};

// Metric components with first and second partial derivatives at a point.
struct MetricJet {
    Eigen::MatrixXd g;                             // g_ij
    std::vector<Eigen::MatrixXd> dg;               // dg[k](i,j)   = d_k g_ij
    std::vector<std::vector<Eigen::MatrixXd>> d2g; // d2g[k][l](i,j) = d_k d_l g_ij
};

// Symmetric two-tensor field g_ij(x) with exact jets. Components are stored
// for the upper triangle and mirrored, so reported values are symmetric by
// construction.
class MetricField {
public:
    MetricField() = default;
    MetricField(int dim, std::vector<ScalarField> upper_triangle);

    static MetricField euclidean(int dim);
    static MetricField diagonal(const std::vector<ScalarField>& entries);
    // components is a dim x dim row-major grid; the upper triangle is used.
    static MetricField from_components(int dim, const std::vector<ScalarField>& components);
    static MetricField from_exprs(int dim, const std::vector<Expr>& components);

    int dim() const { return dim_; }
    const ScalarField& component(int i, int j) const;

    Eigen::MatrixXd value(const Point& p) const;
    MetricJet jet(const Point& p) const;

private:
    int upper_index(int i, int j) const;
    int dim_ = 0;
    std::vector<ScalarField> upper_; // row-major upper triangle, size d(d+1)/2
};

// Pullback of `ambient_metric` (with Expr components over the ambient chart)
// under the map with Expr components `map` from an n-dimensional chart:
// G_ab = g_IJ(F(x)) dF^I_a dF^J_b, built symbolically so that G itself has
// exact second-order jets.
MetricField pullback_metric(const std::vector<Expr>& map, int domain_dim,
                            const std::vector<Expr>& ambient_metric, int ambient_dim);
MetricField pullback_metric_flat(const std::vector<Expr>& map, int domain_dim, int ambient_dim);

} // namespace dwp
