#include "dwp/inequality.hpp"

#include "dwp/errors.hpp"

namespace dwp {

ChenGapResult chen_gap(const ChenLemmaInstance& inst, double constraint_tol, double equality_tol) {
    const int l = static_cast<int>(inst.a.size());
    if (l < 2) throw ConstraintViolated("Chen lemma needs at least two terms");

    double sum = 0.0, sumsq = 0.0;
    for (double ai : inst.a) {
        sum += ai;
        sumsq += ai * ai;
    }
    double lhs = sum * sum;
    double rhs = (l - 1) * (sumsq + inst.b);
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (std::abs(lhs - rhs) > constraint_tol * scale)
        throw ConstraintViolated("(sum a)^2 = (l-1)(sum a^2 + b) fails beyond tolerance");

    ChenGapResult out;
    out.gap = 2.0 * inst.a[0] * inst.a[1] - inst.b;

    // equality iff a1 + a2 = a3 = ... = a_l
    std::vector<double> tail;
    tail.push_back(inst.a[0] + inst.a[1]);
    for (int i = 2; i < l; ++i) tail.push_back(inst.a[i]);
    double mean = 0.0;
    for (double t : tail) mean += t;
    mean /= static_cast<double>(tail.size());
    double dev = 0.0;
    for (double t : tail) dev = std::max(dev, std::abs(t - mean));
    out.equality = dev <= equality_tol;
    return out;
}

namespace {

// Shared equality diagnostics + frame/tau machinery for both inequalities.
struct WarpedContext {
    ImmersionData data;
    int n1 = 0, n2 = 0, n = 0;
    MeanCurvatureData mean;
    double lhs = 0.0;
};

WarpedContext warped_context(const IsometricImmersion& imm, const Point& p) {
    if (!imm.warp || !imm.split_n1)
        throw InvalidScenario("inequality reports need warped-product data and a split");
    WarpedContext ctx{immersion_data(imm, p), *imm.split_n1, 0, 0, {}, 0.0};
    ctx.n = imm.domain_dim();
    ctx.n2 = ctx.n - ctx.n1;
    ctx.mean = mean_curvatures(ctx.data, ctx.n1);
    ctx.lhs = warping_laplacian_term(*imm.warp, p);
    return ctx;
}

void fill_equality_diagnostics(InequalityReport& r, const WarpedContext& ctx, double tol) {
    r.slack = r.rhs - r.lhs;
    r.mixed_sigma_residual = mixed_totally_geodesic_residual(ctx.data, ctx.n1);
    r.partial_mean_mismatch = ctx.mean.partial_mismatch;
    r.equality_flag = std::abs(r.slack) <= tol;
    r.diagnostics_pass = r.mixed_sigma_residual <= tol && r.partial_mean_mismatch <= tol;
    r.consistent = r.equality_flag == r.diagnostics_pass;
}

} // namespace

InequalityReport proposition_slack(const IsometricImmersion& imm, const Point& p,
                                   double equality_tol) {
    WarpedContext ctx = warped_context(imm, p);
    InequalityReport r;
    r.point = p;
    r.lhs = ctx.lhs;

    double tau_full = imm.ambient.subspace_scalar_curvature(ctx.data.q, ctx.data.pushed);
    double tau_1 = imm.ambient.subspace_scalar_curvature(ctx.data.q,
                                                         ctx.data.pushed.leftCols(ctx.n1));
    double tau_2 = imm.ambient.subspace_scalar_curvature(ctx.data.q,
                                                         ctx.data.pushed.rightCols(ctx.n2));
    r.rhs = 0.25 * ctx.n * ctx.n * ctx.mean.norm_H * ctx.mean.norm_H + tau_full - tau_1 - tau_2;
    fill_equality_diagnostics(r, ctx, equality_tol);
    return r;
}

OperatorRestrictionData OperatorRestrictionData::from_matrix(const Eigen::MatrixXd& op, int n1) {
    const int n = static_cast<int>(op.rows());
    if (n1 < 0 || n1 > n) throw DimensionMismatch("split index out of range");
    OperatorRestrictionData d;
    d.tr_full = op.trace();
    d.tr_m1 = op.topLeftCorner(n1, n1).trace();
    d.tr_m2 = op.bottomRightCorner(n - n1, n - n1).trace();
    d.sq_full = op.squaredNorm();
    d.sq_m1 = op.topLeftCorner(n1, n1).squaredNorm();
    d.sq_m2 = op.bottomRightCorner(n - n1, n - n1).squaredNorm();
    return d;
}

double tau_plane_closed_form(const CoefficientValues& f, const Eigen::MatrixXd& hP,
                             const Eigen::MatrixXd& AP) {
    const int k = static_cast<int>(hP.rows());
    if (AP.rows() != k) throw DimensionMismatch("restriction operators have different sizes");
    double trh = hP.trace(), trA = AP.trace();
    double nh = hP.squaredNorm(), nA = AP.squaredNorm();
    return 0.5 * k * (k - 1) * f.f1 + (k - 1) * f.f4 * trh
         + 0.5 * f.f51 * (trh * trh - nh)
         - 0.5 * f.f52 * (trA * trA - nA);
}

double warped_coefficient_expression(const CoefficientValues& f, int n1, int n2,
                                     const OperatorRestrictionData& hT,
                                     const OperatorRestrictionData& Axi) {
    double e = n1 * n2 * f.f1;
    e += f.f4 * (n2 * hT.tr_m1 + n1 * hT.tr_m2);
    e += 0.5 * f.f51 * (hT.tr_full * hT.tr_full - hT.tr_m1 * hT.tr_m1 - hT.tr_m2 * hT.tr_m2
                        - hT.sq_full + hT.sq_m1 + hT.sq_m2);
    e -= 0.5 * f.f52 * (Axi.tr_full * Axi.tr_full - Axi.tr_m1 * Axi.tr_m1 - Axi.tr_m2 * Axi.tr_m2
                        - Axi.sq_full + Axi.sq_m1 + Axi.sq_m2);
    return e;
}

InequalityReport theorem_slack(const IsometricImmersion& imm, const Point& p,
                               double equality_tol, double ctr_tol) {
    if (!imm.ambient.has_form())
        throw InvalidScenario("theorem report needs a generalized (kappa,mu)-space form ambient");
    WarpedContext ctx = warped_context(imm, p);

    InequalityReport r;
    r.point = p;
    r.lhs = ctx.lhs;
    r.ctr = c_totally_real_report(imm, ctx.data, ctr_tol);
    if (!r.ctr.pass)
        throw NotCTotallyReal("immersion fails the C-totally real checks at the sample point");

    const GeneralizedKMSpaceForm& form = imm.ambient.form();
    ContactPointData cd = form.structure.at(ctx.data.q);
    CoefficientValues f = form.coefficients_at(ctx.data.q);

    Eigen::MatrixXd hT = tangential_compression(ctx.data, cd.h);
    Eigen::MatrixXd Axi = shape_operator_from_sigma(ctx.data, cd.xi);
    OperatorRestrictionData hTd = OperatorRestrictionData::from_matrix(hT, ctx.n1);
    OperatorRestrictionData Axid = OperatorRestrictionData::from_matrix(Axi, ctx.n1);

    double h_sq = 0.25 * ctx.n * ctx.n * ctx.mean.norm_H * ctx.mean.norm_H;
    r.rhs = h_sq + warped_coefficient_expression(f, ctx.n1, ctx.n2, hTd, Axid);

    // Cross-check: the same rhs through the closed-form plane curvatures.
    double tau_full = tau_plane_closed_form(f, hT, Axi);
    double tau_1 = tau_plane_closed_form(f, hT.topLeftCorner(ctx.n1, ctx.n1),
                                         Axi.topLeftCorner(ctx.n1, ctx.n1));
    double tau_2 = tau_plane_closed_form(f, hT.bottomRightCorner(ctx.n2, ctx.n2),
                                         Axi.bottomRightCorner(ctx.n2, ctx.n2));
    r.rhs_cross_residual = std::abs(r.rhs - (h_sq + tau_full - tau_1 - tau_2));

    fill_equality_diagnostics(r, ctx, equality_tol);
    return r;
}

std::string to_string(ObstructionVerdictKind kind) {
    switch (kind) {
    case ObstructionVerdictKind::RuledOut: return "ruled_out";
    case ObstructionVerdictKind::MustBeMixedTotallyGeodesic: return "must_be_mixed_totally_geodesic";
    case ObstructionVerdictKind::NoObstruction: return "no_obstruction";
    }
    return "unknown";
}

ObstructionVerdict obstruction_report(const ObstructionScenario& s) {
    ObstructionVerdict v;
    if (s.branch == ObstructionBranch::Eigenfunction) {
        if (!(s.lambda > 0.0))
            throw InvalidScenario("eigenfunction branch needs a positive eigenvalue");
        if (s.coefficients.f4 != 0.0 || s.coefficients.f51 != 0.0 || s.coefficients.f52 != 0.0)
            throw InvalidScenario("eigenfunction branch applies to forms with f4 = f51 = f52 = 0");
        v.expression = s.n1 * s.n2 * s.coefficients.f1;
        v.kind = s.coefficients.f1 <= 0.0 ? ObstructionVerdictKind::RuledOut
                                          : ObstructionVerdictKind::NoObstruction;
        return v;
    }

    v.expression = warped_coefficient_expression(s.coefficients, s.n1, s.n2, s.hT, s.Axi);
    if (std::abs(v.expression) <= 1e-12)
        v.kind = ObstructionVerdictKind::MustBeMixedTotallyGeodesic;
    else if (v.expression < 0.0)
        v.kind = ObstructionVerdictKind::RuledOut;
    else
        v.kind = ObstructionVerdictKind::NoObstruction;
    return v;
}

} // namespace dwp
