#include "dwp/submanifold.hpp"

#include "dwp/errors.hpp"

namespace dwp {

namespace {
constexpr double kRankTol = 1e-8;
constexpr double kNormalTol = 1e-9;
} // namespace

const GeneralizedKMSpaceForm& AmbientSpace::form() const {
    if (!form_) throw InvalidScenario("ambient space carries no contact structure");
    return *form_;
}

Eigen::VectorXd AmbientSpace::CurvatureAt::apply(const Eigen::VectorXd& X,
                                                 const Eigen::VectorXd& Y,
                                                 const Eigen::VectorXd& Z) const {
    if (form_data) return assemble_curvature(form_data->first, form_data->second, X, Y, Z);
    return tensor->apply(X, Y, Z);
}

double AmbientSpace::CurvatureAt::inner(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                                        const Eigen::VectorXd& Z, const Eigen::VectorXd& W) const {
    return W.dot(g * apply(X, Y, Z));
}

AmbientSpace::CurvatureAt AmbientSpace::curvature_at(const Point& q) const {
    CurvatureAt out;
    out.g = metric_.value(q);
    if (form_) {
        out.form_data = std::make_pair(form_->structure.at(q), form_->coefficients_at(q));
    } else {
        out.tensor = riemann(metric_, q);
    }
    return out;
}

AmbientSpace::CurvatureAt AmbientSpace::curvature_via_riemann(const Point& q) const {
    CurvatureAt out;
    out.g = metric_.value(q);
    out.tensor = riemann(metric_, q);
    return out;
}

double AmbientSpace::subspace_scalar_curvature(const Point& q,
                                               const Eigen::MatrixXd& onb_columns) const {
    const int k = static_cast<int>(onb_columns.cols());
    if (k < 2) return 0.0;
    CurvatureAt R = curvature_at(q);
    double tau = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            tau += R.inner(onb_columns.col(i), onb_columns.col(j), onb_columns.col(j),
                           onb_columns.col(i));
    return tau;
}

IsometricImmersion IsometricImmersion::of_warped(DoublyWarpedProduct dwp,
                                                 std::vector<ScalarField> map,
                                                 AmbientSpace ambient) {
    IsometricImmersion imm;
    imm.map = std::move(map);
    imm.ambient = std::move(ambient);
    imm.domain_metric = dwp.assemble();
    imm.split_n1 = dwp.m1.dim;
    imm.warp = std::move(dwp);
    return imm;
}

double ImmersionData::sigma_coeff(int r, int i, int j) const {
    return normal_frame.col(r).dot(g_amb * sigma[i][j]);
}

Eigen::VectorXd ImmersionData::sigma_apply(const Eigen::VectorXd& X,
                                           const Eigen::VectorXd& Y) const {
    // X, Y in domain coordinates; expand over the frame: X = sum_i c_i e_i
    // with c_i = g(X, e_i).
    const int n = static_cast<int>(frame.cols());
    Eigen::VectorXd cx(n), cy(n);
    for (int i = 0; i < n; ++i) {
        cx(i) = X.dot(g_dom * frame.col(i));
        cy(i) = Y.dot(g_dom * frame.col(i));
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(g_amb.rows());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out += cx(i) * cy(j) * sigma[i][j];
    return out;
}

ImmersionData immersion_data(const IsometricImmersion& imm, const Point& p) {
    const int n = imm.domain_dim();
    const int m = imm.ambient_dim();
    if (static_cast<int>(imm.map.size()) != m)
        throw DimensionMismatch("immersion component count does not match ambient dimension");

    ImmersionData d;
    d.p = p;
    d.dF.resize(m, n);
    d.d2F.resize(m);
    Eigen::VectorXd qc(m);
    for (int I = 0; I < m; ++I) {
        ScalarJet j = imm.map[I].jet(p);
        qc(I) = j.value;
        d.dF.row(I) = j.grad.transpose();
        d.d2F[I] = j.hess;
    }
    d.q = Point(qc);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d.dF);
    qr.setThreshold(kRankTol);
    if (qr.rank() < n)
        throw RankDeficient("immersion differential has rank below the domain dimension");

    d.g_dom = imm.domain_metric.value(p);
    MetricJet amb_jet = imm.ambient.metric().jet(d.q);
    d.g_amb = amb_jet.g;

    Christoffels gamma_amb = christoffel_from_jet(amb_jet);
    Christoffels gamma_dom = christoffel(imm.domain_metric, p);

    // sigma_ab = d2F_ab + Gamma~(dF_a, dF_b) - dF(Gamma_ab)
    std::vector<std::vector<Eigen::VectorXd>> sigma_coord(
        n, std::vector<Eigen::VectorXd>(n, Eigen::VectorXd::Zero(m)));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Eigen::VectorXd s(m);
            for (int I = 0; I < m; ++I) {
                double v = d.d2F[I](a, b);
                for (int J = 0; J < m; ++J)
                    for (int K = 0; K < m; ++K)
                        v += gamma_amb[I](J, K) * d.dF(J, a) * d.dF(K, b);
                for (int c = 0; c < n; ++c) v -= gamma_dom[c](a, b) * d.dF(I, c);
                s(I) = v;
            }
            sigma_coord[a][b] = s;
            sigma_coord[b][a] = s;
        }

    d.frame = frame_at(imm.domain_metric, p);
    d.pushed = d.dF * d.frame;

    // Deterministic normal frame: ambient coordinate vectors Gram-Schmidt'ed
    // against the tangent image and accepted normals, ascending index.
    d.normal_frame.resize(m, m - n);
    int found = 0;
    for (int I = 0; I < m && found < m - n; ++I) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(m, I);
        for (int j = 0; j < n; ++j) {
            Eigen::VectorXd u = d.pushed.col(j);
            v -= u.dot(d.g_amb * v) * u;
        }
        for (int r = 0; r < found; ++r) {
            Eigen::VectorXd u = d.normal_frame.col(r);
            v -= u.dot(d.g_amb * v) * u;
        }
        double norm2 = v.dot(d.g_amb * v);
        if (norm2 < kRankTol * kRankTol) continue;
        d.normal_frame.col(found++) = v / std::sqrt(norm2);
    }
    if (found < m - n)
        throw RankDeficient("could not complete a normal frame from coordinate vectors");

    // sigma in the adapted frame
    d.sigma.assign(n, std::vector<Eigen::VectorXd>(n, Eigen::VectorXd::Zero(m)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Eigen::VectorXd s = Eigen::VectorXd::Zero(m);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    s += d.frame(a, i) * d.frame(b, j) * sigma_coord[a][b];
            d.sigma[i][j] = s;
            d.sigma[j][i] = s;
        }
    return d;
}

Eigen::MatrixXd induced_metric_residual(const IsometricImmersion& imm, const Point& p) {
    ImmersionData d = immersion_data(imm, p);
    return d.dF.transpose() * d.g_amb * d.dF - d.g_dom;
}

SecondFundamentalFormAt second_fundamental_form(const IsometricImmersion& imm, const Point& p) {
    ImmersionData d = immersion_data(imm, p);
    SecondFundamentalFormAt out;
    out.point = p;
    out.frame = d.frame;
    out.normal_frame = d.normal_frame;
    out.components = d.sigma;
    return out;
}

ShapeAndNormalConnection shape_and_normal_connection(const IsometricImmersion& imm, const Point& p,
                                                     const NormalField& zeta) {
    ImmersionData d = immersion_data(imm, p);
    const int n = imm.domain_dim();
    const int m = imm.ambient_dim();
    if (static_cast<int>(zeta.comp.size()) != m)
        throw DimensionMismatch("normal field component count does not match ambient dimension");

    std::vector<ScalarJet> zj(m);
    Eigen::VectorXd zeta_val(m);
    for (int I = 0; I < m; ++I) {
        zj[I] = zeta.comp[I].jet(p);
        zeta_val(I) = zj[I].value;
    }

    double znorm = d.norm_amb(zeta_val);
    for (int j = 0; j < n; ++j)
        if (std::abs(zeta_val.dot(d.g_amb * d.pushed.col(j))) > kNormalTol * std::max(1.0, znorm))
            throw NotNormal("zeta has a tangential component at p");

    MetricJet amb_jet = imm.ambient.metric().jet(d.q);
    Christoffels gamma_amb = christoffel_from_jet(amb_jet);

    ShapeAndNormalConnection out;
    out.shape.resize(n, n);
    out.normal_d.resize(n);
    for (int i = 0; i < n; ++i) {
        // nabla~_{e_i} zeta
        Eigen::VectorXd grad = Eigen::VectorXd::Zero(m);
        for (int I = 0; I < m; ++I) {
            double v = 0.0;
            for (int a = 0; a < n; ++a) v += d.frame(a, i) * zj[I].grad(a);
            Eigen::VectorXd push_i = d.pushed.col(i);
            for (int J = 0; J < m; ++J)
                for (int K = 0; K < m; ++K) v += gamma_amb[I](J, K) * push_i(J) * zeta_val(K);
            grad(I) = v;
        }
        Eigen::VectorXd tangential = Eigen::VectorXd::Zero(m);
        for (int j = 0; j < n; ++j) {
            double c = grad.dot(d.g_amb * d.pushed.col(j));
            out.shape(i, j) = -c; // <A_zeta e_i, e_j>
            tangential += c * d.pushed.col(j);
        }
        out.normal_d[i] = grad - tangential;
    }
    return out;
}

MeanCurvatureData mean_curvatures(const ImmersionData& data, int n1) {
    const int n = static_cast<int>(data.frame.cols());
    const int m = static_cast<int>(data.g_amb.rows());
    if (n1 < 0 || n1 > n) throw DimensionMismatch("split index out of range");
    const int n2 = n - n1;

    MeanCurvatureData out;
    Eigen::VectorXd trace1 = Eigen::VectorXd::Zero(m), trace2 = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < n1; ++i) trace1 += data.sigma[i][i];
    for (int i = n1; i < n; ++i) trace2 += data.sigma[i][i];

    out.H = (trace1 + trace2) / n;
    out.H1 = n1 > 0 ? (trace1 / n1).eval() : Eigen::VectorXd::Zero(m).eval();
    out.H2 = n2 > 0 ? (trace2 / n2).eval() : Eigen::VectorXd::Zero(m).eval();
    out.norm_H = data.norm_amb(out.H);
    out.norm_H1 = data.norm_amb(out.H1);
    out.norm_H2 = data.norm_amb(out.H2);
    out.partial_mismatch = data.norm_amb(n1 * out.H1 - n2 * out.H2);
    return out;
}

MeanCurvatureData mean_curvatures(const IsometricImmersion& imm, const Point& p, int n1) {
    return mean_curvatures(immersion_data(imm, p), n1);
}

double gauss_equation_residual(const IsometricImmersion& imm, const Point& p,
                               const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                               const Eigen::VectorXd& Z, const Eigen::VectorXd& W) {
    ImmersionData d = immersion_data(imm, p);
    AmbientSpace::CurvatureAt Ramb = imm.ambient.curvature_at(d.q);
    CurvatureTensorAt Rdom = riemann(imm.domain_metric, p);

    double lhs = Ramb.inner(d.dF * X, d.dF * Y, d.dF * Z, d.dF * W);
    double intrinsic = W.dot(d.g_dom * Rdom.apply(X, Y, Z));
    Eigen::VectorXd sXZ = d.sigma_apply(X, Z), sYW = d.sigma_apply(Y, W);
    Eigen::VectorXd sXW = d.sigma_apply(X, W), sYZ = d.sigma_apply(Y, Z);
    double rhs = intrinsic + sXZ.dot(d.g_amb * sYW) - sXW.dot(d.g_amb * sYZ);
    return std::abs(lhs - rhs);
}

double mixed_totally_geodesic_residual(const ImmersionData& data, int n1) {
    const int n = static_cast<int>(data.frame.cols());
    if (n1 < 0 || n1 > n) throw DimensionMismatch("split index out of range");
    double worst = 0.0;
    for (int i = 0; i < n1; ++i)
        for (int t = n1; t < n; ++t)
            worst = std::max(worst, data.norm_amb(data.sigma[i][t]));
    return worst;
}

double mixed_totally_geodesic_residual(const IsometricImmersion& imm, int n1, const Point& p) {
    return mixed_totally_geodesic_residual(immersion_data(imm, p), n1);
}

Eigen::MatrixXd tangential_compression(const ImmersionData& data, const Eigen::MatrixXd& T) {
    const int n = static_cast<int>(data.frame.cols());
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = data.pushed.col(j).dot(data.g_amb * (T * data.pushed.col(i)));
    return out;
}

Eigen::MatrixXd shape_operator_from_sigma(const ImmersionData& data, const Eigen::VectorXd& xi) {
    const int n = static_cast<int>(data.frame.cols());
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = xi.dot(data.g_amb * data.sigma[i][j]);
    return out;
}

CTotallyRealReport c_totally_real_report(const IsometricImmersion& imm, const ImmersionData& data,
                                         double tol) {
    const GeneralizedKMSpaceForm& form = imm.ambient.form();
    ContactPointData cd = form.structure.at(data.q);
    const int n = static_cast<int>(data.frame.cols());

    CTotallyRealReport out;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd u = data.pushed.col(i);
        out.max_eta_tangent = std::max(out.max_eta_tangent, std::abs(cd.eta.dot(u)));

        Eigen::VectorXd phiu = cd.phi * u;
        Eigen::VectorXd tangential = Eigen::VectorXd::Zero(u.size());
        for (int j = 0; j < n; ++j)
            tangential += phiu.dot(data.g_amb * data.pushed.col(j)) * data.pushed.col(j);
        out.max_phi_tangential = std::max(out.max_phi_tangential, data.norm_amb(tangential));
    }

    Eigen::MatrixXd A_xi = shape_operator_from_sigma(data, cd.xi);
    Eigen::MatrixXd phi_h_tangential = tangential_compression(data, cd.phi * cd.h);
    out.shape_h_residual = (A_xi - phi_h_tangential).norm();

    out.pass = out.max_eta_tangent <= tol && out.max_phi_tangential <= tol &&
               out.shape_h_residual <= tol;
    return out;
}

CTotallyRealReport c_totally_real_report(const IsometricImmersion& imm, const Point& p,
                                         double tol) {
    return c_totally_real_report(imm, immersion_data(imm, p), tol);
}

} // namespace dwp
