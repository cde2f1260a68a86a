#include "dwp/contact.hpp"

#include "dwp/errors.hpp"

namespace dwp {

TensorField11 TensorField11::zero(int dim) {
    TensorField11 t;
    t.dim = dim;
    t.comp.assign(static_cast<std::size_t>(dim) * dim, ScalarField::constant(dim, 0.0));
    return t;
}

Eigen::MatrixXd TensorField11::value(const Point& p) const {
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = at(i, j).value(p);
    return m;
}

Eigen::VectorXd VectorFieldOnChart::value(const Point& p) const {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = comp[i].value(p);
    return v;
}

Eigen::VectorXd OneFormField::value(const Point& p) const {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = comp[i].value(p);
    return v;
}

ContactPointData AlmostContactStructure::at(const Point& p) const {
    ContactPointData d;
    d.g = g.value(p);
    d.phi = phi.value(p);
    d.h = h_at(*this, p);
    d.xi = xi.value(p);
    d.eta = eta.value(p);
    return d;
}

AxiomReport verify_almost_contact(const ContactPointData& d, double tol) {
    const int n = d.dim();
    AxiomReport r;
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);

    r.phi_square = (d.phi * d.phi + I - d.xi * d.eta.transpose()).cwiseAbs().maxCoeff();
    r.eta_xi = std::abs(d.eta.dot(d.xi) - 1.0);
    r.phi_xi = (d.phi * d.xi).cwiseAbs().maxCoeff();
    r.eta_phi = (d.eta.transpose() * d.phi).cwiseAbs().maxCoeff();
    r.metric_compat =
        (d.phi.transpose() * d.g * d.phi - d.g + d.eta * d.eta.transpose()).cwiseAbs().maxCoeff();
    r.metric_eta = (d.g * d.xi - d.eta).cwiseAbs().maxCoeff();

    r.max_residual = std::max({r.phi_square, r.eta_xi, r.phi_xi, r.eta_phi,
                               r.metric_compat, r.metric_eta});
    r.pass = r.max_residual <= tol;
    return r;
}

AxiomReport verify_almost_contact(const AlmostContactStructure& s, const Point& p, double tol) {
    return verify_almost_contact(s.at(p), tol);
}

Eigen::MatrixXd lie_derivative_h(const AlmostContactStructure& s, const Point& p) {
    const int n = s.dim;
    // Jets of phi and xi
    std::vector<ScalarJet> phij(static_cast<std::size_t>(n) * n);
    std::vector<ScalarJet> xij(n);
    for (int i = 0; i < n; ++i) {
        xij[i] = s.xi.comp[i].jet(p);
        for (int j = 0; j < n; ++j) phij[i * n + j] = s.phi.at(i, j).jet(p);
    }

    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = 0.0;
            for (int k = 0; k < n; ++k) {
                v += xij[k].value * phij[i * n + j].grad(k);
                v -= phij[k * n + j].value * xij[i].grad(k);
                v += phij[i * n + k].value * xij[k].grad(j);
            }
            L(i, j) = v;
        }
    return 0.5 * L;
}

Eigen::MatrixXd h_at(const AlmostContactStructure& s, const Point& p) {
    if (s.analytic_h) return s.analytic_h->value(p);
    return lie_derivative_h(s, p);
}

Eigen::MatrixXd contact_form_residual(const AlmostContactStructure& s, const Point& p) {
    const int n = s.dim;
    std::vector<ScalarJet> etaj(n);
    for (int i = 0; i < n; ++i) etaj[i] = s.eta.comp[i].jet(p);
    Eigen::MatrixXd g = s.g.value(p);
    Eigen::MatrixXd phi = s.phi.value(p);
    Eigen::MatrixXd Phi = g * phi; // Phi(d_a, d_b) = g(d_a, phi d_b)

    Eigen::MatrixXd res(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double deta = 0.5 * (etaj[b].grad(a) - etaj[a].grad(b));
            res(a, b) = deta - Phi(a, b);
        }
    return res;
}

Eigen::MatrixXd xi_covariant_derivative(const AlmostContactStructure& s, const Point& p) {
    const int n = s.dim;
    Christoffels gamma = christoffel(s.g, p);
    std::vector<ScalarJet> xij(n);
    for (int i = 0; i < n; ++i) xij[i] = s.xi.comp[i].jet(p);

    Eigen::MatrixXd out(n, n); // out(i, a) = (nabla_{d_a} xi)^i
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i) {
            double v = xij[i].grad(a);
            for (int b = 0; b < n; ++b) v += gamma[i](a, b) * xij[b].value;
            out(i, a) = v;
        }
    return out;
}

BasisTensor parse_basis_tensor(const std::string& name) {
    if (name == "R1") return BasisTensor::R1;
    if (name == "R2") return BasisTensor::R2;
    if (name == "R3") return BasisTensor::R3;
    if (name == "R4") return BasisTensor::R4;
    if (name == "R51" || name == "R5,1") return BasisTensor::R51;
    if (name == "R52" || name == "R5,2") return BasisTensor::R52;
    if (name == "R6") return BasisTensor::R6;
    throw UnknownTensorName("no basis tensor named '" + name + "'");
}

Eigen::VectorXd basis_tensor_eval(BasisTensor which, const ContactPointData& d,
                                  const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                                  const Eigen::VectorXd& Z) {
    const auto ip = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return d.ip(a, b); };
    const double etaX = d.eta.dot(X), etaY = d.eta.dot(Y), etaZ = d.eta.dot(Z);

    switch (which) {
    case BasisTensor::R1:
        return ip(Y, Z) * X - ip(X, Z) * Y;
    case BasisTensor::R2: {
        Eigen::VectorXd phiX = d.phi * X, phiY = d.phi * Y, phiZ = d.phi * Z;
        return ip(X, phiZ) * phiY - ip(Y, phiZ) * phiX + 2.0 * ip(X, phiY) * phiZ;
    }
    case BasisTensor::R3:
        return etaX * etaZ * Y - etaY * etaZ * X + ip(X, Z) * etaY * d.xi - ip(Y, Z) * etaX * d.xi;
    case BasisTensor::R4: {
        Eigen::VectorXd hX = d.h * X, hY = d.h * Y;
        return ip(Y, Z) * hX - ip(X, Z) * hY + ip(hY, Z) * X - ip(hX, Z) * Y;
    }
    case BasisTensor::R51: {
        Eigen::VectorXd hX = d.h * X, hY = d.h * Y;
        return ip(hY, Z) * hX - ip(hX, Z) * hY;
    }
    case BasisTensor::R52: {
        Eigen::VectorXd phX = d.phi * (d.h * X), phY = d.phi * (d.h * Y);
        return ip(phY, Z) * phX - ip(phX, Z) * phY;
    }
    case BasisTensor::R6: {
        Eigen::VectorXd hX = d.h * X, hY = d.h * Y;
        return etaX * etaZ * hY - etaY * etaZ * hX + ip(hX, Z) * etaY * d.xi - ip(hY, Z) * etaX * d.xi;
    }
    }
    throw UnknownTensorName("invalid basis tensor enum value");
}

CoefficientValues CoefficientValues::undivided(double f1, double f2, double f3, double f4,
                                               double f5, double f6) {
    CoefficientValues v;
    v.f1 = f1; v.f2 = f2; v.f3 = f3; v.f4 = f4;
    v.f51 = f5; v.f52 = -f5;
    v.f6 = f6;
    return v;
}

Eigen::VectorXd assemble_curvature(const ContactPointData& d, const CoefficientValues& f,
                                   const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                                   const Eigen::VectorXd& Z) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(d.dim());
    if (f.f1 != 0.0) out += f.f1 * basis_tensor_eval(BasisTensor::R1, d, X, Y, Z);
    if (f.f2 != 0.0) out += f.f2 * basis_tensor_eval(BasisTensor::R2, d, X, Y, Z);
    if (f.f3 != 0.0) out += f.f3 * basis_tensor_eval(BasisTensor::R3, d, X, Y, Z);
    if (f.f4 != 0.0) out += f.f4 * basis_tensor_eval(BasisTensor::R4, d, X, Y, Z);
    if (f.f51 != 0.0) out += f.f51 * basis_tensor_eval(BasisTensor::R51, d, X, Y, Z);
    if (f.f52 != 0.0) out += f.f52 * basis_tensor_eval(BasisTensor::R52, d, X, Y, Z);
    if (f.f6 != 0.0) out += f.f6 * basis_tensor_eval(BasisTensor::R6, d, X, Y, Z);
    return out;
}

CoefficientValues preset_coefficients(const CoefficientPreset& preset) {
    if (const auto* km = std::get_if<KmSpaceFormPreset>(&preset)) {
        return CoefficientValues::undivided((km->c + 3.0) / 4.0,
                                            (km->c - 1.0) / 4.0,
                                            (km->c + 3.0) / 4.0 - km->kappa,
                                            1.0,
                                            0.5,
                                            1.0 - km->mu);
    }
    if (const auto* gs = std::get_if<GeneralizedSasakianPreset>(&preset)) {
        return CoefficientValues::undivided(gs->f1, gs->f2, gs->f3, 0.0, 0.0, 0.0);
    }
    const auto& nk = std::get<NonSasakianKmDividedPreset>(preset);
    if (nk.kappa == 1.0)
        throw KappaOne("the non-Sasakian divided preset requires kappa != 1");
    CoefficientValues v;
    v.f1 = (2.0 - nk.mu) / 2.0;
    v.f2 = -nk.mu / 2.0;
    v.f3 = (2.0 - nk.mu - 2.0 * nk.kappa) / 2.0;
    v.f4 = 1.0;
    v.f51 = (2.0 - nk.mu) / (2.0 * (1.0 - nk.kappa));
    v.f52 = (2.0 * nk.kappa - nk.mu) / (2.0 * (1.0 - nk.kappa));
    v.f6 = 1.0 - nk.mu;
    return v;
}

GeneralizedKMSpaceForm GeneralizedKMSpaceForm::with_constant_coefficients(
    AlmostContactStructure s, const CoefficientValues& f, bool divided_input) {
    GeneralizedKMSpaceForm form;
    const int n = s.dim;
    form.structure = std::move(s);
    form.divided_input = divided_input;
    form.coeff = {ScalarField::constant(n, f.f1), ScalarField::constant(n, f.f2),
                  ScalarField::constant(n, f.f3), ScalarField::constant(n, f.f4),
                  ScalarField::constant(n, f.f51), ScalarField::constant(n, f.f52),
                  ScalarField::constant(n, f.f6)};
    return form;
}

CoefficientValues GeneralizedKMSpaceForm::coefficients_at(const Point& p) const {
    CoefficientValues v;
    v.f1 = coeff[0].value(p);
    v.f2 = coeff[1].value(p);
    v.f3 = coeff[2].value(p);
    v.f4 = coeff[3].value(p);
    v.f51 = coeff[4].value(p);
    v.f52 = coeff[5].value(p);
    v.f6 = coeff[6].value(p);
    return v;
}

Eigen::VectorXd GeneralizedKMSpaceForm::curvature(const Point& p, const Eigen::VectorXd& X,
                                                  const Eigen::VectorXd& Y,
                                                  const Eigen::VectorXd& Z) const {
    return assemble_curvature(structure.at(p), coefficients_at(p), X, Y, Z);
}

GeneralizedKMSpaceForm standard_sasakian(int m) {
    if (m < 1) throw DimensionMismatch("standard Sasakian model needs m >= 1");
    const int n = 2 * m + 1;
    const int z = 2 * m;
    auto yvar = [m](int i) { return Expr::var(m + i); };

    AlmostContactStructure s;
    s.dim = n;

    // eta = (dz - sum y_i dx_i) / 2
    s.eta.dim = n;
    s.eta.comp.assign(n, ScalarField::constant(n, 0.0));
    for (int i = 0; i < m; ++i)
        s.eta.comp[i] = ScalarField::from_expr(n, Expr::constant(-0.5) * yvar(i));
    s.eta.comp[z] = ScalarField::constant(n, 0.5);

    // xi = 2 d_z
    s.xi.dim = n;
    s.xi.comp.assign(n, ScalarField::constant(n, 0.0));
    s.xi.comp[z] = ScalarField::constant(n, 2.0);

    // phi d_x_i = -d_y_i, phi d_y_i = d_x_i + y_i d_z, phi d_z = 0
    s.phi = TensorField11::zero(n);
    for (int i = 0; i < m; ++i) {
        s.phi.at(m + i, i) = ScalarField::constant(n, -1.0);
        s.phi.at(i, m + i) = ScalarField::constant(n, 1.0);
        s.phi.at(z, m + i) = ScalarField::from_expr(n, yvar(i));
    }

    // g = eta (x) eta + (1/4) sum (dx_i^2 + dy_i^2)
    std::vector<Expr> comp(static_cast<std::size_t>(n) * n, Expr::constant(0.0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Expr gij = Expr::constant(0.25) * yvar(i) * yvar(j);
            if (i == j) gij = gij + Expr::constant(0.25);
            comp[i * n + j] = gij;
        }
    for (int i = 0; i < m; ++i) {
        comp[(m + i) * n + (m + i)] = Expr::constant(0.25);
        Expr giz = Expr::constant(-0.25) * yvar(i);
        comp[i * n + z] = giz;
        comp[z * n + i] = giz;
    }
    comp[z * n + z] = Expr::constant(0.25);
    s.g = MetricField::from_exprs(n, comp);

    // Sasakian: h vanishes identically.
    s.analytic_h = TensorField11::zero(n);

    CoefficientValues f = preset_coefficients(KmSpaceFormPreset{-3.0, 1.0, 0.0});
    return GeneralizedKMSpaceForm::with_constant_coefficients(std::move(s), f, false);
}

Eigen::VectorXd sasakian_residual(const AlmostContactStructure& s, const Point& p,
                                  const Eigen::VectorXd& X, const Eigen::VectorXd& Y) {
    const int n = s.dim;
    Christoffels gamma = christoffel(s.g, p);
    std::vector<ScalarJet> phij(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) phij[i * n + j] = s.phi.at(i, j).jet(p);

    Eigen::MatrixXd phi(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) phi(i, j) = phij[i * n + j].value;

    // (nabla_a phi)^i_j = d_a phi^i_j + Gamma^i_ab phi^b_j - Gamma^b_aj phi^i_b
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (int a = 0; a < n; ++a) {
        if (X(a) == 0.0) continue;
        for (int j = 0; j < n; ++j) {
            if (Y(j) == 0.0) continue;
            double c = X(a) * Y(j);
            for (int i = 0; i < n; ++i) {
                double v = phij[i * n + j].grad(a);
                for (int b = 0; b < n; ++b)
                    v += gamma[i](a, b) * phi(b, j) - gamma[b](a, j) * phi(i, b);
                out(i) += c * v;
            }
        }
    }

    Eigen::MatrixXd g = s.g.value(p);
    Eigen::VectorXd xi = s.xi.value(p);
    Eigen::VectorXd eta = s.eta.value(p);
    out -= X.dot(g * Y) * xi;
    out += eta.dot(Y) * X;
    return out;
}

double phi_sectional(const AlmostContactStructure& s, const Point& p, const Eigen::VectorXd& X) {
    Eigen::VectorXd phiX = s.phi.value(p) * X;
    return sectional_curvature(s.g, p, X, phiX);
}

} // namespace dwp
