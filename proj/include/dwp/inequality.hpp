#pragma once

#include <string>

#include "dwp/submanifold.hpp"

namespace dwp {

// Chen's algebraic lemma: l >= 2 reals a_1..a_l and b with
// (sum a_i)^2 = (l-1)(sum a_i^2 + b) satisfy 2 a_1 a_2 >= b, with equality
// iff a_1 + a_2 = a_3 = ... = a_l.
struct ChenLemmaInstance {
    std::vector<double> a;
    double b = 0.0;
};

struct ChenGapResult {
    double gap = 0.0;       // 2 a1 a2 - b
    bool equality = false;  // tail condition within tolerance
};

// Throws ConstraintViolated when the defining identity fails beyond
// constraint_tol (relative to the magnitude of its terms).
ChenGapResult chen_gap(const ChenLemmaInstance& inst, double constraint_tol = 1e-9,
                       double equality_tol = 1e-9);

struct InequalityReport {
    Point point;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;                  // rhs - lhs
    double mixed_sigma_residual = 0.0;
    double partial_mean_mismatch = 0.0;  // |n1 H1 - n2 H2|
    bool equality_flag = false;          // |slack| <= tolerance
    bool diagnostics_pass = false;       // both residuals <= tolerance
    bool consistent = false;             // equality_flag == diagnostics_pass
    double rhs_cross_residual = 0.0;     // closed-form vs generic rhs (theorem only)
    CTotallyRealReport ctr;              // theorem only
};

// Warped-product inequality report:
//   lhs  = warping-Laplacian term of the product,
//   rhs  = (n^2/4)|H|^2 + tau~(T_pM) - tau~(T_pM1) - tau~(T_pM2),
// with equality iff the immersion is mixed totally geodesic and
// n1 H1 = n2 H2. Negative slack beyond -tolerance signals an engine bug or
// invalid input and is surfaced by the caller as a violation.
InequalityReport proposition_slack(const IsometricImmersion& imm, const Point& p,
                                   double equality_tol = 1e-8);

// Per-factor restriction data of a symmetric tangent operator.
struct OperatorRestrictionData {
    double tr_full = 0.0, tr_m1 = 0.0, tr_m2 = 0.0;
    double sq_full = 0.0, sq_m1 = 0.0, sq_m2 = 0.0; // squared Frobenius norms

    static OperatorRestrictionData from_matrix(const Eigen::MatrixXd& op, int n1);
};

// Closed-form scalar curvature of a k-plane with anti-invariant basis:
//   tau~(P) = (k(k-1)/2) f1 + (k-1) f4 tr(hT|P)
//           + (f51/2) {tr(hT|P)^2 - |hT|P|^2} - (f52/2) {tr(Axi|P)^2 - |Axi|P|^2}.
// hP and AP are the plane restrictions in an orthonormal plane basis.
double tau_plane_closed_form(const CoefficientValues& f, const Eigen::MatrixXd& hP,
                             const Eigen::MatrixXd& AP);

// The coefficient expression shared by the theorem right-hand side and the
// obstruction conditions:
//   E = n1 n2 f1 + f4 (n2 tr(hT|M1) + n1 tr(hT|M2))
//     + (f51/2) {tr(hT)^2 - tr(hT|M1)^2 - tr(hT|M2)^2 - |hT|^2 + |hT|M1|^2 + |hT|M2|^2}
//     - (f52/2) {same pattern with Axi}.
double warped_coefficient_expression(const CoefficientValues& f, int n1, int n2,
                                     const OperatorRestrictionData& hT,
                                     const OperatorRestrictionData& Axi);

// C-totally real warped-product inequality in a generalized (kappa, mu)-space
// form with divided R5: rhs = (n^2/4)|H|^2 + warped_coefficient_expression.
// Requires the C-totally real report to pass at p (NotCTotallyReal otherwise).
InequalityReport theorem_slack(const IsometricImmersion& imm, const Point& p,
                               double equality_tol = 1e-8, double ctr_tol = 1e-8);

enum class ObstructionBranch { Harmonic, Eigenfunction };

struct ObstructionScenario {
    ObstructionBranch branch = ObstructionBranch::Harmonic;
    int n1 = 1, n2 = 1;
    CoefficientValues coefficients;
    OperatorRestrictionData hT;
    OperatorRestrictionData Axi;
    double lambda = 0.0; // eigenfunction branch, must be > 0
};

enum class ObstructionVerdictKind { RuledOut, MustBeMixedTotallyGeodesic, NoObstruction };

struct ObstructionVerdict {
    ObstructionVerdictKind kind = ObstructionVerdictKind::NoObstruction;
    double expression = 0.0;
};

std::string to_string(ObstructionVerdictKind kind);

// Harmonic branch: E < 0 rules out minimal C-totally real immersions,
// E = 0 (within 1e-12) forces mixed totally geodesic, E > 0 gives no verdict.
// Eigenfunction branch: lambda > 0 with f4 = f51 = f52 = 0 and f1 <= 0 rules
// the immersion out (InvalidScenario when lambda <= 0 or coefficients do not
// match the branch).
ObstructionVerdict obstruction_report(const ObstructionScenario& s);

} // namespace dwp
