#pragma once

#include <optional>

#include "frontal/invariants.hpp"

namespace frontal {

/// Values at 0 of the four invariants of the folded germ and their first two
/// derivatives, as closed expressions in the edge coefficients.
struct CuspInvValues {
  double ks[3];
  double kn[3];
  double kt[3];
  double kc[3];
};

CuspInvValues cuspinv_closed_form(const EdgeCoefficients& c);

/// kappa_s, kappa_nu, kappa_t, kappa_c of the folded germ as functions of x,
/// evaluated from the explicit expressions in a, b0, b1, b2 and their
/// derivatives.
struct EdgeFunctions {
  Jet1 kappa_s, kappa_nu, kappa_t, kappa_c;
};

EdgeFunctions cuspinv_functions(const EdgeCoefficients& c);

struct EdgeCurveClosedForm {
  double kappa;
  double tau;
};

EdgeCurveClosedForm edge_curve_closed_form(const EdgeCoefficients& c);

/// Closed-form report (kappa jets carry value, first and second derivative).
InvariantReport closed_form_invariants(const EdgeCoefficients& c);

struct DoublePointCurve {
  EdgeCoefficients source;
  Jet1 d;          // x = d(y)
  Curve3 d_tilde;  // f(d(y), y)
  Curve3 d_hat;    // phi(d(y), y)
  double d2 = 0.0;
  double d4 = 0.0;
};

/// Solves the even-in-y part of the third component for x = d(y).
/// Throws NotCrossCap when b0'(0) = 0.
DoublePointCurve double_point_curve(const EdgeCoefficients& c);

struct DpcDerivatives {
  Vec3d dhat2, dhat4, dhat6;
  Vec3d dtilde2, dtilde3, dtilde4;
  SingularCurveInvariants tilde;
};

/// Throws DegenerateDPC when dhat''(0) x dhat''''(0) vanishes.
DpcDerivatives dpc_derivatives(const DoublePointCurve& dpc);

/// Closed-form values along the double point curve. Where the printed
/// expression and the one reproduced by the jets differ, both are kept.
struct DpcClosedForm {
  double d2, d4;
  double numer;  // 2 b3(0,0) b0'^2 - 2 b0' b1' b1 + b1^2 b0''
  Vec3d dtilde2, dtilde3, dtilde4;
  Vec3d dhat2;
  Vec3d dhat4_printed;
  Vec3d dhat4;
  double dhat6_z;
  double kappa_sing_printed, kappa_sing;
  double tau_sing_printed, tau_sing;
  double lim_kappa_sq_display;
  std::optional<double> lim_tau_display;
};

DpcClosedForm dpc_closed_form(const EdgeCoefficients& c);

struct DpcLimits {
  double proof_kappa_sq = 0.0;  // |P x Q|^2 / (36 |P|^6)
  double exact_kappa_sq = 0.0;  // |P x Q|^2 / (9 |P|^6)
  std::optional<double> proof_tau;  // 4 det(P, Q, R) / (5 |P x Q|^2)
  std::optional<double> exact_tau;  // det(P, Q, R) / (5 |P x Q|^2)
  double numeric_kappa_sq = 0.0;
  std::optional<double> numeric_tau;
  double display_kappa_sq = 0.0;
  std::optional<double> display_tau;
};

/// P, Q, R = dhat'', dhat'''', dhat^(6) at 0. The numeric values come from
/// Richardson extrapolation of kappa^2(y), tau(y) at y = 1e-2, 5e-3, 2.5e-3.
/// Torsion entries are empty when P x Q vanishes.
DpcLimits dpc_limits(const DoublePointCurve& dpc);

/// Curvature squared and torsion of a regular polynomial space curve at t.
struct CurveAt {
  long double kappa_sq;
  long double tau;
};
CurveAt frenet_at(const Curve3& g, long double t);

/// Values at 0 of the four invariants of the unfolded cuspidal edge
/// (prefold coefficients): a'', b0'', 2 b1', 6 b2(0).
struct EdgeValuesAtZero {
  double ks, kn, kt, kc;
};
EdgeValuesAtZero prefold_closed_form(const EdgeCoefficients& c);

}  // namespace frontal
