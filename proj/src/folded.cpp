#include "frontal/folded.hpp"

#include <array>
#include <cmath>

namespace frontal {

namespace {

struct Derivs {
  double a2, a3, a4;
  double b0p, b0pp, b0ppp;
  double b1, b1p, b1pp;
  double b2, b2p;
  double b3;
};

Derivs derivs_of(const EdgeCoefficients& c) {
  Derivs d{};
  d.a2 = c.a.derivative_at_zero(2);
  d.a3 = c.a.derivative_at_zero(3);
  d.a4 = c.a.derivative_at_zero(4);
  d.b0p = c.b0.derivative_at_zero(1);
  d.b0pp = c.b0.derivative_at_zero(2);
  d.b0ppp = c.b0.derivative_at_zero(3);
  d.b1 = c.b1[0];
  d.b1p = c.b1.derivative_at_zero(1);
  d.b1pp = c.b1.derivative_at_zero(2);
  d.b2 = c.b2[0];
  d.b2p = c.b2.derivative_at_zero(1);
  d.b3 = c.b3.coeff(0, 0);
  return d;
}

}  // namespace

CuspInvValues cuspinv_closed_form(const EdgeCoefficients& c) {
  validate(c, EdgeMode::Folded);
  const Derivs d = derivs_of(c);
  const double p = d.b0p, p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
  CuspInvValues v{};
  v.ks[0] = d.a2;
  v.ks[1] = 8.0 * d.b1 * p3 + d.a3;
  v.ks[2] = 16.0 * p3 * d.b1p - 16.0 * p4 * d.a2 - 3.0 * d.a2 * d.a2 * d.a2 + d.a4 -
            8.0 * d.b1 * p2 * (2.0 * d.b1 * d.a2 - 7.0 * d.b0pp);
  v.kn[0] = 2.0 * p2;
  v.kn[1] = 2.0 * p * (-2.0 * d.b1 * d.a2 + 3.0 * d.b0pp);
  v.kn[2] = -32.0 * d.b1 * d.b1 * p4 - 24.0 * p4 * p2 - 4.0 * p2 * d.a2 * d.a2 + 6.0 * d.b0pp * d.b0pp -
            4.0 * d.b1 * (d.a2 * d.b0pp + 2.0 * p * d.a3) + p * (-8.0 * d.b1p * d.a2 + 8.0 * d.b0ppp);
  v.kt[0] = 4.0 * d.b1 * p;
  v.kt[1] = -2.0 * p2 * d.a2 + 8.0 * p * d.b1p + 4.0 * d.b1 * d.b0pp;
  v.kt[2] = -2.0 * (64.0 * d.b1 * d.b1 * d.b1 * p3 - 6.0 * d.b1p * d.b0pp +
                    p * (6.0 * d.a2 * d.b0pp - 6.0 * d.b1pp + p * d.a3) +
                    d.b1 * (32.0 * p4 * p - 4.0 * p * d.a2 * d.a2 - 2.0 * d.b0ppp));
  v.kc[0] = 0.0;
  v.kc[1] = 12.0 * d.b2 * p;
  v.kc[2] = 12.0 * (2.0 * p * d.b2p + d.b2 * d.b0pp);
  return v;
}

EdgeFunctions cuspinv_functions(const EdgeCoefficients& c) {
  validate(c, EdgeMode::Folded);
  const int m = c.order() - 2;
  const Jet1 a1 = c.a.derivative().truncated(m);
  const Jet1 a2 = c.a.derivative().derivative();
  const Jet1 b0 = c.b0.truncated(m);
  const Jet1 b0p = c.b0.derivative().truncated(m);
  const Jet1 b0pp = c.b0.derivative().derivative();
  const Jet1 b1 = c.b1.truncated(m);
  const Jet1 b1p = c.b1.derivative().truncated(m);
  const Jet1 b2 = c.b2.truncated(m);

  const Jet1 b0sq = b0 * b0;
  const Jet1 A = 1.0 + a1 * a1 + 4.0 * b0sq * b0p * b0p;
  const Jet1 inner = b0p - 2.0 * b1 * a1;
  const Jet1 B = 1.0 + 16.0 * b0sq * b1 * b1 + 4.0 * b0sq * inner * inner;

  EdgeFunctions e;
  const Jet1 ks_num = 4.0 * b0sq * (b0p * (b0p * a2 - a1 * b0pp) + 2.0 * b1 * (-1.0 * a1 * b0p * a2 + b0pp + a1 * a1 * b0pp)) +
                      4.0 * b0 * b0p * b0p * (2.0 * b1 * (1.0 + a1 * a1) - a1 * b0p) + a2;
  e.kappa_s = ks_num * pow_rational(A, -3, 2) * pow_rational(B, -1, 2);

  e.kappa_nu = 2.0 * (b0p * b0p + b0 * (-2.0 * b1 * a2 + b0pp)) * recip(A) * pow_rational(B, -1, 2);

  const Jet1 b0cu = b0sq * b0;
  const Jet1 kt_num = 2.0 * b0 * a1 * a1 * b1p + 2.0 * b0 * b1p + 8.0 * b0cu * b0p * b0p * b1p +
                      16.0 * b0cu * b1 * b1 * b0p * a2 - a1 * b0p * b0p - a1 * b0 * b0pp +
                      2.0 * b1 * (b0 * a1 * a2 + b0p + a1 * a1 * b0p - 4.0 * b0cu * b0pp * b0p);
  e.kappa_t = 2.0 * kt_num * recip(A * B);

  e.kappa_c = 12.0 * b0 * b2 * pow_rational(A, 3, 4) * pow_rational(B, -5, 4);
  return e;
}

EdgeCurveClosedForm edge_curve_closed_form(const EdgeCoefficients& c) {
  const Derivs d = derivs_of(c);
  const double den = d.a2 * d.a2 + 4.0 * std::pow(d.b0p, 4);
  return {std::sqrt(den), 2.0 * d.b0p * (3.0 * d.a2 * d.b0pp - d.a3 * d.b0p) / den};
}

InvariantReport closed_form_invariants(const EdgeCoefficients& c) {
  const CuspInvValues v = cuspinv_closed_form(c);
  const Derivs d = derivs_of(c);
  InvariantReport r;
  r.provenance = Provenance::ClosedForm;
  r.kappa_s = Jet1::from_derivatives(2, v.ks);
  r.kappa_nu = Jet1::from_derivatives(2, v.kn);
  r.kappa_t = Jet1::from_derivatives(2, v.kt);
  r.kappa_c = Jet1::from_derivatives(2, v.kc);
  r.B = 24.0 * d.b1 * d.b1;
  r.kappa_c_r = 720.0 * d.b1 * d.b2;
  const EdgeCurveClosedForm e = edge_curve_closed_form(c);
  r.curve_kappa = e.kappa;
  r.curve_tau = e.tau;
  if (std::abs(d.b0p) > 1e-12 && std::abs(d.b2) > 1e-12) {
    const DpcClosedForm dc = dpc_closed_form(c);
    SingularCurveInvariants s;
    s.type = SingularCurveType::Type23;
    s.kappa_sing = dc.kappa_sing;
    s.tau_sing = dc.tau_sing;
    s.sigma_sing = 0.0;
    r.sing = s;
  }
  return r;
}

DoublePointCurve double_point_curve(const EdgeCoefficients& c) {
  validate(c, EdgeMode::Folded);
  const double b0p = c.b0.derivative_at_zero(1);
  if (std::abs(b0p) < 1e-12) throw Error(ErrorCode::NotCrossCap, "b0'(0) = 0: the fold is not a cuspidal cross-cap");
  const int n = c.order();
  const MapGerm3 f = normal_form(c, EdgeMode::Folded);
  const Jet2 even = f[2].even_in_y();
  const Jet2 even_x = even.d_dx();
  const Jet1 t = Jet1::variable(n);

  // Newton on jets: each step at least doubles the number of correct terms.
  Jet1 d(n);
  for (int iter = 0; iter < 2 * n + 2; ++iter) {
    const Jet1 residual = compose(even, d, t);
    if (residual.max_abs() <= 1e-15 * std::max(1.0, even.max_abs())) break;
    const Jet1 slope = compose(even_x, d.truncated(n - 1), t.truncated(n - 1));
    // residual(0) = 0, so the unknown top coefficient of the slope never enters.
    d -= residual * recip(Jet1(n, slope.coeffs()));
  }

  DoublePointCurve out;
  out.source = c;
  out.d = d;
  out.d_tilde = compose(f, d, t);
  out.d_hat = compose(fold(f), d, t);
  out.d2 = d.derivative_at_zero(2);
  out.d4 = d.derivative_at_zero(4);
  return out;
}

DpcDerivatives dpc_derivatives(const DoublePointCurve& dpc) {
  DpcDerivatives r;
  r.dhat2 = derivative_at_zero(dpc.d_hat, 2);
  r.dhat4 = derivative_at_zero(dpc.d_hat, 4);
  r.dhat6 = derivative_at_zero(dpc.d_hat, 6);
  r.dtilde2 = derivative_at_zero(dpc.d_tilde, 2);
  r.dtilde3 = derivative_at_zero(dpc.d_tilde, 3);
  r.dtilde4 = derivative_at_zero(dpc.d_tilde, 4);
  if (norm(cross(r.dhat2, r.dhat4)) <= 1e-10 * std::max(1.0, norm(r.dhat2) * norm(r.dhat4))) {
    throw Error(ErrorCode::DegenerateDPC, "dhat''(0) and dhat''''(0) are parallel; no osculating plane");
  }
  r.tilde = curve_invariants_singular(dpc.d_tilde);
  return r;
}

DpcClosedForm dpc_closed_form(const EdgeCoefficients& c) {
  const Derivs d = derivs_of(c);
  if (std::abs(d.b0p) < 1e-12) throw Error(ErrorCode::NotCrossCap, "b0'(0) = 0: the fold is not a cuspidal cross-cap");
  const double p = d.b0p, p2 = p * p, p3 = p2 * p;
  DpcClosedForm r{};
  r.numer = 2.0 * d.b3 * p2 - 2.0 * p * d.b1p * d.b1 + d.b1 * d.b1 * d.b0pp;
  r.d2 = -2.0 * d.b1 / p;
  r.d4 = -12.0 * r.numer / p3;
  r.dtilde2 = {{r.d2, 1.0, 0.0}};
  r.dtilde3 = {{0.0, 0.0, 6.0 * d.b2}};
  r.dtilde4 = {{-12.0 * r.numer / p3, 12.0 * d.b1 * d.b1 * d.a2 / p2, 0.0}};
  r.dhat2 = {{r.d2, 1.0, 0.0}};
  r.dhat4_printed = {{-r.numer / p3, d.b1 * d.b1 * d.a2 / p2, 0.0}};
  r.dhat4 = scale(r.dhat4_printed, 12.0);
  r.dhat6_z = 720.0 * d.b2 * d.b2;

  const double t2 = 1.0 + 4.0 * d.b1 * d.b1 / p2;
  const double tau_num = r.numer - 2.0 * d.b1 * d.b1 * d.b1 * d.a2;
  r.kappa_sing_printed = 6.0 * std::abs(d.b2) * std::pow(t2, 0.75);
  r.kappa_sing = 6.0 * std::abs(d.b2) * std::pow(t2, -0.75);
  r.tau_sing_printed = -2.0 * std::sqrt(t2) * tau_num / (d.b2 * p * (4.0 * d.b1 * d.b1 + p2));
  r.tau_sing = -2.0 * tau_num / (d.b2 * p3 * std::pow(t2, 0.75));

  const double q = r.numer / (324.0 * std::pow(4.0 * d.b1 * d.b1 + p2, 3));
  r.lim_kappa_sq_display = q * q;
  if (r.numer != 0.0) r.lim_tau_display = 48.0 * d.b2 * d.b2 * p3 / r.numer;
  return r;
}

namespace {

using LVec = std::array<long double, 3>;

LVec lcross(const LVec& a, const LVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

long double ldot(const LVec& a, const LVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

LVec lderiv(const Curve3& g, int k, long double t) {
  return {g[0].derivative_at(k, t), g[1].derivative_at(k, t), g[2].derivative_at(k, t)};
}

// Two Richardson levels for an even function sampled at h, h/2, h/4.
long double richardson_even(long double f0, long double f1, long double f2) {
  const long double r0 = (4.0L * f1 - f0) / 3.0L;
  const long double r1 = (4.0L * f2 - f1) / 3.0L;
  return (16.0L * r1 - r0) / 15.0L;
}

}  // namespace

CurveAt frenet_at(const Curve3& g, long double t) {
  const LVec d1 = lderiv(g, 1, t);
  const LVec d2 = lderiv(g, 2, t);
  const LVec d3 = lderiv(g, 3, t);
  const LVec c = lcross(d1, d2);
  const long double s = ldot(d1, d1);
  const long double cc = ldot(c, c);
  return {cc / (s * s * s), cc > 0.0L ? ldot(c, d3) / cc : 0.0L};
}

DpcLimits dpc_limits(const DoublePointCurve& dpc) {
  const Vec3d P = derivative_at_zero(dpc.d_hat, 2);
  const Vec3d Q = derivative_at_zero(dpc.d_hat, 4);
  const Vec3d R = derivative_at_zero(dpc.d_hat, 6);
  const double pq2 = dot(cross(P, Q), cross(P, Q));
  const double p6 = std::pow(dot(P, P), 3);

  DpcLimits r;
  r.proof_kappa_sq = pq2 / (36.0 * p6);
  r.exact_kappa_sq = pq2 / (9.0 * p6);
  const bool planar = std::sqrt(pq2) <= 1e-10 * std::max(1.0, norm(P) * norm(Q));
  if (!planar) {
    r.proof_tau = 4.0 * det3(P, Q, R) / (5.0 * pq2);
    r.exact_tau = det3(P, Q, R) / (5.0 * pq2);
  }

  constexpr long double steps[3] = {1e-2L, 5e-3L, 2.5e-3L};
  std::array<CurveAt, 3> at{};
  for (int i = 0; i < 3; ++i) at[i] = frenet_at(dpc.d_hat, steps[i]);
  r.numeric_kappa_sq = static_cast<double>(richardson_even(at[0].kappa_sq, at[1].kappa_sq, at[2].kappa_sq));
  if (!planar) r.numeric_tau = static_cast<double>(richardson_even(at[0].tau, at[1].tau, at[2].tau));

  const DpcClosedForm cf = dpc_closed_form(dpc.source);
  r.display_kappa_sq = cf.lim_kappa_sq_display;
  r.display_tau = cf.lim_tau_display;
  return r;
}

EdgeValuesAtZero prefold_closed_form(const EdgeCoefficients& c) {
  validate(c, EdgeMode::Prefold);
  return {c.a.derivative_at_zero(2), c.b0.derivative_at_zero(2), 2.0 * c.b1.derivative_at_zero(1), 6.0 * c.b2[0]};
}

}  // namespace frontal
