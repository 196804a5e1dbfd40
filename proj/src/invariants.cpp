#include "frontal/invariants.hpp"

#include <algorithm>

namespace frontal {

std::string_view to_string(Provenance p) { return p == Provenance::Direct ? "direct" : "closed-form"; }

std::string_view to_string(SingularCurveType t) {
  switch (t) {
    case SingularCurveType::AType: return "A-type";
    case SingularCurveType::Type23: return "(2,3)-type";
    case SingularCurveType::Degenerate: return "degenerate";
  }
  return "degenerate";
}

namespace {

Curve3 on_edge(const MapGerm3& f) { return restrict_y0(f); }

int min_order(std::initializer_list<int> orders) { return std::min(orders); }

double sign_of_eta_lambda(const FrontalData& fd) { return fd.eta_lambda0 < 0.0 ? -1.0 : 1.0; }

struct CuspFrame {
  Curve3 xf, e2, e3, xe2, xxf;
};

CuspFrame cusp_frame(const FrontalData& fd) {
  const MapGerm3 e2 = directional_derivative(fd.f, fd.eta, 2);
  CuspFrame cf;
  cf.xf = on_edge(fd.xi.apply(fd.f));
  cf.e2 = on_edge(e2);
  cf.e3 = on_edge(fd.eta.apply(e2));
  cf.xe2 = on_edge(fd.xi.apply(e2));
  cf.xxf = on_edge(directional_derivative(fd.f, fd.xi, 2));
  const int m = min_order({order_of(cf.xf), order_of(cf.e2), order_of(cf.e3), order_of(cf.xe2), order_of(cf.xxf)});
  cf.xf = truncated(cf.xf, m);
  cf.e2 = truncated(cf.e2, m);
  cf.e3 = truncated(cf.e3, m);
  cf.xe2 = truncated(cf.xe2, m);
  cf.xxf = truncated(cf.xxf, m);
  return cf;
}

Jet1 positive_sq(const Curve3& v, const char* what) {
  Jet1 s = dot(v, v);
  if (!(s[0] > 1e-24)) throw Error(ErrorCode::NormalDegenerate, std::string(what) + " vanishes at the origin");
  return s;
}

}  // namespace

Jet1 kappa_s(const FrontalData& fd) {
  const Curve3 g1 = derivative(on_edge(fd.f));
  const Curve3 g2 = derivative(g1);
  const Curve3 nu = on_edge(fd.nu);
  const int m = min_order({order_of(g2), order_of(nu)});
  const Curve3 a = truncated(g1, m);
  return sign_of_eta_lambda(fd) * det3(a, truncated(g2, m), truncated(nu, m)) *
         pow_rational(positive_sq(a, "edge velocity"), -3, 2);
}

Jet1 kappa_nu(const FrontalData& fd) {
  const Curve3 g1 = derivative(on_edge(fd.f));
  const Curve3 g2 = derivative(g1);
  const Curve3 nu = on_edge(fd.nu);
  const int m = min_order({order_of(g2), order_of(nu)});
  const Curve3 a = truncated(g1, m);
  return dot(truncated(g2, m), truncated(nu, m)) / positive_sq(a, "edge velocity");
}

Jet1 kappa_c(const FrontalData& fd) {
  const CuspFrame cf = cusp_frame(fd);
  const Jet1 cr = positive_sq(cross(cf.xf, cf.e2), "xi f x eta^2 f");
  return pow_rational(positive_sq(cf.xf, "xi f"), 3, 4) * det3(cf.xf, cf.e2, cf.e3) * pow_rational(cr, -5, 4);
}

Jet1 kappa_t(const FrontalData& fd) {
  const CuspFrame cf = cusp_frame(fd);
  const Jet1 inv_cr = recip(positive_sq(cross(cf.xf, cf.e2), "xi f x eta^2 f"));
  const Jet1 inv_x = recip(positive_sq(cf.xf, "xi f"));
  const Jet1 first = det3(cf.xf, cf.e2, cf.xe2) * inv_cr;
  const Jet1 second = det3(cf.xf, cf.e2, cf.xxf) * dot(cf.xf, cf.e2) * inv_x * inv_cr;
  return first - second;
}

bool kappa_c_vanishes(const Jet1& kc) {
  return std::abs(kc[0]) <= 1e-8 * (1.0 + std::abs(kc.derivative_at_zero(1)));
}

namespace {

VectorField2 corrected_field(const FrontalData& fd, double alpha, double beta) {
  const int n = fd.eta.u_comp.order();
  const Jet2 y = Jet2::y(n);
  const Jet2 s = alpha * y + beta * (y * y);
  return {fd.eta.u_comp + s * fd.xi.u_comp.truncated(n), fd.eta.v_comp + s * fd.xi.v_comp.truncated(n)};
}

struct NullJets {
  Vec3d xf, e2, e3, e4, e5;
};

NullJets null_jets(const FrontalData& fd, const VectorField2& et) {
  NullJets r;
  r.xf = value_at_zero(fd.xi.apply(fd.f));
  MapGerm3 cur = directional_derivative(fd.f, et, 2);
  r.e2 = value_at_zero(cur);
  cur = et.apply(cur);
  r.e3 = value_at_zero(cur);
  cur = et.apply(cur);
  r.e4 = value_at_zero(cur);
  cur = et.apply(cur);
  r.e5 = value_at_zero(cur);
  return r;
}

void check_gate(const FrontalData& fd) {
  const Jet1 kc = kappa_c(fd);
  if (!kappa_c_vanishes(kc)) {
    throw Error(ErrorCode::NotApplicable, "kappa_c(0) does not vanish; bias is defined only off the cuspidal-edge stratum");
  }
}

BiasResult evaluate_bias(const NullJets& j) {
  const Vec3d c = cross(j.xf, j.e2);
  const double cn = norm(c);
  if (cn < 1e-14) throw Error(ErrorCode::NormalDegenerate, "xi f x eta~^2 f vanishes at the origin");
  BiasResult r;
  const double x2 = dot(j.xf, j.xf);
  r.l = dot(j.e3, j.e2) / dot(j.e2, j.e2);
  r.B = x2 * det3(j.xf, j.e2, j.e4) / (cn * cn * cn);
  const Vec3d w = scale(j.e5, 3.0) - scale(j.e4, 10.0 * r.l);
  r.kappa_c_r = std::pow(x2, 1.25) * det3(j.xf, j.e2, w) / std::pow(cn, 3.5);
  return r;
}

}  // namespace

BiasResult bias_and_secondary(const FrontalData& fd) {
  check_gate(fd);
  auto c1 = [&](double a) {
    const NullJets j = null_jets(fd, corrected_field(fd, a, 0.0));
    return dot(j.xf, j.e2);
  };
  const double g0 = c1(0.0);
  const double slope_a = c1(1.0) - g0;
  if (std::abs(slope_a) < 1e-14) throw Error(ErrorCode::NormalDegenerate, "cannot solve for the null-field correction");
  const double alpha = -g0 / slope_a;

  auto c2 = [&](double b) {
    const NullJets j = null_jets(fd, corrected_field(fd, alpha, b));
    return dot(j.xf, j.e3);
  };
  const double h0 = c2(0.0);
  const double slope_b = c2(1.0) - h0;
  if (std::abs(slope_b) < 1e-14) throw Error(ErrorCode::NormalDegenerate, "cannot solve for the null-field correction");
  const double beta = -h0 / slope_b;

  BiasResult r = bias_and_secondary(fd, corrected_field(fd, alpha, beta));
  r.alpha = alpha;
  r.beta = beta;
  return r;
}

BiasResult bias_and_secondary(const FrontalData& fd, const VectorField2& eta_tilde) {
  check_gate(fd);
  const NullJets j = null_jets(fd, eta_tilde);
  const double scale = norm(j.xf) * std::max({norm(j.e2), norm(j.e3), 1.0});
  if (std::abs(dot(j.xf, j.e2)) > 1e-9 * scale || std::abs(dot(j.xf, j.e3)) > 1e-9 * scale) {
    throw Error(ErrorCode::ConstraintViolation, "null field is not orthogonally adapted at the origin");
  }
  return evaluate_bias(j);
}

RegularCurveInvariants curve_invariants_regular(const Curve3& gamma) {
  const Vec3d g1 = derivative_at_zero(gamma, 1);
  const Vec3d g2 = derivative_at_zero(gamma, 2);
  const Vec3d g3 = derivative_at_zero(gamma, 3);
  const double s = norm(g1);
  if (s < 1e-12) throw Error(ErrorCode::RegularityViolation, "gamma'(0) vanishes");
  const Vec3d c = cross(g1, g2);
  const double cn = norm(c);
  RegularCurveInvariants r;
  r.kappa = cn / (s * s * s);
  if (cn > 1e-12 * std::max(1.0, s * norm(g2))) r.tau = det3(g1, g2, g3) / (cn * cn);
  return r;
}

SingularCurveInvariants singular_invariants_from_derivatives(const Vec3d& g2, const Vec3d& g3, const Vec3d& g4) {
  SingularCurveInvariants r;
  const double n2 = norm(g2);
  if (n2 < 1e-12) return r;
  const Vec3d c23 = cross(g2, g3);
  const double cn = norm(c23);
  r.type = SingularCurveType::AType;
  r.kappa_sing = cn / std::pow(n2, 2.5);
  if (cn <= 1e-12 * std::max(1.0, n2 * norm(g3))) return r;
  r.type = SingularCurveType::Type23;
  const double q = dot(g2, g2);
  r.tau_sing = std::sqrt(n2) * det3(g2, g3, g4) / (cn * cn);
  r.sigma_sing = (dot(c23, cross(g2, g4)) - 2.0 * cn * cn * dot(g2, g3) / q) / std::pow(q, 2.75);
  return r;
}

SingularCurveInvariants curve_invariants_singular(const Curve3& gamma) {
  if (norm(derivative_at_zero(gamma, 1)) > 1e-12) return {};
  return singular_invariants_from_derivatives(derivative_at_zero(gamma, 2), derivative_at_zero(gamma, 3),
                                              derivative_at_zero(gamma, 4));
}

InvariantReport direct_report(const FrontalData& fd) {
  InvariantReport r;
  r.provenance = Provenance::Direct;
  r.kappa_s = kappa_s(fd);
  r.kappa_nu = kappa_nu(fd);
  r.kappa_t = kappa_t(fd);
  r.kappa_c = kappa_c(fd);
  if (kappa_c_vanishes(r.kappa_c)) {
    const BiasResult b = bias_and_secondary(fd);
    r.B = b.B;
    r.kappa_c_r = b.kappa_c_r;
    r.l = b.l;
  }
  const Curve3 edge = restrict_y0(fd.f);
  if (norm(derivative_at_zero(edge, 1)) > 1e-12) {
    const RegularCurveInvariants ci = curve_invariants_regular(edge);
    r.curve_kappa = ci.kappa;
    r.curve_tau = ci.tau;
  }
  return r;
}

}  // namespace frontal
