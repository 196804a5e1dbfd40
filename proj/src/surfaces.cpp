#include "frontal/surfaces.hpp"

#include <string>

namespace frontal {

EdgeCoefficients EdgeCoefficients::zero(int order) {
  return {Jet1(order), Jet1(order), Jet1(order), Jet1(order), Jet2(order)};
}

void validate(const EdgeCoefficients& c, EdgeMode mode, double tol) {
  const int n = c.order();
  if (c.b0.order() != n || c.b1.order() != n || c.b2.order() != n || c.b3.order() != n) {
    throw Error(ErrorCode::OrderMismatch, "edge coefficients must share one order");
  }
  auto need_zero = [tol](double v, const char* what) {
    if (std::abs(v) > tol) throw Error(ErrorCode::ConstraintViolation, std::string(what) + " must vanish");
  };
  need_zero(c.a[0], "a(0)");
  need_zero(c.a[1], "a'(0)");
  need_zero(c.b0[0], "b0(0)");
  if (mode == EdgeMode::Prefold) {
    need_zero(c.b0[1], "b0'(0)");
    need_zero(c.b1[0], "b1(0)");
  }
}

MapGerm3 normal_form(const EdgeCoefficients& c, EdgeMode mode) {
  validate(c, mode);
  const int n = c.order();
  const Jet2 y = Jet2::y(n);
  const Jet2 y2 = y * y;
  const Jet2 y3 = y2 * y;
  Jet2 second = Jet2::in_x(c.a) + 0.5 * y2;
  Jet2 third = Jet2::in_x(c.b0) + Jet2::in_x(c.b1) * y2 + Jet2::in_x(c.b2) * y3 + c.b3 * (y2 * y2);
  return make_germ(Jet2::x(n), std::move(second), std::move(third));
}

MapGerm3 fold(const MapGerm3& f) { return make_germ(f[0], f[1], f[2] * f[2]); }

bool operator==(const SkClass& a, const SkClass& b) {
  return a.kind == b.kind && a.k == b.k && a.sign == b.sign;
}

SkClass classify_sk(const EdgeCoefficients& c, EdgeMode mode, double tol) {
  const Jet1& tested = mode == EdgeMode::Prefold ? c.b2 : c.b0;
  const int first = mode == EdgeMode::Prefold ? 0 : 1;
  SkClass out;
  if (mode == EdgeMode::Prefold && std::abs(c.b2[0]) > tol) {
    out.kind = SkClass::Kind::CuspidalEdge;
    out.k = -1;
    out.sign = c.b2[0] > 0 ? 1 : -1;
    return out;
  }
  for (int m = std::max(first, 1); m <= tested.order(); ++m) {
    const double d = tested.derivative_at_zero(m);
    if (std::abs(d) > tol) {
      out.kind = SkClass::Kind::Sk;
      out.k = m - 1;
      out.sign = d > 0 ? 1 : -1;
      return out;
    }
  }
  return out;
}

FrontalData frontal_structure(const MapGerm3& f, const VectorField2& xi, const VectorField2& eta) {
  const int n = order_of(f);
  if (n < 2) throw Error(ErrorCode::OrderExhausted, "frontal structure needs order >= 2");
  const MapGerm3 xf = xi.apply(f);
  const MapGerm3 ef_over_y = divide_by_monomial(eta.apply(f), 0, 1);
  const int m = order_of(ef_over_y);
  const MapGerm3 raw = cross(truncated(xf, m), ef_over_y);
  const Jet2 sq = dot(raw, raw);
  if (sq.coeff(0, 0) < 1e-24) {
    throw Error(ErrorCode::NormalDegenerate, "xi f and eta f / y are parallel at the origin");
  }
  const Jet2 inv_norm = pow_rational(sq, -1, 2);

  FrontalData fd;
  fd.f = f;
  fd.nu = inv_norm * raw;
  fd.lambda = det3(truncated(d_dx(f), m), truncated(d_dy(f), m), fd.nu);
  fd.xi = xi;
  fd.eta = eta;
  fd.eta_lambda0 = fd.lambda.order() >= 1 ? eta.apply(fd.lambda).coeff(0, 0) : 0.0;
  fd.first_kind = std::abs(fd.eta_lambda0) > 1e-12;
  return fd;
}

FrontalData frontal_structure(const MapGerm3& f) {
  const int n = order_of(f);
  return frontal_structure(f, VectorField2::partial_x(n), VectorField2::partial_y(n));
}

namespace {

// g(u) + v g'(u) as a jet in (u, v) of the order of g.
Jet2 ruled_component(const Jet1& g) {
  const int n = g.order();
  const Jet1 dg = g.derivative();
  const Jet1 padded(n, dg.coeffs());
  return Jet2::in_x(g) + Jet2::in_x(padded) * Jet2::y(n);
}

}  // namespace

DevelopableGerm tangent_developable(const Jet1& gamma2, const Jet1& gamma3) {
  const int n = gamma2.order();
  if (gamma3.order() != n) throw Error(ErrorCode::OrderMismatch, "curve components must share one order");
  if (gamma2[0] != 0.0 || gamma3[0] != 0.0) {
    throw Error(ErrorCode::ConstraintViolation, "the curve must pass through the origin");
  }
  // Curvature of (u, g2, g3) at 0 vanishes iff g2''(0) = g3''(0) = 0.
  if (std::hypot(gamma2[2], gamma3[2]) < 1e-12) {
    throw Error(ErrorCode::NotFirstKind, "curve has zero curvature at 0; the origin is not of the first kind");
  }
  DevelopableGerm d;
  d.f = make_germ(Jet2::x(n) + Jet2::y(n), ruled_component(gamma2), ruled_component(gamma3));
  d.lambda = Jet2::y(n);
  d.xi = VectorField2::partial_x(n);
  d.eta = {Jet2::constant(n, 1.0), Jet2::constant(n, -1.0)};
  d.frontal = frontal_structure(d.f, d.xi, d.eta);
  return d;
}

MapGerm3 model_cross_cap(int order) { return model_sk(0, 0, order); }

MapGerm3 model_sk(int k, int sign, int order) {
  if (k < 0) throw Error(ErrorCode::ConstraintViolation, "k must be non-negative");
  Jet2 third = Jet2::monomial(order, k + 1, 3);
  if (sign != 0) third += Jet2::monomial(order, 0, 5, sign > 0 ? 1.0 : -1.0);
  return make_germ(Jet2::x(order), Jet2::monomial(order, 0, 2), std::move(third));
}

Vec3d osculating_normal_of_edge(const EdgeCoefficients& c) {
  const double b0p = c.b0.derivative_at_zero(1);
  return {{0.0, -2.0 * b0p * b0p, c.a.derivative_at_zero(2)}};
}

}  // namespace frontal
