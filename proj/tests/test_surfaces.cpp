#include "frontal/invariants.hpp"
#include "frontal/sampling.hpp"
#include "support.hpp"

using namespace frontal;
using testing::max_diff;
using testing::poly;

namespace {

double pure_x_max(const Jet2& j) {
  double m = 0.0;
  for (int i = 0; i <= j.order(); ++i) m = std::max(m, std::abs(j.coeff(i, 0)));
  return m;
}

}  // namespace

TEST_CASE("normal form examples") {
  const int n = 6;
  EdgeCoefficients c = EdgeCoefficients::zero(n);
  c.b2 = Jet1::constant(n, 1.0);
  const MapGerm3 f = normal_form(c, EdgeMode::Prefold);
  CHECK(max_diff(f[0], Jet2::x(n)) == 0.0);
  CHECK(max_diff(f[1], poly(n, {{0, 2, 0.5}})) == 0.0);
  CHECK(max_diff(f[2], poly(n, {{0, 3, 1.0}})) == 0.0);

  EdgeCoefficients d = EdgeCoefficients::zero(n);
  d.a.coeff(2) = 1.0;
  d.b0.coeff(1) = 1.0;
  const MapGerm3 g = normal_form(d, EdgeMode::Folded);
  CHECK(max_diff(g[1], poly(n, {{2, 0, 1.0}, {0, 2, 0.5}})) == 0.0);
  CHECK(max_diff(g[2], Jet2::x(n)) == 0.0);
  CHECK_THROWS_AS(normal_form(d, EdgeMode::Prefold), Error);

  EdgeCoefficients e = EdgeCoefficients::zero(n);
  e.b2.coeff(1) = 1.0;
  e.b0.coeff(1) = 1.0;
  CHECK(classify_sk(e, EdgeMode::Folded) == SkClass{SkClass::Kind::Sk, 0, 1});

  EdgeCoefficients bad = EdgeCoefficients::zero(n);
  bad.a.coeff(1) = 0.5;
  try {
    normal_form(bad);
    FAIL("expected ConstraintViolation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ConstraintViolation);
  }
}

TEST_CASE("fold examples") {
  const int n = 6;
  const Jet2 x = Jet2::x(n), y = Jet2::y(n);
  const MapGerm3 f = fold(make_germ(x, 0.5 * y * y, x));
  CHECK(max_diff(f[2], x * x) == 0.0);
  CHECK(max_diff(f[1], 0.5 * y * y) == 0.0);

  Rng rng(5);
  const EdgeCoefficients c = random_folded(rng, n);
  const MapGerm3 nf = normal_form(c);
  CHECK(max_diff(fold(nf)[2], nf[2] * nf[2]) == 0.0);
}

TEST_CASE("classify_sk") {
  const int n = 6;
  EdgeCoefficients c = EdgeCoefficients::zero(n);
  c.b2.coeff(0) = 1.0;
  CHECK(classify_sk(c, EdgeMode::Prefold).kind == SkClass::Kind::CuspidalEdge);

  EdgeCoefficients f1 = EdgeCoefficients::zero(n);
  f1.b0.coeff(1) = 1.0;
  CHECK(classify_sk(f1, EdgeMode::Folded) == SkClass{SkClass::Kind::Sk, 0, 1});

  EdgeCoefficients f2 = EdgeCoefficients::zero(n);
  f2.b0.coeff(2) = 1.0;
  const SkClass s1 = classify_sk(f2, EdgeMode::Folded);
  CHECK(s1.kind == SkClass::Kind::Sk);
  CHECK(s1.k == 1);

  EdgeCoefficients pre = EdgeCoefficients::zero(n);
  pre.b2.coeff(2) = -1.0;
  const SkClass s = classify_sk(pre, EdgeMode::Prefold);
  CHECK(s.kind == SkClass::Kind::Sk);
  CHECK(s.k == 1);
  CHECK(s.sign == -1);

  CHECK(classify_sk(EdgeCoefficients::zero(n), EdgeMode::Folded).kind == SkClass::Kind::Degenerate);
}

TEST_CASE("frontal structure of the model cross-cap") {
  const int n = 8;
  const FrontalData fd = frontal_structure(model_cross_cap(n));
  const Vec3d nu0 = value_at_zero(fd.nu);
  CHECK(nu0[0] == doctest::Approx(0.0));
  CHECK(nu0[1] == doctest::Approx(0.0));
  CHECK(nu0[2] == doctest::Approx(1.0));
  CHECK(pure_x_max(fd.lambda) <= 1e-12);

  EdgeCoefficients c = EdgeCoefficients::zero(n);
  c.b2 = Jet1::constant(n, 1.0);
  CHECK(frontal_structure(normal_form(c, EdgeMode::Prefold)).first_kind);
}

TEST_CASE("models") {
  const int n = 8;
  const Jet2 x = Jet2::x(n), y = Jet2::y(n);
  const MapGerm3 cc = model_cross_cap(n);
  CHECK(max_diff(cc[1], y * y) == 0.0);
  CHECK(max_diff(cc[2], x * y * y * y) == 0.0);
  CHECK(max_diff(model_sk(1, 1, n)[2], x * x * y * y * y + y * y * y * y * y) == 0.0);
  CHECK(max_diff(model_sk(0, -1, n)[2], x * y * y * y - y * y * y * y * y) == 0.0);
}

TEST_CASE("frontal properties on random germs") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const bool folded = trial % 2 == 0;
    const EdgeCoefficients c = folded ? random_folded(rng) : random_prefold(rng);
    const MapGerm3 f = folded ? folded_germ(c) : normal_form(c, EdgeMode::Prefold);
    const FrontalData fd = frontal_structure(f);
    CHECK(pure_x_max(fd.lambda) <= 1e-12);
    CHECK(fd.first_kind);
    const Jet2 nn = dot(fd.nu, fd.nu);
    CHECK(max_diff(nn, Jet2::constant(nn.order(), 1.0)) <= 1e-10);
    const int m = fd.nu[0].order();
    const Jet2 t1 = dot(truncated(d_dx(f), m), fd.nu);
    const Jet2 t2 = dot(truncated(divide_by_monomial(d_dy(f), 0, 1), m), fd.nu);
    CHECK(t1.max_abs() <= 1e-10);
    CHECK(t2.max_abs() <= 1e-10);
    // orientation: det(f_x, f_y / y, nu)(0) > 0
    CHECK(det3(value_at_zero(d_dx(f)), value_at_zero(divide_by_monomial(d_dy(f), 0, 1)), value_at_zero(fd.nu)) > 0.0);

    if (folded) {
      const Curve3 edge = restrict_y0(f);
      CHECK(max_diff(edge[0], Jet1::variable(c.order())) == 0.0);
      CHECK(max_diff(edge[1], c.a) <= 1e-12);
      CHECK(max_diff(edge[2], c.b0 * c.b0) <= 1e-12);
    }
  }
}

TEST_CASE("tangent developable") {
  const int n = 8;
  const Jet1 u = Jet1::variable(n);
  const DevelopableGerm d = tangent_developable(0.5 * u * u, u * u * u / 6.0);
  const Jet2 U = Jet2::x(n), V = Jet2::y(n);
  CHECK(max_diff(d.f[0], U + V) == 0.0);
  CHECK(max_diff(d.f[1], 0.5 * U * U + U * V) <= 1e-15);
  CHECK(max_diff(d.f[2], U * U * U / 6.0 + 0.5 * U * U * V) <= 1e-15);
  CHECK(max_diff(d.lambda, V) == 0.0);
  CHECK(d.frontal.first_kind);

  // A curve with vanishing curvature at 0 gives no singular point of the first kind.
  try {
    tangent_developable(u * u * u, Jet1(n));
    FAIL("expected NotFirstKind");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFirstKind);
  }
  // The planar curve (u, u^2, 0) still has nonzero curvature.
  CHECK_NOTHROW(tangent_developable(u * u, Jet1(n)));

  const DevelopableGerm z = tangent_developable(0.5 * u * u, u * u * u * u);
  CHECK(std::abs(kappa_c(z.frontal)[0]) <= 1e-12);
}

TEST_CASE("osculating normal of the edge") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const Curve3 edge = restrict_y0(folded_germ(c));
    const Vec3d n = osculating_normal_of_edge(c);
    CHECK(std::abs(dot(n, derivative_at_zero(edge, 1))) <= 1e-12);
    CHECK(std::abs(dot(n, derivative_at_zero(edge, 2))) <= 1e-12);
  }
}
