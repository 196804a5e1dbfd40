#include "frontal/folded.hpp"
#include "frontal/sampling.hpp"
#include "support.hpp"

using namespace frontal;

namespace {

constexpr double kTol = 1e-9;

Curve3 curve(const Jet1& a, const Jet1& b, const Jet1& c) { return {{a, b, c}}; }

}  // namespace

TEST_CASE("zero coefficients give zero invariants") {
  const EdgeCoefficients c = EdgeCoefficients::zero(8);
  // b0 = 0 makes the fold degenerate; use the prefold germ with b2 = 1 and
  // check that only kappa_c survives.
  EdgeCoefficients p = c;
  p.b2 = Jet1::constant(8, 1.0);
  const FrontalData fd = frontal_structure(normal_form(p, EdgeMode::Prefold));
  CHECK(kappa_s(fd).max_abs() <= 1e-14);
  CHECK(kappa_nu(fd).max_abs() <= 1e-14);
  CHECK(kappa_t(fd).max_abs() <= 1e-14);
  CHECK(kappa_c(fd)[0] == doctest::Approx(6.0));
}

TEST_CASE("prefold closed forms on random germs") {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    EdgeCoefficients c = random_prefold(rng);
    if (std::abs(c.b2[0]) < kStratumMargin) c.b2.coeff(0) = kStratumMargin;
    const FrontalData fd = frontal_structure(normal_form(c, EdgeMode::Prefold));
    const EdgeValuesAtZero v = prefold_closed_form(c);
    CHECK(rel_close(std::abs(kappa_s(fd)[0]), std::abs(c.a.derivative_at_zero(2)), kTol));
    CHECK(rel_close(kappa_s(fd)[0], v.ks, kTol));
    CHECK(rel_close(kappa_nu(fd)[0], c.b0.derivative_at_zero(2), kTol));
    CHECK(rel_close(kappa_c(fd)[0], 6.0 * c.b2[0], kTol));
    CHECK(rel_close(kappa_t(fd)[0], 2.0 * c.b1.derivative_at_zero(1), kTol));
    CHECK(rel_close(kappa_nu(fd)[0], v.kn, kTol));
    CHECK(rel_close(kappa_t(fd)[0], v.kt, kTol));
    CHECK(rel_close(kappa_c(fd)[0], v.kc, kTol));
  }
}

TEST_CASE("folded germ: closed values at 0") {
  Rng rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const FrontalData fd = frontal_structure(folded_germ(c));
    const double b0p = c.b0[1];
    CHECK(rel_close(kappa_s(fd)[0], c.a.derivative_at_zero(2), kTol));
    CHECK(rel_close(kappa_nu(fd)[0], 2.0 * b0p * b0p, kTol));
    CHECK(rel_close(kappa_t(fd)[0], 4.0 * c.b1[0] * b0p, kTol));
    CHECK(std::abs(kappa_c(fd)[0]) <= 1e-12);
    CHECK(rel_close(kappa_c(fd).derivative_at_zero(1), 12.0 * c.b2[0] * b0p, kTol));
  }
}

TEST_CASE("model cross-cap: kappa_c vanishes at 0 and is linear to first order") {
  const FrontalData fd = frontal_structure(model_cross_cap(8));
  const Jet1 kc = kappa_c(fd);
  CHECK(std::abs(kc[0]) <= 1e-14);
  CHECK(std::abs(kc[1]) > 1.0);
}

TEST_CASE("bias: closed forms, b1 = 0, and the gate") {
  Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    EdgeCoefficients c = random_folded(rng);
    if (trial % 10 == 0) c.b1 = Jet1(c.order());
    const FrontalData fd = frontal_structure(folded_germ(c));
    const BiasResult r = bias_and_secondary(fd);
    CHECK(rel_close(r.B, 24.0 * c.b1[0] * c.b1[0], kTol));
    CHECK(rel_close(r.kappa_c_r, 720.0 * c.b1[0] * c.b2[0], kTol));
  }
  EdgeCoefficients p = EdgeCoefficients::zero(8);
  p.b2 = Jet1::constant(8, 1.0);
  try {
    bias_and_secondary(frontal_structure(normal_form(p, EdgeMode::Prefold)));
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotApplicable);
  }
}

TEST_CASE("bias does not depend on the admissible null field") {
  Rng rng(80);
  std::uniform_real_distribution<double> g(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const FrontalData fd = frontal_structure(folded_germ(c));
    const BiasResult base = bias_and_secondary(fd);
    const int n = c.order();
    const Jet2 x = Jet2::x(n), y = Jet2::y(n);
    const Jet2 s = base.alpha * y + base.beta * (y * y);
    const double gamma = g(rng), delta = g(rng);
    const VectorField2 plus_xy{s + gamma * (x * y), Jet2::constant(n, 1.0)};
    const VectorField2 scaled{(1.0 + delta * x) * s, 1.0 + delta * x};
    for (const VectorField2& et : {plus_xy, scaled}) {
      const BiasResult r = bias_and_secondary(fd, et);
      CHECK(rel_close(r.B, base.B, kTol));
      CHECK(rel_close(r.kappa_c_r, base.kappa_c_r, kTol));
    }
    // A field violating the constraints is rejected.
    const VectorField2 plain{Jet2(n), Jet2::constant(n, 1.0)};
    if (std::abs(base.alpha) > 1e-6) {
      CHECK_THROWS_AS(bias_and_secondary(fd, plain), Error);
    }
  }
}

TEST_CASE("bias is unchanged by the source change x -> x + c y^2 + e y^3") {
  // Reparametrizing the source keeps the frontal; evaluated through a fresh
  // frontal structure with xi = d/dx and the compensated null field.
  Rng rng(81);
  std::uniform_real_distribution<double> g(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const MapGerm3 phi = folded_germ(c);
    const int n = c.order();
    const Jet2 x = Jet2::x(n), y = Jet2::y(n);
    const double cc = g(rng), e = g(rng);
    const MapGerm3 psi = compose(phi, x + cc * (y * y) + e * (y * y * y), y);
    // eta = d/dy - (2 c y + 3 e y^2) d/dx is null for psi on y = 0 to the needed order.
    const Jet2 corr = -(2.0 * cc * y + 3.0 * e * (y * y));
    const FrontalData fd = frontal_structure(psi, VectorField2::partial_x(n), VectorField2{corr, Jet2::constant(n, 1.0)});
    const BiasResult r = bias_and_secondary(fd);
    CHECK(rel_close(r.B, 24.0 * c.b1[0] * c.b1[0], 1e-8));
    CHECK(rel_close(r.kappa_c_r, 720.0 * c.b1[0] * c.b2[0], 1e-8));
  }
}

TEST_CASE("regular curve invariants") {
  const Jet1 t = Jet1::variable(6);
  const RegularCurveInvariants a = curve_invariants_regular(curve(t, 0.5 * t * t, Jet1(6)));
  CHECK(a.kappa == doctest::Approx(1.0));
  REQUIRE(a.tau.has_value());
  CHECK(std::abs(*a.tau) <= 1e-14);

  // helix (cos t, sin t, t) shifted to the origin: kappa = 1/2, tau = 1/2
  const Jet1 cs(6, {0, 0, -0.5, 0, 1.0 / 24, 0, -1.0 / 720});
  const Jet1 sn(6, {0, 1, 0, -1.0 / 6, 0, 1.0 / 120});
  const RegularCurveInvariants h = curve_invariants_regular(curve(cs, sn, t));
  CHECK(h.kappa == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(*h.tau == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(curve_invariants_regular(curve(t * t, Jet1(6), Jet1(6))), Error);

  Rng rng(82);
  for (int trial = 0; trial < 50; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const RegularCurveInvariants s = curve_invariants_regular(restrict_y0(folded_germ(c)));
    const double a2 = c.a.derivative_at_zero(2), a3 = c.a.derivative_at_zero(3);
    const double p1 = c.b0.derivative_at_zero(1), p2 = c.b0.derivative_at_zero(2);
    const double den = a2 * a2 + 4.0 * std::pow(p1, 4);
    CHECK(rel_close(s.kappa, std::sqrt(den), kTol));
    CHECK(rel_close(*s.tau, 2.0 * p1 * (3.0 * a2 * p2 - a3 * p1) / den, kTol));
  }
}

TEST_CASE("singular curve invariants") {
  const Jet1 t = Jet1::variable(6);
  const SingularCurveInvariants a = curve_invariants_singular(curve(t * t, t * t * t, Jet1(6)));
  CHECK(a.type == SingularCurveType::Type23);
  REQUIRE(a.kappa_sing.has_value());
  CHECK(*a.kappa_sing == doctest::Approx(12.0 / std::pow(2.0, 2.5)));

  const SingularCurveInvariants b = curve_invariants_singular(curve(t * t, Jet1(6), Jet1(6)));
  CHECK(b.type == SingularCurveType::AType);
  CHECK_FALSE(b.tau_sing.has_value());

  // (t^2, t^3, t^4): tau_sing = sqrt|g''| det(g'', g''', g'''') / |g'' x g'''|^2
  const SingularCurveInvariants c = curve_invariants_singular(curve(t * t, t * t * t, t * t * t * t));
  REQUIRE(c.tau_sing.has_value());
  CHECK(*c.tau_sing == doctest::Approx(std::sqrt(2.0) * 2 * 6 * 24 / 144.0));
}

TEST_CASE("singular invariants of the double point curve") {
  Rng rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const DpcDerivatives d = dpc_derivatives(double_point_curve(c));
    REQUIRE(d.tilde.sigma_sing.has_value());
    CHECK(std::abs(*d.tilde.sigma_sing) <= 1e-8);
  }
}

TEST_CASE("direct report fills optional entries") {
  Rng rng(84);
  const EdgeCoefficients c = random_folded(rng);
  const InvariantReport r = direct_report(frontal_structure(folded_germ(c)));
  CHECK(r.B.has_value());
  CHECK(r.kappa_c_r.has_value());
  CHECK(r.curve_kappa.has_value());
  CHECK(r.provenance == Provenance::Direct);
}
