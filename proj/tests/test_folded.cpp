#include "frontal/folded.hpp"
#include "frontal/sampling.hpp"
#include "support.hpp"

using namespace frontal;

namespace {

constexpr double kTol = 1e-9;

bool vec_close(const Vec3d& a, const Vec3d& b, double tol) {
  for (int i = 0; i < 3; ++i) {
    if (!rel_close(a[i], b[i], tol)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("closed-form invariants agree with direct jets") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const FrontalData fd = frontal_structure(folded_germ(c));
    const Jet1 direct[4] = {kappa_s(fd), kappa_nu(fd), kappa_t(fd), kappa_c(fd)};
    const CuspInvValues v = cuspinv_closed_form(c);
    const double* closed[4] = {v.ks, v.kn, v.kt, v.kc};
    for (int k = 0; k < 4; ++k) {
      for (int d = 0; d < 3; ++d) {
        CHECK(rel_close(direct[k].derivative_at_zero(d), closed[k][d], kTol));
      }
    }
    const EdgeFunctions ef = cuspinv_functions(c);
    CHECK(testing::max_diff(ef.kappa_s, direct[0]) <= 1e-8);
    CHECK(testing::max_diff(ef.kappa_nu, direct[1]) <= 1e-8);
  }
}

TEST_CASE("edge curve: curvature and torsion from the frontal invariants") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const FrontalData fd = frontal_structure(folded_germ(c));
    const Jet1 ks = kappa_s(fd), kn = kappa_nu(fd), kt = kappa_t(fd);
    const RegularCurveInvariants g = curve_invariants_regular(restrict_y0(folded_germ(c)));
    const double s0 = ks[0], n0 = kn[0];
    CHECK(rel_close(g.kappa * g.kappa, s0 * s0 + n0 * n0, kTol));
    const double tau = (s0 * kn[1] - ks[1] * n0) / (s0 * s0 + n0 * n0) + kt[0];
    CHECK(rel_close(*g.tau, tau, kTol));
    const EdgeCurveClosedForm cf = edge_curve_closed_form(c);
    CHECK(rel_close(cf.kappa, g.kappa, kTol));
    CHECK(rel_close(cf.tau, *g.tau, kTol));
  }
}

TEST_CASE("double point curve") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const DoublePointCurve d = double_point_curve(c);
    // f(d(y), y) and f(d(y), -y) coincide
    const MapGerm3 f = folded_germ(c);
    const int n = d.d.order();
    const Jet1 y = Jet1::variable(n);
    for (int i = 0; i < 3; ++i) {
      const Jet1 p = compose(f[i], d.d, y), m = compose(f[i], d.d, -1.0 * y);
      CHECK(testing::max_diff(p, m) <= 1e-10);
    }
    // d is even
    for (int k = 1; k <= n; k += 2) CHECK(std::abs(d.d[k]) <= 1e-12);
    const DpcClosedForm cf = dpc_closed_form(c);
    CHECK(rel_close(d.d2, cf.d2, kTol));
    CHECK(rel_close(d.d4, cf.d4, kTol));
    const DpcDerivatives dv = dpc_derivatives(d);
    CHECK(vec_close(dv.dhat2, cf.dhat2, kTol));
    CHECK(vec_close(dv.dhat4, cf.dhat4, kTol));
    CHECK(vec_close(dv.dtilde2, cf.dtilde2, kTol));
    CHECK(vec_close(dv.dtilde3, cf.dtilde3, kTol));
    CHECK(rel_close(dv.dhat6[2], cf.dhat6_z, kTol));
    REQUIRE(dv.tilde.kappa_sing.has_value());
    CHECK(rel_close(*dv.tilde.kappa_sing, cf.kappa_sing, 1e-8));
  }
}

TEST_CASE("printed dhat4 differs from the jet value by a factor") {
  Rng rng(14);
  const EdgeCoefficients c = random_folded(rng);
  const DpcClosedForm cf = dpc_closed_form(c);
  const Vec3d twelve{12 * cf.dhat4_printed[0], 12 * cf.dhat4_printed[1], 12 * cf.dhat4_printed[2]};
  CHECK(vec_close(twelve, cf.dhat4, kTol));
}

TEST_CASE("limits along the double point curve") {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const DpcLimits l = dpc_limits(double_point_curve(c));
    CHECK(rel_close(l.numeric_kappa_sq, l.exact_kappa_sq, 1e-5));
    CHECK(rel_close(l.proof_kappa_sq * 4.0, l.exact_kappa_sq, kTol));
    if (l.exact_tau && l.numeric_tau) CHECK(rel_close(*l.numeric_tau, *l.exact_tau, 1e-5));
  }
}

TEST_CASE("frenet_at on a helix") {
  const Jet1 cs(10, {0, 0, -0.5, 0, 1.0 / 24, 0, -1.0 / 720, 0, 1.0 / 40320});
  const Jet1 sn(10, {0, 1, 0, -1.0 / 6, 0, 1.0 / 120, 0, -1.0 / 5040, 0, 1.0 / 362880});
  const CurveAt v = frenet_at({{cs, sn, Jet1::variable(10)}}, 0.0L);
  CHECK(static_cast<double>(v.kappa_sq) == doctest::Approx(0.25));
  CHECK(static_cast<double>(v.tau) == doctest::Approx(0.5));
}

TEST_CASE("not a cross-cap") {
  Rng rng(16);
  EdgeCoefficients c = random_folded(rng);
  c.b0.coeff(1) = 0.0;
  try {
    double_point_curve(c);
    FAIL("expected NotCrossCap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCrossCap);
  }
}

TEST_CASE("closed-form report provenance") {
  Rng rng(17);
  const InvariantReport r = closed_form_invariants(random_folded(rng));
  CHECK(r.provenance == Provenance::ClosedForm);
  CHECK(r.B.has_value());
}
