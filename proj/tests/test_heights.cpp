#include "frontal/heights.hpp"
#include "frontal/sampling.hpp"
#include "support.hpp"

#include <numbers>

using namespace frontal;
using testing::poly;

namespace {

bool is_a(const ContactClass& c, int k, int sign = 0) {
  return c.kind == ContactClass::Kind::A && c.k == k && (sign == 0 || c.sign == sign);
}

}  // namespace

TEST_CASE("detect_ak_1d examples") {
  const Jet1 t = Jet1::variable(8);
  const AkResult a1 = detect_ak_1d(t * t);
  CHECK(a1.k == 1);
  CHECK(a1.sign == 1);
  const AkResult a3 = detect_ak_1d(-1.0 * (t * t * t * t) + t * t * t * t * t * t);
  CHECK(a3.k == 3);
  CHECK(a3.sign == -1);
  const AkResult a5 = detect_ak_1d(t * t * t * t * t * t);
  CHECK(a5.k == 5);
  CHECK(a5.sign == 1);
  CHECK(detect_ak_1d(Jet1(8)).flat);
  // a coefficient inside the unresolved band
  const AkResult band = detect_ak_1d(1e-8 * (t * t) + t * t * t);
  CHECK(band.ambiguous);
}

TEST_CASE("two-variable classification") {
  const int n = 8;
  const Jet2 x = Jet2::x(n), y = Jet2::y(n);
  CHECK(is_a(classify_height_germ(x * x + y * y), 1, 1));
  CHECK(is_a(classify_height_germ(x * x - y * y), 1, -1));
  CHECK(is_a(classify_height_germ(x * x + y * y * y * y), 3, 1));
  CHECK(is_a(classify_height_germ(x * x + y * y * y), 2));
  CHECK(classify_height_germ(x * x).kind == ContactClass::Kind::TangentConeDegenerate);
  CHECK(classify_height_germ(x * y * y).kind == ContactClass::Kind::Corank2);
  CHECK(classify_height_germ(x + y * y).kind == ContactClass::Kind::Regular);
  // rotated: (x + y)^2 + y^4
  const Jet2 r = (x + y) * (x + y) + y * y * y * y;
  CHECK(is_a(classify_height_germ(r), 3, 1));
  CHECK_THROWS_AS(splitting_reduce(x * x + y * y), Error);
}

TEST_CASE("xy^3 + x^2 + b xy^2 + c y^4") {
  const int n = 8;
  const Jet2 x = Jet2::x(n), y = Jet2::y(n);
  const double b = 0.6;
  for (double c : {1.0, -1.0}) {
    const Jet2 h = x * y * y * y + x * x + b * x * y * y + c * y * y * y * y;
    // eliminating x gives (c - b^2/4) y^4 + ...
    const ContactClass k = classify_height_germ(h);
    CHECK(is_a(k, 3, c - b * b / 4 > 0 ? 1 : -1));
  }
  const Jet2 h4 = x * y * y * y + x * x + b * x * y * y + (b * b / 4) * y * y * y * y;
  CHECK(classify_height_germ(h4).k >= 4);
}

TEST_CASE("directions") {
  const Direction3 v = Direction3::from(3, 0, 4);
  CHECK(v.v1 == doctest::Approx(0.6));
  CHECK(v.v3 == doctest::Approx(0.8));
  try {
    Direction3::from(0, 0, 0);
    FAIL("expected InvalidDirection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidDirection);
  }
}

TEST_CASE("v1 != 0 gives a nonsingular height function") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const Direction3 v = random_direction(rng);
    const Jet2 h = height_function(folded_germ(c), v);
    CHECK(singular_at_origin(h) == (std::abs(v.v1) <= 1e-12));
    CHECK(classify_height_germ(height_function(folded_germ(c), Direction3::from(1, 0, 0))).kind ==
          ContactClass::Kind::Regular);
  }
}

TEST_CASE("strata: both paths agree on the expected class") {
  Rng rng(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const double t = unit(rng);
    const DualPathClass g = classify_along_dpc(c, stratum_direction(c, Stratum::Generic, t));
    CHECK(g.agree);
    CHECK(is_a(g.result, 1));
    const DualPathClass tan = classify_along_dpc(c, stratum_direction(c, Stratum::DpcTangent, t));
    CHECK(tan.agree);
    CHECK(is_a(tan.result, 3));
    const DualPathClass osc = classify_along_dpc(c, stratum_direction(c, Stratum::DpcOsculating, t));
    CHECK(is_a(osc.result, 5));
    const DualPathClass e = classify_along_edge(c, stratum_direction(c, Stratum::EdgeOsculating, t));
    CHECK(e.agree);
    CHECK(is_a(e.result, 2));
    const Direction3 cone = stratum_direction(c, Stratum::TangentCone, t);
    CHECK(classify_height_germ(height_function(folded_germ(c), cone)).kind ==
          ContactClass::Kind::TangentConeDegenerate);
  }
}

TEST_CASE("stratum names") {
  for (auto s : {Stratum::Generic, Stratum::DpcTangent, Stratum::DpcOsculating, Stratum::EdgeOsculating,
                 Stratum::TangentCone}) {
    CHECK(parse_stratum(to_string(s)) == s);
  }
  CHECK_FALSE(parse_stratum("nope").has_value());
}

TEST_CASE("tangent developable of a zero-torsion curve never gives A3") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [g2, g3] = random_zero_torsion_curve(rng);
    const DevelopableGerm d = tangent_developable(g2, g3);
    for (int k = 0; k < 100; ++k) {
      const double th = std::numbers::pi * k / 100.0;
      const ContactClass cls =
          classify_height_germ(height_function(d.f, Direction3::from(0.0, std::cos(th), std::sin(th))));
      CHECK_FALSE(is_a(cls, 3));
    }
  }
}

TEST_CASE("logarithmic vector fields") {
  const ThetaReport r = verify_theta_generators();
  CHECK(r.all_ok());
  CHECK(r.euler_combination);
  CHECK(r.euler_multiplier);
  CHECK(r.generators.size() >= 4);
  CHECK(normal_form_table().size() == 6);
}
