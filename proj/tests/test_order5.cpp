#include "frontal/order5.hpp"
#include "frontal/sampling.hpp"
#include "support.hpp"

#include <algorithm>

using namespace frontal;

TEST_CASE("5-jet expansion matches the monomial formula") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    const Jet5Coefficients a = expand_to_5jet(c), b = printed_expansion(c);
    for (int i = 2; i <= 5; ++i) CHECK(rel_close(a.f[i], b.f[i], 1e-10));
    for (int i = 0; i <= 5; ++i) {
      for (int j = 0; i + j <= 5; ++j) {
        if (i + j < 2 || (i == 5 && j == 0)) continue;
        CHECK(rel_close(a.g[i][j], b.g[i][j], 1e-10));
      }
    }
  }
}

TEST_CASE("the fold kills odd powers of the third component") {
  Rng rng(22);
  const Jet5Coefficients a = expand_to_5jet(random_folded(rng));
  for (int i = 0; i <= 5; ++i) {
    for (int j = 1; i + j <= 5; j += 2) {
      if (j == 3 || j == 5) continue;
      CHECK(std::abs(a.g[i][j]) <= 1e-12);
    }
  }
}

TEST_CASE("dictionary relations hold in the reproduced form") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rel = invariant_dictionary(random_folded(rng));
    REQUIRE(rel.size() == 13);
    for (const auto& r : rel) {
      INFO(r.name);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("invariants determine the 5-jet") {
  Rng rng(24);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const EdgeCoefficients c = random_folded(rng);
    EdgeCoefficients t = c;
    for (int k = 6; k <= c.order(); ++k) t.a.coeff(k) += u(rng);
    for (int k = 3; k <= c.order(); ++k) t.b1.coeff(k) += u(rng);
    CHECK(determination_check(c, t).determined);
    EdgeCoefficients s = c;
    s.b1.coeff(0) += 0.25;
    const DeterminationResult d = determination_check(c, s);
    CHECK_FALSE(d.determined);
    CHECK_FALSE(d.differing_invariants.empty());
  }
}

TEST_CASE("sensitivity grid detects every low coefficient") {
  Rng rng(25);
  const auto grid = sensitivity_grid(random_folded(rng));
  CHECK(grid.size() >= 14);
  const auto detected = std::count_if(grid.begin(), grid.end(), [](const SensitivityEntry& e) { return e.detected; });
  CHECK(detected >= 14);
}

TEST_CASE("sixteen invariants have names") {
  CHECK(SixteenInvariants::names().size() == 16);
  Rng rng(26);
  const SixteenInvariants s = sixteen_invariants(random_folded(rng));
  for (double v : s.values) CHECK(std::isfinite(v));
}
