#include "frontal/sampling.hpp"

#include <cmath>

namespace frontal {

namespace {

double uniform(Rng& rng) { return std::uniform_real_distribution<double>(-1.0, 1.0)(rng); }

double away_from_zero(Rng& rng) {
  for (;;) {
    const double v = uniform(rng);
    if (std::abs(v) >= kStratumMargin) return v;
  }
}

void fill(Jet1& j, Rng& rng) {
  for (int k = 0; k <= j.order(); ++k) j.coeff(k) = uniform(rng);
}

EdgeCoefficients random_raw(Rng& rng, int order) {
  EdgeCoefficients c = EdgeCoefficients::zero(order);
  fill(c.a, rng);
  fill(c.b0, rng);
  fill(c.b1, rng);
  fill(c.b2, rng);
  for (int d = 0; d <= order; ++d) {
    for (int j = 0; j <= d; ++j) c.b3.set(d - j, j, uniform(rng));
  }
  c.a.coeff(0) = 0.0;
  c.a.coeff(1) = 0.0;
  c.b0.coeff(0) = 0.0;
  return c;
}

}  // namespace

EdgeCoefficients random_folded(Rng& rng, int order) {
  EdgeCoefficients c = random_raw(rng, order);
  c.b0.coeff(1) = away_from_zero(rng);
  c.b2.coeff(0) = away_from_zero(rng);
  return c;
}

EdgeCoefficients random_prefold(Rng& rng, int order) {
  EdgeCoefficients c = random_raw(rng, order);
  c.b0.coeff(1) = 0.0;
  c.b1.coeff(0) = 0.0;
  return c;
}

std::pair<Jet1, Jet1> random_curve(Rng& rng, int order) {
  Jet1 g2(order), g3(order);
  fill(g2, rng);
  fill(g3, rng);
  g2.coeff(0) = g2.coeff(1) = 0.0;
  g3.coeff(0) = g3.coeff(1) = 0.0;
  g2.coeff(2) = away_from_zero(rng);
  return {g2, g3};
}

std::pair<Jet1, Jet1> random_zero_torsion_curve(Rng& rng, int order) {
  auto [g2, g3] = random_curve(rng, order);
  // g3 agrees with mu * g2 through the cubic term, so g2'' g3''' = g3'' g2'''.
  const double mu = uniform(rng);
  g3.coeff(2) = mu * g2[2];
  g3.coeff(3) = mu * g2[3];
  return {g2, g3};
}

Direction3 random_direction(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const double a = n(rng), b = n(rng), c = n(rng);
    if (a * a + b * b + c * c > 1e-6) return Direction3::from(a, b, c);
  }
}

}  // namespace frontal
