#pragma once

#include <doctest.h>

#include <cmath>
#include <random>

#include "frontal/jet.hpp"
#include "frontal/numeric.hpp"

namespace testing {

inline frontal::Jet2 random_jet2(std::mt19937_64& rng, int order, bool zero_constant = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  frontal::Jet2 j(order);
  for (int d = 0; d <= order; ++d) {
    for (int k = 0; k <= d; ++k) j.set(d - k, k, u(rng));
  }
  if (zero_constant) j.set(0, 0, 0.0);
  return j;
}

inline frontal::Jet1 random_jet1(std::mt19937_64& rng, int order, bool zero_constant = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  frontal::Jet1 j(order);
  for (int k = 0; k <= order; ++k) j.coeff(k) = u(rng);
  if (zero_constant) j.coeff(0) = 0.0;
  return j;
}

inline double max_diff(const frontal::Jet2& a, const frontal::Jet2& b) {
  double m = 0.0;
  const int n = std::max(a.order(), b.order());
  for (int d = 0; d <= n; ++d) {
    for (int k = 0; k <= d; ++k) m = std::max(m, std::abs(a.coeff(d - k, k) - b.coeff(d - k, k)));
  }
  return m;
}

inline double max_diff(const frontal::Jet1& a, const frontal::Jet1& b) {
  double m = 0.0;
  for (int k = 0; k <= std::max(a.order(), b.order()); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

// Jet2 from a list of (i, j, value).
struct Term {
  int i, j;
  double v;
};
inline frontal::Jet2 poly(int order, std::initializer_list<Term> terms) {
  frontal::Jet2 p(order);
  for (const Term& t : terms) p.coeff_ref(t.i, t.j) += t.v;
  return p;
}

}  // namespace testing
