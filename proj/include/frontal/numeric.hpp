#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>

namespace frontal {

/// |a - b| <= tol * max(1, |a|, |b|). The floor of 1 keeps quantities that
/// vanish identically from demanding a relative match against rounding noise.
inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double rel_error(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double max_abs_of(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace frontal
