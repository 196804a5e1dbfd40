#pragma once

// Seeded random germs for the oracle suites. Coefficients are uniform on
// [-1, 1]; the cross-cap stratum additionally keeps |b0'(0)| and |b2(0)|
// at least 0.2.

#include <random>
#include <utility>

#include "frontal/heights.hpp"
#include "frontal/surfaces.hpp"

namespace frontal {

using Rng = std::mt19937_64;

inline constexpr double kStratumMargin = 0.2;

EdgeCoefficients random_folded(Rng& rng, int order = kDefaultOrder);
EdgeCoefficients random_prefold(Rng& rng, int order = kDefaultOrder);

/// (gamma2, gamma3) with gamma(0) = 0, |gamma2''(0)| >= 0.2.
std::pair<Jet1, Jet1> random_curve(Rng& rng, int order = kDefaultOrder);
/// As above with det(gamma', gamma'', gamma''')(0) = 0.
std::pair<Jet1, Jet1> random_zero_torsion_curve(Rng& rng, int order = kDefaultOrder);

Direction3 random_direction(Rng& rng);

}  // namespace frontal
