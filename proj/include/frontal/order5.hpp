#pragma once

#include <array>
#include <string>
#include <vector>

#include "frontal/folded.hpp"

namespace frontal {

/// Degree <= 5 coefficients of the folded germ
/// (x, sum f_i x^i + y^2/2, sum g_ij x^i y^j).
struct Jet5Coefficients {
  std::array<double, 6> f{};                 // f[i], i = 2..5
  std::array<std::array<double, 6>, 6> g{};  // g[i][j], 2 <= i + j <= 5
};

/// Read from the jets of fold(normal_form(c)).
Jet5Coefficients expand_to_5jet(const EdgeCoefficients& c);
/// The same coefficients from the explicit monomial expansion in a, b0, b1, b2, b3.
Jet5Coefficients printed_expansion(const EdgeCoefficients& c);

/// The 16 invariants at 0, in the order
/// ks ks' ks'' ks''' kn kn' kn'' kn''' kt kt' kt'' kc' kc'' B kc^r tau_sing.
struct SixteenInvariants {
  std::array<double, 16> values{};
  static const std::array<const char*, 16>& names();
};

SixteenInvariants sixteen_invariants(const EdgeCoefficients& c);

struct DictionaryRelation {
  std::string name;  // e.g. "g32"
  double lhs = 0.0;  // coefficient from the jet expansion
  double rhs_printed = 0.0;
  double rhs = 0.0;  // right-hand side reproduced by the jets
  bool printed_holds = false;
  bool holds = false;
};

/// The thirteen coefficient/invariant relations f2 f3 f4 g20 g30 g40 g12 g22
/// g32 g13 g23 g04 g05, each with the printed and the reproduced right-hand side.
std::vector<DictionaryRelation> invariant_dictionary(const EdgeCoefficients& c, double tol = 1e-9);

struct DeterminationResult {
  bool determined = false;
  std::vector<std::string> differing_invariants;
  std::vector<std::string> differing_coefficients;
  std::array<double, 16> invariant_delta{};
};

DeterminationResult determination_check(const EdgeCoefficients& c1, const EdgeCoefficients& c2, double tol = 1e-9);

struct SensitivityEntry {
  std::string coefficient;  // e.g. "b1[2]" (coefficient of x^2 in b1)
  double max_change = 0.0;
  bool detected = false;
};

/// Perturbs each coefficient entering a degree <= 5 monomial of the folded
/// germ by `step` and records the largest change among the 16 invariants.
std::vector<SensitivityEntry> sensitivity_grid(const EdgeCoefficients& c, double step = 1e-3, double threshold = 1e-6);

}  // namespace frontal
