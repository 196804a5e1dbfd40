#include "frontal/order5.hpp"

#include "frontal/numeric.hpp"

namespace frontal {

Jet5Coefficients expand_to_5jet(const EdgeCoefficients& c) {
  const MapGerm3 phi = folded_germ(c);
  Jet5Coefficients j;
  for (int i = 2; i <= 5; ++i) j.f[i] = phi[1].coeff(i, 0);
  for (int i = 0; i <= 5; ++i) {
    for (int k = 0; i + k <= 5; ++k) {
      if (i + k >= 2) j.g[i][k] = phi[2].coeff(i, k);
    }
  }
  return j;
}

Jet5Coefficients printed_expansion(const EdgeCoefficients& c) {
  validate(c, EdgeMode::Folded);
  const double a2 = c.a.derivative_at_zero(2), a3 = c.a.derivative_at_zero(3);
  const double a4 = c.a.derivative_at_zero(4), a5 = c.a.derivative_at_zero(5);
  const double p1 = c.b0.derivative_at_zero(1), p2 = c.b0.derivative_at_zero(2);
  const double p3 = c.b0.derivative_at_zero(3), p4 = c.b0.derivative_at_zero(4);
  const double q0 = c.b1[0], q1 = c.b1.derivative_at_zero(1), q2 = c.b1.derivative_at_zero(2);
  const double r0 = c.b2[0], r1 = c.b2.derivative_at_zero(1);
  const double s0 = c.b3.coeff(0, 0);

  Jet5Coefficients j;
  j.f[2] = a2 / 2.0;
  j.f[3] = a3 / 6.0;
  j.f[4] = a4 / 24.0;
  j.f[5] = a5 / 120.0;
  j.g[2][0] = p1 * p1;
  j.g[3][0] = p1 * p2;
  j.g[1][2] = 2.0 * p1 * q0;
  j.g[4][0] = p1 * p3 / 3.0 + p2 * p2 / 4.0;
  j.g[2][2] = 2.0 * p1 * q1 + p2 * q0;
  j.g[1][3] = 2.0 * p1 * r0;
  j.g[0][4] = q0 * q0;
  j.g[5][0] = p1 * p4 / 12.0 + p2 * p3 / 3.0;
  j.g[3][2] = p1 * q2 + p2 * q1 + p3 * q0 / 3.0;
  j.g[2][3] = 2.0 * p1 * r1 + p2 * r0;
  j.g[1][4] = 2.0 * (q0 * q1 + p1 * s0);
  j.g[0][5] = 2.0 * q0 * r0;
  return j;
}

const std::array<const char*, 16>& SixteenInvariants::names() {
  static const std::array<const char*, 16> n = {
      "kappa_s", "kappa_s'", "kappa_s''", "kappa_s'''", "kappa_nu", "kappa_nu'", "kappa_nu''", "kappa_nu'''",
      "kappa_t", "kappa_t'", "kappa_t''", "kappa_c'", "kappa_c''", "B",         "kappa_c^r",  "tau_sing"};
  return n;
}

SixteenInvariants sixteen_invariants(const EdgeCoefficients& c) {
  const FrontalData fd = frontal_structure(folded_germ(c));
  const Jet1 ks = kappa_s(fd), kn = kappa_nu(fd), kt = kappa_t(fd), kc = kappa_c(fd);
  const BiasResult b = bias_and_secondary(fd);
  const DoublePointCurve dpc = double_point_curve(c);
  const SingularCurveInvariants si = curve_invariants_singular(dpc.d_tilde);

  SixteenInvariants s;
  auto& v = s.values;
  for (int k = 0; k < 4; ++k) {
    v[k] = ks.derivative_at_zero(k);
    v[4 + k] = kn.derivative_at_zero(k);
  }
  for (int k = 0; k < 3; ++k) v[8 + k] = kt.derivative_at_zero(k);
  v[11] = kc.derivative_at_zero(1);
  v[12] = kc.derivative_at_zero(2);
  v[13] = b.B;
  v[14] = b.kappa_c_r;
  v[15] = si.tau_sing.value_or(0.0);
  return s;
}

std::vector<DictionaryRelation> invariant_dictionary(const EdgeCoefficients& c, double tol) {
  const Jet5Coefficients j = expand_to_5jet(c);
  const FrontalData fd = frontal_structure(folded_germ(c));
  const Jet1 KS = kappa_s(fd), KN = kappa_nu(fd), KT = kappa_t(fd), KC = kappa_c(fd);
  const BiasResult b = bias_and_secondary(fd);
  const double ks = KS[0], ks1 = KS.derivative_at_zero(1), ks2 = KS.derivative_at_zero(2);
  const double kn = KN[0], kn1 = KN.derivative_at_zero(1), kn2 = KN.derivative_at_zero(2);
  const double kt = KT[0], kt1 = KT.derivative_at_zero(1), kt2 = KT.derivative_at_zero(2);
  const double kc1 = KC.derivative_at_zero(1), kc2 = KC.derivative_at_zero(2);

  std::vector<DictionaryRelation> out;
  auto add = [&](const char* name, double lhs, double printed, double reproduced) {
    DictionaryRelation r;
    r.name = name;
    r.lhs = lhs;
    r.rhs_printed = printed;
    r.rhs = reproduced;
    r.printed_holds = rel_close(lhs, printed, tol);
    r.holds = rel_close(lhs, reproduced, tol);
    out.push_back(std::move(r));
  };
  auto same = [&](const char* name, double lhs, double rhs) { add(name, lhs, rhs, rhs); };

  same("f2", j.f[2], ks / 2.0);
  same("f3", j.f[3], (ks1 - kn * kt) / 6.0);
  {
    const double printed = (ks2 - kn * kt1 - 2.0 * kn1 * kt + 3.0 * kn * kn * ks + 3.0 * ks * ks * ks) / 24.0;
    add("f4", j.f[4], printed, printed - ks * kt * kt / 24.0);
  }
  same("g20", j.g[2][0], kn / 2.0);
  same("g30", j.g[3][0], (kn1 + kt * ks) / 6.0);
  {
    const double common = kn2 + kt1 * ks + 2.0 * kt * ks1 + 3.0 * kn * ks * ks;
    add("g40", j.g[4][0], (common + kn * kn * kn - 3.0 * kt * kt * kn) / 24.0,
        (common + 3.0 * kn * kn * kn - kt * kt * kn) / 24.0);
  }
  same("g12", j.g[1][2], kt / 2.0);
  same("g22", j.g[2][2], (kt1 + ks * kn) / 4.0);
  {
    const double common = kt2 + ks1 * kn + 2.0 * ks * kn1 + 2.0 * kt * kt * kt;
    add("g32", j.g[3][2], (common + 4.0 * kt * kn * kn) / 12.0, (common + 3.0 * kt * kn * kn) / 12.0);
  }
  same("g13", j.g[1][3], kc1 / 6.0);
  same("g23", j.g[2][3], kc2 / 12.0);
  same("g04", j.g[0][4], b.B / 24.0);
  same("g05", j.g[0][5], b.kappa_c_r / 360.0);
  return out;
}

DeterminationResult determination_check(const EdgeCoefficients& c1, const EdgeCoefficients& c2, double tol) {
  const SixteenInvariants s1 = sixteen_invariants(c1);
  const SixteenInvariants s2 = sixteen_invariants(c2);
  DeterminationResult r;
  for (std::size_t k = 0; k < 16; ++k) {
    r.invariant_delta[k] = s2.values[k] - s1.values[k];
    if (!rel_close(s1.values[k], s2.values[k], tol)) r.differing_invariants.emplace_back(SixteenInvariants::names()[k]);
  }
  // The dictionary is polynomial with O(1) constants on the sampled box, so
  // agreement of the invariants to tol bounds the coefficients by a modest multiple.
  const double coeff_tol = 1e3 * tol;
  const Jet5Coefficients j1 = expand_to_5jet(c1);
  const Jet5Coefficients j2 = expand_to_5jet(c2);
  for (int i = 2; i <= 5; ++i) {
    if (!rel_close(j1.f[i], j2.f[i], coeff_tol)) r.differing_coefficients.push_back("f" + std::to_string(i));
  }
  for (int i = 0; i <= 5; ++i) {
    for (int k = 0; i + k <= 5; ++k) {
      if (i + k >= 2 && !rel_close(j1.g[i][k], j2.g[i][k], coeff_tol)) {
        r.differing_coefficients.push_back("g" + std::to_string(i) + std::to_string(k));
      }
    }
  }
  r.determined = r.differing_invariants.empty() && r.differing_coefficients.empty();
  return r;
}

std::vector<SensitivityEntry> sensitivity_grid(const EdgeCoefficients& c, double step, double threshold) {
  struct Slot {
    std::string name;
    double* (*locate)(EdgeCoefficients&, int);
    int index;
  };
  const std::vector<Slot> slots = {
      {"a[2]", [](EdgeCoefficients& e, int k) { return &e.a.coeff(k); }, 2},
      {"a[3]", [](EdgeCoefficients& e, int k) { return &e.a.coeff(k); }, 3},
      {"a[4]", [](EdgeCoefficients& e, int k) { return &e.a.coeff(k); }, 4},
      {"a[5]", [](EdgeCoefficients& e, int k) { return &e.a.coeff(k); }, 5},
      {"b0[1]", [](EdgeCoefficients& e, int k) { return &e.b0.coeff(k); }, 1},
      {"b0[2]", [](EdgeCoefficients& e, int k) { return &e.b0.coeff(k); }, 2},
      {"b0[3]", [](EdgeCoefficients& e, int k) { return &e.b0.coeff(k); }, 3},
      {"b0[4]", [](EdgeCoefficients& e, int k) { return &e.b0.coeff(k); }, 4},
      {"b1[0]", [](EdgeCoefficients& e, int k) { return &e.b1.coeff(k); }, 0},
      {"b1[1]", [](EdgeCoefficients& e, int k) { return &e.b1.coeff(k); }, 1},
      {"b1[2]", [](EdgeCoefficients& e, int k) { return &e.b1.coeff(k); }, 2},
      {"b2[0]", [](EdgeCoefficients& e, int k) { return &e.b2.coeff(k); }, 0},
      {"b2[1]", [](EdgeCoefficients& e, int k) { return &e.b2.coeff(k); }, 1},
      {"b3[0 0]", [](EdgeCoefficients& e, int) { return &e.b3.coeff_ref(0, 0); }, 0},
  };
  const SixteenInvariants base = sixteen_invariants(c);
  std::vector<SensitivityEntry> out;
  for (const Slot& s : slots) {
    EdgeCoefficients p = c;
    *s.locate(p, s.index) += step;
    const SixteenInvariants moved = sixteen_invariants(p);
    SensitivityEntry e;
    e.coefficient = s.name;
    for (std::size_t k = 0; k < 16; ++k) e.max_change = std::max(e.max_change, std::abs(moved.values[k] - base.values[k]));
    e.detected = e.max_change > threshold;
    out.push_back(e);
  }
  return out;
}

}  // namespace frontal
