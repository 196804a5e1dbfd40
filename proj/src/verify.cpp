#include "frontal/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>

#include "frontal/discriminants.hpp"
#include "frontal/heights.hpp"
#include "frontal/numeric.hpp"
#include "frontal/order5.hpp"
#include "frontal/sampling.hpp"

namespace frontal {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

bool vec_close(const Vec3d& a, const Vec3d& b, double tol) {
  for (int i = 0; i < 3; ++i) {
    if (!rel_close(a[i], b[i], tol)) return false;
  }
  return true;
}

double vec_rel_error(const Vec3d& a, const Vec3d& b) {
  double e = 0.0;
  for (int i = 0; i < 3; ++i) e = std::max(e, rel_error(a[i], b[i]));
  return e;
}

// Tally of passes over a sample set plus the worst error seen.
struct Tally {
  int ok = 0;
  int total = 0;
  double worst = 0.0;

  void add(bool pass, double err = 0.0) {
    ++total;
    ok += pass ? 1 : 0;
    if (std::isfinite(err)) worst = std::max(worst, err);
  }
  bool all() const { return ok == total; }
  std::string line(const std::string& what) const {
    return fmt("%-44s %4d/%-4d max rel err %.2e", what.c_str(), ok, total, worst);
  }
};

constexpr double kTol = 1e-9;

std::vector<EdgeCoefficients> folded_samples(const VerifyOptions& opt) {
  Rng rng(opt.seed);
  std::vector<EdgeCoefficients> out;
  out.reserve(static_cast<std::size_t>(opt.samples));
  for (int i = 0; i < opt.samples; ++i) out.push_back(random_folded(rng, opt.order));
  return out;
}

// ---------------------------------------------------------------------------

CriterionResult cuspinv(const VerifyOptions& opt) {
  CriterionResult r;
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  int mismatched_entries = 0;
  for (const auto& c : folded_samples(opt)) {
    const FrontalData fd = frontal_structure(folded_germ(c));
    const Jet1 direct[4] = {kappa_s(fd), kappa_nu(fd), kappa_t(fd), kappa_c(fd)};
    const CuspInvValues cf = cuspinv_closed_form(c);
    const double* closed[4] = {cf.ks, cf.kn, cf.kt, cf.kc};
    bool all = true;
    double worst = 0.0;
    for (int q = 0; q < 4; ++q) {
      for (int k = 0; k < 3; ++k) {
        const double d = direct[q].derivative_at_zero(k);
        const bool ok = rel_close(d, closed[q][k], kTol);
        mismatched_entries += ok ? 0 : 1;
        all = all && ok;
        worst = std::max(worst, rel_error(d, closed[q][k]));
      }
    }
    t.add(all, worst);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = t.all() && r.seconds < 5.0;
  r.details.push_back(t.line("12 closed-form values vs direct jets"));
  r.details.push_back(fmt("mismatched entries: %d; runtime under 5 s: %s", mismatched_entries, r.seconds < 5.0 ? "yes" : "no"));
  r.details.push_back("12 values: 4 invariants x value, first, second derivative");
  return r;
}

CriterionResult edge_relations(const VerifyOptions& opt) {
  CriterionResult r;
  Tally kappa, tau, closed;
  for (const auto& c : folded_samples(opt)) {
    const MapGerm3 phi = folded_germ(c);
    const FrontalData fd = frontal_structure(phi);
    const Jet1 ks = kappa_s(fd), kn = kappa_nu(fd), kt = kappa_t(fd);
    const RegularCurveInvariants sigma = curve_invariants_regular(restrict_y0(phi));
    const double k2 = ks[0] * ks[0] + kn[0] * kn[0];
    kappa.add(rel_close(sigma.kappa * sigma.kappa, k2, kTol), rel_error(sigma.kappa * sigma.kappa, k2));
    const double rhs = (ks[0] * kn.derivative_at_zero(1) - ks.derivative_at_zero(1) * kn[0]) / k2 + kt[0];
    const double ts = sigma.tau.value_or(NAN);
    tau.add(rel_close(ts, rhs, kTol), rel_error(ts, rhs));
    const EdgeCurveClosedForm e = edge_curve_closed_form(c);
    const bool ok = rel_close(e.kappa, sigma.kappa, kTol) && rel_close(e.tau, ts, kTol);
    closed.add(ok, std::max(rel_error(e.kappa, sigma.kappa), rel_error(e.tau, ts)));
  }
  r.passed = kappa.all() && tau.all() && closed.all();
  r.details.push_back(kappa.line("kSigma^2 = ks^2 + kn^2"));
  r.details.push_back(tau.line("tauSigma = (ks kn' - ks' kn)/(ks^2+kn^2) + kt"));
  r.details.push_back(closed.line("closed kSigma(0), tauSigma(0) vs curve"));
  return r;
}

CriterionResult double_point(const VerifyOptions& opt) {
  CriterionResult r;
  Tally d2, d4, p2, p4, corrected;
  for (const auto& c : folded_samples(opt)) {
    const DoublePointCurve dpc = double_point_curve(c);
    const DpcClosedForm cf = dpc_closed_form(c);
    d2.add(rel_close(dpc.d2, cf.d2, kTol), rel_error(dpc.d2, cf.d2));
    d4.add(rel_close(dpc.d4, cf.d4, kTol), rel_error(dpc.d4, cf.d4));
    const Vec3d h2 = derivative_at_zero(dpc.d_hat, 2), h4 = derivative_at_zero(dpc.d_hat, 4);
    p2.add(vec_close(h2, cf.dhat2, kTol), vec_rel_error(h2, cf.dhat2));
    p4.add(vec_close(h4, cf.dhat4_printed, kTol), vec_rel_error(h4, cf.dhat4_printed));
    corrected.add(vec_close(h4, cf.dhat4, kTol), vec_rel_error(h4, cf.dhat4));
  }
  r.passed = d2.all() && d4.all() && p2.all() && p4.all();
  r.details.push_back(d2.line("d2 recursion vs closed form"));
  r.details.push_back(d4.line("d4 recursion vs closed form"));
  r.details.push_back(p2.line("dhat''(0) vs printed"));
  r.details.push_back(p4.line("dhat''''(0) vs printed"));
  r.details.push_back(corrected.line("dhat''''(0) vs 12 x printed"));
  return r;
}

CriterionResult limits(const VerifyOptions& opt) {
  constexpr double tol = 1e-4;
  CriterionResult r;
  Tally k_proof, t_proof, k_exact, t_exact, k_disp, t_disp;
  for (const auto& c : folded_samples(opt)) {
    const DpcLimits L = dpc_limits(double_point_curve(c));
    k_proof.add(rel_close(L.numeric_kappa_sq, L.proof_kappa_sq, tol), rel_error(L.numeric_kappa_sq, L.proof_kappa_sq));
    k_exact.add(rel_close(L.numeric_kappa_sq, L.exact_kappa_sq, tol), rel_error(L.numeric_kappa_sq, L.exact_kappa_sq));
    k_disp.add(rel_close(L.numeric_kappa_sq, L.display_kappa_sq, tol), rel_error(L.numeric_kappa_sq, L.display_kappa_sq));
    if (L.numeric_tau && L.proof_tau && L.exact_tau) {
      t_proof.add(rel_close(*L.numeric_tau, *L.proof_tau, tol), rel_error(*L.numeric_tau, *L.proof_tau));
      t_exact.add(rel_close(*L.numeric_tau, *L.exact_tau, tol), rel_error(*L.numeric_tau, *L.exact_tau));
    } else {
      t_proof.add(false, NAN);
    }
    if (L.numeric_tau && L.display_tau) {
      t_disp.add(rel_close(*L.numeric_tau, *L.display_tau, tol), rel_error(*L.numeric_tau, *L.display_tau));
    }
  }
  r.passed = k_proof.all() && t_proof.all();
  r.details.push_back(k_proof.line("lim kappa^2 vs |P x Q|^2/(36|P|^6)"));
  r.details.push_back(t_proof.line("lim tau vs 4det(P,Q,R)/(5|P x Q|^2)"));
  r.details.push_back(k_exact.line("lim kappa^2 vs |P x Q|^2/(9|P|^6)"));
  r.details.push_back(t_exact.line("lim tau vs det(P,Q,R)/(5|P x Q|^2)"));
  r.details.push_back(k_disp.line("lim kappa^2 vs displayed closed form"));
  r.details.push_back(t_disp.line("lim tau vs displayed closed form"));
  return r;
}

CriterionResult bias(const VerifyOptions& opt) {
  CriterionResult r;
  Tally b, kcr, alt;
  Rng rng(opt.seed ^ 0x5eedULL);
  std::uniform_real_distribution<double> g(-1.5, 1.5);
  for (const auto& c : folded_samples(opt)) {
    const FrontalData fd = frontal_structure(folded_germ(c));
    const BiasResult res = bias_and_secondary(fd);
    const double B = 24.0 * c.b1[0] * c.b1[0];
    const double K = 720.0 * c.b1[0] * c.b2[0];
    b.add(rel_close(res.B, B, kTol), rel_error(res.B, B));
    kcr.add(rel_close(res.kappa_c_r, K, kTol), rel_error(res.kappa_c_r, K));
    // A second admissible null field: add gamma x y xi and rescale by (1 + delta x).
    const int n = c.order();
    const Jet2 x = Jet2::x(n), y = Jet2::y(n);
    const double gamma = g(rng), delta = g(rng);
    const Jet2 s = res.alpha * y + res.beta * (y * y) + gamma * (x * y);
    const VectorField2 other{(1.0 + delta * x) * s, Jet2::constant(n, 1.0) + delta * x};
    const BiasResult res2 = bias_and_secondary(fd, other);
    alt.add(rel_close(res.B, res2.B, kTol) && rel_close(res.kappa_c_r, res2.kappa_c_r, kTol),
            std::max(rel_error(res.B, res2.B), rel_error(res.kappa_c_r, res2.kappa_c_r)));
  }
  r.passed = b.all() && kcr.all() && alt.all();
  r.details.push_back(b.line("B = 24 b1(0)^2"));
  r.details.push_back(kcr.line("kappa_c^r = 720 b1(0) b2(0)"));
  r.details.push_back(alt.line("two admissible null fields agree"));
  return r;
}

EdgeCoefficients perturb_tail(const EdgeCoefficients& c, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  EdgeCoefficients t = c;
  const int n = c.order();
  for (int k = 6; k <= n; ++k) t.a.coeff(k) += u(rng);
  for (int k = 5; k <= n; ++k) t.b0.coeff(k) += u(rng);
  for (int k = 3; k <= n; ++k) t.b1.coeff(k) += u(rng);
  for (int k = 2; k <= n; ++k) t.b2.coeff(k) += u(rng);
  for (int d = 1; d <= n; ++d) {
    for (int j = 0; j <= d; ++j) t.b3.coeff_ref(d - j, j) += u(rng);
  }
  return t;
}

bool same_5jet(const EdgeCoefficients& a, const EdgeCoefficients& b) {
  const Jet5Coefficients x = expand_to_5jet(a), y = expand_to_5jet(b);
  for (int i = 0; i < 6; ++i) {
    if (!rel_close(x.f[i], y.f[i], 1e-12)) return false;
    for (int j = 0; j < 6; ++j) {
      if (!rel_close(x.g[i][j], y.g[i][j], 1e-12)) return false;
    }
  }
  return true;
}

CriterionResult dictionary(const VerifyOptions& opt) {
  CriterionResult r;
  std::vector<std::string> names;
  std::vector<Tally> printed, reproduced;
  Tally det, guard;
  Rng rng(opt.seed ^ 0xd1c7ULL);
  for (const auto& c : folded_samples(opt)) {
    const auto rel = invariant_dictionary(c, kTol);
    if (names.empty()) {
      for (const auto& x : rel) names.push_back(x.name);
      printed.resize(rel.size());
      reproduced.resize(rel.size());
    }
    for (std::size_t i = 0; i < rel.size(); ++i) {
      printed[i].add(rel[i].printed_holds, rel_error(rel[i].lhs, rel[i].rhs_printed));
      reproduced[i].add(rel[i].holds, rel_error(rel[i].lhs, rel[i].rhs));
    }
    const EdgeCoefficients tail = perturb_tail(c, rng);
    guard.add(same_5jet(c, tail));
    det.add(determination_check(c, tail, kTol).determined);
  }
  bool all_printed = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    all_printed = all_printed && printed[i].all();
    std::string line = printed[i].line(names[i] + " printed");
    if (!printed[i].all()) line += fmt("   reproduced form: %d/%d", reproduced[i].ok, reproduced[i].total);
    r.details.push_back(line);
  }
  r.details.push_back(guard.line("pairs differ only at degree >= 6"));
  r.details.push_back(det.line("determination_check -> Determined"));
  r.passed = all_printed && names.size() == 13 && det.all() && guard.all();
  return r;
}

CriterionResult heights(const VerifyOptions& opt) {
  CriterionResult r;
  const Stratum strata[] = {Stratum::Generic, Stratum::DpcTangent, Stratum::DpcOsculating, Stratum::EdgeOsculating,
                            Stratum::TangentCone};
  Rng rng(opt.seed ^ 0x4e16ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int count = std::max(200, 2 * opt.samples);
  int disagree = 0, unresolved = 0, expected_ok = 0, singular_ok = 0, singular_total = 0;
  for (int i = 0; i < count; ++i) {
    const EdgeCoefficients c = random_folded(rng, opt.order);
    const Stratum s = strata[i % 5];
    const Direction3 v = stratum_direction(c, s, unit(rng));
    const DualPathClass dpc = classify_along_dpc(c, v);
    const DualPathClass edge = classify_along_edge(c, v);
    for (const DualPathClass* d : {&dpc, &edge}) {
      const bool c_res = d->condition.kind == ContactClass::Kind::Unresolved;
      const bool j_res = d->jet.kind == ContactClass::Kind::Unresolved;
      if (c_res || j_res) ++unresolved;
      else if (!same_class(d->condition, d->jet)) ++disagree;
    }
    const auto is_a = [](const ContactClass& k, int order) {
      return k.kind == ContactClass::Kind::A && k.k == order;
    };
    bool expected = false;
    switch (s) {
      case Stratum::Generic: expected = is_a(dpc.result, 1) && is_a(edge.result, 1); break;
      case Stratum::DpcTangent: expected = is_a(dpc.result, 3); break;
      case Stratum::DpcOsculating: expected = is_a(dpc.result, 5); break;
      case Stratum::EdgeOsculating: expected = is_a(edge.result, 2); break;
      case Stratum::TangentCone:
        expected = is_a(dpc.result, 5) && classify_height_germ(height_function(folded_germ(c), v)).kind ==
                                               ContactClass::Kind::TangentConeDegenerate;
        break;
    }
    expected_ok += expected ? 1 : 0;

    // v1 = 0 exactly versus a random direction.
    const MapGerm3 phi = folded_germ(c);
    const Direction3 w = random_direction(rng);
    const Direction3 w0 = Direction3::from(0.0, w.v2, w.v3);
    singular_total += 2;
    singular_ok += singular_at_origin(height_function(phi, w0)) ? 1 : 0;
    singular_ok += (singular_at_origin(height_function(phi, w)) == (w.v1 == 0.0)) ? 1 : 0;
  }
  r.passed = disagree == 0 && singular_ok == singular_total;
  r.details.push_back(fmt("%d (c, v) samples over 5 strata, both restrictions each", count));
  r.details.push_back(fmt("disagreements outside the Unresolved band: %d", disagree));
  r.details.push_back(fmt("paths reporting Unresolved: %d", unresolved));
  r.details.push_back(fmt("expected class for the stratum: %d/%d", expected_ok, count));
  r.details.push_back(fmt("v1 = 0 <=> singular at 0: %d/%d", singular_ok, singular_total));
  return r;
}

CriterionResult theta(const VerifyOptions&) {
  CriterionResult r;
  try {
    const ThetaReport rep = verify_theta_generators();
    for (const auto& g : rep.generators) r.details.push_back(fmt("%s h = (%s) h", g.name.c_str(), g.lambda.c_str()));
    r.details.push_back(fmt("3 xi_e = xi1 + 4 xi2: %s", rep.euler_combination ? "yes" : "no"));
    r.details.push_back(fmt("xi_e h = 8 h: %s", rep.euler_multiplier ? "yes" : "no"));
    r.passed = rep.all_ok() && rep.generators.size() == 4;
  } catch (const Error& e) {
    r.details.push_back(e.what());
  }
  return r;
}

// Curvature and torsion of (t, g2, g3) as jets; the oracle for the developable.
std::pair<Jet1, Jet1> curve_kappa_tau(const Jet1& g2, const Jet1& g3, int keep) {
  const int n = g2.order();
  const Curve3 g{{Jet1::variable(n), g2, g3}};
  const Curve3 d1 = truncated(derivative(g), keep), d2 = truncated(derivative(derivative(g)), keep);
  const Curve3 d3 = truncated(derivative(derivative(derivative(g))), keep);
  const Curve3 cr = cross(d1, d2);
  const Jet1 cr2 = dot(cr, cr);
  const Jet1 kappa = sqrt(cr2) * pow_rational(dot(d1, d1), -3, 2);
  const Jet1 tau = det3(d1, d2, d3) / cr2;
  return {kappa, tau};
}

CriterionResult developable(const VerifyOptions& opt) {
  CriterionResult r;
  Rng rng(opt.seed ^ 0xde7ULL);
  constexpr int kDegree = 4;
  Tally kn_zero, ks_kappa, kt_tau, no_a3;
  int positive = 0, negative = 0;
  for (int i = 0; i < opt.samples; ++i) {
    const auto [g2, g3] = random_curve(rng, opt.order);
    const DevelopableGerm dev = tangent_developable(g2, g3);
    const Jet1 ks = kappa_s(dev.frontal), kn = kappa_nu(dev.frontal), kt = kappa_t(dev.frontal);
    const auto [kappa, tau] = curve_kappa_tau(g2, g3, opt.order - 3);
    double kn_max = 0.0, e_ks = 0.0, e_kt = 0.0;
    bool ok_ks = true, ok_kt = true;
    const double sign = std::copysign(1.0, ks[0]);
    for (int k = 0; k <= kDegree; ++k) {
      kn_max = std::max(kn_max, std::abs(kn[k]));
      ok_ks = ok_ks && rel_close(sign * ks[k], kappa[k], kTol);
      ok_kt = ok_kt && rel_close(kt[k], tau[k], kTol);
      e_ks = std::max(e_ks, rel_error(sign * ks[k], kappa[k]));
      e_kt = std::max(e_kt, rel_error(kt[k], tau[k]));
    }
    (ks[0] > 0 ? positive : negative)++;
    kn_zero.add(kn_max <= 1e-12, kn_max);
    ks_kappa.add(ok_ks, e_ks);
    kt_tau.add(ok_kt, e_kt);

    // Zero torsion at 0: the pencil v = (0, cos t, sin t) must never give A3.
    const auto [z2, z3] = random_zero_torsion_curve(rng, opt.order);
    const DevelopableGerm zd = tangent_developable(z2, z3);
    bool any_a3 = false;
    for (int k = 0; k < 100; ++k) {
      const double th = std::numbers::pi * k / 100.0;
      const ContactClass cls = classify_height_germ(height_function(zd.f, Direction3::from(0.0, std::cos(th), std::sin(th))));
      any_a3 = any_a3 || (cls.kind == ContactClass::Kind::A && cls.k == 3);
    }
    no_a3.add(!any_a3);
  }
  r.passed = kn_zero.all() && ks_kappa.all() && kt_tau.all() && no_a3.all();
  r.details.push_back(fmt("kappa_nu coefficients through degree %d <= 1e-12: %d/%d (max %.1e)", kDegree, kn_zero.ok,
                          kn_zero.total, kn_zero.worst));
  r.details.push_back(ks_kappa.line("|kappa_s| = kappa (jets through degree 4)"));
  r.details.push_back(kt_tau.line("kappa_t = tau (jets through degree 4)"));
  r.details.push_back(fmt("sign of kappa_s(0)/kappa(0): + in %d, - in %d samples", positive, negative));
  r.details.push_back(no_a3.line("no A3 over 100 pencil directions"));
  return r;
}

CriterionResult discriminants(const VerifyOptions&) {
  CriterionResult r;
  constexpr double tol = 1e-10;
  double worst = 0.0, even = 0.0, contain = 0.0;
  std::size_t n = 0;
  int rows = 0;
  bool ok = true;
  for (const NormalFormId& id : all_normal_forms()) {
    ++rows;
    for (auto label : {DiscriminantLabel::PD, DiscriminantLabel::DPC, DiscriminantLabel::CE}) {
      const DiscriminantSheet s = sheet(id, label);
      n += s.samples.size();
      worst = std::max(worst, s.max_residual());
      if (label == DiscriminantLabel::DPC) even = std::max(even, dpc_evenness_defect(s));
      if (label == DiscriminantLabel::CE && id.row == NormalFormId::Row::W) contain = std::max(contain, ce_in_pd_defect(s));
    }
  }
  ok = worst <= tol && contain <= tol && even <= tol;
  r.passed = ok;
  r.details.push_back(fmt("%d normal forms (all sign choices), %zu samples, 64x64 grids", rows, n));
  r.details.push_back(fmt("max back-substitution residual %.2e (limit 1e-10)", worst));
  r.details.push_back(fmt("CE in PD for the w-row: max residual %.2e", contain));
  r.details.push_back(fmt("DPC evenness defect %.2e", even));
  return r;
}

const char* const kTitles[kCriterionCount] = {
    "cuspidal cross-cap invariants: closed forms vs jets",
    "edge curve relations for kSigma and tauSigma",
    "double point curve: d2, d4, dhat'', dhat''''",
    "limit curvature and torsion along dhat",
    "bias and secondary cuspidal curvature",
    "order-5 coefficient/invariant dictionary",
    "height functions: conditions vs jets",
    "tangency of the generators of Theta(X)",
    "tangent developable",
    "discriminant back-substitution",
};

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
  using Fn = std::function<CriterionResult(const VerifyOptions&)>;
  static const Fn fns[kCriterionCount] = {cuspinv, edge_relations, double_point, limits, bias,
                                          dictionary, heights, theta, developable, discriminants};
  if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::ConstraintViolation, "no criterion " + std::to_string(id));
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = fns[id - 1](opt);
  } catch (const Error& e) {
    r.passed = false;
    r.details.push_back(std::string("error: ") + e.what());
  }
  if (r.seconds == 0.0) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.id = id;
  r.title = kTitles[id - 1];
  return r;
}

std::vector<CriterionResult> run_all(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i, opt));
  return out;
}

std::string format_result(const CriterionResult& r, bool with_details) {
  std::string s = fmt("%s %2d  %s", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str());
  if (with_details) {
    for (const auto& d : r.details) s += "\n        " + d;
  }
  return s;
}

}  // namespace frontal
