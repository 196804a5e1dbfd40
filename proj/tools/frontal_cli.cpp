// Command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 bad input (parse errors, constraint violations, degenerate germs).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frontal/discriminants.hpp"
#include "frontal/heights.hpp"
#include "frontal/io.hpp"
#include "frontal/numeric.hpp"
#include "frontal/order5.hpp"
#include "frontal/sampling.hpp"
#include "frontal/verify.hpp"

using namespace frontal;
using json = nlohmann::ordered_json;

namespace {

constexpr int kInputError = 2;
constexpr int kVerifyFailure = 1;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string vec(const Vec3d& v) { return "(" + num(v[0]) + ", " + num(v[1]) + ", " + num(v[2]) + ")"; }

json vec_json(const Vec3d& v) { return json::array({v[0], v[1], v[2]}); }

// One line of an invariant table; either column may be absent.
struct Row {
  std::string name;
  std::optional<double> direct;
  std::optional<double> closed;
  std::string formula;
};

void print_table(std::ostream& os, const std::vector<Row>& rows, bool show_direct, bool show_closed) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-18s", "quantity");
  os << buf;
  if (show_direct) os << (std::snprintf(buf, sizeof buf, "%22s", "direct"), buf);
  if (show_closed) os << (std::snprintf(buf, sizeof buf, "%22s", "closed form"), buf);
  if (show_direct && show_closed) os << (std::snprintf(buf, sizeof buf, "%12s", "residual"), buf);
  os << "  expression\n";
  const auto cell = [&](const std::optional<double>& v) {
    std::snprintf(buf, sizeof buf, "%22s", v ? num(*v).c_str() : "-");
    return std::string(buf);
  };
  for (const Row& r : rows) {
    std::snprintf(buf, sizeof buf, "%-18s", r.name.c_str());
    os << buf;
    if (show_direct) os << cell(r.direct);
    if (show_closed) os << cell(r.closed);
    if (show_direct && show_closed) {
      if (r.direct && r.closed) {
        std::snprintf(buf, sizeof buf, "%12.2e", rel_error(*r.direct, *r.closed));
      } else {
        std::snprintf(buf, sizeof buf, "%12s", "-");
      }
      os << buf;
    }
    if (!r.formula.empty()) os << "  " << r.formula;
    os << '\n';
  }
}

json table_json(const std::vector<Row>& rows, bool show_direct, bool show_closed) {
  json arr = json::array();
  for (const Row& r : rows) {
    json j;
    j["name"] = r.name;
    if (show_direct) j["direct"] = r.direct ? json(*r.direct) : json(nullptr);
    if (show_closed) j["closed_form"] = r.closed ? json(*r.closed) : json(nullptr);
    if (show_direct && show_closed) {
      j["residual"] = (r.direct && r.closed) ? json(rel_error(*r.direct, *r.closed)) : json(nullptr);
    }
    if (!r.formula.empty()) j["expression"] = r.formula;
    arr.push_back(std::move(j));
  }
  return arr;
}

const char* mode_name(EdgeMode m) { return m == EdgeMode::Prefold ? "prefold" : "folded"; }

std::vector<Row> folded_rows(const EdgeCoefficients& c) {
  const FrontalData fd = frontal_structure(folded_germ(c));
  const InvariantReport d = direct_report(fd);
  const InvariantReport cf = closed_form_invariants(c);
  const char* const names[4] = {"kappa_s", "kappa_nu", "kappa_t", "kappa_c"};
  const Jet1* dj[4] = {&d.kappa_s, &d.kappa_nu, &d.kappa_t, &d.kappa_c};
  const Jet1* cj[4] = {&cf.kappa_s, &cf.kappa_nu, &cf.kappa_t, &cf.kappa_c};
  const char* const formulas[4][3] = {{"a''(0)", "", ""},
                                      {"2*b0'(0)^2", "", ""},
                                      {"4*b1(0)*b0'(0)", "", ""},
                                      {"0", "12*b2(0)*b0'(0)", ""}};
  const char* const primes[3] = {"(0)", "'(0)", "''(0)"};
  std::vector<Row> rows;
  for (int q = 0; q < 4; ++q) {
    for (int k = 0; k < 3; ++k) {
      rows.push_back({std::string(names[q]) + primes[k], dj[q]->derivative_at_zero(k), cj[q]->derivative_at_zero(k),
                      formulas[q][k]});
    }
  }
  rows.push_back({"B", d.B, cf.B, "24*b1(0)^2"});
  rows.push_back({"kappa_c^r", d.kappa_c_r, cf.kappa_c_r, "720*b1(0)*b2(0)"});
  rows.push_back({"kappa_Sigma(0)", d.curve_kappa, cf.curve_kappa, ""});
  rows.push_back({"tau_Sigma(0)", d.curve_tau, cf.curve_tau, ""});
  std::optional<SingularCurveInvariants> tilde;
  try {
    tilde = dpc_derivatives(double_point_curve(c)).tilde;
  } catch (const Error&) {
    // not a cuspidal cross-cap: no double point curve
  }
  if (tilde && cf.sing) {
    rows.push_back({"kappa_sing(dt)", tilde->kappa_sing, cf.sing->kappa_sing, ""});
    rows.push_back({"tau_sing(dt)", tilde->tau_sing, cf.sing->tau_sing, ""});
    rows.push_back({"sigma_sing(dt)", tilde->sigma_sing, cf.sing->sigma_sing, "0"});
  }
  return rows;
}

std::vector<Row> prefold_rows(const EdgeCoefficients& c) {
  const FrontalData fd = frontal_structure(normal_form(c, EdgeMode::Prefold));
  const InvariantReport d = direct_report(fd);
  const EdgeValuesAtZero cf = prefold_closed_form(c);
  std::vector<Row> rows = {
      {"kappa_s(0)", d.kappa_s[0], cf.ks, "a''(0)"},
      {"kappa_nu(0)", d.kappa_nu[0], cf.kn, "b0''(0)"},
      {"kappa_t(0)", d.kappa_t[0], cf.kt, "2*b1'(0)"},
      {"kappa_c(0)", d.kappa_c[0], cf.kc, "6*b2(0)"},
  };
  const char* const primes[2] = {"'(0)", "''(0)"};
  const char* const names[4] = {"kappa_s", "kappa_nu", "kappa_t", "kappa_c"};
  const Jet1* dj[4] = {&d.kappa_s, &d.kappa_nu, &d.kappa_t, &d.kappa_c};
  for (int q = 0; q < 4; ++q) {
    for (int k = 1; k <= 2; ++k) rows.push_back({std::string(names[q]) + primes[k - 1], dj[q]->derivative_at_zero(k), {}, ""});
  }
  if (d.B) {
    rows.push_back({"B", d.B, {}, ""});
    rows.push_back({"kappa_c^r", d.kappa_c_r, {}, ""});
  }
  rows.push_back({"kappa_Sigma(0)", d.curve_kappa, {}, ""});
  rows.push_back({"tau_Sigma(0)", d.curve_tau, {}, ""});
  return rows;
}

int cmd_invariants(const std::string& path, bool closed_only, bool direct_only, bool as_json) {
  const CoefficientFile f = read_coefficient_file(path);
  const bool show_direct = !closed_only || direct_only;
  const bool show_closed = !direct_only || closed_only;
  const std::vector<Row> rows = f.mode == EdgeMode::Folded ? folded_rows(f.coeffs) : prefold_rows(f.coeffs);
  const SkClass sk = classify_sk(f.coeffs, f.mode);
  std::string sk_name = sk.kind == SkClass::Kind::CuspidalEdge ? "cuspidal edge"
                        : sk.kind == SkClass::Kind::Sk         ? "S" + std::to_string(sk.k)
                                                               : "degenerate";
  if (sk.kind == SkClass::Kind::Sk && sk.k > 0) sk_name += sk.sign > 0 ? "+" : "-";
  if (as_json) {
    json j;
    j["file"] = path;
    j["mode"] = mode_name(f.mode);
    j["order"] = f.order;
    j["singularity"] = sk_name;
    j["invariants"] = table_json(rows, show_direct, show_closed);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "file: " << path << "  mode: " << mode_name(f.mode) << "  order: " << f.order
            << "  singularity: " << sk_name << "\n";
  print_table(std::cout, rows, show_direct, show_closed);
  return 0;
}

std::string reason_text(const ContactClass::Reason& r) {
  std::ostringstream os;
  const auto b = [](std::optional<bool> v) { return v ? (*v ? "yes" : "no") : "-"; };
  os << "singular=" << (r.singular ? "yes" : "no") << " tangent_plane=" << b(r.tangent_plane)
     << " osculating_dpc=" << b(r.osculating_dpc) << " tau_sing_nonzero=" << b(r.tau_sing_nonzero)
     << " osculating_edge=" << b(r.osculating_edge) << " tau_sigma_nonzero=" << b(r.tau_sigma_nonzero);
  return os.str();
}

json reason_json(const ContactClass::Reason& r) {
  json j;
  const auto b = [](std::optional<bool> v) { return v ? json(*v) : json(nullptr); };
  j["singular"] = r.singular;
  j["tangent_plane"] = b(r.tangent_plane);
  j["osculating_dpc"] = b(r.osculating_dpc);
  j["tau_sing_nonzero"] = b(r.tau_sing_nonzero);
  j["osculating_edge"] = b(r.osculating_edge);
  j["tau_sigma_nonzero"] = b(r.tau_sigma_nonzero);
  j["notes"] = r.notes;
  return j;
}

int cmd_classify(const std::string& path, const std::vector<double>& dir, const std::string& stratum, double t,
                 bool as_json) {
  const CoefficientFile f = read_coefficient_file(path);
  if (f.mode != EdgeMode::Folded) throw Error(ErrorCode::ConstraintViolation, "classify needs a folded coefficient file");
  Direction3 v{};
  if (!dir.empty()) {
    if (dir.size() != 3) throw Error(ErrorCode::InvalidDirection, "--direction takes three numbers");
    v = Direction3::from(dir[0], dir[1], dir[2]);
  } else {
    const auto s = parse_stratum(stratum);
    if (!s) throw Error(ErrorCode::ParseError, "unknown stratum '" + stratum + "'");
    v = stratum_direction(f.coeffs, *s, t);
  }
  std::optional<DualPathClass> dpc;
  std::string dpc_error;
  try {
    dpc = classify_along_dpc(f.coeffs, v);
  } catch (const Error& e) {
    dpc_error = e.what();
  }
  const DualPathClass edge = classify_along_edge(f.coeffs, v);
  const ContactClass germ = classify_height_germ(height_function(folded_germ(f.coeffs), v));
  const char* convention = "A_k sign: sign of the leading coefficient of the restricted height (1D); "
                           "for the 2D germ A1+ means a definite Hessian";
  if (as_json) {
    json j;
    j["direction"] = vec_json(v.vec());
    if (!stratum.empty() && dir.empty()) j["stratum"] = stratum;
    const auto path_json = [](const DualPathClass& d) {
      json p;
      p["class"] = d.result.label();
      p["conditions"] = d.condition.label();
      p["jet"] = d.jet.label();
      p["agree"] = d.agree;
      p["reasons"] = reason_json(d.result.reason);
      return p;
    };
    j["double_point_curve"] = dpc ? path_json(*dpc) : json(dpc_error);
    j["cuspidal_edge"] = path_json(edge);
    j["height_germ"] = germ.label();
    j["sign_convention"] = convention;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "direction v = " << vec(v.vec()) << "\n";
  if (dpc) {
    std::cout << "along double point curve: " << dpc->result.label() << "  (conditions " << dpc->condition.label()
              << ", jet " << dpc->jet.label() << ")\n"
              << "    " << reason_text(dpc->result.reason) << "\n";
    for (const auto& n : dpc->result.reason.notes) std::cout << "    note: " << n << "\n";
  } else {
    std::cout << "along double point curve: n/a (" << dpc_error << ")\n";
  }
  std::cout << "along cuspidal edge:      " << edge.result.label() << "  (conditions " << edge.condition.label()
            << ", jet " << edge.jet.label() << ")\n"
            << "    " << reason_text(edge.result.reason) << "\n";
  for (const auto& n : edge.result.reason.notes) std::cout << "    note: " << n << "\n";
  std::cout << "height germ at 0:         " << germ.label() << "\n" << convention << "\n";
  return 0;
}

int cmd_dpc(const std::string& path, bool as_json) {
  const CoefficientFile f = read_coefficient_file(path);
  if (f.mode != EdgeMode::Folded) throw Error(ErrorCode::ConstraintViolation, "dpc needs a folded coefficient file");
  const DoublePointCurve dpc = double_point_curve(f.coeffs);
  const DpcClosedForm cf = dpc_closed_form(f.coeffs);
  const DpcLimits lim = dpc_limits(dpc);
  const Vec3d h2 = derivative_at_zero(dpc.d_hat, 2), h4 = derivative_at_zero(dpc.d_hat, 4),
              h6 = derivative_at_zero(dpc.d_hat, 6);
  std::optional<SingularCurveInvariants> tilde;
  try {
    tilde = dpc_derivatives(dpc).tilde;
  } catch (const Error&) {
  }
  const auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  if (as_json) {
    json j;
    j["d2"] = {{"recursion", dpc.d2}, {"closed_form", cf.d2}};
    j["d4"] = {{"recursion", dpc.d4}, {"closed_form", cf.d4}};
    j["dhat2"] = {{"jet", vec_json(h2)}, {"closed_form", vec_json(cf.dhat2)}};
    j["dhat4"] = {{"jet", vec_json(h4)}, {"printed", vec_json(cf.dhat4_printed)}, {"reproduced", vec_json(cf.dhat4)}};
    j["dhat6"] = {{"jet", vec_json(h6)}, {"z_closed_form", cf.dhat6_z}};
    j["kappa_sing"] = {{"direct", tilde ? opt(tilde->kappa_sing) : json(nullptr)},
                       {"printed", cf.kappa_sing_printed},
                       {"reproduced", cf.kappa_sing}};
    j["tau_sing"] = {{"direct", tilde ? opt(tilde->tau_sing) : json(nullptr)},
                     {"printed", cf.tau_sing_printed},
                     {"reproduced", cf.tau_sing}};
    j["lim_kappa_sq"] = {{"numeric", lim.numeric_kappa_sq},
                         {"proof_quotient", lim.proof_kappa_sq},
                         {"exact_quotient", lim.exact_kappa_sq},
                         {"displayed", lim.display_kappa_sq}};
    j["lim_tau"] = {{"numeric", opt(lim.numeric_tau)},
                    {"proof_quotient", opt(lim.proof_tau)},
                    {"exact_quotient", opt(lim.exact_tau)},
                    {"displayed", opt(lim.display_tau)}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  const auto line = [](const std::string& name, const std::string& a, const std::string& b) {
    std::cout << name << "\n    " << a << "\n    " << b << "\n";
  };
  line("d2", "recursion    " + num(dpc.d2), "closed form  " + num(cf.d2));
  line("d4", "recursion    " + num(dpc.d4), "closed form  " + num(cf.d4));
  line("dhat''(0)", "jet          " + vec(h2), "closed form  " + vec(cf.dhat2));
  std::cout << "dhat''''(0)\n    jet          " << vec(h4) << "\n    printed      " << vec(cf.dhat4_printed)
            << "\n    reproduced   " << vec(cf.dhat4) << "\n";
  line("dhat^(6)(0)", "jet          " + vec(h6), "z closed     " + num(cf.dhat6_z));
  const auto o = [](const std::optional<double>& v) { return v ? num(*v) : std::string("-"); };
  std::cout << "kappa_sing(dtilde)\n    direct       " << (tilde ? o(tilde->kappa_sing) : "-") << "\n    printed      "
            << num(cf.kappa_sing_printed) << "\n    reproduced   " << num(cf.kappa_sing) << "\n";
  std::cout << "tau_sing(dtilde)\n    direct       " << (tilde ? o(tilde->tau_sing) : "-") << "\n    printed      "
            << num(cf.tau_sing_printed) << "\n    reproduced   " << num(cf.tau_sing) << "\n";
  std::cout << "lim kappa^2 along dhat\n    numeric      " << num(lim.numeric_kappa_sq) << "\n    proof        "
            << num(lim.proof_kappa_sq) << "\n    exact        " << num(lim.exact_kappa_sq) << "\n    displayed    "
            << num(lim.display_kappa_sq) << "\n";
  std::cout << "lim tau along dhat\n    numeric      " << o(lim.numeric_tau) << "\n    proof        "
            << o(lim.proof_tau) << "\n    exact        " << o(lim.exact_tau) << "\n    displayed    "
            << o(lim.display_tau) << "\n";
  return 0;
}

int cmd_discriminant(const std::string& form, const std::string& label_text, double b, double c, int grid,
                     const std::string& out, const std::string& ply) {
  NormalFormId id = parse_normal_form_id(form);
  id.b = b;
  id.c = c;
  const auto label = parse_label(label_text);
  if (!label) throw Error(ErrorCode::ParseError, "label must be PD, DPC or CE");
  const DiscriminantSheet s = sheet(id, *label, grid);
  if (!out.empty()) export_point_cloud(s, out);
  if (!ply.empty()) export_ply(s, ply);
  std::cout << "discriminant " << to_string(s.label) << " of " << to_string(id);
  if (id.row == NormalFormId::Row::W) std::cout << " (b = " << num(b) << ", c = " << num(c) << ")";
  std::cout << "\n    branches: " << s.branches.size();
  for (const auto& name : s.branches) std::cout << ' ' << name;
  std::cout << "\n    samples: " << s.samples.size() << "\n    max residual: " << num(s.max_residual()) << "\n";
  if (label == DiscriminantLabel::CE && id.row == NormalFormId::Row::W) {
    std::cout << "    CE in PD residual: " << num(ce_in_pd_defect(s)) << "\n";
  }
  if (!out.empty()) std::cout << "    wrote " << out << "\n";
  if (!ply.empty()) std::cout << "    wrote " << ply << "\n";
  return 0;
}

int cmd_verify(int samples, std::uint64_t seed, int only, bool brief) {
  VerifyOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.order = default_jet_order();
  if (samples < 1) throw Error(ErrorCode::ConstraintViolation, "--samples must be positive");
  std::cout << "seed " << seed << ", " << samples << " samples, jet order " << opt.order << "\n";
  std::vector<int> failed;
  for (int i = 1; i <= kCriterionCount; ++i) {
    if (only != 0 && i != only) continue;
    const CriterionResult r = run_criterion(i, opt);
    std::cout << format_result(r, !brief) << "\n";
    if (!r.passed) failed.push_back(r.id);
  }
  if (failed.empty()) {
    std::cout << "all suites passed\n";
    return 0;
  }
  std::cout << failed.size() << " suite(s) failed:";
  for (int id : failed) std::cout << ' ' << id;
  std::cout << "\n";
  return kVerifyFailure;
}

int cmd_developable(const std::string& path, bool as_json) {
  const CurveFile cf = read_curve_file(path);
  const DevelopableGerm dev = tangent_developable(cf.gamma2, cf.gamma3);
  const FrontalData& fd = dev.frontal;
  const Jet1 ks = kappa_s(fd), kn = kappa_nu(fd), kt = kappa_t(fd), kc = kappa_c(fd);
  const Curve3 gamma{{Jet1::variable(cf.order), cf.gamma2, cf.gamma3}};
  const RegularCurveInvariants ci = curve_invariants_regular(gamma);
  double kn_max = 0.0;
  for (int k = 0; k <= std::min(4, kn.order()); ++k) kn_max = std::max(kn_max, std::abs(kn[k]));
  bool any_a3 = false;
  for (int k = 0; k < 100; ++k) {
    const double th = std::numbers::pi * k / 100.0;
    const ContactClass cls = classify_height_germ(height_function(dev.f, Direction3::from(0.0, std::cos(th), std::sin(th))));
    any_a3 = any_a3 || (cls.kind == ContactClass::Kind::A && cls.k == 3);
  }
  std::vector<Row> rows;
  const char* const names[4] = {"kappa_s", "kappa_nu", "kappa_t", "kappa_c"};
  const Jet1* js[4] = {&ks, &kn, &kt, &kc};
  const char* const primes[3] = {"(0)", "'(0)", "''(0)"};
  for (int q = 0; q < 4; ++q) {
    for (int k = 0; k < 3; ++k) rows.push_back({std::string(names[q]) + primes[k], js[q]->derivative_at_zero(k), {}, ""});
  }
  rows.push_back({"kappa(0)", ci.kappa, {}, "curvature of gamma"});
  rows.push_back({"tau(0)", ci.tau, {}, "torsion of gamma"});
  const bool first_kind = fd.first_kind;
  if (as_json) {
    json j;
    j["first_kind"] = first_kind;
    j["eta_lambda0"] = fd.eta_lambda0;
    j["invariants"] = table_json(rows, true, false);
    j["kappa_nu_vanishes_through_degree_4"] = kn_max <= 1e-12;
    j["kappa_s_over_kappa"] = ci.kappa != 0.0 ? json(ks[0] / ci.kappa) : json(nullptr);
    j["pencil_has_A3"] = any_a3;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "tangent developable of (u, gamma2, gamma3); first kind: " << (first_kind ? "yes" : "no")
            << "  (eta lambda(0) = " << num(fd.eta_lambda0) << ")\n";
  print_table(std::cout, rows, true, false);
  std::cout << "kappa_nu = 0 through degree 4: " << (kn_max <= 1e-12 ? "yes" : "no") << " (max |coeff| " << num(kn_max)
            << ")\n";
  if (ci.kappa != 0.0) std::cout << "kappa_s(0)/kappa(0) = " << num(ks[0] / ci.kappa) << "\n";
  std::cout << "A3 in the pencil v = (0, cos t, sin t), 100 directions: " << (any_a3 ? "yes" : "no") << "\n";
  return 0;
}

int cmd_sample(std::uint64_t seed, const std::string& mode, int order, bool curve, bool zero_torsion,
               const std::string& out) {
  if (order == 0) order = default_jet_order();
  if (order < 2 || order > 40) throw Error(ErrorCode::ConstraintViolation, "--order must lie in [2, 40]");
  Rng rng(seed);
  std::string text;
  if (curve) {
    CurveFile cf;
    cf.order = order;
    std::tie(cf.gamma2, cf.gamma3) = zero_torsion ? random_zero_torsion_curve(rng, order) : random_curve(rng, order);
    text = format_curve_text(cf);
  } else {
    CoefficientFile f;
    f.order = order;
    f.seed = seed;
    if (mode == "folded") {
      f.mode = EdgeMode::Folded;
      f.coeffs = random_folded(rng, order);
    } else if (mode == "prefold") {
      f.mode = EdgeMode::Prefold;
      f.coeffs = random_prefold(rng, order);
    } else {
      throw Error(ErrorCode::ParseError, "mode must be 'prefold' or 'folded'");
    }
    text = format_coefficient_text(f);
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, contact classes and discriminants of folded cuspidal edges"};
  app.require_subcommand(1);

  std::string file;
  bool closed_only = false, direct_only = false, as_json = false;
  auto* inv = app.add_subcommand("invariants", "invariant report for a coefficient file");
  inv->add_option("file", file, "coefficient file")->required();
  inv->add_flag("--closed-form", closed_only, "closed-form column only");
  inv->add_flag("--direct", direct_only, "direct jet column only");
  inv->add_flag("--json", as_json, "JSON output");

  std::vector<double> direction;
  std::string stratum;
  double t = 0.37;
  auto* cls = app.add_subcommand("classify", "contact of the surface with a plane through 0");
  cls->add_option("file", file, "folded coefficient file")->required();
  auto* dopt = cls->add_option("--direction", direction, "normal v1 v2 v3")->expected(3);
  auto* sopt = cls->add_option("--stratum", stratum, "generic | dpc-tangent | dpc-osculating | edge-osculating | tangent-cone");
  dopt->excludes(sopt);
  cls->add_option("--t", t, "position within the stratum family");
  cls->add_flag("--json", as_json, "JSON output");

  auto* dpc = app.add_subcommand("dpc", "double point curve report");
  dpc->add_option("file", file, "folded coefficient file")->required();
  dpc->add_flag("--json", as_json, "JSON output");

  std::string form, label = "PD", out, ply;
  double b = 0.3, c = 0.5;
  int grid = 64;
  auto* disc = app.add_subcommand("discriminant", "sample a discriminant sheet");
  disc->add_option("--form", form, "normal form, e.g. u+v^2, -v+u^3, w+u^2+buv+cv^2")->required();
  disc->add_option("--label", label, "PD | DPC | CE");
  disc->add_option("--b", b, "modulus b of the w-row");
  disc->add_option("--c", c, "modulus c of the w-row");
  disc->add_option("--grid", grid, "lattice size per parameter");
  disc->add_option("--out", out, "point cloud path");
  disc->add_option("--ply", ply, "ASCII PLY mesh path");

  int samples = 100, only = 0;
  std::uint64_t seed = 20240601;
  bool brief = false;
  auto* ver = app.add_subcommand("verify", "run the oracle suites");
  ver->add_option("--samples", samples, "random samples per suite");
  ver->add_option("--seed", seed, "seed");
  ver->add_option("--only", only, "run a single criterion (1-10)")->check(CLI::Range(0, kCriterionCount));
  ver->add_flag("--brief", brief, "one line per criterion");

  auto* dev = app.add_subcommand("developable", "tangent developable of a curve file");
  dev->add_option("file", file, "curve file with [gamma2] and [gamma3]")->required();
  dev->add_flag("--json", as_json, "JSON output");

  std::string mode = "folded";
  int order = 0;
  bool curve = false, zero_torsion = false;
  auto* smp = app.add_subcommand("sample", "write a random coefficient or curve file");
  smp->add_option("--seed", seed, "seed");
  smp->add_option("--mode", mode, "folded | prefold");
  smp->add_option("--order", order, "jet order");
  smp->add_flag("--curve", curve, "curve file instead of coefficients");
  smp->add_flag("--zero-torsion", zero_torsion, "curve with zero torsion at 0");
  smp->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (inv->parsed()) return cmd_invariants(file, closed_only, direct_only, as_json);
    if (cls->parsed()) {
      if (direction.empty() && stratum.empty()) throw Error(ErrorCode::ParseError, "give --direction or --stratum");
      return cmd_classify(file, direction, stratum, t, as_json);
    }
    if (dpc->parsed()) return cmd_dpc(file, as_json);
    if (disc->parsed()) return cmd_discriminant(form, label, b, c, grid, out, ply);
    if (ver->parsed()) return cmd_verify(samples, seed, only, brief);
    if (dev->parsed()) return cmd_developable(file, as_json);
    if (smp->parsed()) return cmd_sample(seed, mode, order, curve, zero_torsion, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
