#include "frontal/heights.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "frontal/numeric.hpp"

namespace frontal {

Direction3 Direction3::from(double a, double b, double c) {
  const double n = std::sqrt(a * a + b * b + c * c);
  if (!(n > 1e-300) || !std::isfinite(n)) throw Error(ErrorCode::InvalidDirection, "direction must be a nonzero finite vector");
  return {a / n, b / n, c / n};
}

Jet2 height_function(const MapGerm3& phi, const Direction3& v) { return phi[0] * v.v1 + phi[1] * v.v2 + phi[2] * v.v3; }

bool singular_at_origin(const Jet2& h, double tol) {
  return std::abs(h.coeff(1, 0)) <= tol && std::abs(h.coeff(0, 1)) <= tol;
}

AkResult detect_ak_1d(const Jet1& h, double tol, double reference_scale) {
  AkResult r;
  double scale = reference_scale;
  for (int m = 2; m <= h.order(); ++m) scale = std::max(scale, std::abs(h[m]));
  r.scale = scale;
  for (int m = 2; m <= h.order(); ++m) {
    const double c = std::abs(h[m]);
    if (c > tol * scale && c > 0.0) {
      r.k = m - 1;
      r.order = m;
      r.leading = h[m];
      r.sign = h[m] > 0 ? 1 : -1;
      return r;
    }
    if (c > kZero * scale) r.ambiguous = true;
  }
  r.flat = true;
  r.order = h.order();
  return r;
}

ContactClass make_ak(int k, int sign) {
  ContactClass c;
  c.kind = ContactClass::Kind::A;
  c.k = k;
  c.sign = (k % 2 == 1) ? sign : 0;
  c.order = k + 1;
  return c;
}

namespace {

ContactClass make_kind(ContactClass::Kind kind, int order = 0) {
  ContactClass c;
  c.kind = kind;
  c.order = order;
  return c;
}

enum class Tri { Zero, Nonzero, Band };

Tri judge(double value, double scale) {
  const double a = std::abs(value);
  if (a <= kZero * scale) return Tri::Zero;
  if (a > kNonzero * scale) return Tri::Nonzero;
  return Tri::Band;
}

ContactClass from_ak(const AkResult& r) {
  if (r.ambiguous) return make_kind(ContactClass::Kind::Unresolved, r.order);
  if (r.flat) return make_kind(ContactClass::Kind::Unresolved, r.order);
  return make_ak(r.k, r.sign);
}

// Walks tiers of (value, scale, k) conditions; the first nonzero one decides.
struct Tier {
  double value;
  double scale;
  int k;
};

ContactClass walk_tiers(const std::vector<Tier>& tiers, int fallthrough_order) {
  for (const Tier& t : tiers) {
    switch (judge(t.value, t.scale)) {
      case Tri::Nonzero: return make_ak(t.k, t.value > 0 ? 1 : -1);
      case Tri::Band: return make_kind(ContactClass::Kind::Unresolved, t.k + 1);
      case Tri::Zero: break;
    }
  }
  return make_kind(ContactClass::Kind::Unresolved, fallthrough_order);
}

DualPathClass merge(ContactClass condition, ContactClass jet, ContactClass::Reason reason) {
  DualPathClass d;
  d.condition = condition;
  d.jet = jet;
  d.agree = same_class(condition, jet) && condition.kind != ContactClass::Kind::Unresolved;
  if (d.agree) {
    d.result = condition;
  } else {
    d.result = make_kind(ContactClass::Kind::Unresolved, std::max(condition.order, jet.order));
    reason.notes.push_back("conditions give " + condition.label() + ", restriction gives " + jet.label());
  }
  d.result.reason = reason;
  d.condition.reason = reason;
  d.jet.reason = reason;
  return d;
}

struct Hessian {
  double p, q, r;  // [[p, q], [q, r]]
  double lam_big, lam_small;
  double theta_big;  // eigenvector angle of the eigenvalue larger in magnitude
};

Hessian hessian_of(const Jet2& h) {
  Hessian H{};
  H.p = 2.0 * h.coeff(2, 0);
  H.q = h.coeff(1, 1);
  H.r = 2.0 * h.coeff(0, 2);
  const double mean = 0.5 * (H.p + H.r);
  const double rad = std::hypot(0.5 * (H.p - H.r), H.q);
  const double up = mean + rad, down = mean - rad;
  const double theta_up = 0.5 * std::atan2(2.0 * H.q, H.p - H.r);
  if (std::abs(up) >= std::abs(down)) {
    H.lam_big = up;
    H.lam_small = down;
    H.theta_big = theta_up;
  } else {
    H.lam_big = down;
    H.lam_small = up;
    H.theta_big = theta_up + 0.5 * std::numbers::pi;
  }
  return H;
}

}  // namespace

std::string ContactClass::label() const {
  switch (kind) {
    case Kind::A: {
      std::string s = "A" + std::to_string(k);
      if (k % 2 == 1) s += sign > 0 ? "+" : "-";
      return s;
    }
    case Kind::TangentConeDegenerate: return "tangent-cone-degenerate";
    case Kind::Corank2: return "corank-2";
    case Kind::Regular: return "regular";
    case Kind::Unresolved: return "unresolved(" + std::to_string(order) + ")";
  }
  return "unresolved";
}

bool same_class(const ContactClass& a, const ContactClass& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == ContactClass::Kind::A) return a.k == b.k && a.sign == b.sign;
  return true;
}

Jet1 splitting_reduce(const Jet2& h, double tol) {
  const Hessian H = hessian_of(h);
  const double scale = std::max(h.max_abs(), 1e-300);
  if (!(std::abs(H.lam_big) > tol * scale) || std::abs(H.lam_small) > kZero * scale) {
    throw Error(ErrorCode::HessianRankNotOne, "splitting needs a Hessian of rank exactly one");
  }
  const int n = h.order();
  const double c = std::cos(H.theta_big), s = std::sin(H.theta_big);
  const Jet2 X = Jet2::x(n), Y = Jet2::y(n);
  const Jet2 rotated = compose(h, c * X - s * Y, s * X + c * Y);

  // X = psi(Y) solving d(rotated)/dX = 0, by Newton on jets.
  const Jet2 g = rotated.d_dx();
  const Jet2 gx = g.d_dx();
  const int m = g.order();
  const Jet1 t = Jet1::variable(n);
  Jet1 psi(m);
  for (int iter = 0; iter < 2 * n + 2; ++iter) {
    const Jet1 res = compose(g, psi, t.truncated(m));
    if (res.max_abs() <= 1e-16 * scale) break;
    const Jet1 slope = compose(gx, psi.truncated(m - 1), t.truncated(m - 1));
    psi -= res * recip(Jet1(m, slope.coeffs()));
  }
  return compose(rotated, Jet1(n, psi.coeffs()), t);
}

ContactClass classify_height_germ(const Jet2& h, double tol) {
  const double scale = std::max(h.max_abs(), 1e-300);
  if (!singular_at_origin(h, 1e-12 * std::max(1.0, scale))) return make_kind(ContactClass::Kind::Regular);
  const Hessian H = hessian_of(h);
  const Tri big = judge(H.lam_big, scale);
  const Tri small = judge(H.lam_small, scale);
  if (big == Tri::Band || small == Tri::Band) return make_kind(ContactClass::Kind::Unresolved, 2);
  if (big == Tri::Zero) return make_kind(ContactClass::Kind::Corank2, 2);
  if (small == Tri::Nonzero) return make_ak(1, H.lam_big * H.lam_small > 0 ? 1 : -1);
  const AkResult r = detect_ak_1d(splitting_reduce(h, tol), tol, scale);
  if (r.ambiguous) return make_kind(ContactClass::Kind::Unresolved, r.order);
  if (r.flat) return make_kind(ContactClass::Kind::TangentConeDegenerate, r.order);
  return make_ak(r.k, r.sign);
}

DualPathClass classify_along_dpc(const EdgeCoefficients& c, const Direction3& v) {
  const DoublePointCurve dpc = double_point_curve(c);
  const DpcClosedForm cf = dpc_closed_form(c);
  const Vec3d dhat6 = derivative_at_zero(dpc.d_hat, 6);
  const double b2 = c.b2[0];

  const double e1 = 0.5 * dot(cf.dhat2, v.vec());
  const double s1 = 0.5 * max_abs_of({cf.dhat2[0] * v.v1, v.v2});
  const double e2 = cf.dhat4_printed[0] * v.v1 + cf.dhat4_printed[1] * v.v2;
  const double s2 = max_abs_of({cf.dhat4_printed[0] * v.v1, cf.dhat4_printed[1] * v.v2});
  const double z6 = 720.0 * b2 * b2;
  const double e3 = dhat6[0] * v.v1 + dhat6[1] * v.v2 + z6 * v.v3;
  const double s3 = max_abs_of({dhat6[0] * v.v1, dhat6[1] * v.v2, z6 * v.v3});

  ContactClass::Reason reason;
  reason.singular = true;
  reason.tangent_plane = judge(e1, s1) == Tri::Zero;
  reason.osculating_dpc = *reason.tangent_plane && judge(e2, s2) == Tri::Zero;
  reason.tau_sing_nonzero = std::isfinite(cf.tau_sing) && std::abs(cf.tau_sing) > kNonzero;

  const ContactClass condition = walk_tiers({{e1, s1, 1}, {e2, s2, 3}, {e3, s3, 5}}, 7);
  const Jet1 h = dot(dpc.d_hat, Curve3{{Jet1::constant(c.order(), v.v1), Jet1::constant(c.order(), v.v2),
                                         Jet1::constant(c.order(), v.v3)}});
  const ContactClass jet = from_ak(detect_ak_1d(h));
  return merge(condition, jet, reason);
}

DualPathClass classify_along_edge(const EdgeCoefficients& c, const Direction3& v) {
  validate(c, EdgeMode::Folded);
  const Jet1 h = restrict_y0(folded_germ(c))[0] * v.v1 + restrict_y0(folded_germ(c))[1] * v.v2 +
                 restrict_y0(folded_germ(c))[2] * v.v3;
  ContactClass::Reason reason;
  const bool singular = judge(v.v1, 1.0) == Tri::Zero;
  reason.singular = singular;
  if (!singular) {
    reason.notes.push_back("v1 != 0: the edge is transverse to the plane");
    const ContactClass reg = make_kind(ContactClass::Kind::Regular);
    const ContactClass jet = std::abs(h[1]) > 0.0 ? reg : from_ak(detect_ak_1d(h));
    return merge(reg, jet, reason);
  }
  const double a2 = c.a.derivative_at_zero(2), a3 = c.a.derivative_at_zero(3);
  const double p1 = c.b0.derivative_at_zero(1), p2 = c.b0.derivative_at_zero(2);
  const double e1 = 0.5 * a2 * v.v2 + p1 * p1 * v.v3;
  const double s1 = max_abs_of({0.5 * a2 * v.v2, p1 * p1 * v.v3});
  const double e2 = a3 / 6.0 * v.v2 + p1 * p2 * v.v3;
  const double s2 = max_abs_of({a3 / 6.0 * v.v2, p1 * p2 * v.v3});
  const EdgeCurveClosedForm sigma = edge_curve_closed_form(c);
  reason.osculating_edge = judge(e1, s1) == Tri::Zero;
  reason.tau_sigma_nonzero = std::abs(sigma.tau) > kNonzero;

  const ContactClass condition = walk_tiers({{e1, s1, 1}, {e2, s2, 2}}, 4);
  const ContactClass jet = from_ak(detect_ak_1d(h));
  return merge(condition, jet, reason);
}

std::string_view to_string(Stratum s) {
  switch (s) {
    case Stratum::Generic: return "generic";
    case Stratum::DpcTangent: return "dpc-tangent";
    case Stratum::DpcOsculating: return "dpc-osculating";
    case Stratum::EdgeOsculating: return "edge-osculating";
    case Stratum::TangentCone: return "tangent-cone";
  }
  return "generic";
}

std::optional<Stratum> parse_stratum(std::string_view s) {
  for (Stratum st : {Stratum::Generic, Stratum::DpcTangent, Stratum::DpcOsculating, Stratum::EdgeOsculating,
                     Stratum::TangentCone}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

Direction3 stratum_direction(const EdgeCoefficients& c, Stratum s, double t) {
  const double theta = 2.0 * std::numbers::pi * t;
  switch (s) {
    case Stratum::Generic:
      return Direction3::from(0.0, std::cos(theta) + 0.25, std::sin(theta) + 0.25);
    case Stratum::DpcTangent: {
      // Planes containing dhat''(0) = (d2, 1, 0); keep v1 away from zero.
      const DpcClosedForm cf = dpc_closed_form(c);
      const Vec3d n1 = {{1.0, -cf.d2, 0.0}};
      const double phi = 0.8 * std::numbers::pi * (t - 0.5);
      return Direction3::from(scale(n1, std::cos(phi) / norm(n1)) + Vec3d{{0.0, 0.0, std::sin(phi)}});
    }
    case Stratum::DpcOsculating: {
      const DpcClosedForm cf = dpc_closed_form(c);
      const Vec3d n = cross(cf.dhat2, cf.dhat4);
      if (norm(n) < 1e-12) return Direction3::from(0.0, 0.0, 1.0);
      return Direction3::from(n);
    }
    case Stratum::EdgeOsculating: return Direction3::from(osculating_normal_of_edge(c));
    case Stratum::TangentCone: return Direction3::from(0.0, 0.0, 1.0);
  }
  return Direction3::from(0.0, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Exact polynomial arithmetic in u, v, w for the tangency check.

namespace {

using Exps = std::array<int, 3>;
using Poly3 = std::map<Exps, long long>;

void add_term(Poly3& p, const Exps& e, long long c) {
  if (c == 0) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
  } else if ((it->second += c) == 0) {
    p.erase(it);
  }
}

Poly3 mono(long long c, int i, int j, int k) {
  Poly3 p;
  add_term(p, {i, j, k}, c);
  return p;
}

Poly3 operator+(Poly3 a, const Poly3& b) {
  for (const auto& [e, c] : b) add_term(a, e, c);
  return a;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) add_term(r, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  }
  return r;
}

Poly3 scaled(const Poly3& a, long long s) {
  Poly3 r;
  for (const auto& [e, c] : a) add_term(r, e, c * s);
  return r;
}

Poly3 partial(const Poly3& a, int var) {
  Poly3 r;
  for (const auto& [e, c] : a) {
    if (e[var] == 0) continue;
    Exps d = e;
    --d[var];
    add_term(r, d, c * e[var]);
  }
  return r;
}

using Field = std::array<Poly3, 3>;

Poly3 apply(const Field& xi, const Poly3& h) {
  return xi[0] * partial(h, 0) + xi[1] * partial(h, 1) + xi[2] * partial(h, 2);
}

// Division by h = w^2 - u^2 v^3, which is monic of degree 2 in w.
std::optional<Poly3> exact_quotient_by_h(Poly3 p) {
  Poly3 q;
  for (;;) {
    auto it = std::find_if(p.begin(), p.end(), [](const auto& t) { return t.first[2] >= 2; });
    if (it == p.end()) break;
    const Exps e = it->first;
    const long long c = it->second;
    add_term(q, {e[0], e[1], e[2] - 2}, c);
    // subtract c u^i v^j w^(k-2) (w^2 - u^2 v^3)
    add_term(p, e, -c);
    add_term(p, {e[0] + 2, e[1] + 3, e[2] - 2}, c);
  }
  if (!p.empty()) return std::nullopt;
  return q;
}

std::string to_text(const Poly3& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const long long a = c < 0 ? -c : c;
    if (a != 1 || constant) os << a;
    const char* names = "uvw";
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      os << names[v];
      if (e[v] > 1) os << "^" << e[v];
    }
    first = false;
  }
  return os.str();
}

}  // namespace

bool ThetaReport::all_ok() const {
  for (const ThetaCheck& g : generators) {
    if (!g.ok) return false;
  }
  return euler_combination && euler_multiplier;
}

ThetaReport verify_theta_generators() {
  const Poly3 h = mono(1, 0, 0, 2) + mono(-1, 2, 3, 0);
  const Poly3 zero;
  const Field xi1 = {mono(3, 1, 0, 0), mono(-2, 0, 1, 0), zero};
  const Field xi2 = {zero, mono(2, 0, 1, 0), mono(3, 0, 0, 1)};
  const Field xi3 = {zero, mono(2, 0, 0, 1), mono(3, 2, 2, 0)};
  const Field xi4 = {mono(1, 0, 0, 1), zero, mono(1, 1, 3, 0)};
  const Field xie = {mono(1, 1, 0, 0), mono(2, 0, 1, 0), mono(4, 0, 0, 1)};

  ThetaReport rep;
  const std::array<std::pair<const char*, const Field*>, 4> gens = {
      {{"xi1", &xi1}, {"xi2", &xi2}, {"xi3", &xi3}, {"xi4", &xi4}}};
  for (const auto& [name, field] : gens) {
    const auto q = exact_quotient_by_h(apply(*field, h));
    if (!q) throw Error(ErrorCode::FactorizationFailure, std::string(name) + " h is not a multiple of h");
    rep.generators.push_back({name, to_text(*q), true});
  }
  bool comb = true;
  for (int k = 0; k < 3; ++k) comb = comb && (scaled(xie[k], 3) == xi1[k] + scaled(xi2[k], 4));
  rep.euler_combination = comb;
  const auto qe = exact_quotient_by_h(apply(xie, h));
  rep.euler_multiplier = qe && *qe == mono(8, 0, 0, 0);
  return rep;
}

std::vector<NormalFormRow> normal_form_table() {
  return {
      {"u ± v", 0, "u ± v", ""},
      {"u ± v^2", 1, "u ± v^2 + a1 v", ""},
      {"u ± v^3", 2, "u ± v^3 + a1 v + a2 v^2", ""},
      {"±v ± u^2", 1, "±v ± u^2 + a1 u", ""},
      {"±v + u^3", 2, "±v + u^3 + a1 u + a2 u^2", ""},
      {"w ± u^2 + buv + cv^2, c ≠ 0, b^2/4", 2, "w ± u^2 + buv + cv^2 + a1 u + a2 v",
       "b and c are moduli; the codimension is that of the stratum"},
  };
}

}  // namespace frontal
