#include "frontal/jet.hpp"

#include <algorithm>
#include <string>

namespace frontal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NonPositiveConstantTerm: return "NonPositiveConstantTerm";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::OrderExhausted: return "OrderExhausted";
    case ErrorCode::NonvanishingConstant: return "NonvanishingConstant";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::NormalDegenerate: return "NormalDegenerate";
    case ErrorCode::NotFirstKind: return "NotFirstKind";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::RegularityViolation: return "RegularityViolation";
    case ErrorCode::NotCrossCap: return "NotCrossCap";
    case ErrorCode::DegenerateDPC: return "DegenerateDPC";
    case ErrorCode::HessianRankNotOne: return "HessianRankNotOne";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::InvalidModuli: return "InvalidModuli";
    case ErrorCode::InvalidDirection: return "InvalidDirection";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorCode::OrderExhausted, "truncation order below zero");
}

void require_same(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::OrderMismatch,
                "orders " + std::to_string(a) + " and " + std::to_string(b) + " differ");
  }
}

// sum_k coeffs[k] u^k for u with zero constant term; Horner in the jet ring.
template <class J>
J series_of(const J& u, const std::vector<double>& coeffs) {
  J acc = J::constant(u.order(), coeffs.back());
  for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) {
    acc = acc * u + coeffs[k];
  }
  return acc;
}

// Binomial coefficients of (1+u)^alpha up to u^n.
std::vector<double> binomial_series(double alpha, int n) {
  std::vector<double> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1.0;
  for (int k = 1; k <= n; ++k) b[k] = b[k - 1] * (alpha - (k - 1)) / k;
  return b;
}

template <class J>
double constant_term(const J& a);
template <>
double constant_term(const Jet1& a) { return a[0]; }
template <>
double constant_term(const Jet2& a) { return a.coeff(0, 0); }

template <class J>
J power_of_unit(const J& a, double alpha, double c0_alpha) {
  const double c0 = constant_term(a);
  J u = a / c0 - 1.0;
  return series_of(u, binomial_series(alpha, a.order())) * c0_alpha;
}

template <class J>
J recip_impl(const J& a) {
  const double c0 = constant_term(a);
  if (c0 == 0.0) throw Error(ErrorCode::ZeroConstantTerm, "reciprocal of a jet vanishing at 0");
  return power_of_unit(a, -1.0, 1.0 / c0);
}

template <class J>
J pow_rational_impl(const J& a, int p, int q) {
  if (q <= 0) throw Error(ErrorCode::NonPositiveConstantTerm, "denominator of the exponent must be positive");
  const double c0 = constant_term(a);
  if (!(c0 > 0.0)) {
    throw Error(ErrorCode::NonPositiveConstantTerm, "rational power needs a positive constant term");
  }
  const double alpha = static_cast<double>(p) / q;
  return power_of_unit(a, alpha, std::pow(c0, alpha));
}

}  // namespace

// ---------------------------------------------------------------------------
// Jet1

Jet1::Jet1(int order) : order_(order) {
  require_order(order);
  c_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

Jet1::Jet1(int order, std::span<const double> coeffs) : Jet1(order) {
  const std::size_t n = std::min(coeffs.size(), c_.size());
  std::copy_n(coeffs.begin(), n, c_.begin());
}

Jet1 Jet1::constant(int order, double c) {
  Jet1 j(order);
  j.c_[0] = c;
  return j;
}

Jet1 Jet1::variable(int order) {
  Jet1 j(order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

Jet1 Jet1::from_derivatives(int order, std::span<const double> derivs) {
  Jet1 j(order);
  for (std::size_t k = 0; k < derivs.size() && static_cast<int>(k) <= order; ++k) {
    j.c_[k] = derivs[k] / factorial(static_cast<int>(k));
  }
  return j;
}

double& Jet1::coeff(int k) {
  if (k < 0 || k > order_) throw Error(ErrorCode::OrderMismatch, "exponent exceeds the jet order");
  return c_[static_cast<std::size_t>(k)];
}

double Jet1::evaluate(double t) const {
  double acc = 0.0;
  for (int k = order_; k >= 0; --k) acc = acc * t + c_[k];
  return acc;
}

long double Jet1::evaluate_ld(long double t) const {
  long double acc = 0.0L;
  for (int k = order_; k >= 0; --k) acc = acc * t + static_cast<long double>(c_[k]);
  return acc;
}

long double Jet1::derivative_at(int k, long double t) const {
  long double acc = 0.0L;
  for (int m = order_; m >= k; --m) {
    long double falling = 1.0L;
    for (int r = 0; r < k; ++r) falling *= static_cast<long double>(m - r);
    acc = acc * t + falling * static_cast<long double>(c_[m]);
  }
  return acc;
}

Jet1 Jet1::derivative() const {
  Jet1 d(order_ - 1);
  for (int k = 1; k <= order_; ++k) d.c_[k - 1] = k * c_[k];
  return d;
}

Jet1 Jet1::truncated(int order) const {
  if (order > order_) throw Error(ErrorCode::OrderMismatch, "cannot raise the order of a jet");
  return Jet1(order, std::span<const double>(c_.data(), static_cast<std::size_t>(order) + 1));
}

double Jet1::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

Jet1 Jet1::operator-() const {
  Jet1 r(*this);
  for (double& v : r.c_) v = -v;
  return r;
}

Jet1& Jet1::operator+=(const Jet1& o) {
  require_same(order_, o.order_);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet1& Jet1::operator-=(const Jet1& o) {
  require_same(order_, o.order_);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet1& Jet1::operator*=(const Jet1& o) {
  require_same(order_, o.order_);
  std::vector<double> r(c_.size(), 0.0);
  for (int i = 0; i <= order_; ++i) {
    if (c_[i] == 0.0) continue;
    for (int j = 0; i + j <= order_; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  return *this;
}

Jet1& Jet1::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Jet1 recip(const Jet1& a) { return recip_impl(a); }
Jet1 pow_rational(const Jet1& a, int p, int q) { return pow_rational_impl(a, p, q); }
Jet1 sqrt(const Jet1& a) { return pow_rational_impl(a, 1, 2); }
Jet1 operator/(const Jet1& a, const Jet1& b) { return a * recip(b); }

// ---------------------------------------------------------------------------
// Jet2

Jet2::Jet2(int order) : order_(order) {
  require_order(order);
  c_.assign(static_cast<std::size_t>((order + 1) * (order + 2) / 2), 0.0);
}

Jet2 Jet2::constant(int order, double c) {
  Jet2 j(order);
  j.c_[0] = c;
  return j;
}

Jet2 Jet2::x(int order) { return monomial(order, 1, 0); }
Jet2 Jet2::y(int order) { return monomial(order, 0, 1); }

Jet2 Jet2::monomial(int order, int i, int j, double c) {
  Jet2 m(order);
  if (i + j <= order) m.c_[index(i, j)] = c;
  return m;
}

Jet2 Jet2::in_x(const Jet1& f) {
  Jet2 r(f.order());
  for (int k = 0; k <= f.order(); ++k) r.c_[index(k, 0)] = f[k];
  return r;
}

Jet2 Jet2::in_y(const Jet1& f) {
  Jet2 r(f.order());
  for (int k = 0; k <= f.order(); ++k) r.c_[index(0, k)] = f[k];
  return r;
}

double Jet2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) return 0.0;
  return c_[index(i, j)];
}

double& Jet2::coeff_ref(int i, int j) {
  if (i < 0 || j < 0 || i + j > order_) {
    throw Error(ErrorCode::OrderMismatch, "exponent exceeds the jet order");
  }
  return c_[index(i, j)];
}

double Jet2::partial_at_zero(int i, int j) const { return factorial(i) * factorial(j) * coeff(i, j); }

double Jet2::evaluate(double x, double y) const {
  double acc = 0.0;
  for (int i = order_; i >= 0; --i) {
    double row = 0.0;
    for (int j = order_ - i; j >= 0; --j) row = row * y + c_[index(i, j)];
    acc = acc * x + row;
  }
  return acc;
}

double Jet2::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

Jet2 Jet2::d_dx() const {
  Jet2 d(order_ - 1);
  for (int i = 1; i <= order_; ++i) {
    for (int j = 0; i + j <= order_; ++j) d.c_[index(i - 1, j)] = i * c_[index(i, j)];
  }
  return d;
}

Jet2 Jet2::d_dy() const {
  Jet2 d(order_ - 1);
  for (int i = 0; i <= order_; ++i) {
    for (int j = 1; i + j <= order_; ++j) d.c_[index(i, j - 1)] = j * c_[index(i, j)];
  }
  return d;
}

Jet2 Jet2::truncated(int order) const {
  if (order > order_) throw Error(ErrorCode::OrderMismatch, "cannot raise the order of a jet");
  Jet2 r(order);
  std::copy_n(c_.begin(), r.c_.size(), r.c_.begin());
  return r;
}

Jet2 Jet2::divide_by_monomial(int i, int j) const {
  if (i < 0 || j < 0) throw Error(ErrorCode::NotDivisible, "negative exponent");
  const double scale = max_abs();
  for (int p = 0; p <= order_; ++p) {
    for (int q = 0; p + q <= order_; ++q) {
      if ((p < i || q < j) && std::abs(c_[index(p, q)]) > 1e-10 * scale) {
        throw Error(ErrorCode::NotDivisible, "coefficient of x^" + std::to_string(p) + " y^" +
                                                 std::to_string(q) + " does not vanish");
      }
    }
  }
  Jet2 r(order_ - i - j);
  for (int p = 0; p <= r.order_; ++p) {
    for (int q = 0; p + q <= r.order_; ++q) r.c_[index(p, q)] = c_[index(p + i, q + j)];
  }
  return r;
}

Jet1 Jet2::restrict_y0() const {
  Jet1 r(order_);
  for (int k = 0; k <= order_; ++k) r.coeff(k) = c_[index(k, 0)];
  return r;
}

Jet1 Jet2::restrict_x0() const {
  Jet1 r(order_);
  for (int k = 0; k <= order_; ++k) r.coeff(k) = c_[index(0, k)];
  return r;
}

Jet2 Jet2::even_in_y() const {
  Jet2 r(*this);
  for (int i = 0; i <= order_; ++i) {
    for (int j = 1; i + j <= order_; j += 2) r.c_[index(i, j)] = 0.0;
  }
  return r;
}

Jet2 Jet2::odd_in_y() const { return *this - even_in_y(); }

Jet2 Jet2::operator-() const {
  Jet2 r(*this);
  for (double& v : r.c_) v = -v;
  return r;
}

Jet2& Jet2::operator+=(const Jet2& o) {
  require_same(order_, o.order_);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  require_same(order_, o.order_);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& o) {
  require_same(order_, o.order_);
  std::vector<double> r(c_.size(), 0.0);
  for (int i = 0; i <= order_; ++i) {
    for (int j = 0; i + j <= order_; ++j) {
      const double a = c_[index(i, j)];
      if (a == 0.0) continue;
      for (int k = 0; i + j + k <= order_; ++k) {
        for (int l = 0; i + j + k + l <= order_; ++l) {
          r[index(i + k, j + l)] += a * o.c_[index(k, l)];
        }
      }
    }
  }
  c_ = std::move(r);
  return *this;
}

Jet2& Jet2::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Jet2 recip(const Jet2& a) { return recip_impl(a); }
Jet2 pow_rational(const Jet2& a, int p, int q) { return pow_rational_impl(a, p, q); }
Jet2 sqrt(const Jet2& a) { return pow_rational_impl(a, 1, 2); }
Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }

// ---------------------------------------------------------------------------
// Composition

namespace {

template <class J>
std::vector<J> powers(const J& g, int n) {
  std::vector<J> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.push_back(J::constant(g.order(), 1.0));
  for (int k = 1; k <= n; ++k) p.push_back(p.back() * g);
  return p;
}

}  // namespace

Jet1 compose(const Jet2& f, const Jet1& g, const Jet1& h) {
  if (g[0] != 0.0 || h[0] != 0.0) {
    throw Error(ErrorCode::NonvanishingConstant, "substituted series must vanish at 0");
  }
  const int n = f.order();
  const Jet1 gg = g.order() >= n ? g.truncated(n) : throw Error(ErrorCode::OrderMismatch, "substitution order too low");
  const Jet1 hh = h.order() >= n ? h.truncated(n) : throw Error(ErrorCode::OrderMismatch, "substitution order too low");
  const auto gp = powers(gg, n);
  const auto hp = powers(hh, n);
  Jet1 r(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const double c = f.coeff(i, j);
      if (c != 0.0) r += c * (gp[i] * hp[j]);
    }
  }
  return r;
}

Jet2 compose(const Jet2& f, const Jet2& g, const Jet2& h) {
  if (g.coeff(0, 0) != 0.0 || h.coeff(0, 0) != 0.0) {
    throw Error(ErrorCode::NonvanishingConstant, "substituted series must vanish at 0");
  }
  const int n = f.order();
  if (g.order() < n || h.order() < n) throw Error(ErrorCode::OrderMismatch, "substitution order too low");
  const auto gp = powers(g.truncated(n), n);
  const auto hp = powers(h.truncated(n), n);
  Jet2 r(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const double c = f.coeff(i, j);
      if (c != 0.0) r += c * (gp[i] * hp[j]);
    }
  }
  return r;
}

Jet1 compose(const Jet1& f, const Jet1& g) {
  if (g[0] != 0.0) throw Error(ErrorCode::NonvanishingConstant, "substituted series must vanish at 0");
  const int n = f.order();
  if (g.order() < n) throw Error(ErrorCode::OrderMismatch, "substitution order too low");
  const Jet1 gg = g.truncated(n);
  Jet1 acc = Jet1::constant(n, f[n]);
  for (int k = n - 1; k >= 0; --k) acc = acc * gg + f[k];
  return acc;
}

// ---------------------------------------------------------------------------
// Vector helpers

Vec3d value_at_zero(const MapGerm3& f) { return {{f[0].coeff(0, 0), f[1].coeff(0, 0), f[2].coeff(0, 0)}}; }
Vec3d value_at_zero(const Curve3& g) { return {{g[0][0], g[1][0], g[2][0]}}; }

Vec3d derivative_at_zero(const Curve3& g, int k) {
  return {{g[0].derivative_at_zero(k), g[1].derivative_at_zero(k), g[2].derivative_at_zero(k)}};
}

Curve3 derivative(const Curve3& g) { return {{g[0].derivative(), g[1].derivative(), g[2].derivative()}}; }
Curve3 restrict_y0(const MapGerm3& f) { return {{f[0].restrict_y0(), f[1].restrict_y0(), f[2].restrict_y0()}}; }

Vec3d evaluate(const MapGerm3& f, double x, double y) {
  return {{f[0].evaluate(x, y), f[1].evaluate(x, y), f[2].evaluate(x, y)}};
}

MapGerm3 make_germ(Jet2 x, Jet2 y, Jet2 z) {
  MapGerm3 f{{std::move(x), std::move(y), std::move(z)}};
  order_of(f);
  return f;
}

MapGerm3 d_dx(const MapGerm3& f) { return {{f[0].d_dx(), f[1].d_dx(), f[2].d_dx()}}; }
MapGerm3 d_dy(const MapGerm3& f) { return {{f[0].d_dy(), f[1].d_dy(), f[2].d_dy()}}; }

MapGerm3 divide_by_monomial(const MapGerm3& f, int i, int j) {
  return {{f[0].divide_by_monomial(i, j), f[1].divide_by_monomial(i, j), f[2].divide_by_monomial(i, j)}};
}

Curve3 compose(const MapGerm3& f, const Jet1& g, const Jet1& h) {
  return {{compose(f[0], g, h), compose(f[1], g, h), compose(f[2], g, h)}};
}

MapGerm3 compose(const MapGerm3& f, const Jet2& g, const Jet2& h) {
  return {{compose(f[0], g, h), compose(f[1], g, h), compose(f[2], g, h)}};
}

// ---------------------------------------------------------------------------
// Vector fields

VectorField2 VectorField2::partial_x(int order) { return {Jet2::constant(order, 1.0), Jet2(order)}; }
VectorField2 VectorField2::partial_y(int order) { return {Jet2(order), Jet2::constant(order, 1.0)}; }

Jet2 VectorField2::apply(const Jet2& f) const {
  if (f.order() < 1) throw Error(ErrorCode::OrderExhausted, "cannot differentiate an order-0 jet");
  const int n = std::min({f.order() - 1, u_comp.order(), v_comp.order()});
  return u_comp.truncated(n) * f.d_dx().truncated(n) + v_comp.truncated(n) * f.d_dy().truncated(n);
}

MapGerm3 VectorField2::apply(const MapGerm3& f) const { return {{apply(f[0]), apply(f[1]), apply(f[2])}}; }

Jet2 directional_derivative(const Jet2& f, const VectorField2& zeta, int times) {
  if (times < 0) throw Error(ErrorCode::OrderExhausted, "negative derivative count");
  Jet2 r = f;
  for (int k = 0; k < times; ++k) r = zeta.apply(r);
  return r;
}

MapGerm3 directional_derivative(const MapGerm3& f, const VectorField2& zeta, int times) {
  if (times < 0) throw Error(ErrorCode::OrderExhausted, "negative derivative count");
  MapGerm3 r = f;
  for (int k = 0; k < times; ++k) r = zeta.apply(r);
  return r;
}

}  // namespace frontal
