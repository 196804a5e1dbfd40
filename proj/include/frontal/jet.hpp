#pragma once

// Truncated Taylor polynomials at the origin in one and two variables, plus
// the 3-vector algebra over them. All arithmetic discards terms whose total
// degree exceeds the truncation order.

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "frontal/errors.hpp"

namespace frontal {

inline constexpr int kDefaultOrder = 8;

double factorial(int n);

// ---------------------------------------------------------------------------
// Jet1: c[0] + c[1] t + ... + c[N] t^N

class Jet1 {
 public:
  Jet1() : Jet1(0) {}
  explicit Jet1(int order);
  /// Coefficients beyond `coeffs.size()` are zero; extra ones are dropped.
  Jet1(int order, std::span<const double> coeffs);
  Jet1(int order, std::initializer_list<double> coeffs)
      : Jet1(order, std::span<const double>(coeffs.begin(), coeffs.size())) {}

  static Jet1 constant(int order, double c);
  static Jet1 variable(int order);
  /// Builds the jet from derivative values f(0), f'(0), f''(0), ...
  static Jet1 from_derivatives(int order, std::span<const double> derivs);

  int order() const { return order_; }
  double operator[](int k) const { return (k >= 0 && k <= order_) ? c_[k] : 0.0; }
  double& coeff(int k);
  std::span<const double> coeffs() const { return c_; }

  /// k-th derivative at 0, i.e. k! c[k].
  double derivative_at_zero(int k) const { return factorial(k) * (*this)[k]; }
  double evaluate(double t) const;
  long double evaluate_ld(long double t) const;
  /// Value of the k-th derivative of the polynomial at t.
  long double derivative_at(int k, long double t) const;

  Jet1 derivative() const;
  Jet1 truncated(int order) const;
  double max_abs() const;

  Jet1 operator-() const;
  Jet1& operator+=(const Jet1& o);
  Jet1& operator-=(const Jet1& o);
  Jet1& operator*=(const Jet1& o);
  Jet1& operator*=(double s);

  friend Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
  friend Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
  friend Jet1 operator*(Jet1 a, const Jet1& b) { return a *= b; }
  friend Jet1 operator*(Jet1 a, double s) { return a *= s; }
  friend Jet1 operator*(double s, Jet1 a) { return a *= s; }
  friend Jet1 operator+(Jet1 a, double s) { a.c_[0] += s; return a; }
  friend Jet1 operator+(double s, Jet1 a) { a.c_[0] += s; return a; }
  friend Jet1 operator-(Jet1 a, double s) { a.c_[0] -= s; return a; }
  friend Jet1 operator-(double s, const Jet1& a) { return (-a) + s; }
  friend Jet1 operator/(Jet1 a, double s) { return a *= (1.0 / s); }

 private:
  int order_;
  std::vector<double> c_;
};

Jet1 recip(const Jet1& a);
Jet1 pow_rational(const Jet1& a, int p, int q);
Jet1 sqrt(const Jet1& a);
Jet1 operator/(const Jet1& a, const Jet1& b);

// ---------------------------------------------------------------------------
// Jet2: sum of c[i][j] x^i y^j over i + j <= N, stored by total degree.

class Jet2 {
 public:
  Jet2() : Jet2(0) {}
  explicit Jet2(int order);

  static Jet2 constant(int order, double c);
  static Jet2 x(int order);
  static Jet2 y(int order);
  static Jet2 monomial(int order, int i, int j, double c = 1.0);
  /// Lifts f(t) to the jet f(x) (resp. f(y)) of the same order.
  static Jet2 in_x(const Jet1& f);
  static Jet2 in_y(const Jet1& f);

  int order() const { return order_; }
  double coeff(int i, int j) const;
  double& coeff_ref(int i, int j);
  void set(int i, int j, double v) { coeff_ref(i, j) = v; }
  std::span<const double> raw() const { return c_; }

  /// Partial derivative d^{i+j} / dx^i dy^j at the origin.
  double partial_at_zero(int i, int j) const;
  double evaluate(double x, double y) const;
  double max_abs() const;

  Jet2 d_dx() const;
  Jet2 d_dy() const;
  Jet2 truncated(int order) const;
  /// Exact quotient by x^i y^j. The coefficients that would have to be
  /// dropped must vanish to 1e-10 relative to the largest coefficient.
  Jet2 divide_by_monomial(int i, int j) const;
  Jet1 restrict_y0() const;
  Jet1 restrict_x0() const;
  /// Part of the jet that is even (resp. odd) in y.
  Jet2 even_in_y() const;
  Jet2 odd_in_y() const;

  Jet2 operator-() const;
  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(const Jet2& o);
  Jet2& operator*=(double s);

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
  friend Jet2 operator*(Jet2 a, double s) { return a *= s; }
  friend Jet2 operator*(double s, Jet2 a) { return a *= s; }
  friend Jet2 operator+(Jet2 a, double s) { a.c_[0] += s; return a; }
  friend Jet2 operator+(double s, Jet2 a) { a.c_[0] += s; return a; }
  friend Jet2 operator-(Jet2 a, double s) { a.c_[0] -= s; return a; }
  friend Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }
  friend Jet2 operator/(Jet2 a, double s) { return a *= (1.0 / s); }

 private:
  static std::size_t index(int i, int j) {
    const int d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + j);
  }

  int order_;
  std::vector<double> c_;
};

Jet2 recip(const Jet2& a);
Jet2 pow_rational(const Jet2& a, int p, int q);
Jet2 sqrt(const Jet2& a);
Jet2 operator/(const Jet2& a, const Jet2& b);

/// f(g(t), h(t)) with g(0) = h(0) = 0; the result has the order of f.
Jet1 compose(const Jet2& f, const Jet1& g, const Jet1& h);
/// f(g(x,y), h(x,y)) with g(0) = h(0) = 0.
Jet2 compose(const Jet2& f, const Jet2& g, const Jet2& h);
/// f(g(t)) with g(0) = 0.
Jet1 compose(const Jet1& f, const Jet1& g);

// ---------------------------------------------------------------------------
// 3-vectors over a coefficient ring (double, Jet1 or Jet2).

template <class T>
struct Vec3 {
  std::array<T, 3> c;

  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }

  Vec3& operator+=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(const T& s, const Vec3& a) { return {{s * a[0], s * a[1], s * a[2]}}; }
  friend Vec3 operator*(const Vec3& a, const T& s) { return s * a; }
};

using Vec3d = Vec3<double>;
using MapGerm3 = Vec3<Jet2>;
using Curve3 = Vec3<Jet1>;

template <class T>
Vec3<T> scale(const Vec3<T>& a, double s) {
  return {{a[0] * s, a[1] * s, a[2] * s}};
}

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

template <class T>
T det3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
  return dot(a, cross(b, c));
}

inline double norm(const Vec3d& a) { return std::sqrt(dot(a, a)); }

template <class J>
int order_of(const Vec3<J>& a) {
  const int o = a[0].order();
  if (a[1].order() != o || a[2].order() != o) {
    throw Error(ErrorCode::OrderMismatch, "vector components have different orders");
  }
  return o;
}

template <class J>
Vec3<J> truncated(const Vec3<J>& a, int order) {
  return {{a[0].truncated(order), a[1].truncated(order), a[2].truncated(order)}};
}

/// Value at the origin of each component.
Vec3d value_at_zero(const MapGerm3& f);
Vec3d value_at_zero(const Curve3& g);
/// k-th derivative at 0 of each component of a curve.
Vec3d derivative_at_zero(const Curve3& g, int k);
Curve3 derivative(const Curve3& g);
Curve3 restrict_y0(const MapGerm3& f);
Vec3d evaluate(const MapGerm3& f, double x, double y);

MapGerm3 make_germ(Jet2 x, Jet2 y, Jet2 z);
MapGerm3 d_dx(const MapGerm3& f);
MapGerm3 d_dy(const MapGerm3& f);
MapGerm3 divide_by_monomial(const MapGerm3& f, int i, int j);
/// Each component composed with (g, h).
Curve3 compose(const MapGerm3& f, const Jet1& g, const Jet1& h);
MapGerm3 compose(const MapGerm3& f, const Jet2& g, const Jet2& h);

// ---------------------------------------------------------------------------

/// zeta = u_comp d/dx + v_comp d/dy.
struct VectorField2 {
  Jet2 u_comp;
  Jet2 v_comp;

  static VectorField2 partial_x(int order);
  static VectorField2 partial_y(int order);

  /// zeta(f) = u_comp f_x + v_comp f_y; the order drops by one.
  Jet2 apply(const Jet2& f) const;
  MapGerm3 apply(const MapGerm3& f) const;
};

/// zeta applied `times` times; throws OrderExhausted when the truncation
/// order would become negative.
Jet2 directional_derivative(const Jet2& f, const VectorField2& zeta, int times);
MapGerm3 directional_derivative(const MapGerm3& f, const VectorField2& zeta, int times);

}  // namespace frontal
