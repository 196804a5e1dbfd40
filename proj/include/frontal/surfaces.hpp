#pragma once

#include "frontal/jet.hpp"

namespace frontal {

enum class EdgeMode { Prefold, Folded };

/// The functions a, b0, b1, b2 (of x) and b3 (of x, y) of the cuspidal-edge
/// normal form (x, a + y^2/2, b0 + b1 y^2 + b2 y^3 + b3 y^4).
struct EdgeCoefficients {
  Jet1 a, b0, b1, b2;
  Jet2 b3;

  static EdgeCoefficients zero(int order = kDefaultOrder);
  int order() const { return a.order(); }
};

/// Prefold: a(0) = a'(0) = b0(0) = b0'(0) = b1(0) = 0.
/// Folded:  a(0) = a'(0) = b0(0) = 0.
/// Throws ConstraintViolation (or OrderMismatch for ragged orders).
void validate(const EdgeCoefficients& c, EdgeMode mode, double tol = 1e-12);

MapGerm3 normal_form(const EdgeCoefficients& c, EdgeMode mode = EdgeMode::Folded);
/// (X, Y, Z) -> (X, Y, Z^2) applied to a germ.
MapGerm3 fold(const MapGerm3& f);
inline MapGerm3 folded_germ(const EdgeCoefficients& c) { return fold(normal_form(c, EdgeMode::Folded)); }

struct SkClass {
  enum class Kind { CuspidalEdge, Sk, Degenerate };
  Kind kind = Kind::Degenerate;
  int k = -1;
  int sign = 0;
};

bool operator==(const SkClass& a, const SkClass& b);

/// Prefold tests b2, folded tests b0.
SkClass classify_sk(const EdgeCoefficients& c, EdgeMode mode, double tol = 1e-10);

struct FrontalData {
  MapGerm3 f;
  MapGerm3 nu;
  Jet2 lambda;
  VectorField2 xi;
  VectorField2 eta;
  double eta_lambda0 = 0.0;
  bool first_kind = false;
};

/// Singular set {y = 0}; eta f must be divisible by y.
/// nu = normalize(xi f x (eta f / y)), lambda = det(f_x, f_y, nu).
FrontalData frontal_structure(const MapGerm3& f, const VectorField2& xi, const VectorField2& eta);
FrontalData frontal_structure(const MapGerm3& f);

struct DevelopableGerm {
  MapGerm3 f;
  Jet2 lambda;  // v, the singular-set function in the (u, v) chart
  VectorField2 xi;
  VectorField2 eta;
  FrontalData frontal;
};

/// f(u, v) = (u + v, g2 + v g2', g3 + v g3'). Throws NotFirstKind when the
/// curve (u, g2, g3) has zero curvature at 0.
DevelopableGerm tangent_developable(const Jet1& gamma2, const Jet1& gamma3);

MapGerm3 model_cross_cap(int order = kDefaultOrder);
/// (x, y^2, x^{k+1} y^3 + sign y^5)
MapGerm3 model_sk(int k, int sign, int order = kDefaultOrder);

/// Normal of the osculating plane of the edge image phi(x, 0) at 0.
Vec3d osculating_normal_of_edge(const EdgeCoefficients& c);

}  // namespace frontal
