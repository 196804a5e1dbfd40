#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontal/folded.hpp"

namespace frontal {

struct Direction3 {
  double v1 = 0.0, v2 = 0.0, v3 = 1.0;

  /// Normalizes (a, b, c); throws InvalidDirection on the zero vector.
  static Direction3 from(double a, double b, double c);
  static Direction3 from(const Vec3d& v) { return from(v[0], v[1], v[2]); }
  Vec3d vec() const { return {{v1, v2, v3}}; }
};

/// H_v = phi . v
Jet2 height_function(const MapGerm3& phi, const Direction3& v);
bool singular_at_origin(const Jet2& h, double tol = 1e-12);

/// Thresholds: a quantity counts as nonzero above kNonzero * scale and as
/// zero below kZero * scale; anything in between is left unresolved.
inline constexpr double kNonzero = 1e-7;
inline constexpr double kZero = 1e-9;

struct AkResult {
  bool flat = false;     // no coefficient above the threshold within the order
  bool ambiguous = false;  // a lower coefficient sits inside the unresolved band
  int k = 0;             // A_k
  int sign = 0;
  int order = 0;         // degree of the leading coefficient (k + 1), or the truncation order when flat
  double leading = 0.0;
  double scale = 0.0;
};

/// h(0) = h'(0) = 0 expected. The first m >= 2 with |c[m]| > tol * scale gives
/// A_{m-1} with the sign of c[m]; scale is the largest |c[m]|, m >= 2, or
/// `reference_scale` when that is larger.
AkResult detect_ak_1d(const Jet1& h, double tol = kNonzero, double reference_scale = 0.0);

struct ContactClass {
  enum class Kind { A, TangentConeDegenerate, Corank2, Regular, Unresolved };
  Kind kind = Kind::Unresolved;
  int k = 0;
  int sign = 0;
  int order = 0;  // for Unresolved: degree at which the decision failed

  struct Reason {
    bool singular = false;               // v1 = 0
    std::optional<bool> tangent_plane;   // pi_v contains the limiting tangent of dhat
    std::optional<bool> osculating_dpc;  // pi_v is the osculating plane of dhat
    std::optional<bool> tau_sing_nonzero;
    std::optional<bool> osculating_edge;  // pi_v is the osculating plane of the edge
    std::optional<bool> tau_sigma_nonzero;
    std::vector<std::string> notes;
  } reason;

  std::string label() const;
};

bool same_class(const ContactClass& a, const ContactClass& b);
ContactClass make_ak(int k, int sign);

/// Rotates so the nonzero Hessian eigendirection is the first variable, then
/// eliminates it along the solution of dh/dX = 0. Throws HessianRankNotOne.
Jet1 splitting_reduce(const Jet2& h, double tol = kNonzero);

/// Two-variable classification: rank-2 Hessian gives A1 (+ definite,
/// - indefinite), rank 1 goes through splitting_reduce, and a flat residual
/// is reported as TangentConeDegenerate.
ContactClass classify_height_germ(const Jet2& h, double tol = kNonzero);

struct DualPathClass {
  ContactClass result;     // agreed class, or Unresolved
  ContactClass condition;  // from the closed-form conditions
  ContactClass jet;        // from detect_ak_1d on the restriction
  bool agree = false;
};

DualPathClass classify_along_dpc(const EdgeCoefficients& c, const Direction3& v);
DualPathClass classify_along_edge(const EdgeCoefficients& c, const Direction3& v);

enum class Stratum { Generic, DpcTangent, DpcOsculating, EdgeOsculating, TangentCone };
std::string_view to_string(Stratum s);
std::optional<Stratum> parse_stratum(std::string_view s);

/// Exact direction in the requested stratum; `t` in [0, 1) selects a member
/// of the pencil where the stratum is one-dimensional.
Direction3 stratum_direction(const EdgeCoefficients& c, Stratum s, double t = 0.37);

struct ThetaCheck {
  std::string name;
  std::string lambda;  // the multiplier, printed as a polynomial
  bool ok = false;
};

struct ThetaReport {
  std::vector<ThetaCheck> generators;
  bool euler_combination = false;  // 3 xi_e = xi_1 + 4 xi_2
  bool euler_multiplier = false;   // xi_e h = 8 h
  bool all_ok() const;
};

/// Exact integer check of xi_i h = lambda_i h for h = w^2 - u^2 v^3.
ThetaReport verify_theta_generators();

struct NormalFormRow {
  std::string normal_form;
  int codimension;
  std::string versal_deformation;
  std::string note;
};

std::vector<NormalFormRow> normal_form_table();

}  // namespace frontal
