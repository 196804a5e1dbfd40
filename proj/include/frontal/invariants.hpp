#pragma once

#include <optional>
#include <string>

#include "frontal/surfaces.hpp"

namespace frontal {

enum class Provenance { Direct, ClosedForm };
std::string_view to_string(Provenance p);

// Invariants along the singular curve gamma(t) = (t, 0), as jets in t.
Jet1 kappa_s(const FrontalData& fd);
Jet1 kappa_nu(const FrontalData& fd);
Jet1 kappa_c(const FrontalData& fd);
Jet1 kappa_t(const FrontalData& fd);

struct BiasResult {
  double B = 0.0;
  double kappa_c_r = 0.0;
  double l = 0.0;
  double alpha = 0.0;  // eta~ = eta + (alpha y + beta y^2) xi
  double beta = 0.0;
};

/// Requires kappa_c(0) = 0; builds the corrected null field itself.
BiasResult bias_and_secondary(const FrontalData& fd);
/// Same with a caller-supplied null field; throws ConstraintViolation if it
/// does not satisfy the two orthogonality conditions at 0.
BiasResult bias_and_secondary(const FrontalData& fd, const VectorField2& eta_tilde);

struct RegularCurveInvariants {
  double kappa = 0.0;
  std::optional<double> tau;  // undefined where kappa vanishes
};

RegularCurveInvariants curve_invariants_regular(const Curve3& gamma);

enum class SingularCurveType { AType, Type23, Degenerate };
std::string_view to_string(SingularCurveType t);

struct SingularCurveInvariants {
  SingularCurveType type = SingularCurveType::Degenerate;
  std::optional<double> kappa_sing;
  std::optional<double> tau_sing;
  std::optional<double> sigma_sing;
};

SingularCurveInvariants curve_invariants_singular(const Curve3& gamma);
SingularCurveInvariants singular_invariants_from_derivatives(const Vec3d& g2, const Vec3d& g3, const Vec3d& g4);

struct InvariantReport {
  Jet1 kappa_s, kappa_nu, kappa_t, kappa_c;
  std::optional<double> B, kappa_c_r, l;
  std::optional<double> curve_kappa, curve_tau;
  std::optional<SingularCurveInvariants> sing;
  Provenance provenance = Provenance::Direct;
};

/// Direct evaluation on a frontal; B and kappa_c^r are filled in when
/// kappa_c(0) vanishes, the edge-curve invariants when the edge is regular.
InvariantReport direct_report(const FrontalData& fd);

/// Gate used by bias_and_secondary.
bool kappa_c_vanishes(const Jet1& kc);

}  // namespace frontal
