#pragma once

// Critical-value sets of the deformed height families for the normal forms
// of submersions on X = {(x, y^2, x y^3)}: proper dual (PD), dual of the
// double point curve (DPC) and dual of the cuspidal edge (CE).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frontal/jet.hpp"

namespace frontal {

enum class DiscriminantLabel { PD, DPC, CE };
std::string_view to_string(DiscriminantLabel l);
std::optional<DiscriminantLabel> parse_label(std::string_view s);

struct NormalFormId {
  enum class Row { UV, UV2, UV3, VU2, VU3, W };
  Row row = Row::UV;
  // For u-rows the sign is that of the v-term; for v-rows sign_v / sign_u;
  // for the last row the sign of u^2.
  int sign = 1;
  int sign_u = 1;
  double b = 0.0;
  double c = 1.0;
};

std::string to_string(const NormalFormId& id);
/// Accepts forms such as "u+v^2", "u-v^3", "-v+u^2", "v-u^3",
/// "w+u^2+buv+cv^2" (moduli are set separately).
NormalFormId parse_normal_form_id(std::string_view s);
std::vector<NormalFormId> all_normal_forms(double b = 0.3, double c = 0.5);

/// Throws InvalidModuli when the last row degenerates (c = 0 or the
/// quadratic part in u, v becomes a square).
void validate_moduli(const NormalFormId& id);

/// G(u, v, w, a) and its partials in u, v, w.
struct GermValue {
  double g, gu, gv, gw;
};
GermValue deformed_germ(const NormalFormId& id, double u, double v, double w, double a1, double a2);

/// F(x, y, a) = G(x, y^2, x y^3, a) with F_x and F_y.
struct PulledBack {
  double f, fx, fy;
};
PulledBack pulled_back(const NormalFormId& id, double x, double y, double a1, double a2);

struct DiscriminantSample {
  int branch = 0;
  double a1 = 0.0, a2 = 0.0, value = 0.0;
  // Source point at which the critical equations hold.
  double x = 0.0, y = 0.0;
  double residual = 0.0;
};

struct DiscriminantSheet {
  DiscriminantLabel label = DiscriminantLabel::PD;
  NormalFormId id;
  int grid = 64;
  std::vector<std::string> branches;
  std::vector<DiscriminantSample> samples;

  double max_residual() const;
  std::vector<Vec3d> points() const;
};

/// Samples every branch on a grid x grid lattice over [-1, 1]^2 of its two
/// parameters and back-substitutes each sample.
DiscriminantSheet sheet(const NormalFormId& id, DiscriminantLabel label, int grid = 64);

/// Largest |H(y) - H(-y)| over the DPC samples, plus the mismatch of the
/// sample obtained from the reflected witness.
double dpc_evenness_defect(const DiscriminantSheet& dpc);

/// Each CE sample, with its witness, checked against the PD critical
/// equations; returns the worst residual.
double ce_in_pd_defect(const DiscriminantSheet& ce);

void export_point_cloud(const DiscriminantSheet& s, const std::string& path);

struct PointCloud {
  std::string label;
  std::string normal_form;
  std::vector<Vec3d> points;
};
PointCloud read_point_cloud(const std::string& path);

/// ASCII PLY with one quad strip mesh per branch.
void export_ply(const DiscriminantSheet& s, const std::string& path);

}  // namespace frontal
