#pragma once

// Plain-text coefficient and curve files.
//
//   order = 8
//   mode = folded        # or prefold
//   seed = 7
//   [a]
//   2 = 0.5              # coefficient of x^2
//   [b3]
//   1 0 = -0.25          # coefficient of x y^0 ... i.e. x^i y^j
//
// Curve files use sections [gamma2] and [gamma3].

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "frontal/surfaces.hpp"

namespace frontal {

/// kDefaultOrder unless FRONTAL_JET_ORDER holds an integer in [2, 40].
int default_jet_order();

struct CoefficientFile {
  int order = kDefaultOrder;
  EdgeMode mode = EdgeMode::Folded;
  std::optional<std::uint64_t> seed;
  EdgeCoefficients coeffs;
};

CoefficientFile parse_coefficient_text(std::string_view text, const std::string& source = "<input>");
CoefficientFile read_coefficient_file(const std::string& path);
std::string format_coefficient_text(const CoefficientFile& f);

struct CurveFile {
  int order = kDefaultOrder;
  Jet1 gamma2, gamma3;
};

CurveFile parse_curve_text(std::string_view text, const std::string& source = "<input>");
CurveFile read_curve_file(const std::string& path);
std::string format_curve_text(const CurveFile& f);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace frontal
