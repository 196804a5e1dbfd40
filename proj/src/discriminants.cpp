#include "frontal/discriminants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace frontal {

std::string_view to_string(DiscriminantLabel l) {
  switch (l) {
    case DiscriminantLabel::PD: return "PD";
    case DiscriminantLabel::DPC: return "DPC";
    case DiscriminantLabel::CE: return "CE";
  }
  return "PD";
}

std::optional<DiscriminantLabel> parse_label(std::string_view s) {
  for (auto l : {DiscriminantLabel::PD, DiscriminantLabel::DPC, DiscriminantLabel::CE}) {
    if (to_string(l) == s) return l;
  }
  return std::nullopt;
}

namespace {

char sign_char(int s) { return s > 0 ? '+' : '-'; }

int take_sign(std::string_view& s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    const int r = s.front() == '-' ? -1 : 1;
    s.remove_prefix(1);
    return r;
  }
  return 0;
}

}  // namespace

std::string to_string(const NormalFormId& id) {
  using R = NormalFormId::Row;
  switch (id.row) {
    case R::UV: return std::string("u") + sign_char(id.sign) + "v";
    case R::UV2: return std::string("u") + sign_char(id.sign) + "v^2";
    case R::UV3: return std::string("u") + sign_char(id.sign) + "v^3";
    case R::VU2: return std::string(id.sign < 0 ? "-" : "") + "v" + sign_char(id.sign_u) + "u^2";
    case R::VU3: return std::string(id.sign < 0 ? "-" : "") + "v" + sign_char(id.sign_u) + "u^3";
    case R::W: return std::string("w") + sign_char(id.sign) + "u^2+buv+cv^2";
  }
  return "?";
}

NormalFormId parse_normal_form_id(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ') compact += ch;
  }
  std::string_view s = compact;
  const auto fail = [&]() -> NormalFormId {
    throw Error(ErrorCode::ParseError, "unknown normal form '" + std::string(text) + "'");
  };
  NormalFormId id;
  using R = NormalFormId::Row;
  if (s.starts_with("w")) {
    s.remove_prefix(1);
    const int sg = take_sign(s);
    if (sg == 0 || s != "u^2+buv+cv^2") return fail();
    id.row = R::W;
    id.sign = sg;
    return id;
  }
  if (s.starts_with("u")) {
    s.remove_prefix(1);
    const int sg = take_sign(s);
    if (sg == 0) return fail();
    id.sign = sg;
    if (s == "v") id.row = R::UV;
    else if (s == "v^2") id.row = R::UV2;
    else if (s == "v^3") id.row = R::UV3;
    else return fail();
    return id;
  }
  const int sv = take_sign(s);
  id.sign = sv < 0 ? -1 : 1;
  if (!s.starts_with("v")) return fail();
  s.remove_prefix(1);
  const int su = take_sign(s);
  if (su == 0) return fail();
  id.sign_u = su;
  if (s == "u^2") id.row = R::VU2;
  else if (s == "u^3") id.row = R::VU3;
  else return fail();
  return id;
}

std::vector<NormalFormId> all_normal_forms(double b, double c) {
  using R = NormalFormId::Row;
  std::vector<NormalFormId> out;
  for (R r : {R::UV, R::UV2, R::UV3, R::W}) {
    for (int s : {1, -1}) out.push_back({r, s, 1, b, c});
  }
  for (R r : {R::VU2, R::VU3}) {
    for (int s : {1, -1}) {
      for (int su : {1, -1}) out.push_back({r, s, su, b, c});
    }
  }
  return out;
}

void validate_moduli(const NormalFormId& id) {
  if (id.row != NormalFormId::Row::W) return;
  if (!std::isfinite(id.b) || !std::isfinite(id.c)) throw Error(ErrorCode::InvalidModuli, "moduli must be finite");
  const double sq = id.sign * id.b * id.b / 4.0;
  const double tol = 1e-12 * std::max({1.0, std::abs(id.c), std::abs(sq)});
  if (std::abs(id.c) <= tol) throw Error(ErrorCode::InvalidModuli, "c must be nonzero");
  if (std::abs(id.c - sq) <= tol) throw Error(ErrorCode::InvalidModuli, "c must differ from b^2/4");
}

GermValue deformed_germ(const NormalFormId& id, double u, double v, double w, double a1, double a2) {
  using R = NormalFormId::Row;
  const double s = id.sign, su = id.sign_u;
  switch (id.row) {
    case R::UV: return {u + s * v, 1.0, s, 0.0};
    case R::UV2: return {u + s * v * v + a1 * v, 1.0, 2.0 * s * v + a1, 0.0};
    case R::UV3:
      return {u + s * v * v * v + a1 * v + a2 * v * v, 1.0, 3.0 * s * v * v + a1 + 2.0 * a2 * v, 0.0};
    case R::VU2: return {s * v + su * u * u + a1 * u, 2.0 * su * u + a1, s, 0.0};
    case R::VU3:
      return {s * v + su * u * u * u + a1 * u + a2 * u * u, 3.0 * su * u * u + a1 + 2.0 * a2 * u, s, 0.0};
    case R::W:
      return {w + s * u * u + id.b * u * v + id.c * v * v + a1 * u + a2 * v, 2.0 * s * u + id.b * v + a1,
              id.b * u + 2.0 * id.c * v + a2, 1.0};
  }
  return {0, 0, 0, 0};
}

PulledBack pulled_back(const NormalFormId& id, double x, double y, double a1, double a2) {
  const double y2 = y * y, y3 = y2 * y;
  const GermValue g = deformed_germ(id, x, y2, x * y3, a1, a2);
  return {g.g, g.gu + g.gw * y3, 2.0 * y * g.gv + 3.0 * x * y2 * g.gw};
}

double DiscriminantSheet::max_residual() const {
  double r = 0.0;
  for (const auto& s : samples) r = std::max(r, s.residual);
  return r;
}

std::vector<Vec3d> DiscriminantSheet::points() const {
  std::vector<Vec3d> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back({{s.a1, s.a2, s.value}});
  return out;
}

namespace {

// A branch maps two lattice parameters to (a1, a2, value) plus the witness.
using BranchFn = std::function<DiscriminantSample(double, double)>;

struct Branch {
  std::string name;
  BranchFn fn;
};

DiscriminantSample sample(double a1, double a2, double value, double x, double y) {
  DiscriminantSample s;
  s.a1 = a1;
  s.a2 = a2;
  s.value = value;
  s.x = x;
  s.y = y;
  return s;
}

std::vector<Branch> branches_for(const NormalFormId& id, DiscriminantLabel label) {
  using R = NormalFormId::Row;
  using L = DiscriminantLabel;
  const double s = id.sign, su = id.sign_u, b = id.b, c = id.c;
  const Branch plane{"plane", [](double p, double q) { return sample(p, q, 0.0, 0.0, 0.0); }};
  std::vector<Branch> out;
  switch (id.row) {
    case R::UV:
      if (label == L::DPC) out.push_back(plane);
      break;
    case R::UV2:
      if (label == L::DPC) {
        out.push_back(plane);
        out.push_back({"fold", [s](double y, double a2) {
                         return sample(-2.0 * s * y * y, a2, -s * std::pow(y, 4), 0.0, y);
                       }});
      }
      break;
    case R::UV3:
      if (label == L::DPC) {
        out.push_back(plane);
        out.push_back({"cusp", [s](double y, double a2) {
                         const double y2 = y * y;
                         return sample(-3.0 * s * y2 * y2 - 2.0 * a2 * y2, a2, -2.0 * s * y2 * y2 * y2 - a2 * y2 * y2,
                                       0.0, y);
                       }});
      }
      break;
    case R::VU2:
      if (label == L::DPC) {
        out.push_back(plane);
      } else {
        out.push_back({"fold", [su](double x, double a2) { return sample(-2.0 * su * x, a2, -su * x * x, x, 0.0); }});
      }
      break;
    case R::VU3:
      if (label == L::DPC) {
        out.push_back(plane);
      } else {
        out.push_back({"cusp", [su](double x, double a2) {
                         return sample(-3.0 * su * x * x - 2.0 * a2 * x, a2, -2.0 * su * x * x * x - a2 * x * x, x, 0.0);
                       }});
      }
      break;
    case R::W:
      if (label == L::DPC) {
        out.push_back(plane);
        out.push_back({"fold", [c](double a1, double y) {
                         return sample(a1, -2.0 * c * y * y, -c * std::pow(y, 4), 0.0, y);
                       }});
      } else {
        if (label == L::PD) {
          out.push_back({"cuspidal-cross-cap", [s, b, c](double x, double y) {
                           const double y2 = y * y, y3 = y2 * y;
                           return sample(-y3 - 2.0 * s * x - b * y2, -b * x - 1.5 * x * y - 2.0 * c * y2,
                                         -1.5 * x * y3 - s * x * x - b * x * y2 - c * y2 * y2, x, y);
                         }});
        }
        out.push_back({"edge", [s](double x, double a2) { return sample(-2.0 * s * x, a2, -s * x * x, x, 0.0); }});
      }
      break;
  }
  return out;
}

double residual_of(const NormalFormId& id, DiscriminantLabel label, const DiscriminantSample& s) {
  switch (label) {
    case DiscriminantLabel::PD: {
      const PulledBack f = pulled_back(id, s.x, s.y, s.a1, s.a2);
      return std::max({std::abs(f.fx), std::abs(f.fy), std::abs(f.f - s.value)});
    }
    case DiscriminantLabel::DPC: {
      const PulledBack f = pulled_back(id, 0.0, s.y, s.a1, s.a2);
      return std::max({std::abs(s.x), std::abs(f.fy), std::abs(f.f - s.value)});
    }
    case DiscriminantLabel::CE: {
      const PulledBack f = pulled_back(id, s.x, 0.0, s.a1, s.a2);
      return std::max({std::abs(s.y), std::abs(f.fx), std::abs(f.f - s.value)});
    }
  }
  return 0.0;
}

double lattice(int i, int n) { return n == 1 ? 0.0 : -1.0 + 2.0 * i / (n - 1); }

// Twelve significant digits, never in exponent notation.
std::string fixed12(double v) {
  if (v == 0.0 || !std::isfinite(v)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11f", v);
    return buf;
  }
  const int mag = static_cast<int>(std::floor(std::log10(std::abs(v))));
  const int decimals = std::clamp(11 - mag, 0, 40);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

DiscriminantSheet sheet(const NormalFormId& id, DiscriminantLabel label, int grid) {
  validate_moduli(id);
  if (grid < 1) throw Error(ErrorCode::ConstraintViolation, "grid must be positive");
  DiscriminantSheet out;
  out.label = label;
  out.id = id;
  out.grid = grid;
  const auto bs = branches_for(id, label);
  for (std::size_t k = 0; k < bs.size(); ++k) {
    out.branches.push_back(bs[k].name);
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        DiscriminantSample s = bs[k].fn(lattice(i, grid), lattice(j, grid));
        s.branch = static_cast<int>(k);
        s.residual = residual_of(id, label, s);
        out.samples.push_back(s);
      }
    }
  }
  return out;
}

double dpc_evenness_defect(const DiscriminantSheet& dpc) {
  double worst = 0.0;
  for (const auto& s : dpc.samples) {
    const PulledBack plus = pulled_back(dpc.id, 0.0, s.y, s.a1, s.a2);
    const PulledBack minus = pulled_back(dpc.id, 0.0, -s.y, s.a1, s.a2);
    worst = std::max({worst, std::abs(plus.f - minus.f), std::abs(plus.fy + minus.fy)});
  }
  return worst;
}

double ce_in_pd_defect(const DiscriminantSheet& ce) {
  double worst = 0.0;
  for (const auto& s : ce.samples) worst = std::max(worst, residual_of(ce.id, DiscriminantLabel::PD, s));
  return worst;
}

void export_point_cloud(const DiscriminantSheet& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << "# discriminant " << to_string(s.label) << ' ' << to_string(s.id) << '\n';
  for (const auto& p : s.samples) out << fixed12(p.a1) << ' ' << fixed12(p.a2) << ' ' << fixed12(p.value) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

PointCloud read_point_cloud(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  PointCloud pc;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    if (line[0] == '#') {
      std::string hash, word;
      ss >> hash >> word;
      if (word == "discriminant") ss >> pc.label >> pc.normal_form;
      continue;
    }
    Vec3d p{};
    if (!(ss >> p[0] >> p[1] >> p[2])) {
      throw Error(ErrorCode::ParseError, path + ":" + std::to_string(lineno) + ": expected three numbers");
    }
    pc.points.push_back(p);
  }
  return pc;
}

void export_ply(const DiscriminantSheet& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  const int n = s.grid;
  const std::size_t nb = s.branches.size();
  const std::size_t faces = n > 1 ? nb * static_cast<std::size_t>((n - 1) * (n - 1)) : 0;
  out << "ply\nformat ascii 1.0\ncomment discriminant " << to_string(s.label) << ' ' << to_string(s.id) << '\n'
      << "element vertex " << s.samples.size() << "\nproperty double x\nproperty double y\nproperty double z\n"
      << "element face " << faces << "\nproperty list uchar int vertex_indices\nend_header\n";
  for (const auto& p : s.samples) out << fixed12(p.a1) << ' ' << fixed12(p.a2) << ' ' << fixed12(p.value) << '\n';
  for (std::size_t k = 0; k < nb && n > 1; ++k) {
    const std::size_t base = k * static_cast<std::size_t>(n * n);
    for (int i = 0; i + 1 < n; ++i) {
      for (int j = 0; j + 1 < n; ++j) {
        const std::size_t v00 = base + i * n + j;
        out << "4 " << v00 << ' ' << v00 + n << ' ' << v00 + n + 1 << ' ' << v00 + 1 << '\n';
      }
    }
  }
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace frontal
