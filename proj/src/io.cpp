#include "frontal/io.hpp"

#include <algorithm>
#include <initializer_list>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace frontal {

int default_jet_order() {
  const char* env = std::getenv("FRONTAL_JET_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultOrder;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 2 || v > 40) {
    throw Error(ErrorCode::ParseError, "FRONTAL_JET_ORDER must be an integer in [2, 40]");
  }
  return static_cast<int>(v);
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// One "lhs = rhs" or "[section]" line, remembered with its line number.
struct Entry {
  int line;
  std::string section;
  std::string key;
  std::string value;
};

struct Lines {
  std::vector<Entry> entries;
};

[[noreturn]] void fail_at(const std::string& source, int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + msg);
}

Lines tokenize(std::string_view text, const std::string& source, std::initializer_list<std::string_view> known) {
  Lines out;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail_at(source, lineno, "unterminated section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section.empty()) fail_at(source, lineno, "empty section name");
      if (std::find(known.begin(), known.end(), section) == known.end()) {
        fail_at(source, lineno, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail_at(source, lineno, "expected 'key = value'");
    Entry e{lineno, section, trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1))};
    if (e.key.empty() || e.value.empty()) fail_at(source, lineno, "expected 'key = value'");
    out.entries.push_back(std::move(e));
  }
  return out;
}

double parse_real(const Entry& e, const std::string& source) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(e.value.c_str(), &end);
  if (end == e.value.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    fail_at(source, e.line, "'" + e.value + "' is not a finite number");
  }
  return v;
}

long parse_int(const std::string& text, const Entry& e, const std::string& source) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0') fail_at(source, e.line, "'" + text + "' is not an integer");
  return v;
}

std::vector<long> parse_exponents(const Entry& e, const std::string& source) {
  std::istringstream ss(e.key);
  std::vector<long> out;
  std::string tok;
  while (ss >> tok) out.push_back(parse_int(tok, e, source));
  return out;
}

int order_from(const Lines& lines, const std::string& source) {
  int order = default_jet_order();
  for (const Entry& e : lines.entries) {
    if (!e.section.empty() || e.key != "order") continue;
    const long v = parse_int(e.value, e, source);
    if (v < 2 || v > 40) fail_at(source, e.line, "order must lie in [2, 40]");
    order = static_cast<int>(v);
  }
  return order;
}

// Coefficient of t^k in a one-variable section.
void put_1d(Jet1& j, const Entry& e, int order, const std::string& source, std::map<std::string, int>& seen) {
  const auto ex = parse_exponents(e, source);
  if (ex.size() != 1) fail_at(source, e.line, "expected a single exponent in [" + e.section + "]");
  if (ex[0] < 0) fail_at(source, e.line, "negative exponent");
  if (ex[0] > order) fail_at(source, e.line, "exponent " + std::to_string(ex[0]) + " exceeds order " + std::to_string(order));
  const std::string id = e.section + ":" + std::to_string(ex[0]);
  if (seen.count(id)) fail_at(source, e.line, "duplicate coefficient (first given on line " + std::to_string(seen[id]) + ")");
  seen[id] = e.line;
  j.coeff(static_cast<int>(ex[0])) = parse_real(e, source);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

CoefficientFile parse_coefficient_text(std::string_view text, const std::string& source) {
  const Lines lines = tokenize(text, source, {"a", "b0", "b1", "b2", "b3"});
  CoefficientFile f;
  f.order = order_from(lines, source);
  f.coeffs = EdgeCoefficients::zero(f.order);
  std::map<std::string, int> seen;
  for (const Entry& e : lines.entries) {
    if (e.section.empty()) {
      if (e.key == "order") continue;
      if (e.key == "mode") {
        if (e.value == "folded") f.mode = EdgeMode::Folded;
        else if (e.value == "prefold") f.mode = EdgeMode::Prefold;
        else fail_at(source, e.line, "mode must be 'prefold' or 'folded'");
      } else if (e.key == "seed") {
        const long long s = std::strtoll(e.value.c_str(), nullptr, 10);
        if (s < 0 || std::to_string(s) != e.value) fail_at(source, e.line, "seed must be a non-negative integer");
        f.seed = static_cast<std::uint64_t>(s);
      } else {
        fail_at(source, e.line, "unknown key '" + e.key + "'");
      }
      continue;
    }
    if (e.section == "a") put_1d(f.coeffs.a, e, f.order, source, seen);
    else if (e.section == "b0") put_1d(f.coeffs.b0, e, f.order, source, seen);
    else if (e.section == "b1") put_1d(f.coeffs.b1, e, f.order, source, seen);
    else if (e.section == "b2") put_1d(f.coeffs.b2, e, f.order, source, seen);
    else if (e.section == "b3") {
      const auto ex = parse_exponents(e, source);
      if (ex.size() != 2) fail_at(source, e.line, "[b3] entries are 'i j = value'");
      if (ex[0] < 0 || ex[1] < 0) fail_at(source, e.line, "negative exponent");
      if (ex[0] + ex[1] > f.order) {
        fail_at(source, e.line, "total degree " + std::to_string(ex[0] + ex[1]) + " exceeds order " + std::to_string(f.order));
      }
      const std::string id = "b3:" + std::to_string(ex[0]) + "," + std::to_string(ex[1]);
      if (seen.count(id)) fail_at(source, e.line, "duplicate coefficient (first given on line " + std::to_string(seen[id]) + ")");
      seen[id] = e.line;
      f.coeffs.b3.set(static_cast<int>(ex[0]), static_cast<int>(ex[1]), parse_real(e, source));
    } else {
      fail_at(source, e.line, "unknown section [" + e.section + "]");
    }
  }
  // Constraint entries are reported at the line that set them.
  struct Pin {
    const char* id;
    const char* what;
    bool prefold_only;
  };
  const Pin pins[] = {{"a:0", "a(0)", false}, {"a:1", "a'(0)", false}, {"b0:0", "b0(0)", false},
                      {"b0:1", "b0'(0)", true}, {"b1:0", "b1(0)", true}};
  for (const Pin& p : pins) {
    if (p.prefold_only && f.mode != EdgeMode::Prefold) continue;
    auto it = seen.find(p.id);
    if (it == seen.end()) continue;
    const std::string sec = std::string(p.id).substr(0, std::string(p.id).find(':'));
    const int k = std::string(p.id).back() - '0';
    const Jet1& j = sec == "a" ? f.coeffs.a : sec == "b0" ? f.coeffs.b0 : f.coeffs.b1;
    if (j[k] != 0.0) {
      throw Error(ErrorCode::ConstraintViolation, source + ":" + std::to_string(it->second) + ": " + p.what +
                                                      " must vanish in " +
                                                      (f.mode == EdgeMode::Prefold ? "prefold" : "folded") + " mode");
    }
  }
  validate(f.coeffs, f.mode);
  return f;
}

CoefficientFile read_coefficient_file(const std::string& path) { return parse_coefficient_text(read_text_file(path), path); }

std::string format_coefficient_text(const CoefficientFile& f) {
  std::ostringstream os;
  os << "order = " << f.order << "\nmode = " << (f.mode == EdgeMode::Prefold ? "prefold" : "folded") << '\n';
  if (f.seed) os << "seed = " << *f.seed << '\n';
  const std::pair<const char*, const Jet1*> oned[] = {
      {"a", &f.coeffs.a}, {"b0", &f.coeffs.b0}, {"b1", &f.coeffs.b1}, {"b2", &f.coeffs.b2}};
  for (const auto& [name, j] : oned) {
    os << '[' << name << "]\n";
    for (int k = 0; k <= j->order(); ++k) {
      if ((*j)[k] != 0.0) os << k << " = " << fmt((*j)[k]) << '\n';
    }
  }
  os << "[b3]\n";
  for (int d = 0; d <= f.coeffs.b3.order(); ++d) {
    for (int j = 0; j <= d; ++j) {
      const double v = f.coeffs.b3.coeff(d - j, j);
      if (v != 0.0) os << d - j << ' ' << j << " = " << fmt(v) << '\n';
    }
  }
  return os.str();
}

CurveFile parse_curve_text(std::string_view text, const std::string& source) {
  const Lines lines = tokenize(text, source, {"gamma2", "gamma3"});
  CurveFile f;
  f.order = order_from(lines, source);
  f.gamma2 = Jet1(f.order);
  f.gamma3 = Jet1(f.order);
  std::map<std::string, int> seen;
  for (const Entry& e : lines.entries) {
    if (e.section.empty()) {
      if (e.key != "order") fail_at(source, e.line, "unknown key '" + e.key + "'");
      continue;
    }
    if (e.section == "gamma2") put_1d(f.gamma2, e, f.order, source, seen);
    else if (e.section == "gamma3") put_1d(f.gamma3, e, f.order, source, seen);
    else fail_at(source, e.line, "unknown section [" + e.section + "]");
  }
  return f;
}

CurveFile read_curve_file(const std::string& path) { return parse_curve_text(read_text_file(path), path); }

std::string format_curve_text(const CurveFile& f) {
  std::ostringstream os;
  os << "order = " << f.order << '\n';
  const std::pair<const char*, const Jet1*> parts[] = {{"gamma2", &f.gamma2}, {"gamma3", &f.gamma3}};
  for (const auto& [name, j] : parts) {
    os << '[' << name << "]\n";
    for (int k = 0; k <= j->order(); ++k) {
      if ((*j)[k] != 0.0) os << k << " = " << fmt((*j)[k]) << '\n';
    }
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace frontal
