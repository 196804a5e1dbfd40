#include "frontal/io.hpp"
#include "frontal/sampling.hpp"
#include "support.hpp"

#include <cstdlib>

using namespace frontal;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_coefficient_text(text, "f.txt");
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

std::string message_of(std::string_view text) {
  try {
    parse_coefficient_text(text, "f.txt");
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse a coefficient file") {
  const CoefficientFile f = parse_coefficient_text(
      "order = 6\nmode = folded\nseed = 7\n# comment\n[a]\n2 = 0.5\n[b0]\n1 = 1\n[b2]\n0 = 0.3\n[b3]\n1 2 = -0.25\n");
  CHECK(f.order == 6);
  CHECK(f.mode == EdgeMode::Folded);
  REQUIRE(f.seed.has_value());
  CHECK(*f.seed == 7);
  CHECK(f.coeffs.a[2] == 0.5);
  CHECK(f.coeffs.b0[1] == 1.0);
  CHECK(f.coeffs.b2[0] == doctest::Approx(0.3));
  CHECK(f.coeffs.b3.coeff(1, 2) == -0.25);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(code_of("order = 6\n[a]\n2 = abc\n") == ErrorCode::ParseError);
  CHECK(message_of("order = 6\n[a]\n2 = abc\n").find("f.txt:3") != std::string::npos);
  CHECK(code_of("order = 4\n[a]\n7 = 1\n") == ErrorCode::ParseError);
  CHECK(code_of("[a]\n2 = 1\n2 = 2\n") == ErrorCode::ParseError);
  CHECK(code_of("[zz]\n") == ErrorCode::ParseError);
  CHECK(code_of("colour = red\n") == ErrorCode::ParseError);
  CHECK(code_of("[a]\n2 = nan\n") == ErrorCode::ParseError);
  CHECK(code_of("[a]\n1 = 0.5\n") == ErrorCode::ConstraintViolation);
  CHECK(message_of("[a]\n1 = 0.5\n").find("f.txt:2") != std::string::npos);
  CHECK(code_of("mode = prefold\n[b1]\n0 = 1\n") == ErrorCode::ConstraintViolation);
}

TEST_CASE("format and parse round-trip") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    CoefficientFile f;
    f.order = 8;
    f.mode = trial % 2 ? EdgeMode::Prefold : EdgeMode::Folded;
    f.seed = trial;
    f.coeffs = f.mode == EdgeMode::Folded ? random_folded(rng) : random_prefold(rng);
    const std::string text = format_coefficient_text(f);
    const CoefficientFile g = parse_coefficient_text(text);
    CHECK(format_coefficient_text(g) == text);
    CHECK(testing::max_diff(g.coeffs.a, f.coeffs.a) == 0.0);
    CHECK(testing::max_diff(g.coeffs.b3, f.coeffs.b3) == 0.0);
  }
}

TEST_CASE("curve files") {
  Rng rng(32);
  CurveFile c;
  std::tie(c.gamma2, c.gamma3) = random_curve(rng);
  const std::string text = format_curve_text(c);
  const CurveFile d = parse_curve_text(text);
  CHECK(testing::max_diff(d.gamma2, c.gamma2) == 0.0);
  CHECK(format_curve_text(d) == text);
  CHECK_THROWS_AS(parse_curve_text("[gamma4]\n"), Error);
}

TEST_CASE("missing file") {
  try {
    read_coefficient_file("/nonexistent/dir/x.txt");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("jet order from the environment") {
  ::setenv("FRONTAL_JET_ORDER", "12", 1);
  CHECK(default_jet_order() == 12);
  ::setenv("FRONTAL_JET_ORDER", "1000", 1);
  CHECK_THROWS_AS(default_jet_order(), Error);
  ::unsetenv("FRONTAL_JET_ORDER");
  CHECK(default_jet_order() == kDefaultOrder);
}
