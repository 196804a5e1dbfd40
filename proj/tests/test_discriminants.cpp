#include "frontal/discriminants.hpp"
#include "frontal/io.hpp"
#include "support.hpp"

#include <cstdio>
#include <filesystem>

using namespace frontal;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("frontal_test_" + name)).string();
}

}  // namespace

TEST_CASE("u + v has empty PD and a plane DPC") {
  const NormalFormId id = parse_normal_form_id("u+v");
  CHECK(sheet(id, DiscriminantLabel::PD, 8).samples.empty());
  CHECK(sheet(id, DiscriminantLabel::CE, 8).samples.empty());
  const DiscriminantSheet d = sheet(id, DiscriminantLabel::DPC, 8);
  REQUIRE(!d.samples.empty());
  for (const auto& s : d.samples) CHECK(s.value == 0.0);
}

TEST_CASE("v +- u^2: PD parabola") {
  for (int su : {1, -1}) {
    const NormalFormId id = parse_normal_form_id(su > 0 ? "v+u^2" : "v-u^2");
    const DiscriminantSheet pd = sheet(id, DiscriminantLabel::PD, 5);
    bool found = false;
    for (const auto& s : pd.samples) {
      if (s.x == 0.5) {
        found = true;
        CHECK(s.a1 == doctest::Approx(-su * 1.0));
        CHECK(s.value == doctest::Approx(-su * 0.25));
      }
    }
    CHECK(found);
  }
}

TEST_CASE("every sheet satisfies its critical equations") {
  for (const NormalFormId& id : all_normal_forms()) {
    for (auto l : {DiscriminantLabel::PD, DiscriminantLabel::DPC, DiscriminantLabel::CE}) {
      const DiscriminantSheet s = sheet(id, l, 16);
      INFO(to_string(id), " ", to_string(l));
      CHECK(s.max_residual() <= 1e-10);
      for (const auto& p : s.samples) {
        const PulledBack f = pulled_back(id, p.x, p.y, p.a1, p.a2);
        CHECK(std::abs(f.f - p.value) <= 1e-10);
        if (l != DiscriminantLabel::CE) CHECK(std::abs(f.fy) <= 1e-10);
        if (l != DiscriminantLabel::DPC) CHECK(std::abs(f.fx) <= 1e-10);
      }
    }
  }
}

TEST_CASE("containment and evenness") {
  for (const NormalFormId& id : all_normal_forms()) {
    INFO(to_string(id));
    CHECK(dpc_evenness_defect(sheet(id, DiscriminantLabel::DPC, 16)) <= 1e-10);
    CHECK(ce_in_pd_defect(sheet(id, DiscriminantLabel::CE, 16)) <= 1e-10);
  }
}

TEST_CASE("normal form ids round-trip") {
  const auto all = all_normal_forms();
  CHECK(all.size() == 16);
  for (const NormalFormId& id : all) {
    const NormalFormId back = parse_normal_form_id(to_string(id));
    CHECK(to_string(back) == to_string(id));
  }
  CHECK_THROWS_AS(parse_normal_form_id("u+v^7"), Error);
  CHECK(parse_label("DPC") == DiscriminantLabel::DPC);
  CHECK_FALSE(parse_label("XX").has_value());
}

TEST_CASE("invalid moduli") {
  NormalFormId id = parse_normal_form_id("w+u^2+buv+cv^2");
  id.b = 1.0;
  id.c = 0.25;
  try {
    validate_moduli(id);
    FAIL("expected InvalidModuli");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidModuli);
  }
  id.c = 0.0;
  CHECK_THROWS_AS(sheet(id, DiscriminantLabel::PD, 4), Error);
  id.c = 0.5;
  CHECK_NOTHROW(validate_moduli(id));
}

TEST_CASE("point cloud export round-trip") {
  const NormalFormId id = parse_normal_form_id("-v+u^3");
  const DiscriminantSheet s = sheet(id, DiscriminantLabel::PD, 10);
  const std::string path = temp_path("pd.txt");
  export_point_cloud(s, path);
  const PointCloud pc = read_point_cloud(path);
  CHECK(pc.label == "PD");
  CHECK(pc.normal_form == to_string(id));
  const auto pts = s.points();
  REQUIRE(pc.points.size() == pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int k = 0; k < 3; ++k) CHECK(pc.points[i][k] == doctest::Approx(pts[i][k]).epsilon(1e-11));
  }
  // same input gives the same bytes
  const std::string again = temp_path("pd2.txt");
  export_point_cloud(s, again);
  CHECK(read_text_file(path) == read_text_file(again));

  const std::string empty = temp_path("empty.txt");
  export_point_cloud(sheet(parse_normal_form_id("u+v"), DiscriminantLabel::PD, 4), empty);
  const std::string text = read_text_file(empty);
  CHECK(text.rfind("# discriminant", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1);
  CHECK(read_point_cloud(empty).points.empty());

  const std::string ply = temp_path("pd.ply");
  export_ply(s, ply);
  CHECK(read_text_file(ply).rfind("ply\n", 0) == 0);
  for (const auto& p : {path, again, empty, ply}) std::remove(p.c_str());
}
