#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

#include "movcone/errors.hpp"
#include "movcone/render.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace movcone;

namespace {

SliceScene figure_scene(int depth, RenderOptions opts = {}) {
  ReflectionRep rep(testing_support::figure1());
  auto eigen = pair_eigendata(rep);
  return build_scene(rep, chamber_orbit(rep, depth), boundary_cones(rep, eigen, depth), opts);
}

std::string svg_of(const SliceScene& s) {
  std::ostringstream out;
  emit_svg(s, out);
  return out.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1))
    ++n;
  return n;
}

// Inverse of the slice projection.
std::vector<double> lift(const Point2& p) {
  const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
  return {1.0 / 3 + 2 * p[1] / r6, 1.0 / 3 - p[0] / r2 - p[1] / r6,
          1.0 / 3 + p[0] / r2 - p[1] / r6};
}

double eigen_residual(const IntegerMatrix& m, const std::vector<double>& v, double lambda) {
  double worst = 0;
  for (std::size_t r = 0; r < 3; ++r) {
    double mv = 0;
    for (std::size_t c = 0; c < 3; ++c)
      mv += m(r, c).get_d() * v[c];
    worst = std::max(worst, std::abs(mv - lambda * v[r]));
  }
  return worst;
}

} // namespace

TEST_CASE("projection of the coordinate rays") {
  Point2 a = project_to_slice({1, 0, 0});
  Point2 b = project_to_slice({0, 1, 0});
  Point2 c = project_to_slice({0, 0, 1});
  CHECK(a[0] == doctest::Approx(0));
  CHECK(a[1] == doctest::Approx(2 / std::sqrt(6.0)));
  CHECK(b[0] == doctest::Approx(-1 / std::sqrt(2.0)));
  CHECK(c[0] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(b[1] == doctest::Approx(c[1]));
  Point2 centre = project_to_slice({1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(std::abs(centre[0]) < 1e-15);
  CHECK(std::abs(centre[1]) < 1e-15);
}

TEST_CASE("depth 0 is the nef triangle") {
  SliceScene s = figure_scene(0);
  REQUIRE(s.chambers.size() == 1);
  CHECK(s.chambers[0].word.empty());
  CHECK(s.chambers[0].vertices.size() == 3);
  std::string svg = svg_of(s);
  CHECK(count(svg, "<polygon") == 1);
  CHECK(svg.find("fill=\"#8c8c8c\"") != std::string::npos);
}

TEST_CASE("chamber and segment counts") {
  CHECK(figure_scene(6).chambers.size() == 13);
  SliceScene s = figure_scene(8);
  CHECK(s.chambers.size() == 17);
  std::string svg = svg_of(s);
  CHECK(count(svg, "<polygon") == 17);
  CHECK(count(svg, "<line") == s.segments.size());
  CHECK(svg.find("<g id=\"orbit\"") != std::string::npos);
  CHECK(svg.find("<g id=\"boundary\"") != std::string::npos);
  for (std::size_t k = 1; k < s.chambers.size(); ++k)
    CHECK(s.chambers[k - 1].word < s.chambers[k].word);
}

TEST_CASE("rank other than three is refused") {
  ReflectionRep rep(testing_support::wehler());
  try {
    build_scene(rep, chamber_orbit(rep, 1), {});
    FAIL("rank 4 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RankNotThree);
  }
}

TEST_CASE("output is byte-identical across runs") {
  std::string a = svg_of(figure_scene(8)), b = svg_of(figure_scene(8));
  CHECK(a == b);
  CHECK(a.find("-0.000000") == std::string::npos);
  std::regex coordinate("(points=\"|[xy][12]=\"| )(-?[0-9]+\\.[0-9]+)");
  int coordinates = 0;
  for (auto it = std::sregex_iterator(a.begin(), a.end(), coordinate); it != std::sregex_iterator(); ++it) {
    std::string m = (*it)[2].str();
    CHECK(m.size() - m.find('.') == 7);
    ++coordinates;
  }
  CHECK(coordinates > 100);
  auto path = std::filesystem::temp_directory_path() / "movcone_render_test.svg";
  emit_svg(figure_scene(8), path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a);
  CHECK_THROWS_AS(emit_svg(figure_scene(1), std::filesystem::path("/nonexistent-dir/x.svg")), Error);
}

TEST_CASE("empty and layer-less scenes still give valid documents") {
  SliceScene empty;
  std::string svg = svg_of(empty);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<polygon") == 0);

  RenderOptions o;
  o.orbit_layer = false;
  std::string no_orbit = svg_of(figure_scene(4, o));
  CHECK(no_orbit.find("id=\"orbit\"") == std::string::npos);
  CHECK(no_orbit.find("id=\"boundary\"") != std::string::npos);
  o.orbit_layer = true;
  o.boundary_layer = false;
  std::string no_boundary = svg_of(figure_scene(4, o));
  CHECK(no_boundary.find("id=\"boundary\"") == std::string::npos);
}

TEST_CASE("chambers shrink with depth") {
  SliceScene s = figure_scene(8);
  double d4 = max_chamber_diameter(s, 4), d6 = max_chamber_diameter(s, 6),
         d8 = max_chamber_diameter(s, 8);
  CHECK(d4 > d6);
  CHECK(d6 > d8);
  CHECK(d8 > 0);
  CHECK(max_chamber_diameter(s, 9) == 0);
}

TEST_CASE("pair segments end at the dominant eigenvector") {
  ReflectionRep rep(testing_support::figure1());
  SliceScene s = figure_scene(0);
  const double lambda = 23.0 / 2 + 5.0 / 2 * std::sqrt(21.0);
  int found = 0;
  for (const auto& seg : s.segments) {
    if (seg.kind != ConeKind::EigenPair)
      continue;
    IntegerMatrix ij = rep.word_matrix(ReducedWord({seg.first, seg.second}));
    IntegerMatrix ji = rep.word_matrix(ReducedWord({seg.second, seg.first}));
    for (const Point2& p : {seg.a, seg.b}) {
      std::vector<double> v = lift(p);
      if (std::min(eigen_residual(ij, v, lambda), eigen_residual(ji, v, lambda)) < 1e-9 * lambda)
        ++found;
    }
  }
  CHECK(found >= 1);
}

TEST_CASE("color specifications") {
  RenderOptions o;
  apply_color_spec(o, "nef=#000000,pair=#ABCDEF");
  CHECK(o.nef_color == "#000000");
  CHECK(o.pair_color == "#ABCDEF");
  CHECK(o.face_color == "#1f4fbf");
  CHECK_THROWS_AS(apply_color_spec(o, "nef=red"), Error);
  CHECK_THROWS_AS(apply_color_spec(o, "sky=#000000"), Error);
  CHECK_THROWS_AS(apply_color_spec(o, "nef"), Error);
  std::string svg = svg_of(figure_scene(2, o));
  CHECK(svg.find("#000000") != std::string::npos);
}
