#pragma once

#include "movcone/cone.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace movcone {

using Point2 = std::array<double, 2>;

struct RenderOptions {
  int width = 800;
  int height = 800;
  bool orbit_layer = true;
  bool boundary_layer = true;
  std::string nef_color = "#8c8c8c";
  std::string chamber_color = "#d9d9d9";
  std::string stroke_color = "#4d4d4d";
  std::string face_color = "#1f4fbf";  // orbit of the faces {h_k : k != i}, i not in J
  std::string pair_color = "#c8201f";  // orbit of the cones through v_lambda
};

// Applies "key=#rrggbb,..." with keys nef, chamber, stroke, face, pair.
void apply_color_spec(RenderOptions& opts, const std::string& spec);

struct ScenePolygon {
  ReducedWord word;
  std::vector<Point2> vertices;  // slice coordinates
};

struct SceneSegment {
  ConeKind kind = ConeKind::Face;
  int first = -1;
  int second = -1;
  ReducedWord word;
  Point2 a{};
  Point2 b{};
};

// The affine slice sum(coords) = 1 of a rank-3 cone picture, projected to the
// plane with u_x = (0,-1,1)/sqrt2 and u_y = (2,-1,-1)/sqrt6.
struct SliceScene {
  std::vector<ScenePolygon> chambers;  // sorted by word
  std::vector<SceneSegment> segments;  // sorted by kind, pair, word
  RenderOptions options;
};

Point2 project_to_slice(const std::vector<double>& v);

// Throws RankNotThree unless rank is 3.
SliceScene build_scene(const ReflectionRep& rep, const std::vector<Chamber>& chambers,
                       const std::vector<ConeDescription>& boundary,
                       const RenderOptions& options = {});

// Largest vertex-to-vertex distance over chambers whose word has this length.
double max_chamber_diameter(const SliceScene& scene, int depth);

void emit_svg(const SliceScene& scene, std::ostream& out);
void emit_svg(const SliceScene& scene, const std::filesystem::path& path);

} // namespace movcone
