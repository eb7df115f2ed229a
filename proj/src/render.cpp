#include "movcone/render.hpp"

#include "movcone/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

namespace movcone {

void apply_color_spec(RenderOptions& opts, const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::InvalidArgument, "color entry '" + item + "' is not key=value");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    bool hex = value.size() == 7 && value[0] == '#' &&
               std::all_of(value.begin() + 1, value.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); });
    if (!hex)
      throw Error(Errc::InvalidArgument, "color '" + value + "' is not #rrggbb");
    if (key == "nef") opts.nef_color = value;
    else if (key == "chamber") opts.chamber_color = value;
    else if (key == "stroke") opts.stroke_color = value;
    else if (key == "face") opts.face_color = value;
    else if (key == "pair") opts.pair_color = value;
    else throw Error(Errc::InvalidArgument, "unknown color key '" + key + "'");
  }
}

Point2 project_to_slice(const std::vector<double>& v) {
  static const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
  return {(v[2] - v[1]) / r2, (2 * v[0] - v[1] - v[2]) / r6};
}

namespace {

// Normalizes to the slice; nullopt when the point is not on the positive side.
std::optional<Point2> slice_point(std::vector<double> v) {
  double s = v[0] + v[1] + v[2];
  if (!(s > 1e-300))
    return std::nullopt;
  for (auto& x : v)
    x /= s;
  return project_to_slice(v);
}

std::vector<double> to_double(const std::vector<Integer>& v) {
  std::vector<double> out;
  for (const auto& x : v)
    out.push_back(x.get_d());
  return out;
}

std::vector<double> to_double(const QVector& v) {
  std::vector<double> out;
  for (const auto& x : v)
    out.push_back(x.to_double());
  return out;
}

double area(const std::vector<Point2>& p) {
  double a = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Point2& u = p[k];
    const Point2& w = p[(k + 1) % p.size()];
    a += u[0] * w[1] - u[1] * w[0];
  }
  return std::abs(a) / 2;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000")
    s = "0.000000";
  return s;
}

} // namespace

SliceScene build_scene(const ReflectionRep& rep, const std::vector<Chamber>& chambers,
                       const std::vector<ConeDescription>& boundary,
                       const RenderOptions& options) {
  if (rep.rank() != 3)
    throw Error(Errc::RankNotThree, "slice pictures need Picard rank 3, got " +
                                        std::to_string(rep.rank()) +
                                        "; use the JSON cone export instead");
  SliceScene scene;
  scene.options = options;
  for (const Chamber& c : chambers) {
    ScenePolygon poly;
    poly.word = c.word;
    bool ok = true;
    for (std::size_t k = 0; k < 3 && ok; ++k) {
      auto p = slice_point(to_double(c.generators.column(k)));
      if (p)
        poly.vertices.push_back(*p);
      else
        ok = false;
    }
    if (ok && area(poly.vertices) > 0)
      scene.chambers.push_back(std::move(poly));
  }
  for (const ConeDescription& cone : boundary) {
    if (cone.generators.size() != 2)
      continue;
    auto a = slice_point(to_double(cone.generators[0]));
    auto b = slice_point(to_double(cone.generators[1]));
    if (!a || !b)
      continue;
    scene.segments.push_back({cone.kind, cone.first, cone.second, cone.orbit_word, *a, *b});
  }
  std::sort(scene.chambers.begin(), scene.chambers.end(),
            [](const ScenePolygon& x, const ScenePolygon& y) { return x.word < y.word; });
  std::sort(scene.segments.begin(), scene.segments.end(),
            [](const SceneSegment& x, const SceneSegment& y) {
              return std::tie(x.kind, x.first, x.second, x.word) <
                     std::tie(y.kind, y.first, y.second, y.word);
            });
  return scene;
}

double max_chamber_diameter(const SliceScene& scene, int depth) {
  double best = 0;
  for (const auto& poly : scene.chambers) {
    if (static_cast<int>(poly.word.size()) != depth)
      continue;
    for (const auto& u : poly.vertices)
      for (const auto& w : poly.vertices)
        best = std::max(best, std::hypot(u[0] - w[0], u[1] - w[1]));
  }
  return best;
}

void emit_svg(const SliceScene& scene, std::ostream& out) {
  const RenderOptions& o = scene.options;
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -xmin, ymax = -xmin;
  auto grow = [&](const Point2& p) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  };
  if (o.orbit_layer)
    for (const auto& poly : scene.chambers)
      for (const auto& v : poly.vertices)
        grow(v);
  if (o.boundary_layer)
    for (const auto& s : scene.segments) {
      grow(s.a);
      grow(s.b);
    }
  if (xmin > xmax) {
    xmin = ymin = -1;
    xmax = ymax = 1;
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double scale = 0.9 * std::min(o.width, o.height) / span;
  const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
  auto px = [&](const Point2& p) {
    return fmt(o.width / 2.0 + (p[0] - cx) * scale) + "," + fmt(o.height / 2.0 - (p[1] - cy) * scale);
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<!-- coordinates rounded to 1e-6 (fixed, 6 decimals) -->\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.width
      << "\" height=\"" << o.height << "\" viewBox=\"0 0 " << o.width << " " << o.height
      << "\">\n";
  if (o.orbit_layer) {
    out << "<g id=\"orbit\" stroke=\"" << o.stroke_color << "\" stroke-width=\"0.5\">\n";
    for (const auto& poly : scene.chambers) {
      out << "<polygon data-word=\"" << poly.word.to_string() << "\" fill=\""
          << (poly.word.empty() ? o.nef_color : o.chamber_color) << "\" points=\"";
      for (std::size_t k = 0; k < poly.vertices.size(); ++k)
        out << (k ? " " : "") << px(poly.vertices[k]);
      out << "\"/>\n";
    }
    out << "</g>\n";
  }
  if (o.boundary_layer) {
    out << "<g id=\"boundary\" stroke-width=\"1.5\">\n";
    for (const auto& s : scene.segments) {
      const std::string a = px(s.a), b = px(s.b);
      out << "<line data-word=\"" << s.word.to_string() << "\" stroke=\""
          << (s.kind == ConeKind::Face ? o.face_color : o.pair_color) << "\" x1=\""
          << a.substr(0, a.find(',')) << "\" y1=\"" << a.substr(a.find(',') + 1) << "\" x2=\""
          << b.substr(0, b.find(',')) << "\" y2=\"" << b.substr(b.find(',') + 1) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
}

void emit_svg(const SliceScene& scene, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(Errc::Io, "cannot write " + path.string());
  emit_svg(scene, out);
  out.flush();
  if (!out)
    throw Error(Errc::Io, "cannot write " + path.string());
}

} // namespace movcone
