#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quasitoric/cut.hpp"
#include "quasitoric/fan.hpp"
#include "quasitoric/gale.hpp"

namespace quasitoric::cli {

using Point = std::pair<double, double>;

// SVG 1.1 document over a world window, 100 units per coordinate unit with
// 12-unit margins and the y axis pointing up. Numbers print as %.3f so the
// bytes are reproducible.
class SvgCanvas {
 public:
  SvgCanvas(double xmin, double ymin, double xmax, double ymax);

  void polygon(const std::vector<Point>& pts, const std::string& fill, const std::string& stroke);
  void line(Point from, Point to, const std::string& stroke, bool dashed = false);
  void arrow(Point from, Point to, const std::string& stroke);
  void dot(Point p, double radius, const std::string& fill);
  void label(Point p, const std::string& text);

  std::string str() const;

 private:
  std::string xy(Point p) const;

  double xmin_, ymin_, xmax_, ymax_;
  std::string body_;
};

// P_a filled, normal fan arrows anchored at `anchor`.
std::string polytope_fan_figure(const Polyhedron2& p, const Fan2& fan, Point anchor);
// Chamber triangles outlined, points labelled 1..d, witness marked.
std::string chamber_figure(const PointConfig& lambda, const VirtualChamber& chamber, const std::optional<Vec2>& witness);
// The strip clipped to a window, the kept piece filled, the cut line dashed.
std::string cut_figure(const Polyhedron2& strip, const CutResult& cut);
// T_a outlined, the blown-up polytope filled, the chop line dashed.
std::string blowup_figure(const Polyhedron2& triangle, const Polyhedron2& result);

// Throws std::runtime_error naming the path on I/O failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace quasitoric::cli
