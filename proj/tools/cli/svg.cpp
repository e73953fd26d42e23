#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace quasitoric::cli {

namespace {

constexpr double kScale = 100.0;
constexpr double kMargin = 12.0;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid "-0.000".
  return std::string(buf) == "-0.000" ? "0.000" : buf;
}

Point to_point(const Vec2& v) { return {v.x.to_double(), v.y.to_double()}; }

std::vector<Point> outline(const Polyhedron2& p) {
  std::vector<Point> out;
  for (const auto& v : p.vertices()) out.push_back(to_point(v));
  return out;
}

struct Box {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;

  void cover(Point p) {
    xmin = std::min(xmin, p.first);
    ymin = std::min(ymin, p.second);
    xmax = std::max(xmax, p.first);
    ymax = std::max(ymax, p.second);
  }
  SvgCanvas canvas(double pad) const { return SvgCanvas(xmin - pad, ymin - pad, xmax + pad, ymax + pad); }
};

Polyhedron2 clip(const Polyhedron2& p, const QuadScalar& xmax) {
  auto out = intersect_halfplane(p, {{-1, 0}, -xmax});
  if (!out) throw std::runtime_error("figure window misses the polyhedron");
  return *out;
}

}  // namespace

SvgCanvas::SvgCanvas(double xmin, double ymin, double xmax, double ymax)
    : xmin_(xmin), ymin_(ymin), xmax_(xmax), ymax_(ymax) {}

std::string SvgCanvas::xy(Point p) const {
  return num(kMargin + (p.first - xmin_) * kScale) + "," + num(kMargin + (ymax_ - p.second) * kScale);
}

void SvgCanvas::polygon(const std::vector<Point>& pts, const std::string& fill, const std::string& stroke) {
  body_ += "  <polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) body_ += (i ? " " : "") + xy(pts[i]);
  body_ += "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"1.500\"/>\n";
}

void SvgCanvas::line(Point from, Point to, const std::string& stroke, bool dashed) {
  const auto a = xy(from), b = xy(to);
  body_ += "  <line x1=\"" + a.substr(0, a.find(',')) + "\" y1=\"" + a.substr(a.find(',') + 1) + "\" x2=\"" +
           b.substr(0, b.find(',')) + "\" y2=\"" + b.substr(b.find(',') + 1) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"1.500\"" + (dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
}

void SvgCanvas::arrow(Point from, Point to, const std::string& stroke) {
  line(from, to, stroke);
  const double dx = to.first - from.first, dy = to.second - from.second;
  const double len = std::hypot(dx, dy);
  if (len == 0) return;
  const double ux = dx / len, uy = dy / len, head = 0.08;
  const Point left{to.first - head * (ux - 0.5 * uy), to.second - head * (uy + 0.5 * ux)};
  const Point right{to.first - head * (ux + 0.5 * uy), to.second - head * (uy - 0.5 * ux)};
  polygon({to, left, right}, stroke, stroke);
}

void SvgCanvas::dot(Point p, double radius, const std::string& fill) {
  const auto c = xy(p);
  body_ += "  <circle cx=\"" + c.substr(0, c.find(',')) + "\" cy=\"" + c.substr(c.find(',') + 1) + "\" r=\"" +
           num(radius) + "\" fill=\"" + fill + "\"/>\n";
}

void SvgCanvas::label(Point p, const std::string& text) {
  const auto c = xy(p);
  body_ += "  <text x=\"" + c.substr(0, c.find(',')) + "\" y=\"" + c.substr(c.find(',') + 1) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + text + "</text>\n";
}

std::string SvgCanvas::str() const {
  const double w = 2 * kMargin + (xmax_ - xmin_) * kScale;
  const double h = 2 * kMargin + (ymax_ - ymin_) * kScale;
  return "<?xml version=\"1.0\" standalone=\"no\"?>\n"
         "<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n" + body_ + "</svg>\n";
}

std::string polytope_fan_figure(const Polyhedron2& p, const Fan2& fan, Point anchor) {
  Box box;
  for (const auto& v : outline(p)) box.cover(v);
  std::vector<Point> tips;
  for (const auto& r : fan.rays()) {
    const Point d = to_point(r);
    const double len = std::hypot(d.first, d.second);
    tips.push_back({anchor.first + 0.8 * d.first / len, anchor.second + 0.8 * d.second / len});
    box.cover(tips.back());
  }
  box.cover(anchor);
  SvgCanvas svg = box.canvas(0.25);
  svg.polygon(outline(p), "#d8e4f0", "#1f3b5c");
  for (const auto& t : tips) svg.arrow(anchor, t, "#8b1a1a");
  svg.dot(anchor, 3, "#8b1a1a");
  return svg.str();
}

std::string chamber_figure(const PointConfig& lambda, const VirtualChamber& chamber, const std::optional<Vec2>& witness) {
  Box box;
  std::vector<Point> pts;
  for (int j = 0; j < lambda.size(); ++j) {
    pts.push_back(to_point(lambda.at(j).as_vec()));
    box.cover(pts.back());
  }
  SvgCanvas svg = box.canvas(0.3);
  for (const auto& s : chamber.subsets) {
    std::vector<Point> tri;
    for (int label : s) tri.push_back(pts.at(label - 1));
    svg.polygon(tri, "none", "#1f3b5c");
  }
  for (std::size_t j = 0; j < pts.size(); ++j) {
    svg.dot(pts[j], 3, "#1f3b5c");
    svg.label({pts[j].first + 0.04, pts[j].second + 0.04}, std::to_string(j + 1));
  }
  if (witness) svg.dot(to_point(*witness), 4, "#8b1a1a");
  return svg.str();
}

std::string cut_figure(const Polyhedron2& strip, const CutResult& cut) {
  QuadScalar reach = 1;
  for (const auto& v : cut.kept_piece.vertices()) reach = std::max(reach, v.x);
  const QuadScalar xmax = QuadScalar(reach.floor() + 2);
  const Polyhedron2 window = clip(strip, xmax);
  Box box;
  for (const auto& v : outline(window)) box.cover(v);
  SvgCanvas svg = box.canvas(0.25);
  svg.polygon(outline(window), "none", "#1f3b5c");
  svg.polygon(outline(cut.kept_piece), "#d8e4f0", "#1f3b5c");
  const auto& face = cut.reduced_face.vertices();
  if (face.size() == 2) {
    // Extend the cut segment a little past the strip.
    const Point a = to_point(face[0]), b = to_point(face[1]);
    const double dx = b.first - a.first, dy = b.second - a.second;
    svg.line({a.first - 0.2 * dx, a.second - 0.2 * dy}, {b.first + 0.2 * dx, b.second + 0.2 * dy}, "#8b1a1a", true);
  }
  return svg.str();
}

std::string blowup_figure(const Polyhedron2& triangle, const Polyhedron2& result) {
  Box box;
  for (const auto& v : outline(triangle)) box.cover(v);
  SvgCanvas svg = box.canvas(0.25);
  svg.polygon(outline(triangle), "none", "#1f3b5c");
  svg.polygon(outline(result), "#d8e4f0", "#1f3b5c");
  for (const auto& h : result.hrep()) {
    bool new_edge = true;
    for (const auto& g : triangle.hrep()) new_edge = new_edge && !h.equivalent_to(g);
    if (!new_edge) continue;
    std::vector<Point> on;
    for (const auto& v : result.vertices())
      if (h.tight_at(v)) on.push_back(to_point(v));
    if (on.size() == 2) svg.line(on[0], on[1], "#8b1a1a", true);
  }
  return svg.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace quasitoric::cli
