#include "inpoly/io.hpp"

#include "inpoly/error.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace inpoly::io {
namespace {

// SVG y grows downward; flip so the plane keeps its orientation.
std::string coord(const Point2& p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f,%.6f", p.x(), -p.y());
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string closed_path(const PointList& pts) {
  std::string d = "M";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += (i ? " L" : "") + coord(pts[i]);
  }
  return d + " Z";
}

}  // namespace

std::string render_svg(const Curve& curve, const std::vector<PointList>& polygons) {
  if (polygons.empty()) throw Error(ErrorKind::MissingSolutions, "nothing to render: no solutions");

  const PointList samples = curve.sample(1024);
  Point2 lo = Point2::Constant(std::numeric_limits<double>::infinity());
  Point2 hi = -lo;
  for (const auto& p : samples) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const Point2 extent = hi - lo;
  const double margin = 0.05 * std::max(extent.x(), extent.y());
  const double x0 = lo.x() - margin;
  const double y0 = -hi.y() - margin;
  const double w = extent.x() + 2.0 * margin;
  const double h = extent.y() + 2.0 * margin;
  const double stroke = 0.004 * std::max(w, h);
  const double font = 0.035 * std::max(w, h);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(w) + " " +
         num(h) + "\" width=\"640\" height=\"" + num(640.0 * h / w) + "\">\n";
  svg += "<path class=\"curve\" fill=\"none\" stroke=\"#444\" stroke-width=\"" + num(stroke) + "\" d=\"" +
         closed_path(samples) + "\"/>\n";

  static const char* const kColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  for (std::size_t k = 0; k < polygons.size(); ++k) {
    const PointList& poly = polygons[k];
    const char* color = kColors[k % std::size(kColors)];
    svg += "<path class=\"polygon\" fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"" +
           num(stroke) + "\" d=\"" + closed_path(poly) + "\"/>\n";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      svg += "<text class=\"label\" x=\"" + num(poly[i].x() + 0.5 * font) + "\" y=\"" + num(-poly[i].y() - 0.3 * font) +
             "\" font-size=\"" + num(font) + "\" fill=\"" + color + "\">A&#8242;" + std::to_string(i) + "</text>\n";
    }
  }
  const Point2 base = curve.eval(0.0);
  svg += "<circle class=\"basepoint\" cx=\"" + num(base.x()) + "\" cy=\"" + num(-base.y()) + "\" r=\"" +
         num(2.5 * stroke) + "\" fill=\"#000\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace inpoly::io
