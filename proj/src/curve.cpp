#include "inpoly/curve.hpp"

#include "inpoly/error.hpp"
#include "inpoly/geomkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>

namespace inpoly {
namespace {

double wrap_angle(double s) {
  double r = std::fmod(s, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

double trig_series(const std::vector<double>& c, const std::vector<double>& s, double t) {
  double acc = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * std::cos(double(k) * t);
  for (std::size_t k = 0; k < s.size(); ++k) acc += s[k] * std::sin(double(k) * t);
  return acc;
}

double trig_series_derivative(const std::vector<double>& c, const std::vector<double>& s, double t) {
  double acc = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) acc -= double(k) * c[k] * std::sin(double(k) * t);
  for (std::size_t k = 1; k < s.size(); ++k) acc += double(k) * s[k] * std::cos(double(k) * t);
  return acc;
}

// Raw shapes in their own parameter; phase and orientation are applied by
// OrientedShape below.

class EllipseShape {
 public:
  EllipseShape(Point2 c, double a, double b) : c_(c), a_(a), b_(b) {}
  Point2 eval(double s) const { return c_ + Point2(a_ * std::cos(s), b_ * std::sin(s)); }
  std::optional<Point2> derivative(double s) const { return Point2(-a_ * std::sin(s), b_ * std::cos(s)); }
  static constexpr Smoothness smoothness = Smoothness::Analytic;

 private:
  Point2 c_;
  double a_, b_;
};

class StarShape {
 public:
  explicit StarShape(StarSpec spec) : spec_(std::move(spec)) {}
  double radius(double s) const { return trig_series(spec_.cos, spec_.sin, s); }
  Point2 eval(double s) const { return spec_.center + radius(s) * Point2(std::cos(s), std::sin(s)); }
  std::optional<Point2> derivative(double s) const {
    const double r = radius(s);
    const double dr = trig_series_derivative(spec_.cos, spec_.sin, s);
    const Point2 u(std::cos(s), std::sin(s));
    const Point2 du(-std::sin(s), std::cos(s));
    return Point2(dr * u + r * du);
  }
  static constexpr Smoothness smoothness = Smoothness::Analytic;

 private:
  StarSpec spec_;
};

class FourierShape {
 public:
  explicit FourierShape(FourierSpec spec) : spec_(std::move(spec)) {}
  Point2 eval(double s) const {
    return {trig_series(spec_.x_cos, spec_.x_sin, s), trig_series(spec_.y_cos, spec_.y_sin, s)};
  }
  std::optional<Point2> derivative(double s) const {
    return Point2(trig_series_derivative(spec_.x_cos, spec_.x_sin, s),
                  trig_series_derivative(spec_.y_cos, spec_.y_sin, s));
  }
  static constexpr Smoothness smoothness = Smoothness::Analytic;

 private:
  FourierSpec spec_;
};

class PolylineShape {
 public:
  explicit PolylineShape(PointList pts) : pts_(std::move(pts)), knots_(pts_.size() + 1, 0.0) {
    const std::size_t n = pts_.size();
    for (std::size_t i = 0; i < n; ++i) {
      knots_[i + 1] = knots_[i] + (pts_[(i + 1) % n] - pts_[i]).norm();
    }
    const double total = knots_.back();
    for (double& k : knots_) k *= kTwoPi / total;
    knots_.back() = kTwoPi;
  }

  Point2 eval(double s) const {
    s = wrap_angle(s);
    const std::size_t i = segment(s);
    const double w = (s - knots_[i]) / (knots_[i + 1] - knots_[i]);
    return (1.0 - w) * pts_[i] + w * pts_[(i + 1) % pts_.size()];
  }

  std::optional<Point2> derivative(double s) const {
    s = wrap_angle(s);
    for (double k : knots_) {
      if (std::abs(s - k) < 1e-12) return std::nullopt;
    }
    const std::size_t i = segment(s);
    return Point2((pts_[(i + 1) % pts_.size()] - pts_[i]) / (knots_[i + 1] - knots_[i]));
  }
  static constexpr Smoothness smoothness = Smoothness::Polyline;

 private:
  std::size_t segment(double s) const {
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
    const auto idx = static_cast<std::size_t>(std::distance(knots_.begin(), it));
    return std::clamp<std::size_t>(idx == 0 ? 0 : idx - 1, 0, pts_.size() - 1);
  }

  PointList pts_;
  std::vector<double> knots_;
};

template <typename Raw>
class OrientedShape final : public CurveShape {
 public:
  OrientedShape(Raw raw, double phase, double direction)
      : raw_(std::move(raw)), phase_(phase), direction_(direction) {}

  Point2 eval(double alpha) const override { return raw_.eval(phase_ + direction_ * alpha); }
  std::optional<Point2> derivative(double alpha) const override {
    auto d = raw_.derivative(phase_ + direction_ * alpha);
    if (d) *d *= direction_;
    return d;
  }
  Smoothness smoothness() const override { return Raw::smoothness; }

 private:
  Raw raw_;
  double phase_;
  double direction_;
};

template <typename Raw>
PointList sample_raw(const Raw& raw, std::size_t count) {
  PointList out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = raw.eval(kTwoPi * double(k) / double(count));
  return out;
}

template <typename Raw>
Curve finish(Raw raw, double phase, bool allow_flat) {
  const PointList pts = sample_raw(raw, 1024);
  const double area2 = geom::signed_area2(pts);
  double extent = 0.0;
  for (const auto& p : pts) extent = std::max(extent, (p - pts.front()).norm());
  if (!(extent > 0.0) || !std::isfinite(area2)) {
    throw Error(ErrorKind::DegenerateCurve, "curve collapses to a point");
  }
  if (!allow_flat && std::abs(area2) <= 1e-14 * extent * extent) {
    throw Error(ErrorKind::DegenerateCurve, "curve encloses no area");
  }
  const double direction = area2 < 0.0 ? -1.0 : 1.0;
  return Curve(std::make_shared<OrientedShape<Raw>>(std::move(raw), phase, direction));
}

Curve build(const CircleSpec& s, double phase) {
  if (!(s.radius > 0.0)) throw Error(ErrorKind::DegenerateCurve, "circle radius must be positive");
  return finish(EllipseShape(s.center, s.radius, s.radius), phase, false);
}

Curve build(const EllipseSpec& s, double phase) {
  if (!(s.a > 0.0) || !(s.b > 0.0)) throw Error(ErrorKind::DegenerateCurve, "ellipse semi-axes must be positive");
  return finish(EllipseShape(s.center, s.a, s.b), phase, false);
}

Curve build(const StarSpec& s, double phase) {
  StarShape raw(s);
  constexpr int kGrid = 4096;
  for (int k = 0; k < kGrid; ++k) {
    const double t = kTwoPi * k / kGrid;
    if (!(raw.radius(t) > 0.0)) {
      throw Error(ErrorKind::NonPositiveRadial, "star radial function is not positive at alpha=" + std::to_string(t));
    }
  }
  return finish(std::move(raw), phase, false);
}

Curve build(const FourierSpec& s, double phase) {
  // Self-crossing series (zero net area) are allowed through; check_simple flags them.
  return finish(FourierShape(s), phase, true);
}

Curve build(const PolylineSpec& s, double phase) {
  const auto& p = s.points;
  if (p.size() < 3) throw Error(ErrorKind::DegenerateCurve, "polyline needs at least 3 points");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].allFinite()) throw Error(ErrorKind::DegenerateCurve, "polyline point is not finite", i);
    if (p[i] == p[(i + 1) % p.size()]) {
      throw Error(ErrorKind::DegenerateCurve, "polyline has repeated consecutive point", i);
    }
  }
  if (!geom::is_simple_polygon(p)) throw Error(ErrorKind::SelfIntersecting, "polyline intersects itself");
  return finish(PolylineShape(p), phase, false);
}

}  // namespace

PointList Curve::sample(std::size_t count) const {
  PointList out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = eval(kTwoPi * double(k) / double(count));
  return out;
}

Curve build_curve(const CurveSpec& spec) {
  return std::visit([&](const auto& shape) { return build(shape, spec.phase); }, spec.shape);
}

double chord(const Curve& curve, double alpha, double beta) {
  if (alpha == beta) return 0.0;
  // Fixed argument order keeps the result exactly symmetric.
  if (beta < alpha) std::swap(alpha, beta);
  return (curve.eval(beta) - curve.eval(alpha)).norm();
}

bool check_simple(const Curve& curve, std::size_t samples) {
  if (samples < 64) throw Error(ErrorKind::InvalidSpec, "check_simple needs at least 64 samples");
  const PointList pts = curve.sample(samples);
  try {
    return geom::is_simple_polygon(pts);
  } catch (const Error&) {
    return false;  // repeated sample point
  }
}

double diameter(const Curve& curve, std::size_t samples) {
  if (samples < 64) throw Error(ErrorKind::InvalidSpec, "diameter needs at least 64 samples");
  const PointList pts = curve.sample(samples);
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, (pts[i] - pts[j]).squaredNorm());
    }
  }
  return std::sqrt(best);
}

Point2 sampled_centroid(const Curve& curve, std::size_t samples) {
  const PointList pts = curve.sample(samples);
  double a2 = 0.0;
  Point2 acc = Point2::Zero();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point2& p = pts[i];
    const Point2& q = pts[(i + 1) % pts.size()];
    const double w = geom::cross(p, q);
    a2 += w;
    acc += w * (p + q);
  }
  if (std::abs(a2) < 1e-300) {
    Point2 mean = Point2::Zero();
    for (const auto& p : pts) mean += p;
    return mean / double(pts.size());
  }
  return acc / (3.0 * a2);
}

}  // namespace inpoly
