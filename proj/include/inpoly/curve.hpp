#ifndef INPOLY_CURVE_HPP_
#define INPOLY_CURVE_HPP_

#include "inpoly/types.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace inpoly {

struct CircleSpec {
  Point2 center = Point2::Zero();
  double radius = 1.0;
};

struct EllipseSpec {
  Point2 center = Point2::Zero();
  double a = 1.0;  // semi-axis along x
  double b = 1.0;  // semi-axis along y
};

/// Radial graph c + rho(s) e^{is}, rho(s) = sum_k cos[k] cos(ks) + sin[k] sin(ks).
struct StarSpec {
  Point2 center = Point2::Zero();
  std::vector<double> cos;
  std::vector<double> sin;
};

/// Truncated trigonometric series for each coordinate, indices from 0.
struct FourierSpec {
  std::vector<double> x_cos, x_sin;
  std::vector<double> y_cos, y_sin;
};

/// Closed chain through the points, parameterized proportionally to arc length.
struct PolylineSpec {
  PointList points;
};

struct CurveSpec {
  std::variant<CircleSpec, EllipseSpec, StarSpec, FourierSpec, PolylineSpec> shape;
  double phase = 0.0;  // the basepoint gamma(0) sits at the shape's own parameter `phase`
};

enum class Smoothness { Analytic, C1Piecewise, Polyline };

/// Parameterized closed curve on [0, 2pi). Implementations are immutable.
class CurveShape {
 public:
  virtual ~CurveShape() = default;
  virtual Point2 eval(double alpha) const = 0;
  /// Empty where the curve has no tangent (polyline knots).
  virtual std::optional<Point2> derivative(double alpha) const = 0;
  virtual Smoothness smoothness() const = 0;
};

/// Value handle over an immutable CurveShape; cheap to copy and safe to share
/// across threads.
class Curve {
 public:
  explicit Curve(std::shared_ptr<const CurveShape> shape) : shape_(std::move(shape)) {}

  Point2 eval(double alpha) const { return shape_->eval(alpha); }
  std::optional<Point2> derivative(double alpha) const { return shape_->derivative(alpha); }
  Smoothness smoothness() const { return shape_->smoothness(); }

  /// `count` points at equally spaced parameters 2pi k / count.
  PointList sample(std::size_t count) const;

 private:
  std::shared_ptr<const CurveShape> shape_;
};

/// Realizes a spec as a counterclockwise curve with gamma(0) at the basepoint.
/// Throws NonPositiveRadial, SelfIntersecting or DegenerateCurve.
Curve build_curve(const CurveSpec& spec);

double chord(const Curve& curve, double alpha, double beta);

/// Sampled simplicity check: the closed polyline through `samples` equally
/// spaced points has no self-intersection. Necessary, not sufficient.
bool check_simple(const Curve& curve, std::size_t samples = 1024);

/// Largest pairwise distance among `samples` equally spaced points.
double diameter(const Curve& curve, std::size_t samples = 1024);

/// Area centroid of the sampled closed polygon.
Point2 sampled_centroid(const Curve& curve, std::size_t samples = 1024);

}  // namespace inpoly

#endif  // INPOLY_CURVE_HPP_
