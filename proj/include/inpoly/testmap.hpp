#ifndef INPOLY_TESTMAP_HPP_
#define INPOLY_TESTMAP_HPP_

// Configuration space of marked inscribed n-gons and the side-length map.
//
// A configuration (theta_1..theta_n, mu) with sum theta = 2pi places vertices
// at sigma_i = theta_1 + ... + theta_i on the curve, anchored at gamma(0), and
// scales the polygon by mu about that anchor. The map returns the n scaled
// side lengths mu |gamma(sigma_i) - gamma(sigma_{i-1})|.
//
// Newton and the degree count work in the chart (theta_1..theta_{n-1}, mu)
// with theta_n = 2pi - sum of the others eliminated.

#include "inpoly/curve.hpp"
#include "inpoly/penner.hpp"
#include "inpoly/types.hpp"

namespace inpoly {

struct ConfigPoint {
  Vector theta;
  double mu = 1.0;

  std::size_t size() const noexcept { return std::size_t(theta.size()); }
  /// sigma_0 = 0, ..., sigma_n = 2pi (n + 1 entries).
  Vector sigma() const;
  bool valid() const;

  /// Chart coordinates (theta_1..theta_{n-1}, mu).
  Vector chart() const;
  static ConfigPoint from_chart(const Vector& y);
  static ConfigPoint uniform(std::size_t n, double mu);
};

struct InscribedPolygon {
  Vector sigma;               // sigma_0 .. sigma_{n-1}
  PointList on_curve;         // A'_i = gamma(sigma_i)
  PointList scaled;           // A_i = A_0 + mu (gamma(sigma_i) - gamma(0))
  bool convex = false;
  bool simple = false;
};

Vector eval_sl(const Curve& curve, const ConfigPoint& x);

/// eval_sl minus the target lengths; throws DimensionMismatch.
Vector residual(const Curve& curve, const ConfigPoint& x, const EdgeLengths& a);

/// n x n derivative of the residual in the chart coordinates. Uses the
/// curve's tangent when available at every vertex, else central differences.
/// Throws NearBoundary when some theta_i <= 1e-9.
Matrix jacobian(const Curve& curve, const ConfigPoint& x, const EdgeLengths& a);

/// Central-difference Jacobian with step 1e-7 max(1, |x|); exposed for checks.
Matrix jacobian_fd(const Curve& curve, const ConfigPoint& x, const EdgeLengths& a);

InscribedPolygon inscribed_polygon(const Curve& curve, const ConfigPoint& x);

}  // namespace inpoly

#endif  // INPOLY_TESTMAP_HPP_
