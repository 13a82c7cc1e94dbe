#include "inpoly/testmap.hpp"

#include "inpoly/error.hpp"
#include "inpoly/geomkit.hpp"

#include <cmath>
#include <string>

namespace inpoly {
namespace {

constexpr double kBoundaryGuard = 1e-9;

// Side lengths straight from chart coordinates; sigma_n is pinned to 2pi so
// the closing vertex is gamma(0) exactly.
Vector sides_from_chart(const Curve& curve, const Vector& y) {
  const Eigen::Index n = y.size();
  const double mu = y[n - 1];
  Vector out(n);
  Point2 prev = curve.eval(0.0);
  const Point2 start = prev;
  double sigma = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Point2 next;
    if (i + 1 < n) {
      sigma += y[i];
      next = curve.eval(sigma);
    } else {
      next = start;
    }
    out[i] = mu * (next - prev).norm();
    prev = next;
  }
  return out;
}

void check_dims(const ConfigPoint& x, const EdgeLengths& a) {
  if (x.size() != a.size()) {
    throw Error(ErrorKind::DimensionMismatch, "configuration has " + std::to_string(x.size()) +
                                                  " angles but " + std::to_string(a.size()) + " lengths were given");
  }
}

}  // namespace

Vector ConfigPoint::sigma() const {
  const Eigen::Index n = theta.size();
  Vector s(n + 1);
  s[0] = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) s[i + 1] = s[i] + theta[i];
  s[n] = kTwoPi;
  return s;
}

bool ConfigPoint::valid() const {
  if (theta.size() < 3 || !(mu > 0.0) || !std::isfinite(mu)) return false;
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    if (!(theta[i] > 0.0) || !(theta[i] < kTwoPi)) return false;
  }
  return std::abs(theta.sum() - kTwoPi) < 1e-12;
}

Vector ConfigPoint::chart() const {
  const Eigen::Index n = theta.size();
  Vector y(n);
  y.head(n - 1) = theta.head(n - 1);
  y[n - 1] = mu;
  return y;
}

ConfigPoint ConfigPoint::from_chart(const Vector& y) {
  const Eigen::Index n = y.size();
  ConfigPoint x;
  x.theta.resize(n);
  x.theta.head(n - 1) = y.head(n - 1);
  x.theta[n - 1] = kTwoPi - y.head(n - 1).sum();
  x.mu = y[n - 1];
  return x;
}

ConfigPoint ConfigPoint::uniform(std::size_t n, double mu) {
  ConfigPoint x;
  x.theta = Vector::Constant(Eigen::Index(n), kTwoPi / double(n));
  x.mu = mu;
  return x;
}

Vector eval_sl(const Curve& curve, const ConfigPoint& x) {
  const Vector s = x.sigma();
  const Eigen::Index n = x.theta.size();
  Vector out(n);
  Point2 prev = curve.eval(0.0);
  const Point2 start = prev;
  for (Eigen::Index i = 1; i <= n; ++i) {
    const Point2 next = i == n ? start : curve.eval(s[i]);
    out[i - 1] = x.mu * (next - prev).norm();
    prev = next;
  }
  return out;
}

Vector residual(const Curve& curve, const ConfigPoint& x, const EdgeLengths& a) {
  check_dims(x, a);
  return eval_sl(curve, x) - a.values();
}

Matrix jacobian_fd(const Curve& curve, const ConfigPoint& x, const EdgeLengths& a) {
  check_dims(x, a);
  const Vector y = x.chart();
  const Eigen::Index n = y.size();
  const double h = 1e-7 * std::max(1.0, y.norm());
  Matrix jac(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Vector yp = y;
    Vector ym = y;
    yp[j] += h;
    ym[j] -= h;
    jac.col(j) = (sides_from_chart(curve, yp) - sides_from_chart(curve, ym)) / (2.0 * h);
  }
  return jac;
}

Matrix jacobian(const Curve& curve, const ConfigPoint& x, const EdgeLengths& a) {
  check_dims(x, a);
  const Eigen::Index n = x.theta.size();
  if (x.theta.minCoeff() <= kBoundaryGuard) {
    throw Error(ErrorKind::NearBoundary, "configuration is within 1e-9 of the simplex boundary");
  }
  const Vector s = x.sigma();

  // Vertex positions and tangents at sigma_0..sigma_{n-1}; sigma_n == sigma_0.
  PointList pts(static_cast<std::size_t>(n));
  PointList tangents(static_cast<std::size_t>(n), Point2::Zero());
  for (Eigen::Index i = 0; i < n; ++i) {
    pts[std::size_t(i)] = curve.eval(s[i]);
    if (i == 0) continue;  // sigma_0 is fixed, its tangent never enters
    const auto d = curve.derivative(s[i]);
    if (!d) return jacobian_fd(curve, x, a);
    tangents[std::size_t(i)] = *d;
  }

  // d side_i / d sigma_k for the moving vertices k = 1..n-1, then chain
  // through d sigma_k / d theta_j = [j <= k].
  Matrix dsigma = Matrix::Zero(n, n - 1);
  Matrix jac(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::size_t lo = std::size_t(i);
    const std::size_t hi = std::size_t((i + 1) % n);
    const Point2 d = pts[hi] - pts[lo];
    const double len = d.norm();
    jac(i, n - 1) = len;
    if (len == 0.0) continue;
    const Point2 u = d / len;
    if (i + 1 < n) dsigma(i, i) += x.mu * u.dot(tangents[hi]);
    if (i > 0) dsigma(i, i - 1) -= x.mu * u.dot(tangents[lo]);
  }
  for (Eigen::Index j = 0; j < n - 1; ++j) {
    jac.col(j) = dsigma.rightCols(n - 1 - j).rowwise().sum();
  }
  return jac;
}

InscribedPolygon inscribed_polygon(const Curve& curve, const ConfigPoint& x) {
  const Eigen::Index n = x.theta.size();
  const Vector s = x.sigma();
  InscribedPolygon poly;
  poly.sigma = s.head(n);
  poly.on_curve.resize(std::size_t(n));
  poly.scaled.resize(std::size_t(n));
  const Point2 base = curve.eval(0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point2 p = curve.eval(s[i]);
    poly.on_curve[std::size_t(i)] = p;
    poly.scaled[std::size_t(i)] = base + x.mu * (p - base);
  }
  try {
    poly.convex = geom::is_convex_ordered(poly.on_curve);
    poly.simple = geom::is_simple_polygon(poly.on_curve);
  } catch (const Error&) {
    poly.convex = false;
    poly.simple = false;
  }
  return poly;
}

}  // namespace inpoly
