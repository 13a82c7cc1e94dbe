#ifndef INPOLY_GEOMKIT_HPP_
#define INPOLY_GEOMKIT_HPP_

// Plane-geometry helpers shared by the curve, solver and oracle code.
// Everything here is templated on the scalar type and takes Eigen 2-vectors.

#include "inpoly/error.hpp"
#include "inpoly/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>

namespace inpoly::geom {

template <typename T>
inline T cross(const Vec2<T>& u, const Vec2<T>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

/// Signed angle from v to u in (-pi, pi], i.e. arg(u / v) for complex u, v.
template <typename T>
inline T angle_between(const Vec2<T>& u, const Vec2<T>& v) {
  return std::atan2(cross(v, u), v.dot(u));
}

template <typename T>
struct DefectBound {
  T defect;
  T bound;
};

/// Remainder of the triangle inequality for two nonzero vectors and its
/// angular upper bound (1 - cos phi) / 2 * (|z1| + |z2|), phi = arg(z1 / z2).
template <typename T>
DefectBound<T> triangle_defect_bound(const Vec2<T>& z1, const Vec2<T>& z2) {
  const T n1 = z1.norm();
  const T n2 = z2.norm();
  if (!(n1 > T(0)) || !(n2 > T(0))) {
    throw Error(ErrorKind::ZeroVector, "triangle_defect_bound: zero vector");
  }
  const T phi = angle_between(z1, z2);
  const T defect = std::abs((z1 + z2).norm() - (n1 + n2));
  const T bound = (T(1) - std::cos(phi)) / T(2) * (n1 + n2);
  return {defect, bound};
}

/// Twice the signed area of the closed polygon (shoelace).
template <typename T>
T signed_area2(std::span<const Vec2<T>> v) {
  T acc = T(0);
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    acc += cross(v[i], v[(i + 1) % n]);
  }
  return acc;
}

namespace detail {

template <typename T>
void require_distinct_consecutive(std::span<const Vec2<T>> v, const char* who) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) {
      throw Error(ErrorKind::DuplicateVertex, std::string(who) + ": consecutive vertices coincide", i);
    }
  }
}

template <typename T>
int orientation(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c) {
  const T o = cross<T>(b - a, c - a);
  if (o > T(0)) return 1;
  if (o < T(0)) return -1;
  return 0;
}

template <typename T>
bool on_segment(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

}  // namespace detail

/// Closed-segment intersection test (touching counts).
template <typename T>
bool segments_intersect(const Vec2<T>& p1, const Vec2<T>& p2, const Vec2<T>& q1, const Vec2<T>& q2) {
  using detail::on_segment;
  using detail::orientation;
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

/// True iff no two non-adjacent edges of the closed polygon meet.
template <typename T>
bool is_simple_polygon(std::span<const Vec2<T>> v) {
  detail::require_distinct_consecutive(v, "is_simple_polygon");
  const std::size_t n = v.size();
  if (n < 4) return true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

/// Strict convexity of an ordered vertex loop: every turn has the same
/// nonzero sign and the loop turns around exactly once. Straight angles
/// count as non-convex.
template <typename T>
bool is_convex_ordered(std::span<const Vec2<T>> v) {
  detail::require_distinct_consecutive(v, "is_convex_ordered");
  const std::size_t n = v.size();
  if (n < 3) return false;
  const T eps = T(64) * std::numeric_limits<T>::epsilon();
  int sign = 0;
  T turning = T(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2<T> e0 = v[(i + 1) % n] - v[i];
    const Vec2<T> e1 = v[(i + 2) % n] - v[(i + 1) % n];
    const T c = cross(e0, e1);
    if (std::abs(c) <= eps * e0.norm() * e1.norm()) return false;
    const int s = c > T(0) ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
    turning += angle_between(e1, e0);
  }
  // A pentagram turns the same way at every vertex but winds twice.
  return std::abs(std::abs(turning) - T(kTwoPi)) < T(1e-6);
}

// Convenience overloads for the common container.
inline bool is_convex_ordered(const PointList& v) { return is_convex_ordered<double>(std::span<const Point2>(v)); }
inline bool is_simple_polygon(const PointList& v) { return is_simple_polygon<double>(std::span<const Point2>(v)); }
inline double signed_area2(const PointList& v) { return signed_area2<double>(std::span<const Point2>(v)); }

}  // namespace inpoly::geom

#endif  // INPOLY_GEOMKIT_HPP_
