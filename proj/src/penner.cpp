#include "inpoly/penner.hpp"

#include "inpoly/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace inpoly {
namespace {

double half_angle(double side, double radius) {
  return std::asin(std::min(1.0, side / (2.0 * radius)));
}

Eigen::Index longest_side(const Vector& a) {
  Eigen::Index m = 0;
  for (Eigen::Index i = 1; i < a.size(); ++i) {
    if (a[i] > a[m]) m = i;  // strict: lowest index wins ties
  }
  return m;
}

}  // namespace

EdgeLengths EdgeLengths::scaled(double c) const {
  EdgeLengths out = *this;
  out.values_ *= c;
  return out;
}

EdgeLengths validate_lengths(std::span<const double> a) {
  if (a.size() < 3) throw Error(ErrorKind::TooFewSides, "need at least 3 edge lengths, got " + std::to_string(a.size()));
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0) || !std::isfinite(a[i])) {
      throw Error(ErrorKind::NotPositive, "edge length at index " + std::to_string(i) + " is not positive", i);
    }
    total += a[i];
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] < total - a[i])) {
      throw Error(ErrorKind::PolygonInequalityViolated,
                  "polygon inequality violated at index " + std::to_string(i), i);
    }
  }
  EdgeLengths out;
  out.values_ = Eigen::Map<const Vector>(a.data(), Eigen::Index(a.size()));
  out.validated_ = true;
  return out;
}

const char* to_string(CircleBranch b) noexcept {
  switch (b) {
    case CircleBranch::CenterInside: return "center-inside";
    case CircleBranch::CenterOnLongestSide: return "center-on-longest-side";
    case CircleBranch::CenterOutside: return "center-outside";
  }
  return "unknown";
}

double circumradius_residual(const EdgeLengths& a, CircleBranch branch, double radius) {
  const Vector& v = a.values();
  if (branch == CircleBranch::CenterInside) {
    double f = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) f += half_angle(v[i], radius);
    return f - kPi;
  }
  const Eigen::Index m = longest_side(v);
  double g = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i != m) g += half_angle(v[i], radius);
  }
  return g - half_angle(v[m], radius);
}

CyclicPolygon solve_cyclic(const EdgeLengths& a, double tol) {
  if (!a.validated()) throw Error(ErrorKind::Unvalidated, "edge lengths were not validated");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidSpec, "tolerance must be positive");

  const Vector& v = a.values();
  const Eigen::Index n = v.size();
  const Eigen::Index m = longest_side(v);
  const double r0 = v[m] / 2.0;

  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i != m) s += half_angle(v[i], r0);
  }

  CyclicPolygon out;
  double radius = r0;
  if (std::abs(s - kPi / 2.0) <= tol) {
    out.branch = CircleBranch::CenterOnLongestSide;
  } else {
    out.branch = s > kPi / 2.0 ? CircleBranch::CenterInside : CircleBranch::CenterOutside;
    // Inside: f decreases through 0. Outside: g increases through 0.
    const double sign = out.branch == CircleBranch::CenterInside ? 1.0 : -1.0;
    auto h = [&](double r) { return sign * circumradius_residual(a, out.branch, r); };

    double lo = r0;
    double hi = r0;
    int iters = 0;
    do {
      hi *= 2.0;
      if (++iters > 200) throw Error(ErrorKind::NoConvergence, "circumradius bracket did not close");
    } while (h(hi) >= 0.0);

    iters = 0;
    while (hi - lo > tol * lo) {
      if (++iters > 200) throw Error(ErrorKind::NoConvergence, "circumradius bisection exceeded 200 iterations");
      const double mid = 0.5 * (lo + hi);
      if (h(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    radius = 0.5 * (lo + hi);
  }

  out.circumradius = radius;
  out.central_angles.resize(n);
  double others = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i == m) continue;
    out.central_angles[i] = 2.0 * half_angle(v[i], radius);
    others += out.central_angles[i];
  }
  // The longest side closes the polygon; its chord is insensitive to this angle near pi.
  out.central_angles[m] = kTwoPi - others;

  out.vertices.resize(std::size_t(n));
  double angle = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    out.vertices[std::size_t(k)] = radius * Point2(std::cos(angle), std::sin(angle));
    angle += out.central_angles[k];
  }
  return out;
}

}  // namespace inpoly
