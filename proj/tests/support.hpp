#ifndef INPOLY_TESTS_SUPPORT_HPP_
#define INPOLY_TESTS_SUPPORT_HPP_

#include "inpoly/curve.hpp"
#include "inpoly/penner.hpp"

#include <random>
#include <vector>

namespace inpoly::testing {

inline CurveSpec circle(double r = 1.0, Point2 c = Point2::Zero(), double phase = 0.0) {
  return {CircleSpec{c, r}, phase};
}

inline CurveSpec ellipse(double a = 2.0, double b = 1.0, double phase = 0.0) {
  return {EllipseSpec{Point2::Zero(), a, b}, phase};
}

/// rho(alpha) = 1 + amp cos(k alpha)
inline CurveSpec star(double amp = 0.3, int k = 3) {
  StarSpec s;
  s.cos.assign(std::size_t(k) + 1, 0.0);
  s.cos[0] = 1.0;
  s.cos[std::size_t(k)] = amp;
  return {s, 0.0};
}

inline CurveSpec figure_eight() {
  FourierSpec f;
  f.x_cos = {0.0, 1.0};
  f.y_sin = {0.0, 0.0, 1.0};
  return {f, 0.0};
}

inline CurveSpec square() {
  PolylineSpec p;
  p.points = {Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)};
  return {p, 0.0};
}

/// Rejection sample of a length vector in W with n sides.
inline std::vector<double> random_lengths(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  for (;;) {
    std::vector<double> a(n);
    double total = 0.0;
    for (auto& v : a) total += (v = unif(rng));
    bool ok = true;
    for (double v : a) ok = ok && v < total - v;
    if (ok) return a;
  }
}

}  // namespace inpoly::testing

#endif  // INPOLY_TESTS_SUPPORT_HPP_
