#ifndef INPOLY_PENNER_HPP_
#define INPOLY_PENNER_HPP_

// Circle base case: the convex cyclic polygon with prescribed side lengths.

#include "inpoly/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace inpoly {

/// Side lengths a_1..a_n, n >= 3, each strictly less than the sum of the
/// others. Only validate_lengths produces a validated value.
class EdgeLengths {
 public:
  EdgeLengths() = default;

  std::size_t size() const noexcept { return values_.size(); }
  bool validated() const noexcept { return validated_; }
  const Vector& values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[Eigen::Index(i)]; }
  double sum() const { return values_.sum(); }
  double max() const { return values_.maxCoeff(); }

  /// Uniform rescale; stays inside the admissible set for c > 0.
  EdgeLengths scaled(double c) const;

 private:
  friend EdgeLengths validate_lengths(std::span<const double> a);
  Vector values_;
  bool validated_ = false;
};

/// Throws TooFewSides, NotPositive or PolygonInequalityViolated (with the
/// offending index).
EdgeLengths validate_lengths(std::span<const double> a);
inline EdgeLengths validate_lengths(const std::vector<double>& a) {
  return validate_lengths(std::span<const double>(a));
}

enum class CircleBranch { CenterInside, CenterOnLongestSide, CenterOutside };

const char* to_string(CircleBranch b) noexcept;

struct CyclicPolygon {
  double circumradius = 0.0;
  /// Arc angle subtended by each side, in side order; they sum to 2pi. When
  /// the center lies outside, the longest side owns the major arc.
  Vector central_angles;
  CircleBranch branch = CircleBranch::CenterInside;
  /// On the circle |z| = R, first vertex at angle 0, counterclockwise.
  PointList vertices;
};

/// Bisection on the circumradius. `tol` is relative to the bracket; throws
/// Unvalidated or NoConvergence (more than 200 halvings).
CyclicPolygon solve_cyclic(const EdgeLengths& a, double tol = 1e-12);

/// Root function bisected for a given branch: sum asin(a_i/2R) - pi for the
/// center-inside branch, sum_{i != m} asin(a_i/2R) - asin(a_m/2R) otherwise.
double circumradius_residual(const EdgeLengths& a, CircleBranch branch, double radius);

}  // namespace inpoly

#endif  // INPOLY_PENNER_HPP_
