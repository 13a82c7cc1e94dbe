#ifndef INPOLY_SOLVER_HPP_
#define INPOLY_SOLVER_HPP_

#include "inpoly/curve.hpp"
#include "inpoly/error.hpp"
#include "inpoly/penner.hpp"
#include "inpoly/testmap.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace inpoly {

struct SolverOptions {
  double newton_tol = 1e-10;      // target for the residual infinity norm
  int max_newton_iters = 100;
  double armijo_factor = 0.5;
  double armijo_slope = 1e-4;
  double min_step = 0x1p-30;
  double theta_min = 1e-6;
  int boundary_patience = 5;      // consecutive pinned iterates before giving up
  std::optional<double> mu_lo;    // default: sum(a) / (n diam)
  std::optional<double> mu_hi;    // default: n^2 sum(a) / diam
  int homotopy_steps = 64;
  double min_homotopy_step = 0x1p-10;
  std::size_t multistart_count = 0;  // 0 means 200 n
  double dedupe_radius = 1e-6;       // in (theta, log mu)
  std::uint64_t seed = 0;
  unsigned threads = 0;              // 0 means hardware concurrency
  std::optional<Point2> star_center; // default: sampled area centroid

  /// Throws InvalidSpec for non-positive tolerances or theta_min >= pi/n.
  void validate(std::size_t n) const;
  std::size_t starts_for(std::size_t n) const { return multistart_count ? multistart_count : 200 * n; }
};

struct MuBounds {
  double lo;
  double hi;
};

MuBounds mu_bounds(const Curve& curve, const EdgeLengths& a, const SolverOptions& opts);

/// Result of one damped Newton run; `failure` is empty on convergence.
struct NewtonOutcome {
  ConfigPoint x;
  std::optional<ErrorKind> failure;
  int iterations = 0;
  double residual_inf = 0.0;
  bool pinned_theta = false;  // last iterate sat on the theta floor
  bool pinned_mu = false;     // last iterate sat on a mu bound
};

NewtonOutcome newton_run(const Curve& curve, const EdgeLengths& a, const ConfigPoint& x0,
                         const SolverOptions& opts, const MuBounds& bounds);

/// Damped Newton with Armijo backtracking on |residual|_2; iterates are kept
/// on the simplex with theta_i >= theta_min and mu inside the bounds. Throws
/// SingularJacobian, MaxIterations, LineSearchFailure or BoundaryEscape.
ConfigPoint newton_solve(const Curve& curve, const EdgeLengths& a, const ConfigPoint& x0,
                         const SolverOptions& opts);

/// Radial blend between a circle (t = 0) and a star-shaped target (t = 1)
/// about a center c:
///   gamma_t(alpha) = c + [(1 - t) rbar + t r(alpha)] u(alpha),
/// where gamma(alpha) - c = r(alpha) u(alpha), |u| = 1, and rbar is the mean of
/// r over alpha. The target keeps its own parameterization; for star specs
/// u(alpha) = e^{i(alpha + phase)}.
class HomotopyFamily {
 public:
  /// Throws NotStarShaped if the polar angle about the center is not strictly
  /// increasing or the curve passes through the center.
  explicit HomotopyFamily(const CurveSpec& spec, std::optional<Point2> center = std::nullopt);

  Curve at(double t) const;
  const Curve& target() const noexcept { return target_; }
  Point2 center() const noexcept { return center_; }
  double mean_radius() const noexcept { return mean_radius_; }

  /// Parameter alpha in (0, 2pi) at which the polar angle about the center
  /// has advanced by `turn` in (0, 2pi) from gamma(0).
  double parameter_at_turn(double turn) const;

 private:
  Curve target_;
  Point2 center_;
  double mean_radius_ = 0.0;
};

Curve homotopy_family(const CurveSpec& spec, double t, std::optional<Point2> center = std::nullopt);

/// Circle solution of the family's t = 0 member, from the cyclic polygon.
ConfigPoint penner_seed(const HomotopyFamily& family, const EdgeLengths& a);
ConfigPoint penner_seed(const CurveSpec& spec, const EdgeLengths& a, std::optional<Point2> center = std::nullopt);

struct Solution {
  ConfigPoint x;
  double residual_norm = 0.0;  // infinity norm
  InscribedPolygon polygon;
  bool convex = false;
  bool simple = false;
  int sgn_det = 0;
  double det = 0.0;
  std::string provenance;  // "homotopy" or "multistart:<start id>"
};

struct SolveResult {
  std::vector<Solution> solutions;
  std::size_t starts = 0;
  std::size_t newton_failures = 0;
  std::size_t boundary_rejections = 0;
};

/// Tracks the circle solution along the radial family t = 0 -> 1. Non
/// star-shaped specs fall through to multistart_solve. Throws PathFailure.
SolveResult continuation_solve(const CurveSpec& spec, const EdgeLengths& a, const SolverOptions& opts);

/// Newton from a low-discrepancy sweep of the theta simplex times a
/// log-uniform mu range, deduplicated in (theta, log mu).
SolveResult multistart_solve(const CurveSpec& spec, const EdgeLengths& a, const SolverOptions& opts);

/// Start points used by multistart_solve, exposed for testing.
std::vector<ConfigPoint> simplex_starts(std::size_t n, std::size_t count, double theta_floor, const MuBounds& mu,
                                        std::uint64_t seed);

/// Distance used for deduplication.
double config_distance(const ConfigPoint& x, const ConfigPoint& y);

/// Packs a converged configuration with its polygon and Jacobian sign.
Solution make_solution(const Curve& curve, const EdgeLengths& a, const ConfigPoint& x, std::string provenance);

}  // namespace inpoly

#endif  // INPOLY_SOLVER_HPP_
