#include "inpoly/solver.hpp"

#include <Eigen/LU>

#include <cmath>
#include <limits>
#include <string>

namespace inpoly {
namespace {

struct Projected {
  Vector y;
  bool pinned_theta = false;
  bool pinned_mu = false;
};

// Retracts chart coordinates onto {theta_i >= floor, sum = 2pi} x [lo, hi].
Projected project(const Vector& y, double floor, const MuBounds& bounds) {
  const Eigen::Index n = y.size();
  Vector theta(n);
  theta.head(n - 1) = y.head(n - 1);
  theta[n - 1] = kTwoPi - y.head(n - 1).sum();

  Projected out;
  if (theta.minCoeff() < floor) {
    Vector excess = (theta.array() - floor).max(0.0).matrix();
    const double room = kTwoPi - double(n) * floor;
    const double total = excess.sum();
    if (total > 0.0) {
      theta = (floor + excess.array() * (room / total)).matrix();
    } else {
      theta.setConstant(kTwoPi / double(n));
    }
  }
  // The eliminated angle is recomputed from the others; keep it above the floor after rounding.
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * kTwoPi;
  if (kTwoPi - theta.head(n - 1).sum() < floor) {
    Eigen::Index big = 0;
    theta.head(n - 1).maxCoeff(&big);
    theta[big] -= floor - (kTwoPi - theta.head(n - 1).sum()) + slack;
  }
  out.pinned_theta = theta.minCoeff() <= floor * (1.0 + 1e-12);

  out.y = y;
  out.y.head(n - 1) = theta.head(n - 1);
  double mu = y[n - 1];
  if (!(mu >= bounds.lo)) {
    mu = bounds.lo;
    out.pinned_mu = true;
  } else if (mu > bounds.hi) {
    mu = bounds.hi;
    out.pinned_mu = true;
  } else {
    out.pinned_mu = mu == bounds.lo || mu == bounds.hi;
  }
  out.y[n - 1] = mu;
  return out;
}

}  // namespace

void SolverOptions::validate(std::size_t n) const {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidSpec, "solver option: " + what); };
  if (!(newton_tol > 0.0)) bad("newton_tol must be positive");
  if (max_newton_iters <= 0) bad("max_newton_iters must be positive");
  if (!(armijo_factor > 0.0 && armijo_factor < 1.0)) bad("armijo_factor must lie in (0, 1)");
  if (!(min_step > 0.0)) bad("min_step must be positive");
  if (!(theta_min > 0.0) || !(theta_min < kPi / double(n))) bad("theta_min must lie in (0, pi/n)");
  if (boundary_patience <= 0) bad("boundary_patience must be positive");
  if (homotopy_steps <= 0) bad("homotopy_steps must be positive");
  if (!(min_homotopy_step > 0.0)) bad("min_homotopy_step must be positive");
  if (!(dedupe_radius > 0.0)) bad("dedupe_radius must be positive");
  if (mu_lo && !(*mu_lo > 0.0)) bad("mu_lo must be positive");
  if (mu_lo && mu_hi && !(*mu_hi > *mu_lo)) bad("mu_hi must exceed mu_lo");
}

MuBounds mu_bounds(const Curve& curve, const EdgeLengths& a, const SolverOptions& opts) {
  const double n = double(a.size());
  const double diam = diameter(curve, 512);
  // Every chord is at most the diameter, so any solution has mu >= max(a) / diam >= lo.
  MuBounds b{a.sum() / (n * diam), n * n * a.sum() / diam};
  if (opts.mu_lo) b.lo = *opts.mu_lo;
  if (opts.mu_hi) b.hi = *opts.mu_hi;
  return b;
}

NewtonOutcome newton_run(const Curve& curve, const EdgeLengths& a, const ConfigPoint& x0,
                         const SolverOptions& opts, const MuBounds& bounds) {
  NewtonOutcome out;
  if (x0.size() != a.size()) {
    throw Error(ErrorKind::DimensionMismatch, "start configuration and lengths differ in size");
  }

  Projected cur = project(x0.chart(), opts.theta_min, bounds);
  auto finish = [&](std::optional<ErrorKind> failure, double rinf) {
    out.x = ConfigPoint::from_chart(cur.y);
    out.failure = failure;
    out.residual_inf = rinf;
    out.pinned_theta = cur.pinned_theta;
    out.pinned_mu = cur.pinned_mu;
    return out;
  };

  Vector r = residual(curve, ConfigPoint::from_chart(cur.y), a);
  int pinned_run = 0;
  for (int iter = 0;; ++iter) {
    out.iterations = iter;
    const double rinf = r.lpNorm<Eigen::Infinity>();
    if (!std::isfinite(rinf)) return finish(ErrorKind::SingularJacobian, rinf);
    if (rinf < opts.newton_tol) {
      // A zero on the floor is not an interior solution.
      return finish(cur.pinned_theta || cur.pinned_mu ? std::optional(ErrorKind::BoundaryEscape) : std::nullopt, rinf);
    }
    if (iter >= opts.max_newton_iters) return finish(ErrorKind::MaxIterations, rinf);

    const ConfigPoint x = ConfigPoint::from_chart(cur.y);
    const Matrix jac = jacobian(curve, x, a);
    const Eigen::PartialPivLU<Matrix> lu(jac);
    if (!(lu.rcond() > 1e-14)) return finish(ErrorKind::SingularJacobian, rinf);
    const Vector step = -lu.solve(r);
    if (!step.allFinite()) return finish(ErrorKind::SingularJacobian, rinf);

    const double r2 = r.norm();
    double lambda = 1.0;
    bool accepted = false;
    Projected trial;
    Vector rtrial;
    while (lambda >= opts.min_step) {
      trial = project(cur.y + lambda * step, opts.theta_min, bounds);
      rtrial = residual(curve, ConfigPoint::from_chart(trial.y), a);
      if (rtrial.allFinite() && rtrial.norm() <= (1.0 - opts.armijo_slope * lambda) * r2) {
        accepted = true;
        break;
      }
      lambda *= opts.armijo_factor;
    }
    if (!accepted) {
      // Backtracking collapsed; on the boundary that is the same escape signal.
      if (cur.pinned_theta || cur.pinned_mu) return finish(ErrorKind::BoundaryEscape, rinf);
      return finish(ErrorKind::LineSearchFailure, rinf);
    }

    cur = trial;
    r = rtrial;
    pinned_run = (cur.pinned_theta || cur.pinned_mu) ? pinned_run + 1 : 0;
    if (pinned_run >= opts.boundary_patience) return finish(ErrorKind::BoundaryEscape, r.lpNorm<Eigen::Infinity>());
  }
}

ConfigPoint newton_solve(const Curve& curve, const EdgeLengths& a, const ConfigPoint& x0, const SolverOptions& opts) {
  if (!a.validated()) throw Error(ErrorKind::Unvalidated, "edge lengths were not validated");
  opts.validate(a.size());
  if (!x0.valid()) throw Error(ErrorKind::InvalidSpec, "start configuration is not a valid point of M");
  const NewtonOutcome res = newton_run(curve, a, x0, opts, mu_bounds(curve, a, opts));
  if (res.failure) {
    throw Error(*res.failure, std::string("newton_solve: ") + std::string(to_string(*res.failure)) + " after " +
                                  std::to_string(res.iterations) + " iterations, residual " +
                                  std::to_string(res.residual_inf));
  }
  return res.x;
}

}  // namespace inpoly
