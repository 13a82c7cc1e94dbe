#include "inpoly/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <string>
#include <thread>

namespace inpoly {
namespace {

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

double radical_inverse(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * double(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

unsigned worker_count(const SolverOptions& opts, std::size_t jobs) {
  unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  return unsigned(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

double config_distance(const ConfigPoint& x, const ConfigPoint& y) {
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  const double dmu = std::log(x.mu) - std::log(y.mu);
  return std::sqrt((x.theta - y.theta).squaredNorm() + dmu * dmu);
}

std::vector<ConfigPoint> simplex_starts(std::size_t n, std::size_t count, double theta_floor, const MuBounds& mu,
                                        std::uint64_t seed) {
  if (n > std::size(kPrimes)) throw Error(ErrorKind::DimensionTooHigh, "too many sides for the start sequence");
  // Halton points with a random Cranley-Patterson shift per seed.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> shift(n);
  for (auto& s : shift) s = unif(rng);

  const double room = kTwoPi - double(n) * theta_floor;
  const double log_lo = std::log(mu.lo);
  const double log_hi = std::log(mu.hi);
  std::vector<ConfigPoint> starts;
  starts.reserve(count);
  std::vector<double> cuts(n - 1);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t d = 0; d + 1 < n; ++d) {
      cuts[d] = std::fmod(radical_inverse(k + 1, kPrimes[d]) + shift[d], 1.0);
    }
    std::sort(cuts.begin(), cuts.end());
    ConfigPoint x;
    x.theta.resize(Eigen::Index(n));
    double prev = 0.0;
    for (std::size_t d = 0; d + 1 < n; ++d) {
      x.theta[Eigen::Index(d)] = theta_floor + room * (cuts[d] - prev);
      prev = cuts[d];
    }
    x.theta[Eigen::Index(n - 1)] = theta_floor + room * (1.0 - prev);
    const double u = std::fmod(radical_inverse(k + 1, kPrimes[n - 1]) + shift[n - 1], 1.0);
    x.mu = std::exp(log_lo + u * (log_hi - log_lo));
    starts.push_back(std::move(x));
  }
  return starts;
}

Solution make_solution(const Curve& curve, const EdgeLengths& a, const ConfigPoint& x, std::string provenance) {
  Solution s;
  s.x = x;
  s.residual_norm = residual(curve, x, a).lpNorm<Eigen::Infinity>();
  s.polygon = inscribed_polygon(curve, x);
  s.convex = s.polygon.convex;
  s.simple = s.polygon.simple;
  s.det = jacobian(curve, x, a).determinant();
  s.sgn_det = s.det > 0.0 ? 1 : (s.det < 0.0 ? -1 : 0);
  s.provenance = std::move(provenance);
  return s;
}

SolveResult multistart_solve(const CurveSpec& spec, const EdgeLengths& a, const SolverOptions& opts) {
  if (!a.validated()) throw Error(ErrorKind::Unvalidated, "edge lengths were not validated");
  const std::size_t n = a.size();
  opts.validate(n);
  const Curve curve = build_curve(spec);
  const MuBounds bounds = mu_bounds(curve, a, opts);
  const std::vector<ConfigPoint> starts =
      simplex_starts(n, opts.starts_for(n), 2.0 * opts.theta_min, bounds, opts.seed);

  std::vector<NewtonOutcome> outcomes(starts.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < starts.size(); k = next++) {
      try {
        outcomes[k] = newton_run(curve, a, starts[k], opts, bounds);
      } catch (const Error& e) {
        outcomes[k].failure = e.kind();
      }
    }
  };
  const unsigned workers = worker_count(opts, starts.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  // Reduce in start order so the result does not depend on scheduling.
  SolveResult result;
  result.starts = starts.size();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const NewtonOutcome& o = outcomes[k];
    if (o.failure) {
      if (*o.failure == ErrorKind::BoundaryEscape) {
        ++result.boundary_rejections;
      } else {
        ++result.newton_failures;
      }
      continue;
    }
    const bool seen = std::any_of(result.solutions.begin(), result.solutions.end(), [&](const Solution& s) {
      return config_distance(s.x, o.x) < opts.dedupe_radius;
    });
    if (!seen) result.solutions.push_back(make_solution(curve, a, o.x, "multistart:" + std::to_string(k)));
  }
  return result;
}

SolveResult continuation_solve(const CurveSpec& spec, const EdgeLengths& a, const SolverOptions& opts) {
  if (!a.validated()) throw Error(ErrorKind::Unvalidated, "edge lengths were not validated");
  opts.validate(a.size());
  std::optional<HomotopyFamily> family;
  try {
    family.emplace(spec, opts.star_center);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotStarShaped) throw;
    return multistart_solve(spec, a, opts);
  }

  auto correct = [&](double t, const ConfigPoint& guess) {
    const Curve curve = family->at(t);
    return newton_run(curve, a, guess, opts, mu_bounds(curve, a, opts));
  };

  ConfigPoint x = penner_seed(*family, a);
  {
    const NewtonOutcome polished = correct(0.0, x);
    if (polished.failure) {
      throw Error(ErrorKind::PathFailure, "circle seed did not converge at t=0");
    }
    x = polished.x;
  }

  const double base_step = 1.0 / double(opts.homotopy_steps);
  double t = 0.0;
  double dt = base_step;
  int streak = 0;
  while (t < 1.0) {
    const double t_next = std::min(1.0, t + dt);
    const NewtonOutcome o = correct(t_next, x);
    if (!o.failure) {
      x = o.x;
      t = t_next;
      if (++streak >= 2 && dt < base_step) {
        dt = std::min(base_step, 2.0 * dt);
        streak = 0;
      }
      continue;
    }
    streak = 0;
    dt *= 0.5;
    if (dt < opts.min_homotopy_step) {
      throw Error(ErrorKind::PathFailure, "continuation stalled; last good t=" + std::to_string(t) + " (" +
                                              std::string(to_string(*o.failure)) + ")");
    }
  }

  SolveResult result;
  result.starts = 1;
  result.solutions.push_back(make_solution(family->target(), a, x, "homotopy"));
  return result;
}

}  // namespace inpoly
