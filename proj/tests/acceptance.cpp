// Acceptance suite: one pass/fail line per criterion, non-zero exit on any failure.

#include "inpoly/degree.hpp"
#include "inpoly/error.hpp"
#include "inpoly/geomkit.hpp"
#include "inpoly/io.hpp"
#include "inpoly/oracle.hpp"
#include "inpoly/penner.hpp"
#include "inpoly/solver.hpp"
#include "support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace inpoly;
using namespace inpoly::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("unexpected exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s -- %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome penner_round_trip() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick_n(3, 12);
  double worst_edge = 0.0;
  double worst_close = 0.0;
  const auto t0 = Clock::now();
  for (int k = 0; k < 500; ++k) {
    const EdgeLengths a = validate_lengths(random_lengths(rng, pick_n(rng)));
    const CyclicPolygon p = solve_cyclic(a);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double side = (p.vertices[(i + 1) % n] - p.vertices[i]).norm();
      worst_edge = std::max(worst_edge, std::abs(side - a[i]) / a[i]);
    }
    const double total = p.central_angles.sum();
    const Point2 closing = p.circumradius * Point2(std::cos(total), std::sin(total));
    worst_close = std::max(worst_close, (closing - p.vertices.front()).norm() / a.max());
  }
  const double dt = seconds_since(t0);
  return {worst_edge < 1e-9 && worst_close < 1e-9 && dt < 5.0,
          "max rel edge err " + fmt(worst_edge) + ", max closure/max(a) " + fmt(worst_close) + ", " + fmt(dt) + " s"};
}

Outcome exact_anchors() {
  const auto tri = solve_cyclic(validate_lengths(std::vector<double>{1, 1, 1}));
  const auto sq = solve_cyclic(validate_lengths(std::vector<double>{1, 1, 1, 1}));
  const auto th = solve_cyclic(validate_lengths(std::vector<double>{3, 4, 5}));
  const double e1 = std::abs(tri.circumradius - 1.0 / std::sqrt(3.0));
  const double e2 = std::abs(sq.circumradius - 1.0 / std::sqrt(2.0));
  const double e3 = std::abs(th.circumradius - 2.5);
  const bool ok = e1 < 1e-12 && e2 < 1e-12 && e3 < 1e-10 && th.branch == CircleBranch::CenterOnLongestSide;
  return {ok, "errors " + fmt(e1) + ", " + fmt(e2) + ", " + fmt(e3) + "; 3-4-5 branch " + to_string(th.branch)};
}

Outcome ellipse_instance() {
  const auto t0 = Clock::now();
  const EdgeLengths a = validate_lengths(std::vector<double>{1, 1, 1, 1});
  const SolveResult r = continuation_solve(ellipse(), a, SolverOptions{});
  const double dt = seconds_since(t0);
  if (r.solutions.empty()) return {false, "no solution"};
  const Solution& s = r.solutions.front();
  const Curve curve = build_curve(ellipse());
  const double res = residual(curve, s.x, a).lpNorm<Eigen::Infinity>();
  const Vector sig = s.x.sigma();
  bool increasing = true;
  for (Eigen::Index i = 1; i < sig.size(); ++i) increasing = increasing && sig[i] > sig[i - 1];
  const bool convex = geom::is_convex_ordered(inscribed_polygon(curve, s.x).on_curve);
  return {res < 1e-10 && increasing && convex && dt < 2.0,
          std::to_string(r.solutions.size()) + " solution(s), residual " + fmt(res) + ", sigma increasing " +
              (increasing ? "yes" : "no") + ", convex " + (convex ? "yes" : "no") + ", " + fmt(dt) + " s"};
}

Outcome oracle_agreement() {
  constexpr std::size_t kGrid = 512;
  const double coarse = kTwoPi * 10.0 / double(kGrid);
  struct Case {
    const char* name;
    CurveSpec spec;
    std::vector<double> a;
  };
  const std::vector<Case> cases = {{"circle n=3", circle(), {1, 1, 1}},
                                   {"circle n=3 skew", circle(), {1.2, 0.9, 1.05}},
                                   {"ellipse n=3", ellipse(), {1, 1, 1}},
                                   {"ellipse n=3 skew", ellipse(), {1.2, 0.9, 1.05}},
                                   {"ellipse n=4", ellipse(), {1, 1, 1, 1}},
                                   {"ellipse n=4 skew", ellipse(), {1, 1.2, 0.9, 1.1}}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const EdgeLengths a = validate_lengths(c.a);
    const auto cands = grid_search(build_curve(c.spec), a, kGrid);
    const SolveResult r = multistart_solve(c.spec, a, SolverOptions{});
    double worst_coarse = 0.0;
    double worst_fine = 0.0;
    for (const auto& s : r.solutions) {
      const Vector sig = s.x.sigma().segment(1, Eigen::Index(a.size()) - 1);
      double best_coarse = 1e9;
      double best_fine = 1e9;
      for (const auto& g : cands) {
        best_coarse = std::min(best_coarse, (g.sigma_grid - sig).lpNorm<Eigen::Infinity>());
        best_fine = std::min(best_fine, (g.sigma - sig).lpNorm<Eigen::Infinity>());
      }
      worst_coarse = std::max(worst_coarse, best_coarse);
      worst_fine = std::max(worst_fine, best_fine);
    }
    const bool pass = !r.solutions.empty() && worst_coarse <= coarse && worst_fine <= 1e-4;
    ok = ok && pass;
    detail += std::string(detail.empty() ? "" : "; ") + c.name + ": " + std::to_string(r.solutions.size()) + " sol, " +
              std::to_string(cands.size()) + " cand, grid " + fmt(worst_coarse) + ", refined " + fmt(worst_fine);
  }
  return {ok, detail};
}

Outcome degree_check() {
  struct Case {
    const char* name;
    CurveSpec spec;
    std::vector<double> a;
  };
  const std::vector<Case> cases = {
      {"circle (1,1,1)", circle(), {1, 1, 1}},
      {"ellipse (1,1,1)", ellipse(), {1, 1, 1}},
      {"ellipse (1.2,0.9,1.05)", ellipse(), {1.2, 0.9, 1.05}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    const DegreeReport r = estimate_degree(c.spec, validate_lengths(c.a), SolverOptions{});
    const double dt = seconds_since(t0);
    const bool pass = std::abs(r.degree) == 1 && r.stable && dt < 30.0;
    ok = ok && pass;
    detail += std::string(detail.empty() ? "" : "; ") + c.name + ": deg " + std::to_string(r.degree) + " (doubled " +
              std::to_string(r.degree_doubled) + "), " + fmt(dt) + " s";
  }
  return {ok, detail};
}

Outcome defect_inequality() {
  std::mt19937_64 rng(36);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> mag(-4.0, 4.0);
  int fails = 0;
  int tested = 0;
  while (tested < 10000) {
    const Point2 z1 = std::pow(10.0, mag(rng)) * Point2(g(rng), g(rng));
    const Point2 z2 = std::pow(10.0, mag(rng)) * Point2(g(rng), g(rng));
    if (z1.norm() == 0.0 || z2.norm() == 0.0) continue;
    ++tested;
    const auto r = geom::triangle_defect_bound<double>(z1, z2);
    if (!(r.defect <= r.bound + 1e-12)) ++fails;
  }
  return {fails == 0, std::to_string(tested) + " pairs, " + std::to_string(fails) + " failures"};
}

Outcome properness_guards() {
  struct Case {
    const char* name;
    CurveSpec spec;
    std::vector<double> a;
  };
  const std::vector<Case> cases = {{"circle", circle(), {1, 1, 1}},
                                   {"ellipse", ellipse(), {1, 1, 1, 1}},
                                   {"ellipse skew", ellipse(), {0.3, 1, 1.2, 0.8}},
                                   {"ellipse thin side", ellipse(), {0.05, 1, 1, 1.2}},
                                   {"ellipse near-degenerate", ellipse(), {1e-6, 1, 1, 1}},
                                   {"star", star(), {1, 1, 1, 1, 1}}};
  const SolverOptions opts;
  bool ok = true;
  int escaped = 0;
  int converged = 0;
  std::string bad;
  for (const auto& c : cases) {
    const EdgeLengths a = validate_lengths(c.a);
    const Curve curve = build_curve(c.spec);
    const MuBounds b = mu_bounds(curve, a, opts);
    const std::size_t n = a.size();
    const double mid_mu = std::sqrt(b.lo * b.hi);

    ConfigPoint thin = ConfigPoint::uniform(n, mid_mu);  // case (a): an angle near zero
    thin.theta[0] = 2.0 * opts.theta_min;
    thin.theta.tail(Eigen::Index(n) - 1).setConstant((kTwoPi - thin.theta[0]) / double(n - 1));
    ConfigPoint small = ConfigPoint::uniform(n, 0.5 * b.lo);  // case (b): mu towards 0
    ConfigPoint large = ConfigPoint::uniform(n, 2.0 * b.hi);  // case (c): mu towards infinity

    for (const auto& [label, x0] : {std::pair{"theta", thin}, std::pair{"mu_lo", small}, std::pair{"mu_hi", large}}) {
      const NewtonOutcome o = newton_run(curve, a, x0, opts, b);
      const bool finite = o.x.theta.allFinite() && std::isfinite(o.x.mu);
      const bool in_bounds = finite && o.x.mu >= b.lo && o.x.mu <= b.hi &&
                             o.x.theta.minCoeff() >= opts.theta_min * (1.0 - 1e-12) &&
                             std::abs(o.x.theta.sum() - kTwoPi) < 1e-12;
      bool fine = finite && in_bounds;
      if (!o.failure) {
        fine = fine && o.residual_inf < opts.newton_tol && o.x.theta.minCoeff() > opts.theta_min;
        ++converged;
      } else if (*o.failure == ErrorKind::BoundaryEscape) {
        fine = fine && (o.pinned_theta || o.pinned_mu);
        ++escaped;
      } else {
        fine = false;
      }
      if (!fine) {
        ok = false;
        bad += std::string(" ") + c.name + "/" + label + ":" +
               (o.failure ? std::string(to_string(*o.failure)) : std::string("bad-iterate"));
      }
    }
  }
  return {ok, std::to_string(converged) + " converged, " + std::to_string(escaped) + " boundary escapes" +
                  (bad.empty() ? "" : "; violations:" + bad)};
}

Outcome finiteness_probe() {
  const EdgeLengths a = validate_lengths(std::vector<double>{1, 1, 1, 1});
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SolverOptions opts;
    opts.seed = seed;
    opts.multistart_count = 200 * 4;
    const std::size_t c1 = multistart_solve(ellipse(), a, opts).solutions.size();
    opts.multistart_count = 400 * 4;
    const std::size_t c2 = multistart_solve(ellipse(), a, opts).solutions.size();
    ok = ok && c1 == c2 && c1 > 0;
    detail += std::string(detail.empty() ? "" : ", ") + "seed " + std::to_string(seed) + ": " + std::to_string(c1) +
              "/" + std::to_string(c2);
  }
  return {ok, detail};
}

Outcome length_validation() {
  auto kind_of = [](std::vector<double> a) -> std::optional<ErrorKind> {
    try {
      validate_lengths(a);
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  const auto k1 = kind_of({5, 1, 1, 1});
  const auto k2 = kind_of({1, 1});
  // The solver entry points refuse anything that did not pass validation.
  bool solver_refuses = false;
  try {
    multistart_solve(ellipse(), EdgeLengths{}, SolverOptions{});
  } catch (const Error& e) {
    solver_refuses = e.kind() == ErrorKind::Unvalidated;
  }
  const bool ok = k1 == ErrorKind::PolygonInequalityViolated && k2 == ErrorKind::TooFewSides && solver_refuses;
  return {ok, std::string("(5,1,1,1) -> ") + (k1 ? std::string(to_string(*k1)) : "accepted") + ", (1,1) -> " +
                  (k2 ? std::string(to_string(*k2)) : "accepted")};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("inpoly_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::ofstream(dir / "ellipse.json") << R"({"type":"ellipse","a":2.0,"b":1.0,"phase":0.0})";
  std::ofstream(dir / "lshape.json") << R"({"type":"polyline","points":[[0,0],[3,0],[3,1],[1,1],[1,3],[0,3]]})";

  bool ok = true;
  std::string detail;
  for (const auto& [curve, lengths] : {std::pair{"ellipse.json", "1,1,1,1"}, std::pair{"lshape.json", "1,1.2,0.9"}}) {
    std::string outputs[2][2];
    for (int run = 0; run < 2; ++run) {
      const fs::path json_out = dir / ("run" + std::to_string(run) + ".json");
      const fs::path svg_out = dir / ("run" + std::to_string(run) + ".svg");
      const std::string cmd = std::string(INPOLY_CLI_PATH) + " solve --curve " + (dir / curve).string() +
                              " --lengths " + lengths + " --seed 17 --out " + json_out.string() + " --svg " +
                              svg_out.string() + " 2>/dev/null";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        ok = false;
        detail += std::string(" ") + curve + ": exit " + std::to_string(WEXITSTATUS(status));
      }
      outputs[run][0] = slurp(json_out);
      outputs[run][1] = slurp(svg_out);
    }
    const bool same = !outputs[0][0].empty() && !outputs[0][1].empty() && outputs[0][0] == outputs[1][0] &&
                      outputs[0][1] == outputs[1][1];
    ok = ok && same;
    detail += std::string(detail.empty() ? "" : ", ") + curve + (same ? " identical" : " differs");
  }
  fs::remove_all(dir);
  return {ok, detail};
}

}  // namespace

int main() {
  criterion(1, "cyclic polygon round trip (500 random targets)", penner_round_trip);
  criterion(2, "exact circumradius anchors", exact_anchors);
  criterion(3, "ellipse(2,1), a=(1,1,1,1) by continuation", ellipse_instance);
  criterion(4, "solver solutions match grid oracle (N=512)", oracle_agreement);
  criterion(5, "degree is +-1 and stable", degree_check);
  criterion(6, "triangle-inequality remainder bound", defect_inequality);
  criterion(7, "near-boundary starts escape or converge", properness_guards);
  criterion(8, "solution count stable under doubled starts", finiteness_probe);
  criterion(9, "length validation rejects infeasible targets", length_validation);
  criterion(10, "CLI output is byte-identical across runs", determinism);
  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
