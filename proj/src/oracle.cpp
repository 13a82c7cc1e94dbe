#include "inpoly/oracle.hpp"

#include "inpoly/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace inpoly {
namespace {

constexpr std::size_t kMaxFree = 3;  // n <= 4
using Index = std::array<std::size_t, kMaxFree>;

class Grid {
 public:
  Grid(const Curve& curve, const EdgeLengths& a, std::size_t n_grid)
      : a_(a.values()), dims_(a.size() - 1), n_(n_grid), dist_(n_grid * n_grid) {
    const PointList pts = curve.sample(n_grid);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) dist_[i * n_ + j] = (pts[i] - pts[j]).norm();
    }
  }

  std::size_t dims() const { return dims_; }
  std::size_t size() const { return n_; }

  bool ordered(const Index& idx) const {
    std::size_t prev = 0;
    for (std::size_t d = 0; d < dims_; ++d) {
      if (idx[d] <= prev || idx[d] >= n_) return false;
      prev = idx[d];
    }
    return true;
  }

  double error(const Index& idx) const {
    double ratios[kMaxFree + 1];
    std::size_t prev = 0;
    for (std::size_t d = 0; d <= dims_; ++d) {
      const std::size_t next = d < dims_ ? idx[d] : 0;
      ratios[d] = dist_[prev * n_ + next] / a_[Eigen::Index(d)];
      prev = next;
    }
    double mean = 0.0;
    for (std::size_t d = 0; d <= dims_; ++d) mean += ratios[d];
    mean /= double(dims_ + 1);
    double worst = 0.0;
    for (std::size_t d = 0; d <= dims_; ++d) worst = std::max(worst, std::abs(ratios[d] - mean));
    return worst / mean;
  }

  // Weak local minimum over the 3^d - 1 neighbours; ties go to the
  // lexicographically smallest index so plateaus yield one representative.
  bool local_min(const Index& idx, double e) const {
    const std::size_t combos = dims_ == 2 ? 9 : 27;
    for (std::size_t c = 0; c < combos; ++c) {
      Index nb = idx;
      std::size_t code = c;
      bool centre = true;
      bool smaller = false;
      bool decided = false;
      for (std::size_t d = 0; d < dims_; ++d) {
        const int off = int(code % 3) - 1;
        code /= 3;
        if (off != 0) centre = false;
        if (!decided && off != 0) {
          smaller = off < 0;
          decided = true;
        }
        nb[d] = std::size_t(std::ptrdiff_t(idx[d]) + off);
      }
      if (centre || !ordered(nb)) continue;
      const double en = error(nb);
      if (en < e || (en == e && smaller)) return false;
    }
    return true;
  }

 private:
  Vector a_;
  std::size_t dims_;
  std::size_t n_;
  std::vector<double> dist_;
};

Vector chords_at(const Curve& curve, const Vector& sigma) {
  const Eigen::Index m = sigma.size();
  Vector c(m + 1);
  const Point2 start = curve.eval(0.0);
  Point2 prev = start;
  for (Eigen::Index i = 0; i <= m; ++i) {
    const Point2 next = i < m ? curve.eval(sigma[i]) : start;
    c[i] = (next - prev).norm();
    prev = next;
  }
  return c;
}

bool increasing(const Vector& s) {
  double prev = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (!(s[i] > prev)) return false;
    prev = s[i];
  }
  return prev < kTwoPi;
}

}  // namespace

double proportionality_error(const Vector& chords, const Vector& a) {
  const Vector r = chords.cwiseQuotient(a);
  const double mean = r.mean();
  return (r.array() - mean).abs().maxCoeff() / mean;
}

std::vector<GridSolution> grid_search(const Curve& curve, const EdgeLengths& a, std::size_t grid_size) {
  if (!a.validated()) throw Error(ErrorKind::Unvalidated, "edge lengths were not validated");
  if (a.size() > 4) throw Error(ErrorKind::TooManySides, "grid search supports n <= 4");
  if (grid_size < 64) throw Error(ErrorKind::InvalidSpec, "grid size must be at least 64");

  const Grid grid(curve, a, grid_size);
  const std::size_t dims = grid.dims();
  const double threshold = 10.0 / double(grid_size);
  const double step = kTwoPi / double(grid_size);

  std::vector<GridSolution> harvested;
  auto visit = [&](const Index& idx) {
    const double e = grid.error(idx);
    if (e >= threshold || !grid.local_min(idx, e)) return;
    GridSolution g;
    g.grid_size = grid_size;
    g.sigma_grid.resize(Eigen::Index(dims));
    for (std::size_t d = 0; d < dims; ++d) g.sigma_grid[Eigen::Index(d)] = step * double(idx[d]);
    g.grid_error = e;
    harvested.push_back(std::move(g));
  };

  Index idx{};
  for (idx[0] = 1; idx[0] < grid_size; ++idx[0]) {
    for (idx[1] = idx[0] + 1; idx[1] < grid_size; ++idx[1]) {
      if (dims == 2) {
        visit(idx);
        continue;
      }
      for (idx[2] = idx[1] + 1; idx[2] < grid_size; ++idx[2]) visit(idx);
    }
  }
  if (harvested.empty()) {
    throw Error(ErrorKind::GridTooCoarse, "no grid point has proportionality error below " + std::to_string(threshold));
  }

  const Vector& lengths = a.values();
  const std::size_t offsets = dims == 2 ? 17 * 17 : 17 * 17 * 17;
  for (auto& g : harvested) {
    Vector best = g.sigma_grid;
    double best_err = g.grid_error;
    double h = step;
    for (int round = 0; round < 3; ++round) {
      h /= 8.0;
      const Vector centre = best;
      for (std::size_t c = 0; c < offsets; ++c) {
        Vector trial = centre;
        std::size_t code = c;
        for (std::size_t d = 0; d < dims; ++d) {
          trial[Eigen::Index(d)] += h * (double(code % 17) - 8.0);
          code /= 17;
        }
        if (!increasing(trial)) continue;
        const double e = proportionality_error(chords_at(curve, trial), lengths);
        if (e < best_err) {
          best_err = e;
          best = trial;
        }
      }
    }
    g.sigma = best;
    g.proportionality_error = best_err;
    const Vector ch = chords_at(curve, best);
    g.mu = ch.dot(lengths) / ch.squaredNorm();
  }

  // Grid minima that do not sharpen with the grid are near-misses, not
  // preimages: apply the same 10/N rule at the final resolution.
  const double refined_threshold = threshold / 512.0;
  std::erase_if(harvested, [&](const GridSolution& g) { return g.proportionality_error >= refined_threshold; });
  if (harvested.empty()) {
    throw Error(ErrorKind::GridTooCoarse, "no grid minimum survived refinement");
  }

  // Neighbouring harvests that refine onto the same point collapse.
  std::sort(harvested.begin(), harvested.end(),
            [](const GridSolution& l, const GridSolution& r) { return l.proportionality_error < r.proportionality_error; });
  std::vector<GridSolution> out;
  for (auto& g : harvested) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const GridSolution& o) {
      return (o.sigma - g.sigma).lpNorm<Eigen::Infinity>() < step;
    });
    if (!dup) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const GridSolution& l, const GridSolution& r) {
    return std::lexicographical_compare(l.sigma.begin(), l.sigma.end(), r.sigma.begin(), r.sigma.end());
  });
  return out;
}

}  // namespace inpoly
