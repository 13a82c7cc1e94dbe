#ifndef INPOLY_ORACLE_HPP_
#define INPOLY_ORACLE_HPP_

// Brute-force grid search over ordered vertex parameters. Independent of the
// Newton path: it only compares chord ratios, never derivatives.

#include "inpoly/curve.hpp"
#include "inpoly/penner.hpp"

#include <vector>

namespace inpoly {

struct GridSolution {
  std::size_t grid_size = 0;
  Vector sigma_grid;       // sigma_1..sigma_{n-1} at the harvested grid point
  double grid_error = 0.0;
  Vector sigma;            // after local refinement
  double mu = 0.0;         // least-squares fit of mu * chords to the lengths
  double proportionality_error = 0.0;
};

/// max_i |r_i - mean(r)| / mean(r) with r_i = chord_i / a_i.
double proportionality_error(const Vector& chords, const Vector& a);

/// Local minima below 10/N on the N-point grid, each refined three times by
/// a factor of 8; survivors must also sit below 10/(512 N) after refinement. n <= 4 (TooManySides), N >= 64; throws GridTooCoarse when
/// nothing qualifies.
std::vector<GridSolution> grid_search(const Curve& curve, const EdgeLengths& a, std::size_t grid_size);

}  // namespace inpoly

#endif  // INPOLY_ORACLE_HPP_
