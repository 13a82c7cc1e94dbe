#ifndef INPOLY_DEGREE_HPP_
#define INPOLY_DEGREE_HPP_

// Numerical degree of the side-length map at a target: the sum of Jacobian
// determinant signs over all preimages found by dense multistart.

#include "inpoly/solver.hpp"

namespace inpoly {

struct DegreeReport {
  EdgeLengths target;
  std::vector<Solution> solutions;
  int degree = 0;
  double min_abs_det = 0.0;
  bool regular = true;   // every |det| >= 1e-8
  std::size_t starts = 0;
  int degree_doubled = 0;  // degree with twice the starts
  bool stable = false;
};

/// n <= 5 only (DimensionTooHigh otherwise). Uses 4x the default start count
/// and re-runs with 8x for the stability flag.
DegreeReport estimate_degree(const CurveSpec& spec, const EdgeLengths& a, const SolverOptions& opts);

}  // namespace inpoly

#endif  // INPOLY_DEGREE_HPP_
