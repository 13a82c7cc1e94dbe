#include "inpoly/degree.hpp"

#include <algorithm>
#include <cmath>

namespace inpoly {
namespace {

int signed_count(const std::vector<Solution>& sols) {
  int d = 0;
  for (const auto& s : sols) d += s.sgn_det;
  return d;
}

}  // namespace

DegreeReport estimate_degree(const CurveSpec& spec, const EdgeLengths& a, const SolverOptions& opts) {
  if (!a.validated()) throw Error(ErrorKind::Unvalidated, "edge lengths were not validated");
  if (a.size() > 5) throw Error(ErrorKind::DimensionTooHigh, "degree estimation is limited to n <= 5");

  SolverOptions run = opts;
  run.multistart_count = 4 * opts.starts_for(a.size());
  SolveResult first = multistart_solve(spec, a, run);

  run.multistart_count *= 2;
  const SolveResult second = multistart_solve(spec, a, run);

  DegreeReport report;
  report.target = a;
  report.degree = signed_count(first.solutions);
  report.degree_doubled = signed_count(second.solutions);
  report.stable = report.degree == report.degree_doubled && first.solutions.size() == second.solutions.size();
  report.starts = first.starts;
  report.min_abs_det = std::numeric_limits<double>::infinity();
  for (const auto& s : first.solutions) report.min_abs_det = std::min(report.min_abs_det, std::abs(s.det));
  if (first.solutions.empty()) report.min_abs_det = 0.0;
  report.regular = report.min_abs_det >= 1e-8;
  report.solutions = std::move(first.solutions);
  return report;
}

}  // namespace inpoly
