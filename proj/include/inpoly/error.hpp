#ifndef INPOLY_ERROR_HPP_
#define INPOLY_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace inpoly {

enum class ErrorKind {
  // curve
  NonPositiveRadial,
  SelfIntersecting,
  DegenerateCurve,
  // geomkit
  ZeroVector,
  DuplicateVertex,
  // penner / lengths
  NotPositive,
  PolygonInequalityViolated,
  TooFewSides,
  Unvalidated,
  NoConvergence,
  // testmap
  DimensionMismatch,
  NearBoundary,
  // solver
  SingularJacobian,
  MaxIterations,
  LineSearchFailure,
  BoundaryEscape,
  NotStarShaped,
  PathFailure,
  // degree
  DimensionTooHigh,
  NonRegularTarget,
  // oracle
  TooManySides,
  GridTooCoarse,
  // cli / io
  InvalidSpec,
  MissingSolutions,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Offending entry, when the error refers to one (e.g. a length index).
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace inpoly

#endif  // INPOLY_ERROR_HPP_
