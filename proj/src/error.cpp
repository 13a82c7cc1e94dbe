#include "inpoly/error.hpp"

namespace inpoly {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositiveRadial: return "NonPositiveRadial";
    case ErrorKind::SelfIntersecting: return "SelfIntersecting";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::PolygonInequalityViolated: return "PolygonInequalityViolated";
    case ErrorKind::TooFewSides: return "TooFewSides";
    case ErrorKind::Unvalidated: return "Unvalidated";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NearBoundary: return "NearBoundary";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::MaxIterations: return "MaxIterations";
    case ErrorKind::LineSearchFailure: return "LineSearchFailure";
    case ErrorKind::BoundaryEscape: return "BoundaryEscape";
    case ErrorKind::NotStarShaped: return "NotStarShaped";
    case ErrorKind::PathFailure: return "PathFailure";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::NonRegularTarget: return "NonRegularTarget";
    case ErrorKind::TooManySides: return "TooManySides";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::MissingSolutions: return "MissingSolutions";
  }
  return "Unknown";
}

}  // namespace inpoly
