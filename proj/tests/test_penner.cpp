#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inpoly/error.hpp"
#include "inpoly/geomkit.hpp"
#include "inpoly/penner.hpp"
#include "support.hpp"

#include <random>

using namespace inpoly;

namespace {

ErrorKind validation_error(const std::vector<double>& a, std::optional<std::size_t>* index = nullptr) {
  try {
    validate_lengths(a);
  } catch (const Error& e) {
    if (index) *index = e.index();
    return e.kind();
  }
  FAIL("expected validate_lengths to throw");
  return ErrorKind::InvalidSpec;
}

// Side lengths re-measured from the vertex loop.
std::vector<double> measured_sides(const CyclicPolygon& p) {
  std::vector<double> out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    out.push_back((p.vertices[(i + 1) % p.vertices.size()] - p.vertices[i]).norm());
  }
  return out;
}

double closure(const CyclicPolygon& p) {
  const double total = p.central_angles.sum();
  return (p.circumradius * Point2(std::cos(total), std::sin(total)) - p.vertices.front()).norm();
}

}  // namespace

TEST_CASE("validate_lengths") {
  CHECK(validate_lengths(std::vector<double>{1, 1, 1}).validated());
  std::optional<std::size_t> idx;
  CHECK(validation_error({5, 1, 1, 1}, &idx) == ErrorKind::PolygonInequalityViolated);
  CHECK(idx == 0u);
  CHECK(validation_error({1, 1, 3}, &idx) == ErrorKind::PolygonInequalityViolated);
  CHECK(idx == 2u);
  CHECK(validation_error({1, 1}) == ErrorKind::TooFewSides);
  CHECK(validation_error({1, 0, 1}) == ErrorKind::NotPositive);
  CHECK(validation_error({1, -2, 1, 1}) == ErrorKind::NotPositive);
  CHECK(validation_error({1, 1, 2}) == ErrorKind::PolygonInequalityViolated);  // degenerate, not in W
}

TEST_CASE("solve_cyclic exact anchors") {
  const auto tri = solve_cyclic(validate_lengths(std::vector<double>{1, 1, 1}));
  CHECK(std::abs(tri.circumradius - 1.0 / std::sqrt(3.0)) < 1e-12);
  CHECK(tri.branch == CircleBranch::CenterInside);
  for (int i = 0; i < 3; ++i) CHECK(tri.central_angles[i] == doctest::Approx(kTwoPi / 3));

  const auto sq = solve_cyclic(validate_lengths(std::vector<double>{1, 1, 1, 1}));
  CHECK(std::abs(sq.circumradius - std::sqrt(0.5)) < 1e-12);
  for (int i = 0; i < 4; ++i) CHECK(sq.central_angles[i] == doctest::Approx(kPi / 2));

  const auto thales = solve_cyclic(validate_lengths(std::vector<double>{3, 4, 5}));
  CHECK(std::abs(thales.circumradius - 2.5) < 1e-10);
  CHECK(thales.branch == CircleBranch::CenterOnLongestSide);
}

TEST_CASE("solve_cyclic center-outside case against a dense scan") {
  const EdgeLengths a = validate_lengths(std::vector<double>{1, 1, 1, 2.5});
  const auto poly = solve_cyclic(a);
  CHECK(poly.branch == CircleBranch::CenterOutside);

  // Independent scan: closing condition written directly from chord geometry,
  // 2 asin(a_i / 2R) summed over the short sides equals the long side's angle.
  auto gap = [](double r) { return 3.0 * 2.0 * std::asin(1.0 / (2.0 * r)) - 2.0 * std::asin(2.5 / (2.0 * r)); };
  const int steps = 200000;
  int sign_changes = 0;
  double root = 0.0;
  double prev_r = 1.25;
  double prev = gap(prev_r);
  for (int k = 1; k <= steps; ++k) {
    const double r = 1.25 + (50.0 - 1.25) * k / steps;
    const double v = gap(r);
    if ((v > 0) != (prev > 0)) {
      ++sign_changes;
      root = prev_r - prev * (r - prev_r) / (v - prev);
    }
    prev = v;
    prev_r = r;
  }
  CHECK(sign_changes == 1);
  CHECK(poly.circumradius == doctest::Approx(root).epsilon(1e-6));

  const auto sides = measured_sides(poly);
  for (std::size_t i = 0; i < sides.size(); ++i) CHECK(std::abs(sides[i] - a[i]) < 1e-9 * a.max());
  CHECK(closure(poly) < 1e-9 * a.max());
  CHECK(geom::is_convex_ordered(poly.vertices));
}

TEST_CASE("round trip, closure and convexity on random lengths") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + std::size_t(trial % 10);
    const EdgeLengths a = validate_lengths(testing::random_lengths(rng, n));
    const auto poly = solve_cyclic(a);
    const auto sides = measured_sides(poly);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(std::abs(sides[i] - a[i]) < 1e-9 * a[i]);
    REQUIRE(closure(poly) < 1e-9 * a.max());
    REQUIRE(geom::is_convex_ordered(poly.vertices));
    REQUIRE(std::abs(poly.central_angles.sum() - kTwoPi) < 1e-9);
  }
}

TEST_CASE("scale equivariance and rotation invariance of the radius") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto raw = testing::random_lengths(rng, 3 + std::size_t(trial % 6));
    const EdgeLengths a = validate_lengths(raw);
    const double r = solve_cyclic(a).circumradius;
    for (double c : {0.001, 3.7, 1e4}) {
      CHECK(solve_cyclic(a.scaled(c)).circumradius == doctest::Approx(c * r).epsilon(1e-12));
    }
    auto rotated = raw;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    CHECK(solve_cyclic(validate_lengths(rotated)).circumradius == doctest::Approx(r).epsilon(1e-12));
  }
}

TEST_CASE("bisected function has one sign change on the bracket") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const EdgeLengths a = validate_lengths(testing::random_lengths(rng, 3 + std::size_t(trial % 8)));
    const auto poly = solve_cyclic(a);
    if (poly.branch == CircleBranch::CenterOnLongestSide) continue;
    const double r0 = a.max() / 2.0;
    int changes = 0;
    double prev = circumradius_residual(a, poly.branch, r0);
    for (int k = 1; k <= 20000; ++k) {
      const double v = circumradius_residual(a, poly.branch, r0 * (1.0 + 50.0 * k / 20000.0));
      if ((v > 0) != (prev > 0) && v != 0.0) ++changes;
      prev = v;
    }
    CHECK(changes == 1);
  }
}

TEST_CASE("ties for the longest side pick the lowest index") {
  const auto p = solve_cyclic(validate_lengths(std::vector<double>{2, 1, 2, 0.5}));
  CHECK(std::abs(p.central_angles.sum() - kTwoPi) < 1e-12);
}

TEST_CASE("solve_cyclic errors") {
  CHECK_THROWS_AS(solve_cyclic(EdgeLengths{}), Error);
  try {
    solve_cyclic(EdgeLengths{});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unvalidated);
  }
  try {
    solve_cyclic(validate_lengths(std::vector<double>{1, 1, 1.5}), 1e-30);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}
