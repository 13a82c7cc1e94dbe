#include "inpoly/solver.hpp"

#include "inpoly/geomkit.hpp"

#include <cmath>
#include <memory>
#include <string>

namespace inpoly {
namespace {

constexpr int kStarSamples = 4096;

double turn_from(const Point2& base, const Point2& d) {
  double a = geom::angle_between(d, base);
  if (a < 0.0) a += kTwoPi;
  return a;
}

class BlendShape final : public CurveShape {
 public:
  BlendShape(Curve target, Point2 center, double mean_radius, double t)
      : target_(std::move(target)), center_(center), mean_radius_(mean_radius), t_(t) {}

  Point2 eval(double alpha) const override {
    const Point2 d = target_.eval(alpha) - center_;
    const double r = d.norm();
    return center_ + ((1.0 - t_) * mean_radius_ + t_ * r) * (d / r);
  }

  std::optional<Point2> derivative(double alpha) const override {
    const auto dg = target_.derivative(alpha);
    if (!dg) return std::nullopt;
    const Point2 d = target_.eval(alpha) - center_;
    const double r = d.norm();
    const Point2 u = d / r;
    const double dr = u.dot(*dg);
    const Point2 du = (*dg - dr * u) / r;
    const double rad = (1.0 - t_) * mean_radius_ + t_ * r;
    return Point2(t_ * dr * u + rad * du);
  }

  Smoothness smoothness() const override { return target_.smoothness(); }

 private:
  Curve target_;
  Point2 center_;
  double mean_radius_;
  double t_;
};

}  // namespace

HomotopyFamily::HomotopyFamily(const CurveSpec& spec, std::optional<Point2> center)
    : target_(build_curve(spec)), center_(center ? *center : sampled_centroid(target_, 1024)) {
  const PointList pts = target_.sample(kStarSamples);
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, (p - center_).norm());

  double total_turn = 0.0;
  double radius_sum = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Point2 d0 = pts[k] - center_;
    const Point2 d1 = pts[(k + 1) % pts.size()] - center_;
    const double r = d0.norm();
    if (!(r > 1e-12 * scale)) {
      throw Error(ErrorKind::NotStarShaped, "curve passes through the star center");
    }
    const double step = geom::angle_between(d1, d0);
    if (!(step > 0.0)) {
      throw Error(ErrorKind::NotStarShaped,
                  "polar angle about the star center is not increasing near alpha=" +
                      std::to_string(kTwoPi * double(k) / kStarSamples));
    }
    total_turn += step;
    radius_sum += r;
  }
  if (std::abs(total_turn - kTwoPi) > 1e-6) {
    throw Error(ErrorKind::NotStarShaped, "curve does not wind once around the star center");
  }
  mean_radius_ = radius_sum / double(pts.size());
}

Curve HomotopyFamily::at(double t) const {
  if (t >= 1.0) return target_;
  return Curve(std::make_shared<BlendShape>(target_, center_, mean_radius_, std::max(t, 0.0)));
}

double HomotopyFamily::parameter_at_turn(double turn) const {
  const Point2 base = target_.eval(0.0) - center_;
  double lo = 0.0;
  double hi = kTwoPi;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (turn_from(base, target_.eval(mid) - center_) < turn) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Curve homotopy_family(const CurveSpec& spec, double t, std::optional<Point2> center) {
  return HomotopyFamily(spec, center).at(t);
}

ConfigPoint penner_seed(const HomotopyFamily& family, const EdgeLengths& a) {
  const CyclicPolygon cyc = solve_cyclic(a);
  const Eigen::Index n = Eigen::Index(a.size());
  ConfigPoint x;
  x.theta.resize(n);
  double turn = 0.0;
  double prev = 0.0;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    turn += cyc.central_angles[k];
    const double alpha = family.parameter_at_turn(turn);
    x.theta[k] = alpha - prev;
    prev = alpha;
  }
  x.theta[n - 1] = kTwoPi - prev;
  x.mu = cyc.circumradius / family.mean_radius();
  return x;
}

ConfigPoint penner_seed(const CurveSpec& spec, const EdgeLengths& a, std::optional<Point2> center) {
  return penner_seed(HomotopyFamily(spec, center), a);
}

}  // namespace inpoly
