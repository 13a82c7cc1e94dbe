#ifndef INPOLY_TYPES_HPP_
#define INPOLY_TYPES_HPP_

#include <Eigen/Dense>

#include <numbers>
#include <vector>

namespace inpoly {

template <typename T>
using Vec2 = Eigen::Matrix<T, 2, 1>;

template <typename T>
using VecX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <typename T>
using MatX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using Point2 = Vec2<double>;  // plane point, x + iy
using Vector = VecX<double>;
using Matrix = MatX<double>;

using PointList = std::vector<Point2, Eigen::aligned_allocator<Point2>>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace inpoly

#endif  // INPOLY_TYPES_HPP_
