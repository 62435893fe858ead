// Core scalar and dense-vector aliases shared by every module.
#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <limits>
#include <numbers>

namespace syncline {

template <typename Scalar> using Vec3T = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using Mat3T = Eigen::Matrix<Scalar, 3, 3>;

using Vec3 = Vec3T<double>;
using Mat3 = Mat3T<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

template <typename Scalar> constexpr Scalar deg_to_rad(Scalar deg) {
    return deg * Scalar(std::numbers::pi / 180.0);
}

template <typename Scalar> constexpr Scalar rad_to_deg(Scalar rad) {
    return rad * Scalar(180.0 / std::numbers::pi);
}

/// Roll/pitch/yaw attitude, radians. Canonical range keeps |pitch| <= pi/2.
template <typename Scalar> struct EulerAnglesT {
    Scalar roll{0};
    Scalar pitch{0};
    Scalar yaw{0};
};
using EulerAngles = EulerAnglesT<double>;

/// Range/bearing observation: azimuth in (-pi, pi], elevation in
/// [-pi/2, pi/2], range >= 0 meters.
template <typename Scalar> struct BearingRangeT {
    Scalar azimuth{0};
    Scalar elevation{0};
    Scalar range{0};
};
using BearingRange = BearingRangeT<double>;

template <typename Scalar> bool all_finite(const Vec3T<Scalar>& v) {
    return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

template <typename Scalar> bool all_finite(const EulerAnglesT<Scalar>& e) {
    return std::isfinite(e.roll) && std::isfinite(e.pitch) && std::isfinite(e.yaw);
}

} // namespace syncline
