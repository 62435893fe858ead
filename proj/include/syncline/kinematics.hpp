// Frame algebra: rotation matrices, Euler angles, skew operators, bearing
// geometry and small-attitude perturbations. Header-only, templated on the
// scalar type and friendly to Eigen expressions; every function is pure.
#pragma once

#include <syncline/types.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace syncline {

// =============================================================================
// Skew-symmetric algebra
// =============================================================================

/// Skew-symmetric matrix [v]x with [v]x * u = v x u.
template <typename Derived>
Mat3T<typename Derived::Scalar> skew(const Eigen::MatrixBase<Derived>& v_expr) {
    using Scalar = typename Derived::Scalar;
    const Vec3T<Scalar> v = v_expr;
    Mat3T<Scalar> s;
    s << Scalar(0), -v.z(), v.y(),
         v.z(), Scalar(0), -v.x(),
         -v.y(), v.x(), Scalar(0);
    return s;
}

/// Inverse of skew(): extracts v from [v]x.
template <typename Derived>
Vec3T<typename Derived::Scalar>
unskew(const Eigen::MatrixBase<Derived>& s_expr) {
    using Scalar = typename Derived::Scalar;
    const Mat3T<Scalar> s = s_expr;
    return Vec3T<Scalar>(s(2, 1), s(0, 2), s(1, 0));
}

// =============================================================================
// Rotation matrices
// =============================================================================

/// True when r is orthonormal with unit determinant, both to `tol` (Frobenius).
template <typename Derived>
bool is_rotation(const Eigen::MatrixBase<Derived>& r_expr,
                 typename Derived::Scalar tol = 1e-9) {
    using Scalar = typename Derived::Scalar;
    const Mat3T<Scalar> r = r_expr;
    const Mat3T<Scalar> gram = r.transpose() * r;
    return (gram - Mat3T<Scalar>::Identity()).norm() <= tol &&
           std::abs(r.determinant() - Scalar(1)) <= tol;
}

/// Projects a near-rotation back onto SO(3) by iterating the symmetric
/// orthogonalization step R <- R (3I - R^T R) / 2 until the Gram defect is
/// below 1e-12. Converges in 2-3 iterations for the perturbations used here.
template <typename Derived>
Mat3T<typename Derived::Scalar>
orthonormalize(const Eigen::MatrixBase<Derived>& r_expr) {
    using Scalar = typename Derived::Scalar;
    Mat3T<Scalar> out = r_expr;
    for (int i = 0; i < 12; ++i) {
        const Mat3T<Scalar> gram = out.transpose() * out;
        if ((gram - Mat3T<Scalar>::Identity()).norm() < Scalar(1e-12)) {
            break;
        }
        out = out * (Scalar(3) * Mat3T<Scalar>::Identity() - gram) / Scalar(2);
    }
    return out;
}

/// Body-to-NED rotation from roll/pitch/yaw (intrinsic z-y-x composition,
/// i.e. Rz(yaw) Ry(pitch) Rx(roll)).
template <typename Scalar>
Mat3T<Scalar> euler_to_rotation(const EulerAnglesT<Scalar>& e) {
    if (!all_finite(e)) {
        throw std::domain_error("euler_to_rotation: non-finite angles");
    }
    const Scalar cf = std::cos(e.roll), sf = std::sin(e.roll);
    const Scalar ct = std::cos(e.pitch), st = std::sin(e.pitch);
    const Scalar cy = std::cos(e.yaw), sy = std::sin(e.yaw);
    Mat3T<Scalar> r;
    r << ct * cy, -cf * sy + sf * st * cy, sf * sy + cf * st * cy,
         ct * sy, cf * cy + sf * st * sy, -sf * cy + cf * st * sy,
         -st, sf * ct, cf * ct;
    return r;
}

/// Inverse of euler_to_rotation for the canonical |pitch| <= pi/2 branch.
template <typename Derived>
EulerAnglesT<typename Derived::Scalar>
rotation_to_euler(const Eigen::MatrixBase<Derived>& r_expr) {
    using Scalar = typename Derived::Scalar;
    const Mat3T<Scalar> r = r_expr;
    EulerAnglesT<Scalar> e;
    const Scalar st = std::clamp(-r(2, 0), Scalar(-1), Scalar(1));
    e.pitch = std::asin(st);
    e.roll = std::atan2(r(2, 1), r(2, 2));
    e.yaw = std::atan2(r(1, 0), r(0, 0));
    return e;
}

/// First-order attitude update R (I + [eps]x), re-orthonormalized so the
/// result stays on SO(3). Valid for small error vectors; accuracy degrades
/// past ~0.1 rad and inputs with |eps| >= pi/2 are rejected.
template <typename DerivedR, typename DerivedV>
Mat3T<typename DerivedR::Scalar>
apply_attitude_error(const Eigen::MatrixBase<DerivedR>& r_expr,
                     const Eigen::MatrixBase<DerivedV>& eps_expr) {
    using Scalar = typename DerivedR::Scalar;
    const Vec3T<Scalar> eps = eps_expr;
    if (!all_finite(eps) || eps.norm() >= Scalar(std::numbers::pi / 2.0)) {
        throw std::domain_error(
            "apply_attitude_error: |eps| outside small-angle regime");
    }
    const Mat3T<Scalar> r = r_expr;
    return orthonormalize(
        (r * (Mat3T<Scalar>::Identity() + skew(eps))).eval());
}

// =============================================================================
// Bearing geometry
// =============================================================================

/// Unit line-of-sight direction for an azimuth/elevation pair.
template <typename Scalar>
Vec3T<Scalar> bearing_direction(Scalar azimuth, Scalar elevation) {
    return Vec3T<Scalar>(std::cos(azimuth) * std::cos(elevation),
                         std::sin(azimuth) * std::cos(elevation),
                         -std::sin(elevation));
}

/// Cartesian sensor-frame vector for a bearing/range observation.
template <typename Scalar>
Vec3T<Scalar> bearing_to_vector(const BearingRangeT<Scalar>& b) {
    return b.range * bearing_direction(b.azimuth, b.elevation);
}

/// Inverse of bearing_to_vector. Azimuth is fixed to zero on the poles
/// (x = y = 0) so the inverse stays deterministic.
template <typename Derived>
BearingRangeT<typename Derived::Scalar>
vector_to_bearing(const Eigen::MatrixBase<Derived>& p_expr) {
    using Scalar = typename Derived::Scalar;
    const Vec3T<Scalar> p = p_expr;
    const Scalar r = p.norm();
    if (!all_finite(p) || r <= Scalar(0)) {
        throw std::domain_error("vector_to_bearing: zero or non-finite vector");
    }
    BearingRangeT<Scalar> b;
    b.range = r;
    b.elevation = std::asin(std::clamp(-p.z() / r, Scalar(-1), Scalar(1)));
    b.azimuth = (p.x() == Scalar(0) && p.y() == Scalar(0))
                    ? Scalar(0)
                    : std::atan2(p.y(), p.x());
    if (b.azimuth <= Scalar(-std::numbers::pi)) {
        b.azimuth += Scalar(2 * std::numbers::pi);
    }
    return b;
}

/// Wraps an angle into (-pi, pi].
template <typename Scalar> Scalar wrap_angle(Scalar a) {
    a = std::remainder(a, Scalar(2 * std::numbers::pi));
    if (a <= Scalar(-std::numbers::pi)) {
        a += Scalar(2 * std::numbers::pi);
    }
    return a;
}

// =============================================================================
// Earth frames
// =============================================================================

/// NED-to-ECEF rotation at a geodetic latitude/longitude: columns are the
/// north, east and down unit directions resolved in ECEF.
template <typename Scalar>
Mat3T<Scalar> ecef_ned_rotation(Scalar lat, Scalar lon) {
    if (!std::isfinite(lat) || !std::isfinite(lon) ||
        std::abs(lat) > Scalar(std::numbers::pi / 2.0)) {
        throw std::domain_error("ecef_ned_rotation: latitude out of range");
    }
    const Scalar cl = std::cos(lat), sl = std::sin(lat);
    const Scalar co = std::cos(lon), so = std::sin(lon);
    Mat3T<Scalar> r;
    r << -sl * co, -so, -cl * co,
         -sl * so, co, -cl * so,
         cl, Scalar(0), -sl;
    return r;
}

} // namespace syncline
