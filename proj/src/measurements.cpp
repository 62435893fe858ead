#include <syncline/measurements.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace syncline {

Vec3 point_velocity(const RigidState& state, const Vec3& lever,
                    const Mat3& r_en) {
    return r_en * state.attitude *
           (state.velocity_body + state.angular_velocity_body.cross(lever));
}

Vec3 measure_position(const RigidState& state, const Vec3& lever, double mu_s,
                      const Vec3& noise, const Mat3& r_en) {
    const Vec3 sensor_point = state.position + r_en * state.attitude * lever;
    return sensor_point + point_velocity(state, lever, r_en) * mu_s + noise;
}

Mat3 measure_attitude(const RigidState& state, double mu_s, const Vec3& noise) {
    const Vec3 advance = state.angular_velocity_body * mu_s;
    if (advance.norm() >= std::numbers::pi / 2.0) {
        throw std::domain_error(
            "measure_attitude: |omega * mu| outside small-angle regime");
    }
    const Mat3 advanced = apply_attitude_error(state.attitude, advance);
    return apply_attitude_error(advanced, noise);
}

BearingRange measure_range_bearing(const Vec3& true_vector, const Mat3& mount,
                                   const RangeBearingNoise& noise) {
    const Vec3 sensor_frame = mount.transpose() * true_vector;
    BearingRange b = vector_to_bearing(sensor_frame);
    b.range = std::max(0.0, b.range + noise.range_m);
    b.azimuth = wrap_angle(b.azimuth + noise.azimuth_rad);
    b.elevation = std::clamp(b.elevation + noise.elevation_rad,
                             -std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    return b;
}

Vec3 measure_usbl(const RigidState& sv_state, const Vec3& transponder_world,
                  const Vec3& usbl_lever, const Mat3& usbl_mount,
                  const RangeBearingNoise& noise, const Mat3& r_en) {
    const Vec3 receiver_world =
        sv_state.position + r_en * sv_state.attitude * usbl_lever;
    const Vec3 relative_body = sv_state.attitude.transpose() *
                               r_en.transpose() *
                               (transponder_world - receiver_world);
    const BearingRange observed =
        measure_range_bearing(relative_body, usbl_mount, noise);
    return usbl_mount * bearing_to_vector(observed);
}

Vec3 virtual_auv_position(const Vec3& gnss_meas, const Mat3& ins_sv_meas,
                          const Vec3& usbl_meas, const Vec3& gnss_to_usbl_lever,
                          const RigidState& auv_state,
                          const Vec3& auv_transponder_lever, double mu_auvpos_s,
                          const Mat3& r_en) {
    return gnss_meas + r_en * ins_sv_meas * (gnss_to_usbl_lever + usbl_meas) +
           point_velocity(auv_state, auv_transponder_lever, r_en) * mu_auvpos_s;
}

Vec3 georeference(const Vec3& gnss_meas, const Mat3& att_meas,
                  const BearingRange& rb_meas, const Vec3& gnss_to_sensor_lever,
                  const Mat3& sensor_mount, const Mat3& r_en) {
    return gnss_meas +
           r_en * att_meas *
               (gnss_to_sensor_lever + sensor_mount * bearing_to_vector(rb_meas));
}

Vec3 survey_georeference(const Vec3& auvpos_meas, const Mat3& ins_auv_meas,
                         const BearingRange& mbe_meas,
                         const Vec3& transponder_to_mbe_lever,
                         const Mat3& mbe_mount, const Mat3& r_en) {
    return auvpos_meas +
           r_en * ins_auv_meas *
               (transponder_to_mbe_lever + mbe_mount * bearing_to_vector(mbe_meas));
}

} // namespace syncline
