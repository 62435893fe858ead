// Sensor measurement models with explicit sync-offset terms, and the two
// algebraic fusion chains (direct georeferencing; vessel + AUV survey).
// Every function is a pure map from explicit inputs; noise and offsets are
// arguments, never hidden state.
#pragma once

#include <syncline/kinematics.hpp>
#include <syncline/types.hpp>

namespace syncline {

/// Ground-truth rigid state of one vehicle. `attitude` maps body to the
/// local-level (NED) frame; `position` is the body origin in the world frame.
struct RigidState {
    Vec3 position{Vec3::Zero()};        // p_eb, meters
    Mat3 attitude{Mat3::Identity()};    // R_nb
    Vec3 velocity_body{Vec3::Zero()};   // m/s
    Vec3 angular_velocity_body{Vec3::Zero()}; // rad/s
};

/// Range/bearing noise triple for one observation.
struct RangeBearingNoise {
    double range_m{0};
    double azimuth_rad{0};
    double elevation_rad{0};
};

/// World-frame velocity of a body-fixed point at `lever` (body frame):
/// R_en R_nb (v_b + omega_b x lever). The local-level frame is treated as
/// non-rotating over the offsets involved, so no transport-rate term appears.
Vec3 point_velocity(const RigidState& state, const Vec3& lever,
                    const Mat3& r_en = Mat3::Identity());

/// Position sensor at a lever arm, timestamped `mu` seconds late: the true
/// sensor-point position advanced by the point velocity, plus additive noise.
Vec3 measure_position(const RigidState& state, const Vec3& lever, double mu_s,
                      const Vec3& noise, const Mat3& r_en = Mat3::Identity());

/// Attitude sensor with sync offset `mu`: the true attitude advanced by
/// omega * mu, then perturbed by the small-angle noise vector. Throws when
/// the advance angle leaves the small-angle regime.
Mat3 measure_attitude(const RigidState& state, double mu_s, const Vec3& noise);

/// Range/bearing sensor observing `true_vector` (carrier body frame) through
/// a sensor mounted with rotation `mount` (sensor-to-body). The observation
/// is formed in the sensor frame and perturbed per-channel; range-bearing
/// sensors define the sync reference clock, so there is no offset term.
BearingRange measure_range_bearing(const Vec3& true_vector, const Mat3& mount,
                                   const RangeBearingNoise& noise);

/// USBL observation: the receiver-to-transponder vector resolved in the
/// vessel body frame, perturbed in range/bearing coordinates.
/// `usbl_lever` locates the receiver in the vessel body frame;
/// `transponder_world` is the true transponder position.
Vec3 measure_usbl(const RigidState& sv_state, const Vec3& transponder_world,
                  const Vec3& usbl_lever, const Mat3& usbl_mount,
                  const RangeBearingNoise& noise,
                  const Mat3& r_en = Mat3::Identity());

/// Virtual AUV position: measured GNSS position + measured vessel attitude
/// rotating (GNSS-to-receiver lever + measured USBL vector), plus the AUV's
/// own motion over the offset between this virtual measurement and the
/// reference (MBE) clock.
Vec3 virtual_auv_position(const Vec3& gnss_meas, const Mat3& ins_sv_meas,
                          const Vec3& usbl_meas, const Vec3& gnss_to_usbl_lever,
                          const RigidState& auv_state,
                          const Vec3& auv_transponder_lever, double mu_auvpos_s,
                          const Mat3& r_en = Mat3::Identity());

/// Direct georeferencing: measured own position + measured attitude rotating
/// (position-sensor-to-range-sensor lever + measured range/bearing vector).
Vec3 georeference(const Vec3& gnss_meas, const Mat3& att_meas,
                  const BearingRange& rb_meas, const Vec3& gnss_to_sensor_lever,
                  const Mat3& sensor_mount,
                  const Mat3& r_en = Mat3::Identity());

/// Second georeferencing stage of the survey chain: virtual AUV position +
/// measured AUV attitude rotating (transponder-to-MBE lever + measured MBE
/// vector).
Vec3 survey_georeference(const Vec3& auvpos_meas, const Mat3& ins_auv_meas,
                         const BearingRange& mbe_meas,
                         const Vec3& transponder_to_mbe_lever,
                         const Mat3& mbe_mount,
                         const Mat3& r_en = Mat3::Identity());

} // namespace syncline
