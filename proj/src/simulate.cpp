#include <syncline/simulate.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace syncline {

// =============================================================================
// Trajectories
// =============================================================================

TrajectoryProfile max_dynamics_profile(const PlatformSpec& p, Pattern pattern) {
    return {p.v_max_mps, p.omega_max_rps, pattern};
}

RigidState generate_state(const TrajectoryProfile& profile, double t_s) {
    const double v = profile.speed_mps;
    const double w = profile.turn_rate_rps;
    RigidState state;
    state.velocity_body = Vec3(v, 0, 0);
    state.angular_velocity_body = Vec3(0, 0, w);
    const double yaw = w * t_s;
    state.attitude = euler_to_rotation(EulerAngles{0, 0, yaw});
    if (w == 0.0) {
        state.position = Vec3(v * t_s, 0, 0);
    } else {
        state.position = (v / w) * Vec3(std::sin(yaw), 1.0 - std::cos(yaw), 0);
    }
    return state;
}

// =============================================================================
// RNG
// =============================================================================

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t avalanche(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return avalanche(state_);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double SplitMix64::gaussian() {
    const double u1 = 1.0 - uniform01(); // (0, 1], keeps the log finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

SplitMix64 derive_stream(std::uint64_t root_seed, std::uint64_t a,
                         std::uint64_t b) {
    std::uint64_t s = avalanche(root_seed + kGolden);
    s = avalanche(s ^ avalanche(a + 1));
    s = avalanche(s ^ avalanche(b + 1));
    return SplitMix64(s);
}

// =============================================================================
// Georeferencing scenario
// =============================================================================

namespace {

void check_payload_fits(const Payload& payload, const PlatformSpec& platform) {
    if (payload.max_lever_norm() > platform.baseline_m + 1e-12) {
        throw std::invalid_argument(
            "scenario: payload lever arm exceeds the platform baseline");
    }
}

// Abeam direction whose sync-induced rotation error aligns with the vehicle
// velocity: for body rate (0,0,w), w x (0, -sign(w) d, 0) points along +x.
double abeam_sign(double turn_rate_rps) {
    return turn_rate_rps >= 0.0 ? -1.0 : 1.0;
}

std::vector<ErrorSource> georef_sources(const Payload& p) {
    const Vec3& rpy = p.attitude.sigma_rpy_rad;
    return {
        {"mu_gnss", true, 0},
        {"mu_ins", true, 0},
        {"gnss_x", false, p.position.sigma_p_m},
        {"gnss_y", false, p.position.sigma_p_m},
        {"gnss_z", false, p.position.sigma_p_m},
        {"ins_roll", false, rpy.x()},
        {"ins_pitch", false, rpy.y()},
        {"ins_yaw", false, rpy.z()},
        {"rb_range", false, p.range_bearing.sigma_r_m},
        {"rb_azimuth", false, p.range_bearing.sigma_az_rad},
        {"rb_elevation", false, p.range_bearing.sigma_el_rad},
    };
}

} // namespace

GeorefScenario::GeorefScenario(PlatformSpec platform, Payload payload,
                               Pattern pattern, const Mat3& r_en)
    : platform_(std::move(platform)), payload_(std::move(payload)),
      r_en_(r_en) {
    check_payload_fits(payload_, platform_);
    profile_ = max_dynamics_profile(platform_, pattern);
    if (pattern == Pattern::Straight) {
        profile_.turn_rate_rps = 0.0;
    }
    sources_ = georef_sources(payload_);
    if (pattern != Pattern::AdversarialAligned) {
        // World-fixed object, abeam of the initial pose at the budget range.
        const RigidState s0 = generate_state(profile_, 0.0);
        const Vec3 rb_world =
            s0.position + r_en_ * s0.attitude * payload_.range_bearing_lever;
        fixed_object_ =
            rb_world + r_en_ * s0.attitude *
                           Vec3(0, abeam_sign(profile_.turn_rate_rps) *
                                       platform_.distance_m,
                                0);
    }
}

std::string GeorefScenario::name() const {
    return "georef/" + platform_.name;
}

ErrorBudget GeorefScenario::budget() const {
    return georef_budget(platform_, payload_);
}

const std::vector<ErrorSource>& GeorefScenario::sources() const {
    return sources_;
}

double GeorefScenario::period_s() const {
    return profile_.turn_rate_rps != 0.0
               ? 2.0 * std::numbers::pi / std::abs(profile_.turn_rate_rps)
               : 10.0;
}

Vec3 GeorefScenario::object_world(const RigidState& state) const {
    if (profile_.pattern != Pattern::AdversarialAligned) {
        return fixed_object_;
    }
    const Vec3 rb_world =
        state.position + r_en_ * state.attitude * payload_.range_bearing_lever;
    return rb_world + r_en_ * state.attitude *
                          Vec3(0, abeam_sign(profile_.turn_rate_rps) *
                                      platform_.distance_m,
                               0);
}

double GeorefScenario::evaluate(double t_s,
                                std::span<const double> values) const {
    const RigidState state = generate_state(profile_, t_s);
    const Vec3 object = object_world(state);
    const Mat3 mount = Mat3::Identity();

    const Vec3 gnss_meas =
        measure_position(state, payload_.position_lever, values[0],
                         Vec3(values[2], values[3], values[4]), r_en_);
    const Mat3 att_meas = measure_attitude(
        state, values[1], Vec3(values[5], values[6], values[7]));
    const Vec3 rb_world =
        state.position + r_en_ * state.attitude * payload_.range_bearing_lever;
    const Vec3 true_vector =
        state.attitude.transpose() * r_en_.transpose() * (object - rb_world);
    const BearingRange rb_meas = measure_range_bearing(
        true_vector, mount, {values[8], values[9], values[10]});

    const Vec3 estimate = georeference(
        gnss_meas, att_meas, rb_meas,
        payload_.range_bearing_lever - payload_.position_lever, mount, r_en_);
    return (estimate - object).norm();
}

// =============================================================================
// Survey scenario
// =============================================================================

namespace {

std::vector<ErrorSource> survey_sources(const SurveySystem& sys) {
    const Vec3& sv_rpy = sys.sv_payload.attitude.sigma_rpy_rad;
    const Vec3& auv_rpy = sys.auv_payload.attitude.sigma_rpy_rad;
    return {
        {"mu_gnss", true, 0},
        {"mu_ins_sv", true, 0},
        {"mu_auvpos", true, 0},
        {"mu_ins_auv", true, 0},
        {"gnss_x", false, sys.sv_payload.position.sigma_p_m},
        {"gnss_y", false, sys.sv_payload.position.sigma_p_m},
        {"gnss_z", false, sys.sv_payload.position.sigma_p_m},
        {"ins_sv_roll", false, sv_rpy.x()},
        {"ins_sv_pitch", false, sv_rpy.y()},
        {"ins_sv_yaw", false, sv_rpy.z()},
        {"usbl_range", false, sys.sv_payload.range_bearing.sigma_r_m},
        {"usbl_azimuth", false, sys.sv_payload.range_bearing.sigma_az_rad},
        {"usbl_elevation", false, sys.sv_payload.range_bearing.sigma_el_rad},
        {"ins_auv_roll", false, auv_rpy.x()},
        {"ins_auv_pitch", false, auv_rpy.y()},
        {"ins_auv_yaw", false, auv_rpy.z()},
        {"mbe_range", false, sys.auv_payload.range_bearing.sigma_r_m},
        {"mbe_azimuth", false, sys.auv_payload.range_bearing.sigma_az_rad},
        {"mbe_elevation", false, sys.auv_payload.range_bearing.sigma_el_rad},
    };
}

} // namespace

SurveyScenario::SurveyScenario(SurveySystem system, Pattern pattern,
                               const Mat3& r_en)
    : system_(std::move(system)), r_en_(r_en) {
    check_payload_fits(system_.sv_payload, system_.sv);
    check_payload_fits(system_.auv_payload, system_.auv);
    sv_profile_ = max_dynamics_profile(system_.sv, pattern);
    auv_profile_ = max_dynamics_profile(system_.auv, pattern);
    if (pattern == Pattern::Straight) {
        sv_profile_.turn_rate_rps = 0.0;
        auv_profile_.turn_rate_rps = 0.0;
    }
    sources_ = survey_sources(system_);
}

std::string SurveyScenario::name() const {
    return "survey/" + system_.name;
}

ErrorBudget SurveyScenario::budget() const { return survey_budget(system_); }

const std::vector<ErrorSource>& SurveyScenario::sources() const {
    return sources_;
}

double SurveyScenario::period_s() const {
    return sv_profile_.turn_rate_rps != 0.0
               ? 2.0 * std::numbers::pi / std::abs(sv_profile_.turn_rate_rps)
               : 10.0;
}

double SurveyScenario::evaluate(double t_s,
                                std::span<const double> values) const {
    const RigidState sv = generate_state(sv_profile_, t_s);

    // Sample the AUV maneuver at the phase where its heading matches the
    // vessel's, so that all four sync-error directions can align. This is the
    // worst case the budget describes.
    const double sv_yaw = sv_profile_.turn_rate_rps * t_s;
    const double auv_t = auv_profile_.turn_rate_rps != 0.0
                             ? sv_yaw / auv_profile_.turn_rate_rps
                             : t_s;
    RigidState auv = generate_state(auv_profile_, auv_t);

    const Vec3 receiver_world =
        sv.position + r_en_ * sv.attitude * system_.sv_payload.range_bearing_lever;
    const Vec3 transponder_world =
        receiver_world +
        r_en_ * sv.attitude *
            Vec3(0, abeam_sign(sv_profile_.turn_rate_rps) * system_.d_sv_m, 0);
    auv.position =
        transponder_world - r_en_ * auv.attitude * system_.auv_transponder_lever;

    const Vec3 mbe_world =
        auv.position +
        r_en_ * auv.attitude * system_.auv_payload.range_bearing_lever;
    const Vec3 footprint =
        mbe_world +
        r_en_ * auv.attitude *
            Vec3(0, abeam_sign(auv_profile_.turn_rate_rps) * system_.d_auv_m, 0);

    const Mat3 mount = Mat3::Identity();
    const Vec3 gnss_meas =
        measure_position(sv, system_.sv_payload.position_lever, values[0],
                         Vec3(values[4], values[5], values[6]), r_en_);
    const Mat3 ins_sv_meas = measure_attitude(
        sv, values[1], Vec3(values[7], values[8], values[9]));
    const Vec3 usbl_meas = measure_usbl(
        sv, transponder_world, system_.sv_payload.range_bearing_lever, mount,
        {values[10], values[11], values[12]}, r_en_);
    const Vec3 auvpos_meas = virtual_auv_position(
        gnss_meas, ins_sv_meas, usbl_meas,
        system_.sv_payload.range_bearing_lever - system_.sv_payload.position_lever,
        auv, system_.auv_transponder_lever, values[2], r_en_);
    const Mat3 ins_auv_meas = measure_attitude(
        auv, values[3], Vec3(values[13], values[14], values[15]));
    const Vec3 true_mbe_vector =
        auv.attitude.transpose() * r_en_.transpose() * (footprint - mbe_world);
    const BearingRange mbe_meas = measure_range_bearing(
        true_mbe_vector, mount, {values[16], values[17], values[18]});

    const Vec3 estimate = survey_georeference(
        auvpos_meas, ins_auv_meas, mbe_meas,
        system_.auv_payload.range_bearing_lever - system_.auv_transponder_lever,
        mount, r_en_);
    return (estimate - footprint).norm();
}

// =============================================================================
// Runner
// =============================================================================

SyncOffsets draw_offsets(const Scenario& scenario, double tau_s, NoiseMode mode,
                         SplitMix64& rng) {
    if (!(tau_s >= 0.0)) {
        throw std::domain_error("draw_offsets: tau must be >= 0");
    }
    SyncOffsets offsets;
    for (const auto& source : scenario.sources()) {
        if (!source.is_sync_offset) {
            continue;
        }
        offsets.mu_s[source.name] = mode == NoiseMode::Stochastic
                                        ? rng.uniform(-tau_s, tau_s)
                                        : tau_s;
    }
    return offsets;
}

double adversarial_worst_case(const Scenario& scenario, double t_s,
                              double tau_s) {
    const auto& sources = scenario.sources();
    std::vector<double> values(sources.size(), 0.0);
    for (std::size_t k = 0; k < sources.size(); ++k) {
        const double bound =
            sources[k].is_sync_offset ? tau_s : sources[k].sigma;
        if (bound == 0.0) {
            continue;
        }
        values[k] = bound;
        const double err_plus = scenario.evaluate(t_s, values);
        values[k] = -bound;
        const double err_minus = scenario.evaluate(t_s, values);
        values[k] = err_plus >= err_minus ? bound : -bound;
    }
    return scenario.evaluate(t_s, values);
}

double brute_force_worst_case(const Scenario& scenario, double t_s,
                              double tau_s) {
    const auto& sources = scenario.sources();
    std::vector<std::size_t> active;
    std::vector<double> values(sources.size(), 0.0);
    for (std::size_t k = 0; k < sources.size(); ++k) {
        const double bound =
            sources[k].is_sync_offset ? tau_s : sources[k].sigma;
        if (bound != 0.0) {
            active.push_back(k);
        }
    }
    if (active.size() > 20) {
        throw std::invalid_argument(
            "brute_force_worst_case: too many active sources");
    }
    double worst = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << active.size()); ++mask) {
        for (std::size_t i = 0; i < active.size(); ++i) {
            const auto k = active[i];
            const double bound =
                sources[k].is_sync_offset ? tau_s : sources[k].sigma;
            values[k] = (mask >> i) & 1ULL ? bound : -bound;
        }
        worst = std::max(worst, scenario.evaluate(t_s, values));
    }
    return worst;
}

namespace {

void validate(const RunConfig& config) {
    if (config.tau_grid_s.empty() ||
        !std::is_sorted(config.tau_grid_s.begin(), config.tau_grid_s.end())) {
        throw std::invalid_argument("run: tau grid must be sorted and non-empty");
    }
    if (config.tau_grid_s.front() < 0.0) {
        throw std::invalid_argument("run: tau must be >= 0");
    }
    if (config.trials_per_tau < 1 || config.threads < 1) {
        throw std::invalid_argument("run: trials and threads must be >= 1");
    }
}

RunRow run_one_tau(const Scenario& scenario, const RunConfig& config,
                   std::size_t tau_index) {
    const double tau = config.tau_grid_s[tau_index];
    const double period = scenario.period_s();
    const auto& sources = scenario.sources();
    double worst = 0.0;
    std::vector<double> values(sources.size(), 0.0);
    for (int trial = 0; trial < config.trials_per_tau; ++trial) {
        const double t = period * trial / config.trials_per_tau;
        double error = 0.0;
        if (config.mode == NoiseMode::BoundedAdversarial) {
            error = adversarial_worst_case(scenario, t, tau);
        } else {
            SplitMix64 rng = derive_stream(config.seed, tau_index,
                                           static_cast<std::uint64_t>(trial));
            for (std::size_t k = 0; k < sources.size(); ++k) {
                values[k] = sources[k].is_sync_offset
                                ? rng.uniform(-tau, tau)
                                : sources[k].sigma * rng.gaussian();
            }
            error = scenario.evaluate(t, values);
        }
        worst = std::max(worst, error);
    }
    RunRow row;
    row.tau_s = tau;
    row.worst_case_error_m = worst;
    row.prediction_m = worst_case_error(scenario.budget(), tau);
    // Degenerate all-zero budgets agree with a zero worst case by definition.
    row.ratio = row.prediction_m > 0.0 ? worst / row.prediction_m
                                       : (worst <= 1e-12 ? 1.0 : kInfinity);
    return row;
}

} // namespace

RunResult run(const Scenario& scenario, const RunConfig& config) {
    validate(config);
    RunResult result;
    result.rows.resize(config.tau_grid_s.size());
    result.meta.scenario = scenario.name();
    result.meta.mode = config.mode == NoiseMode::BoundedAdversarial
                           ? "adversarial"
                           : "stochastic";
    result.meta.rng = kRngName;
    result.meta.seed = config.seed;
    result.meta.trials_per_tau = config.trials_per_tau;
    result.meta.threads = config.threads;

    const auto n = config.tau_grid_s.size();
    const int threads = std::min<int>(config.threads, static_cast<int>(n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            result.rows[i] = run_one_tau(scenario, config, i);
        }
        return result;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(threads)) {
                result.rows[i] = run_one_tau(scenario, config, i);
            }
        });
    }
    for (auto& worker : pool) {
        worker.join();
    }
    return result;
}

std::vector<SweepEntry> sweep_sensors(const PlatformSpec& platform,
                                      const std::vector<Payload>& payloads,
                                      Pattern pattern, const RunConfig& config) {
    if (payloads.empty()) {
        throw std::invalid_argument("sweep_sensors: empty payload list");
    }
    std::vector<SweepEntry> out;
    out.reserve(payloads.size());
    for (const auto& payload : payloads) {
        GeorefScenario scenario(platform, payload, pattern);
        SweepEntry entry;
        entry.label = payload.position.name + "+" + payload.attitude.name + "+" +
                      payload.range_bearing.name;
        entry.curve =
            sample_curve(scenario.budget(), config.tau_grid_s.front(),
                         config.tau_grid_s.back(),
                         static_cast<int>(config.tau_grid_s.size()));
        entry.result = run(scenario, config);
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace syncline
