// Trajectory generation and the worst-case experiment runner that checks the
// analytic budget against the simulated fusion chains.
#pragma once

#include <syncline/catalog.hpp>
#include <syncline/measurements.hpp>
#include <syncline/model.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace syncline {

// =============================================================================
// Trajectories
// =============================================================================

/// How the measured object is placed relative to the maneuvering vehicle.
/// `Circular` and `Straight` keep a world-fixed object; `AdversarialAligned`
/// re-places the object abeam at exactly the budget range for every sampled
/// state, which realizes the worst-case geometry of the error budget.
enum class Pattern { Circular, Straight, AdversarialAligned };

/// Commanded maneuver, bounded by the platform envelope.
struct TrajectoryProfile {
    double speed_mps{0};
    double turn_rate_rps{0};
    Pattern pattern{Pattern::AdversarialAligned};
};

TrajectoryProfile max_dynamics_profile(const PlatformSpec& p, Pattern pattern);

/// Deterministic state on the commanded maneuver: a circle of radius
/// speed/turn_rate through the origin (a straight line when turn_rate = 0),
/// yawing at the turn rate, body velocity (v, 0, 0) and body rate (0, 0, w).
RigidState generate_state(const TrajectoryProfile& profile, double t_s);

// =============================================================================
// RNG: splittable, schedule-independent streams
// =============================================================================

/// splitmix64 sequence generator; uniform and Box-Muller Gaussian draws.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform01(); // [0, 1)
    double uniform(double lo, double hi);
    double gaussian(); // standard normal, one Box-Muller value per call
private:
    std::uint64_t state_;
};

/// Independent stream for (tau index, trial index), so parallel schedules
/// cannot change the draws.
SplitMix64 derive_stream(std::uint64_t root_seed, std::uint64_t a,
                         std::uint64_t b);

inline constexpr const char* kRngName = "splitmix64/box-muller";

// =============================================================================
// Worst-case scenarios
// =============================================================================

/// One scalar error input of a fusion chain. Sync offsets are bounded by the
/// run's tau; noise sources by their sigma.
struct ErrorSource {
    std::string name;
    bool is_sync_offset{false};
    double sigma{0};
};

/// A fused-estimate error as a function of trial time and per-source values.
/// Implementations are pure: evaluate() has no hidden state, so trials can
/// run in parallel.
class Scenario {
public:
    virtual ~Scenario() = default;
    virtual std::string name() const = 0;
    virtual ErrorBudget budget() const = 0;
    virtual const std::vector<ErrorSource>& sources() const = 0;
    /// Maneuver period over which trial times are spread.
    virtual double period_s() const = 0;
    /// Norm of (estimate - truth) with the given per-source scalar values.
    virtual double evaluate(double t_s, std::span<const double> values) const = 0;
};

/// Example 1: GNSS + INS + range/bearing direct georeferencing.
class GeorefScenario final : public Scenario {
public:
    GeorefScenario(PlatformSpec platform, Payload payload, Pattern pattern,
                   const Mat3& r_en = Mat3::Identity());
    std::string name() const override;
    ErrorBudget budget() const override;
    const std::vector<ErrorSource>& sources() const override;
    double period_s() const override;
    double evaluate(double t_s, std::span<const double> values) const override;

    const PlatformSpec& platform() const { return platform_; }
    const Payload& payload() const { return payload_; }

private:
    Vec3 object_world(const RigidState& state) const;

    PlatformSpec platform_;
    Payload payload_;
    TrajectoryProfile profile_;
    Mat3 r_en_;
    Vec3 fixed_object_{Vec3::Zero()};
    std::vector<ErrorSource> sources_;
};

/// Example 2: surface vessel + AUV subsea survey (GNSS, vessel INS, USBL,
/// AUV INS, MBE; the MBE clock is the sync reference). The AUV holds
/// formation relative to the vessel: transponder abeam of the receiver at
/// d_sv, footprint abeam of the MBE at d_auv, headings phase-matched so the
/// sync-error directions of both vehicles can align.
class SurveyScenario final : public Scenario {
public:
    SurveyScenario(SurveySystem system, Pattern pattern,
                   const Mat3& r_en = Mat3::Identity());
    std::string name() const override;
    ErrorBudget budget() const override;
    const std::vector<ErrorSource>& sources() const override;
    double period_s() const override;
    double evaluate(double t_s, std::span<const double> values) const override;

    const SurveySystem& system() const { return system_; }

private:
    SurveySystem system_;
    TrajectoryProfile sv_profile_;
    TrajectoryProfile auv_profile_;
    Mat3 r_en_;
    std::vector<ErrorSource> sources_;
};

// =============================================================================
// Offsets and runs
// =============================================================================

/// Per-sensor sync offsets, seconds, relative to the reference range/bearing
/// clock (whose offset is identically zero and not listed).
struct SyncOffsets {
    std::map<std::string, double> mu_s;
};

enum class NoiseMode { Stochastic, BoundedAdversarial };

/// Stochastic mode draws each offset uniformly from [-tau, tau]; bounded
/// adversarial mode pins every magnitude to tau (signs are resolved by the
/// per-source search inside the runner).
SyncOffsets draw_offsets(const Scenario& scenario, double tau_s, NoiseMode mode,
                         SplitMix64& rng);

struct RunConfig {
    std::vector<double> tau_grid_s; // sorted ascending
    int trials_per_tau{256};
    NoiseMode mode{NoiseMode::BoundedAdversarial};
    std::uint64_t seed{0};
    int threads{1};
};

struct RunRow {
    double tau_s{0};
    double worst_case_error_m{0};
    double prediction_m{0};
    double ratio{0};
};

struct RunMetadata {
    std::string scenario;
    std::string mode;
    std::string rng;
    std::uint64_t seed{0};
    int trials_per_tau{0};
    int threads{1};
};

struct RunResult {
    std::vector<RunRow> rows;
    RunMetadata meta;
};

/// Runs the worst-case experiment: for every tau, the maximum fusion error
/// over the trials, next to the analytic prediction. Deterministic for a
/// fixed seed and independent of the thread count.
RunResult run(const Scenario& scenario, const RunConfig& config);

/// Greedy bounded-adversarial worst case at one trial time: every source is
/// set to +/- its bound, signs chosen source-by-source to maximize the error.
double adversarial_worst_case(const Scenario& scenario, double t_s,
                              double tau_s);

/// Exhaustive sign search over all active sources (2^k evaluations); only
/// usable for small k. Reference for validating the greedy search.
double brute_force_worst_case(const Scenario& scenario, double t_s,
                              double tau_s);

struct SweepEntry {
    std::string label;
    SynclineCurve curve;
    RunResult result;
};

/// Per-payload curves and runs on a shared tau grid.
std::vector<SweepEntry> sweep_sensors(const PlatformSpec& platform,
                                      const std::vector<Payload>& payloads,
                                      Pattern pattern, const RunConfig& config);

} // namespace syncline
