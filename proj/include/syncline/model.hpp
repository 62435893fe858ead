// Worst-case error budget: sync-induced and sensor-induced bounds, the
// syncline curve, critical synchronization error and the two-vehicle survey
// extension.
#pragma once

#include <syncline/catalog.hpp>

#include <vector>

namespace syncline {

/// Worst-case budget of a fusion chain: the total error at sync error tau is
/// sync_rate_mps * tau + sensor_floor_m.
struct ErrorBudget {
    double sync_rate_mps{0};  // coefficient of tau
    double sensor_floor_m{0}; // the roof term
};

/// Worst-case sync-induced error (v_max + d * omega_max) * tau. Throws
/// std::domain_error for negative tau.
double sync_error_bound(const PlatformSpec& p, double tau_s);

/// Worst-case sensor-induced error of a payload observing at range d:
/// sqrt(3) sigma_p + sigma_r + (|sigma_rpy| + |sigma_bearing|) * d.
double sensor_error_bound(const Payload& payload, double distance_m);

/// Total worst-case estimation error at sync error tau.
double worst_case_error(const ErrorBudget& budget, double tau_s);

/// The tau where sync-induced and sensor-induced bounds are equal. A budget
/// with zero sync rate is never sync-bound; that is reported as +infinity.
double critical_sync_error(const ErrorBudget& budget);

ErrorBudget georef_budget(const PlatformSpec& p, const Payload& payload);

/// Per-sensor critical sync error. Position sensors trade only against the
/// platform speed; attitude and range-bearing sensors trade against the full
/// sync rate v_max + d * omega_max.
double per_sensor_critical_sync(const SensorSpec& s, const PlatformSpec& p);

// Two-vehicle survey chain.
double survey_sync_rate(const SurveySystem& sys);          // m/s
double survey_sensor_error_bound(const SurveySystem& sys); // meters
ErrorBudget survey_budget(const SurveySystem& sys);

enum class SurveyRole { SurfaceVessel, Auv };

/// Per-sensor critical sync error inside a survey system, using the dynamics
/// and observation range of the carrying vehicle.
double per_sensor_critical_sync_survey(const SensorSpec& s, SurveyRole role,
                                       const SurveySystem& sys);

struct CurveSample {
    double tau_s{0};
    double delta_m{0};
    double sync_accuracy_per_s{0}; // 1 / tau
    double est_accuracy_per_m{0};  // 1 / delta
};

/// Sampled syncline with its critical sync error and accuracy roof.
struct SynclineCurve {
    std::vector<CurveSample> samples;
    double tau_crit_s{0};
    double roof_per_m{0}; // 1 / sensor floor
};

/// Samples the budget on n log-spaced tau values in [tau_min, tau_max].
/// Requires 0 < tau_min < tau_max and n >= 2.
SynclineCurve sample_curve(const ErrorBudget& budget, double tau_min_s,
                           double tau_max_s, int n);

/// n log-spaced values over [lo, hi] (n >= 2, 0 < lo < hi).
std::vector<double> log_spaced(double lo, double hi, int n);

} // namespace syncline
