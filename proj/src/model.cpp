#include <syncline/model.hpp>

#include <cmath>
#include <stdexcept>

namespace syncline {

namespace {

double full_sync_rate(const PlatformSpec& p) {
    return p.v_max_mps + p.distance_m * p.omega_max_rps;
}

// Zero denominators mean "never sync-bound" and report as +infinity so
// curves and tables still render for static platforms.
double ratio_or_infinity(double numerator, double denominator) {
    return denominator > 0.0 ? numerator / denominator : kInfinity;
}

} // namespace

double sync_error_bound(const PlatformSpec& p, double tau_s) {
    if (!(tau_s >= 0.0)) {
        throw std::domain_error("sync_error_bound: tau must be >= 0");
    }
    return full_sync_rate(p) * tau_s;
}

double sensor_error_bound(const Payload& payload, double distance_m) {
    if (!(distance_m > 0.0)) {
        throw std::domain_error("sensor_error_bound: distance must be > 0");
    }
    return effective_position_sigma(payload.position) +
           payload.range_bearing.sigma_r_m +
           (effective_attitude_sigma(payload.attitude) +
            effective_bearing_sigma(payload.range_bearing)) *
               distance_m;
}

double worst_case_error(const ErrorBudget& budget, double tau_s) {
    if (!(tau_s >= 0.0)) {
        throw std::domain_error("worst_case_error: tau must be >= 0");
    }
    return budget.sync_rate_mps * tau_s + budget.sensor_floor_m;
}

double critical_sync_error(const ErrorBudget& budget) {
    return ratio_or_infinity(budget.sensor_floor_m, budget.sync_rate_mps);
}

ErrorBudget georef_budget(const PlatformSpec& p, const Payload& payload) {
    return {full_sync_rate(p), sensor_error_bound(payload, p.distance_m)};
}

double per_sensor_critical_sync(const SensorSpec& s, const PlatformSpec& p) {
    switch (s.kind) {
    case SensorKind::Position:
        // A position sensor's sync error trades against translation only.
        return ratio_or_infinity(effective_position_sigma(s), p.v_max_mps);
    case SensorKind::Attitude:
        return ratio_or_infinity(p.distance_m * effective_attitude_sigma(s),
                                 full_sync_rate(p));
    case SensorKind::RangeBearing:
        return ratio_or_infinity(
            s.sigma_r_m + p.distance_m * effective_bearing_sigma(s),
            full_sync_rate(p));
    }
    throw std::logic_error("per_sensor_critical_sync: bad kind");
}

double survey_sync_rate(const SurveySystem& sys) {
    return sys.sv.v_max_mps + sys.auv.v_max_mps +
           sys.d_sv_m * sys.sv.omega_max_rps +
           sys.d_auv_m * sys.auv.omega_max_rps;
}

double survey_sensor_error_bound(const SurveySystem& sys) {
    auto chain = [](const Payload& payload, double d) {
        return effective_position_sigma(payload.position) +
               payload.range_bearing.sigma_r_m +
               (effective_attitude_sigma(payload.attitude) +
                effective_bearing_sigma(payload.range_bearing)) *
                   d;
    };
    return chain(sys.sv_payload, sys.d_sv_m) +
           chain(sys.auv_payload, sys.d_auv_m);
}

ErrorBudget survey_budget(const SurveySystem& sys) {
    return {survey_sync_rate(sys), survey_sensor_error_bound(sys)};
}

double per_sensor_critical_sync_survey(const SensorSpec& s, SurveyRole role,
                                       const SurveySystem& sys) {
    PlatformSpec vehicle =
        role == SurveyRole::SurfaceVessel ? sys.sv : sys.auv;
    vehicle.distance_m = role == SurveyRole::SurfaceVessel ? sys.d_sv_m
                                                           : sys.d_auv_m;
    return per_sensor_critical_sync(s, vehicle);
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw std::domain_error("log_spaced: require 0 < lo < hi and n >= 2");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    const double step = (std::log10(hi) - std::log10(lo)) / (n - 1);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = std::pow(10.0, std::log10(lo) + step * i);
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

SynclineCurve sample_curve(const ErrorBudget& budget, double tau_min_s,
                           double tau_max_s, int n) {
    SynclineCurve curve;
    curve.tau_crit_s = critical_sync_error(budget);
    curve.roof_per_m = ratio_or_infinity(1.0, budget.sensor_floor_m);
    for (double tau : log_spaced(tau_min_s, tau_max_s, n)) {
        CurveSample sample;
        sample.tau_s = tau;
        sample.delta_m = worst_case_error(budget, tau);
        sample.sync_accuracy_per_s = 1.0 / tau;
        sample.est_accuracy_per_m = ratio_or_infinity(1.0, sample.delta_m);
        curve.samples.push_back(sample);
    }
    return curve;
}

} // namespace syncline
