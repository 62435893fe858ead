#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <syncline/report.hpp>
#include <syncline/simulate.hpp>

#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace syncline;

namespace {

const Catalog& catalog() {
    static const Catalog c = Catalog::builtin();
    return c;
}

Payload triple(const char* pos, const char* att, const char* rb,
               const PlatformSpec& platform) {
    Payload p;
    p.position = *catalog().find_sensor(pos);
    p.attitude = *catalog().find_sensor(att);
    p.range_bearing = *catalog().find_sensor(rb);
    p.position_lever = Vec3(0, 0, -0.3 * platform.baseline_m);
    p.range_bearing_lever = Vec3(0, 0, 0.1 * platform.baseline_m);
    return p;
}

} // namespace

TEST_CASE("generate_state") {
    RigidState straight = generate_state({5.0, 0.0, Pattern::Straight}, 2.0);
    CHECK((straight.position - Vec3(10, 0, 0)).norm() < 1e-12);
    CHECK((straight.attitude - Mat3::Identity()).norm() < 1e-12);

    RigidState spun = generate_state({0.0, 1.0, Pattern::Circular},
                                     std::numbers::pi);
    CHECK(spun.position.norm() < 1e-12);
    CHECK(std::abs(rotation_to_euler(spun.attitude).yaw) ==
          doctest::Approx(std::numbers::pi).epsilon(1e-12));

    // velocity of the generated positions matches R * v_b
    SplitMix64 rng(41);
    for (int i = 0; i < 200; ++i) {
        TrajectoryProfile profile{rng.uniform(0.1, 20), rng.uniform(-2, 2),
                                  Pattern::Circular};
        const double t = rng.uniform(0, 20);
        const double h = 1e-6;
        const Vec3 fd = (generate_state(profile, t + h).position -
                         generate_state(profile, t - h).position) /
                        (2 * h);
        const RigidState s = generate_state(profile, t);
        const Vec3 analytic = s.attitude * s.velocity_body;
        CHECK((fd - analytic).norm() / std::max(1.0, analytic.norm()) < 1e-5);
    }
}

TEST_CASE("draw_offsets") {
    const auto& fw = *catalog().find_platform("UAV Fixed Wing");
    const GeorefScenario scenario(fw, triple("F9P RTK", "MRU5", "VUX1-UAV", fw),
                                  Pattern::AdversarialAligned);
    SplitMix64 rng(42);

    const SyncOffsets zero =
        draw_offsets(scenario, 0.0, NoiseMode::Stochastic, rng);
    REQUIRE(zero.mu_s.size() == 2); // gnss + ins; the reference clock is not listed
    for (const auto& [name, mu] : zero.mu_s) {
        CHECK(mu == 0.0);
    }

    const SyncOffsets pinned =
        draw_offsets(scenario, 1e-3, NoiseMode::BoundedAdversarial, rng);
    for (const auto& [name, mu] : pinned.mu_s) {
        CHECK(std::abs(mu) == 1e-3);
    }

    double max_seen = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const SyncOffsets draw =
            draw_offsets(scenario, 2e-3, NoiseMode::Stochastic, rng);
        for (const auto& [name, mu] : draw.mu_s) {
            CHECK(std::abs(mu) <= 2e-3);
            max_seen = std::max(max_seen, std::abs(mu));
        }
    }
    CHECK(max_seen > 1.9e-3); // the draws actually fill the interval
}

TEST_CASE("zero noise and zero offsets leave no residual") {
    const auto& fw = *catalog().find_platform("UAV Fixed Wing");
    Payload silent = triple("F9P RTK", "MRU5", "VUX1-UAV", fw);
    silent.position.sigma_p_m = 0;
    silent.attitude.sigma_rpy_rad = Vec3::Zero();
    silent.range_bearing.sigma_r_m = 0;
    silent.range_bearing.sigma_az_rad = 0;
    silent.range_bearing.sigma_el_rad = 0;

    const GeorefScenario scenario(fw, silent, Pattern::AdversarialAligned);
    RunConfig config;
    config.tau_grid_s = {0.0};
    config.trials_per_tau = 16;
    const RunResult result = run(scenario, config);
    CHECK(result.rows[0].worst_case_error_m < 1e-9);
}

TEST_CASE("adversarial georeferencing stays inside the budget band") {
    const auto& fw = *catalog().find_platform("UAV Fixed Wing");
    const GeorefScenario scenario(fw, triple("F9P RTK", "MRU5", "VUX1-UAV", fw),
                                  Pattern::AdversarialAligned);
    RunConfig config;
    config.tau_grid_s = log_spaced(1e-6, 1e-1, 11);
    config.trials_per_tau = 8;
    const RunResult result = run(scenario, config);
    for (const auto& row : result.rows) {
        CHECK(row.ratio >= 0.7);
        CHECK(row.ratio <= 1.02);
    }
    // worst case grows monotonically with tau in adversarial mode
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        CHECK(result.rows[i].worst_case_error_m >=
              result.rows[i - 1].worst_case_error_m);
    }
}

TEST_CASE("adversarial survey stays inside the budget band") {
    SurveySystem sys = *catalog().find_survey_system("Small SV survey");
    sys.sv_payload.range_bearing = *catalog().find_sensor("HIPAP502");
    const SurveyScenario scenario(sys, Pattern::AdversarialAligned);
    RunConfig config;
    config.tau_grid_s = log_spaced(1e-6, 1e-1, 9);
    config.trials_per_tau = 4;
    const RunResult result = run(scenario, config);
    for (const auto& row : result.rows) {
        CHECK(row.ratio >= 0.7);
        CHECK(row.ratio <= 1.02);
    }
}

TEST_CASE("stochastic runs are deterministic for a fixed seed") {
    const auto& car = *catalog().find_platform("Car");
    const GeorefScenario scenario(car, triple("F9P RTK", "SBG Ellipse",
                                              "Alpha Prime", car),
                                  Pattern::Circular);
    RunConfig config;
    config.tau_grid_s = log_spaced(1e-5, 1e-2, 7);
    config.trials_per_tau = 32;
    config.mode = NoiseMode::Stochastic;
    config.seed = 0xC0FFEE;

    const RunResult a = run(scenario, config);
    const RunResult b = run(scenario, config);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].worst_case_error_m == b.rows[i].worst_case_error_m);
        CHECK(a.rows[i].ratio == b.rows[i].ratio);
    }
    CHECK(run_csv(a) == run_csv(b));

    RunConfig reseeded = config;
    reseeded.seed = 7;
    const RunResult c = run(scenario, reseeded);
    bool any_different = false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        any_different |= a.rows[i].worst_case_error_m != c.rows[i].worst_case_error_m;
    }
    CHECK(any_different);
}

TEST_CASE("parallel and serial execution agree bitwise") {
    const auto& usv = *catalog().find_platform("USV");
    const GeorefScenario scenario(usv, triple("uBlox F9P PVT", "SBG Ellipse",
                                              "HDL32E", usv),
                                  Pattern::AdversarialAligned);
    RunConfig serial;
    serial.tau_grid_s = log_spaced(1e-6, 1e-1, 13);
    serial.trials_per_tau = 4;
    RunConfig parallel = serial;
    parallel.threads = 4;

    const RunResult a = run(scenario, serial);
    const RunResult b = run(scenario, parallel);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].worst_case_error_m == b.rows[i].worst_case_error_m);
        CHECK(a.rows[i].prediction_m == b.rows[i].prediction_m);
    }

    // stochastic draws are schedule-independent too
    serial.mode = parallel.mode = NoiseMode::Stochastic;
    serial.seed = parallel.seed = 99;
    const RunResult c = run(scenario, serial);
    const RunResult d = run(scenario, parallel);
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
        CHECK(c.rows[i].worst_case_error_m == d.rows[i].worst_case_error_m);
    }
}

TEST_CASE("greedy sign search matches brute force on small source sets") {
    const auto& car = *catalog().find_platform("Car");
    // position noise + the two sync offsets: five active sources
    Payload sparse = triple("uBlox F9P PVT", "MRU5", "VUX1-UAV", car);
    sparse.attitude.sigma_rpy_rad = Vec3::Zero();
    sparse.range_bearing.sigma_r_m = 0;
    sparse.range_bearing.sigma_az_rad = 0;
    sparse.range_bearing.sigma_el_rad = 0;

    const GeorefScenario scenario(car, sparse, Pattern::AdversarialAligned);
    for (const double tau : {0.0, 1e-4, 1e-2}) {
        for (const double t : {0.0, 3.0}) {
            const double greedy = adversarial_worst_case(scenario, t, tau);
            const double exhaustive = brute_force_worst_case(scenario, t, tau);
            CHECK(greedy <= exhaustive * (1.0 + 1e-12));
            CHECK(greedy >= 0.9 * exhaustive);
        }
    }
}

TEST_CASE("run validates its configuration") {
    const auto& car = *catalog().find_platform("Car");
    const GeorefScenario scenario(car, triple("F9P RTK", "MRU5", "VUX1-UAV", car),
                                  Pattern::AdversarialAligned);
    RunConfig bad;
    bad.tau_grid_s = {};
    CHECK_THROWS_AS(run(scenario, bad), std::invalid_argument);
    bad.tau_grid_s = {1e-3, 1e-4};
    CHECK_THROWS_AS(run(scenario, bad), std::invalid_argument);
    bad.tau_grid_s = {1e-4};
    bad.trials_per_tau = 0;
    CHECK_THROWS_AS(run(scenario, bad), std::invalid_argument);
}

TEST_CASE("payloads that violate the baseline are rejected") {
    const auto& fw = *catalog().find_platform("UAV Fixed Wing"); // b = 1 m
    Payload oversized = triple("F9P RTK", "MRU5", "VUX1-UAV", fw);
    oversized.position_lever = Vec3(0, 0, -5.0);
    CHECK_THROWS_AS(
        GeorefScenario(fw, oversized, Pattern::AdversarialAligned),
        std::invalid_argument);
}

TEST_CASE("sweep_sensors compares payloads on a shared grid") {
    const auto& fw = *catalog().find_platform("UAV Fixed Wing");
    const Payload cheap = triple("uBlox F9P PVT", "MRU5", "VUX1-UAV", fw);
    const Payload fancy = triple("uBlox F9P RTK", "MRU5", "VUX1-UAV", fw);

    RunConfig config;
    config.tau_grid_s = log_spaced(1e-6, 1e-2, 6);
    config.trials_per_tau = 2;
    const auto sweep = sweep_sensors(fw, {cheap, fancy},
                                     Pattern::AdversarialAligned, config);
    REQUIRE(sweep.size() == 2);

    // same dynamics => identical slopes; better GNSS => higher roof
    const double rate0 = georef_budget(fw, cheap).sync_rate_mps;
    const double rate1 = georef_budget(fw, fancy).sync_rate_mps;
    CHECK(rate0 == rate1);
    CHECK(sweep[1].curve.roof_per_m > sweep[0].curve.roof_per_m);

    // a single payload sweep degenerates to a plain run
    const auto single = sweep_sensors(fw, {cheap},
                                      Pattern::AdversarialAligned, config);
    const GeorefScenario scenario(fw, cheap, Pattern::AdversarialAligned);
    const RunResult direct = run(scenario, config);
    REQUIRE(single[0].result.rows.size() == direct.rows.size());
    for (std::size_t i = 0; i < direct.rows.size(); ++i) {
        CHECK(single[0].result.rows[i].worst_case_error_m ==
              direct.rows[i].worst_case_error_m);
    }

    CHECK_THROWS_AS(
        sweep_sensors(fw, {}, Pattern::AdversarialAligned, config),
        std::invalid_argument);
}

TEST_CASE("upgrading the survey GNSS barely moves the sensor floor") {
    const auto& large = *catalog().find_survey_system("Large SV survey");
    SurveySystem downgraded = large; // R12 RTK -> F9P RTK
    downgraded.sv_payload.position = *catalog().find_sensor("uBlox F9P RTK");
    const double floor_rtk = survey_sensor_error_bound(large);
    const double floor_f9p = survey_sensor_error_bound(downgraded);
    CHECK(std::abs(floor_f9p - floor_rtk) / floor_rtk < 0.02);
}
