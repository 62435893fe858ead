// Command-line front end: catalog inspection, critical-sync tables, syncline
// curves and worst-case simulations.
//
// Exit codes: 0 success, 1 --check band violation, 2 usage/validation error.

#include <syncline/catalog.hpp>
#include <syncline/kinematics.hpp>
#include <syncline/model.hpp>
#include <syncline/report.hpp>
#include <syncline/simulate.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace syncline;
using nlohmann::ordered_json;

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write file: " + out_path);
    }
    out << text;
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        // trim
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first != std::string::npos) {
            out.push_back(item.substr(first, last - first + 1));
        }
    }
    return out;
}

const PlatformSpec& require_platform(const Catalog& catalog,
                                     const std::string& name) {
    const auto* p = catalog.find_platform(name);
    if (p == nullptr) {
        throw std::invalid_argument("unknown platform: " + name);
    }
    return *p;
}

const SensorSpec& require_sensor(const Catalog& catalog,
                                 const std::string& name) {
    const auto* s = catalog.find_sensor(name);
    if (s == nullptr) {
        throw std::invalid_argument("unknown sensor: " + name);
    }
    return *s;
}

const SurveySystem& require_survey_system(const Catalog& catalog,
                                          const std::string& name) {
    const auto* s = catalog.find_survey_system(name);
    if (s == nullptr) {
        throw std::invalid_argument("unknown survey system: " + name);
    }
    return *s;
}

// Builds a payload from "gnss,ins,range-bearing" sensor names with vertical
// default lever arms scaled by the platform baseline.
Payload payload_from_names(const Catalog& catalog, const PlatformSpec& platform,
                           const std::vector<std::string>& names) {
    if (names.size() != 3) {
        throw std::invalid_argument(
            "--payload needs three sensor names: position,attitude,range_bearing");
    }
    Payload p;
    p.position = require_sensor(catalog, names[0]);
    p.attitude = require_sensor(catalog, names[1]);
    p.range_bearing = require_sensor(catalog, names[2]);
    if (p.position.kind != SensorKind::Position ||
        p.attitude.kind != SensorKind::Attitude ||
        p.range_bearing.kind != SensorKind::RangeBearing) {
        throw std::invalid_argument(
            "--payload order must be position,attitude,range_bearing");
    }
    p.position_lever = Vec3(0, 0, -0.3 * platform.baseline_m);
    p.range_bearing_lever = Vec3(0, 0, 0.1 * platform.baseline_m);
    return p;
}

void zero_noise(Payload& p) {
    p.position.sigma_p_m = 0;
    p.attitude.sigma_rpy_rad = Vec3::Zero();
    p.range_bearing.sigma_r_m = 0;
    p.range_bearing.sigma_az_rad = 0;
    p.range_bearing.sigma_el_rad = 0;
}

// =============================================================================
// catalog
// =============================================================================

ordered_json platform_json(const PlatformSpec& p) {
    return {{"name", p.name},
            {"v_max_mps", p.v_max_mps},
            {"omega_max_dps", rad_to_deg(p.omega_max_rps)},
            {"d_m", p.distance_m},
            {"b_m", p.baseline_m}};
}

ordered_json sensor_json(const SensorSpec& s) {
    ordered_json j{{"name", s.name}};
    switch (s.kind) {
    case SensorKind::Position:
        j["kind"] = "position";
        j["sigma_p_m"] = s.sigma_p_m;
        break;
    case SensorKind::Attitude:
        j["kind"] = "attitude";
        j["sigma_rpy_deg"] = {rad_to_deg(s.sigma_rpy_rad.x()),
                              rad_to_deg(s.sigma_rpy_rad.y()),
                              rad_to_deg(s.sigma_rpy_rad.z())};
        break;
    case SensorKind::RangeBearing:
        j["kind"] = "range_bearing";
        j["sigma_r_m"] = s.sigma_r_m;
        j["sigma_az_deg"] = rad_to_deg(s.sigma_az_rad);
        j["sigma_el_deg"] = rad_to_deg(s.sigma_el_rad);
        break;
    }
    return j;
}

std::string describe(const PlatformSpec& p) {
    std::ostringstream out;
    out << p.name << ": v_max=" << format_double(p.v_max_mps)
        << " m/s, omega_max=" << format_double(rad_to_deg(p.omega_max_rps))
        << " deg/s, d=" << format_double(p.distance_m)
        << " m, b=" << format_double(p.baseline_m) << " m\n";
    return out.str();
}

std::string describe(const SensorSpec& s) {
    std::ostringstream out;
    out << s.name << ": ";
    switch (s.kind) {
    case SensorKind::Position:
        out << "position, sigma_p=" << format_double(s.sigma_p_m) << " m";
        break;
    case SensorKind::Attitude:
        out << "attitude, sigma_rpy=["
            << format_double(rad_to_deg(s.sigma_rpy_rad.x())) << ", "
            << format_double(rad_to_deg(s.sigma_rpy_rad.y())) << ", "
            << format_double(rad_to_deg(s.sigma_rpy_rad.z())) << "] deg";
        break;
    case SensorKind::RangeBearing:
        out << "range_bearing, sigma_r=" << format_double(s.sigma_r_m)
            << " m, sigma_az=" << format_double(rad_to_deg(s.sigma_az_rad))
            << " deg, sigma_el=" << format_double(rad_to_deg(s.sigma_el_rad))
            << " deg";
        break;
    }
    out << "\n";
    return out.str();
}

std::string describe(const SurveySystem& sys) {
    std::ostringstream out;
    out << sys.name << ": sv=" << sys.sv.name << " ["
        << sys.sv_payload.position.name << ", " << sys.sv_payload.attitude.name
        << ", " << sys.sv_payload.range_bearing.name
        << "], auv=" << sys.auv.name << " [" << sys.auv_payload.attitude.name
        << ", " << sys.auv_payload.range_bearing.name
        << "], d_sv=" << format_double(sys.d_sv_m)
        << " m, d_auv=" << format_double(sys.d_auv_m) << " m\n";
    return out.str();
}

struct CatalogOptions {
    bool platforms = false;
    bool sensors = false;
    bool systems = false;
    bool json = false;
    std::string show_name;
};

int cmd_catalog_list(const Catalog& catalog, const CatalogOptions& opt) {
    const bool all = !opt.platforms && !opt.sensors && !opt.systems;
    if (opt.json) {
        ordered_json doc;
        if (all || opt.platforms) {
            doc["platforms"] = ordered_json::array();
            for (const auto& p : catalog.platforms()) {
                doc["platforms"].push_back(platform_json(p));
            }
        }
        if (all || opt.sensors) {
            doc["sensors"] = ordered_json::array();
            for (const auto& s : catalog.sensors()) {
                doc["sensors"].push_back(sensor_json(s));
            }
        }
        if (all || opt.systems) {
            doc["survey_systems"] = ordered_json::array();
            for (const auto& sys : catalog.survey_systems()) {
                doc["survey_systems"].push_back(sys.name);
            }
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::ostringstream out;
    if (all || opt.platforms) {
        out << "Platforms:\n";
        for (const auto& p : catalog.platforms()) {
            out << "  " << describe(p);
        }
    }
    if (all || opt.sensors) {
        out << "Sensors:\n";
        for (const auto& s : catalog.sensors()) {
            out << "  " << describe(s);
        }
    }
    if (all || opt.systems) {
        out << "Survey systems:\n";
        for (const auto& sys : catalog.survey_systems()) {
            out << "  " << describe(sys);
        }
    }
    std::cout << out.str();
    return 0;
}

int cmd_catalog_show(const Catalog& catalog, const CatalogOptions& opt) {
    if (const auto* p = catalog.find_platform(opt.show_name)) {
        std::cout << (opt.json ? platform_json(*p).dump(2) + "\n" : describe(*p));
        return 0;
    }
    if (const auto* s = catalog.find_sensor(opt.show_name)) {
        std::cout << (opt.json ? sensor_json(*s).dump(2) + "\n" : describe(*s));
        return 0;
    }
    if (const auto* sys = catalog.find_survey_system(opt.show_name)) {
        if (opt.json) {
            ordered_json j{{"name", sys->name},
                           {"d_sv_m", sys->d_sv_m},
                           {"d_auv_m", sys->d_auv_m}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << describe(*sys);
        }
        return 0;
    }
    throw std::invalid_argument("unknown catalog entry: " + opt.show_name);
}

// =============================================================================
// tau-crit
// =============================================================================

struct TauCritOptions {
    std::string platforms_csv;
    std::string sensors_csv;
    std::string payload_csv;
    bool platforms_given = false;
    bool sensors_given = false;
    bool survey = false;
    bool csv = false;
    bool json = false;
    std::string out_path;
};

ReportTable georef_tau_table(const Catalog& catalog, const TauCritOptions& opt,
                             bool raw) {
    const std::vector<std::string> platform_names =
        opt.platforms_given
            ? split_csv_list(opt.platforms_csv)
            : std::vector<std::string>{"USV", "Car", "UAV Multi Rotor",
                                       "UAV Fixed Wing"};
    if (platform_names.empty()) {
        throw std::invalid_argument("empty platform list");
    }
    std::vector<const PlatformSpec*> platforms;
    for (const auto& name : platform_names) {
        platforms.push_back(&require_platform(catalog, name));
    }

    ReportTable table;
    table.caption = "Critical synchronization error (georeferencing)";
    table.columns.push_back("sensor");
    for (const auto* p : platforms) {
        table.columns.push_back(p->name);
    }

    auto cell = [&](double tau) {
        return raw ? format_double(tau) : format_si_seconds(tau);
    };

    if (!opt.payload_csv.empty()) {
        std::vector<std::string> row{"(payload)"};
        for (const auto* p : platforms) {
            const Payload payload = payload_from_names(
                catalog, *p, split_csv_list(opt.payload_csv));
            row.push_back(cell(critical_sync_error(georef_budget(*p, payload))));
        }
        table.rows.push_back(row);
        return table;
    }

    const std::vector<std::string> sensor_names =
        opt.sensors_given
            ? split_csv_list(opt.sensors_csv)
            : std::vector<std::string>{"uBlox F9P PVT", "uBlox F9P RTK",
                                       "SBG Ellipse", "MRU5", "Alpha Prime",
                                       "VUX1-UAV"};
    if (sensor_names.empty()) {
        throw std::invalid_argument("empty sensor list");
    }
    for (const auto& sensor_name : sensor_names) {
        const SensorSpec& sensor = require_sensor(catalog, sensor_name);
        std::vector<std::string> row{sensor.name};
        for (const auto* p : platforms) {
            row.push_back(cell(per_sensor_critical_sync(sensor, *p)));
        }
        table.rows.push_back(row);
    }
    return table;
}

ReportTable survey_tau_table(const Catalog& catalog, const TauCritOptions& opt,
                             bool raw) {
    const std::vector<std::string> system_names =
        opt.platforms_given
            ? split_csv_list(opt.platforms_csv)
            : std::vector<std::string>{"Large SV survey", "Small SV survey"};
    if (system_names.empty()) {
        throw std::invalid_argument("empty survey system list");
    }
    std::vector<const SurveySystem*> systems;
    for (const auto& name : system_names) {
        systems.push_back(&require_survey_system(catalog, name));
    }

    const std::vector<std::string> sensor_names =
        opt.sensors_given
            ? split_csv_list(opt.sensors_csv)
            : std::vector<std::string>{"uBlox F9P PVT", "uBlox F9P RTK",
                                       "SBG Ellipse", "MRU5", "HIPAP502",
                                       "USBL7000", "Sonic 2026", "M3 Sonar"};
    if (sensor_names.empty()) {
        throw std::invalid_argument("empty sensor list");
    }

    ReportTable table;
    table.caption = "Critical synchronization error (survey)";
    table.columns.push_back("sensor");
    for (const auto* sys : systems) {
        table.columns.push_back(sys->sv.name);
    }
    table.columns.push_back("AUV");

    auto cell = [&](double tau) {
        return raw ? format_double(tau) : format_si_seconds(tau);
    };

    for (const auto& sensor_name : sensor_names) {
        const SensorSpec& sensor = require_sensor(catalog, sensor_name);
        std::vector<std::string> row{sensor.name};
        for (const auto* sys : systems) {
            row.push_back(cell(per_sensor_critical_sync_survey(
                sensor, SurveyRole::SurfaceVessel, *sys)));
        }
        // The AUV carries no position sensor; its column is blank for GNSS.
        if (sensor.kind == SensorKind::Position) {
            row.push_back("-");
        } else {
            row.push_back(cell(per_sensor_critical_sync_survey(
                sensor, SurveyRole::Auv, *systems.front())));
        }
        table.rows.push_back(row);
    }

    std::vector<std::string> full{"(full payload)"};
    for (const auto* sys : systems) {
        full.push_back(cell(critical_sync_error(survey_budget(*sys))));
    }
    full.push_back("-");
    table.rows.push_back(full);
    return table;
}

int cmd_tau_crit(const Catalog& catalog, const TauCritOptions& opt) {
    const bool raw = opt.csv || opt.json;
    const ReportTable table = opt.survey ? survey_tau_table(catalog, opt, raw)
                                         : georef_tau_table(catalog, opt, raw);
    if (opt.json) {
        ordered_json doc;
        doc["caption"] = table.caption;
        doc["columns"] = table.columns;
        doc["rows"] = table.rows;
        write_output(opt.out_path, doc.dump(2) + "\n");
    } else if (opt.csv) {
        write_output(opt.out_path, render_csv(table));
    } else {
        write_output(opt.out_path, render_text(table));
    }
    return 0;
}

// =============================================================================
// curve
// =============================================================================

struct CurveOptions {
    std::string platform;
    std::string payload_csv;
    std::string survey_system;
    double sensor_error_override = -1;
    double tau_min = 1e-7;
    double tau_max = 1.0;
    int n = 40;
    std::string svg_path;
    std::string out_path;
};

int cmd_curve(const Catalog& catalog, const CurveOptions& opt) {
    ErrorBudget budget;
    std::string label;
    if (!opt.survey_system.empty()) {
        const SurveySystem& sys = require_survey_system(catalog, opt.survey_system);
        budget = survey_budget(sys);
        label = sys.name;
    } else if (!opt.platform.empty()) {
        const PlatformSpec& platform = require_platform(catalog, opt.platform);
        label = platform.name;
        if (!opt.payload_csv.empty()) {
            budget = georef_budget(
                platform,
                payload_from_names(catalog, platform,
                                   split_csv_list(opt.payload_csv)));
        } else if (opt.sensor_error_override >= 0) {
            budget = {platform.v_max_mps +
                          platform.distance_m * platform.omega_max_rps,
                      0.0};
        } else {
            throw std::invalid_argument(
                "curve: provide --payload or --sensor-error");
        }
    } else {
        throw std::invalid_argument(
            "curve: provide --platform or --survey-system");
    }
    if (opt.sensor_error_override >= 0) {
        budget.sensor_floor_m = opt.sensor_error_override;
    }
    const SynclineCurve curve =
        sample_curve(budget, opt.tau_min, opt.tau_max, opt.n);
    write_output(opt.out_path, curve_csv(curve));
    if (!opt.svg_path.empty()) {
        write_output(opt.svg_path, curve_svg(curve, "Syncline: " + label));
    }
    return 0;
}

// =============================================================================
// simulate
// =============================================================================

struct SimulateOptions {
    std::string scenario = "georef";
    std::string platform;
    std::string payload_csv;
    std::string survey_system;
    std::string pattern = "aligned";
    std::string mode = "adversarial";
    double tau_min = 1e-6;
    double tau_max = 1e-1;
    int n = 40;
    int trials = 256;
    std::uint64_t seed = 0;
    int threads = 1;
    bool zero_noise = false;
    bool check = false;
    double lat_deg = 0;
    double lon_deg = 0;
    bool use_lat_lon = false;
    std::string out_path;
};

Pattern parse_pattern(const std::string& text) {
    if (text == "aligned" || text == "adversarial-aligned") {
        return Pattern::AdversarialAligned;
    }
    if (text == "circular") {
        return Pattern::Circular;
    }
    if (text == "straight") {
        return Pattern::Straight;
    }
    throw std::invalid_argument("unknown pattern: " + text);
}

int cmd_simulate(const Catalog& catalog, const SimulateOptions& opt) {
    const NoiseMode mode = [&] {
        if (opt.mode == "adversarial") {
            return NoiseMode::BoundedAdversarial;
        }
        if (opt.mode == "stochastic") {
            return NoiseMode::Stochastic;
        }
        throw std::invalid_argument("unknown mode: " + opt.mode);
    }();
    if (opt.check && mode != NoiseMode::BoundedAdversarial) {
        throw std::invalid_argument("--check requires --mode adversarial");
    }
    const Pattern pattern = parse_pattern(opt.pattern);
    const Mat3 r_en = opt.use_lat_lon
                          ? ecef_ned_rotation(deg_to_rad(opt.lat_deg),
                                              deg_to_rad(opt.lon_deg))
                          : Mat3::Identity();

    RunConfig config;
    config.trials_per_tau = opt.trials;
    config.mode = mode;
    config.seed = opt.seed;
    config.threads = opt.threads;
    if (opt.n == 1) {
        config.tau_grid_s = {opt.tau_min};
    } else {
        config.tau_grid_s = log_spaced(opt.tau_min, opt.tau_max, opt.n);
    }

    std::unique_ptr<Scenario> scenario;
    if (opt.scenario == "georef") {
        if (opt.platform.empty() || opt.payload_csv.empty()) {
            throw std::invalid_argument(
                "simulate georef needs --platform and --payload");
        }
        const PlatformSpec& platform = require_platform(catalog, opt.platform);
        Payload payload = payload_from_names(catalog, platform,
                                             split_csv_list(opt.payload_csv));
        if (opt.zero_noise) {
            zero_noise(payload);
        }
        scenario =
            std::make_unique<GeorefScenario>(platform, payload, pattern, r_en);
    } else if (opt.scenario == "survey") {
        if (opt.survey_system.empty()) {
            throw std::invalid_argument("simulate survey needs --survey-system");
        }
        SurveySystem sys = require_survey_system(catalog, opt.survey_system);
        if (!opt.payload_csv.empty()) {
            // Replace the vessel sensor triple, keeping levers and the AUV side.
            const Payload replacement =
                payload_from_names(catalog, sys.sv, split_csv_list(opt.payload_csv));
            sys.sv_payload.position = replacement.position;
            sys.sv_payload.attitude = replacement.attitude;
            sys.sv_payload.range_bearing = replacement.range_bearing;
        }
        if (opt.zero_noise) {
            zero_noise(sys.sv_payload);
            zero_noise(sys.auv_payload);
        }
        scenario = std::make_unique<SurveyScenario>(sys, pattern, r_en);
    } else {
        throw std::invalid_argument("unknown scenario: " + opt.scenario);
    }

    const RunResult result = run(*scenario, config);

    std::ostringstream out;
    out << "# scenario=" << result.meta.scenario << "\n";
    out << "# mode=" << result.meta.mode << " rng=" << result.meta.rng
        << " seed=" << result.meta.seed
        << " trials=" << result.meta.trials_per_tau << "\n";
    out << run_csv(result);
    write_output(opt.out_path, out.str());

    if (opt.check) {
        for (const auto& row : result.rows) {
            if (row.ratio < 0.7 || row.ratio > 1.02) {
                std::cerr << "check failed: ratio " << format_double(row.ratio)
                          << " at tau=" << format_double(row.tau_s)
                          << " outside [0.7, 1.02]\n";
                return 1;
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Syncline worst-case error budgets for sensor fusion"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path,
                   "JSON catalog merged over the builtins");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "inspect the registry");
    catalog_cmd->require_subcommand(1);
    CatalogOptions cat_opt;
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
    list_cmd->add_flag("--platforms", cat_opt.platforms);
    list_cmd->add_flag("--sensors", cat_opt.sensors);
    list_cmd->add_flag("--survey-systems", cat_opt.systems);
    list_cmd->add_flag("--json", cat_opt.json);
    auto* show_cmd = catalog_cmd->add_subcommand("show", "show one entry");
    show_cmd->add_option("name", cat_opt.show_name)->required();
    show_cmd->add_flag("--json", cat_opt.json);

    // tau-crit
    TauCritOptions tau_opt;
    auto* tau_cmd =
        app.add_subcommand("tau-crit", "critical synchronization error tables");
    auto* platforms_opt =
        tau_cmd->add_option("--platforms", tau_opt.platforms_csv,
                            "comma-separated platforms (or survey systems)");
    auto* sensors_opt = tau_cmd->add_option("--sensors", tau_opt.sensors_csv,
                                            "comma-separated sensors");
    tau_cmd->add_option("--payload", tau_opt.payload_csv,
                        "position,attitude,range_bearing triple");
    tau_cmd->add_flag("--survey", tau_opt.survey);
    tau_cmd->add_flag("--csv", tau_opt.csv);
    tau_cmd->add_flag("--json", tau_opt.json);
    tau_cmd->add_option("--out", tau_opt.out_path);

    // curve
    CurveOptions curve_opt;
    auto* curve_cmd = app.add_subcommand("curve", "sampled syncline as CSV/SVG");
    curve_cmd->add_option("--platform", curve_opt.platform);
    curve_cmd->add_option("--payload", curve_opt.payload_csv);
    curve_cmd->add_option("--survey-system", curve_opt.survey_system);
    curve_cmd->add_option("--sensor-error", curve_opt.sensor_error_override,
                          "override the sensor-induced floor, meters");
    curve_cmd->add_option("--tau-min", curve_opt.tau_min);
    curve_cmd->add_option("--tau-max", curve_opt.tau_max);
    curve_cmd->add_option("--n", curve_opt.n);
    curve_cmd->add_option("--svg", curve_opt.svg_path);
    curve_cmd->add_option("--out", curve_opt.out_path);

    // simulate
    SimulateOptions sim_opt;
    auto* sim_cmd =
        app.add_subcommand("simulate", "worst-case runs vs the model");
    sim_cmd->add_option("--scenario", sim_opt.scenario, "georef|survey");
    sim_cmd->add_option("--platform", sim_opt.platform);
    sim_cmd->add_option("--payload", sim_opt.payload_csv);
    sim_cmd->add_option("--survey-system", sim_opt.survey_system);
    sim_cmd->add_option("--pattern", sim_opt.pattern,
                        "aligned|circular|straight");
    sim_cmd->add_option("--mode", sim_opt.mode, "adversarial|stochastic");
    sim_cmd->add_option("--tau-min", sim_opt.tau_min);
    sim_cmd->add_option("--tau-max", sim_opt.tau_max);
    sim_cmd->add_option("--n", sim_opt.n);
    sim_cmd->add_option("--trials", sim_opt.trials);
    sim_cmd->add_option("--seed", sim_opt.seed);
    sim_cmd->add_option("--threads", sim_opt.threads);
    sim_cmd->add_flag("--zero-noise", sim_opt.zero_noise);
    sim_cmd->add_flag("--check", sim_opt.check,
                      "exit 1 unless every ratio lies in [0.7, 1.02]");
    auto* lat = sim_cmd->add_option("--lat", sim_opt.lat_deg, "degrees");
    sim_cmd->add_option("--lon", sim_opt.lon_deg, "degrees")->needs(lat);
    sim_cmd->add_option("--out", sim_opt.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    sim_opt.use_lat_lon = lat->count() > 0;
    tau_opt.platforms_given = platforms_opt->count() > 0;
    tau_opt.sensors_given = sensors_opt->count() > 0;

    try {
        const Catalog catalog = catalog_path.empty()
                                    ? Catalog::builtin()
                                    : Catalog::load(read_file(catalog_path));
        if (list_cmd->parsed()) {
            return cmd_catalog_list(catalog, cat_opt);
        }
        if (show_cmd->parsed()) {
            return cmd_catalog_show(catalog, cat_opt);
        }
        if (tau_cmd->parsed()) {
            return cmd_tau_crit(catalog, tau_opt);
        }
        if (curve_cmd->parsed()) {
            return cmd_curve(catalog, curve_opt);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(catalog, sim_opt);
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
