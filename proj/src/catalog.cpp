#include <syncline/catalog.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace syncline {

using nlohmann::ordered_json;

// =============================================================================
// SensorSpec factories and sigma aggregation
// =============================================================================

SensorSpec SensorSpec::position(std::string name, double sigma_p_m) {
    SensorSpec s;
    s.name = std::move(name);
    s.kind = SensorKind::Position;
    s.sigma_p_m = sigma_p_m;
    return s;
}

SensorSpec SensorSpec::attitude(std::string name, const Vec3& sigma_rpy_rad) {
    SensorSpec s;
    s.name = std::move(name);
    s.kind = SensorKind::Attitude;
    s.sigma_rpy_rad = sigma_rpy_rad;
    return s;
}

SensorSpec SensorSpec::range_bearing(std::string name, double sigma_r_m,
                                     double sigma_az_rad, double sigma_el_rad) {
    SensorSpec s;
    s.name = std::move(name);
    s.kind = SensorKind::RangeBearing;
    s.sigma_r_m = sigma_r_m;
    s.sigma_az_rad = sigma_az_rad;
    s.sigma_el_rad = sigma_el_rad;
    return s;
}

SensorSpec SensorSpec::none(SensorKind kind) {
    SensorSpec s;
    s.name = "none";
    s.kind = kind;
    return s;
}

double effective_position_sigma(const SensorSpec& s) {
    return std::sqrt(3.0) * s.sigma_p_m;
}

double effective_attitude_sigma(const SensorSpec& s) {
    return s.sigma_rpy_rad.norm();
}

double effective_bearing_sigma(const SensorSpec& s) {
    return std::hypot(s.sigma_az_rad, s.sigma_el_rad);
}

double Payload::max_lever_norm() const {
    return std::max({position_lever.norm(), attitude_lever.norm(),
                     range_bearing_lever.norm()});
}

// =============================================================================
// Built-in tables
// =============================================================================

std::vector<PlatformSpec> builtin_platforms() {
    auto p = [](const char* name, double v, double w_dps, double d, double b) {
        return PlatformSpec{name, v, deg_to_rad(w_dps), d, b};
    };
    return {
        p("UAV Fixed Wing", 21.0, 77.9, 100.0, 1.0),
        p("UAV Multi Rotor", 5.0, 311.8, 5.0, 0.5),
        p("USV", 5.0, 17.0, 30.0, 5.0),
        p("AUV", 30.0, 8.7, 5.0, 5.0),
        p("Car", 30.0, 17.3, 50.0, 3.0),
        p("Large SV", 2.5, 4.5, 1000.0, 50.0),
        p("Small SV", 4.0, 17.0, 1000.0, 10.0),
    };
}

std::vector<SensorSpec> builtin_sensors() {
    auto att = [](const char* name, double r_deg, double p_deg, double y_deg) {
        return SensorSpec::attitude(
            name, Vec3(deg_to_rad(r_deg), deg_to_rad(p_deg), deg_to_rad(y_deg)));
    };
    auto rb = [](const char* name, double r_m, double az_deg, double el_deg) {
        return SensorSpec::range_bearing(name, r_m, deg_to_rad(az_deg),
                                         deg_to_rad(el_deg));
    };
    return {
        SensorSpec::position("uBlox F9P PVT", 1.5),
        SensorSpec::position("uBlox F9P RTK", 0.01),
        SensorSpec::position("Trimble R12 DGNSS", 0.25),
        SensorSpec::position("Trimble R12 RTK", 0.008),
        att("SBG Ellipse", 0.1, 0.1, 0.2),
        att("SBG Apogee", 0.008, 0.008, 0.03),
        att("MRU5", 0.002, 0.002, 0.002),
        rb("Alpha Prime", 0.04, 0.1, 0.2),
        rb("HDL32E", 0.02, 0.08, 0.08),
        rb("VUX1-UAV", 0.01, 0.006, 0.006),
        rb("Focus Plus", 0.001, 0.005, 0.005),
        rb("HIPAP502", 0.02, 0.06, 0.06),
        rb("USBL7000", 0.015, 0.04, 0.04),
        rb("M3 Sonar", 0.01, 0.9, 0.5),
        rb("Sonic 2026", 0.001, 0.45, 0.45),
    };
}

namespace {

const SensorSpec& builtin_sensor(const std::vector<SensorSpec>& all,
                                 const char* name) {
    for (const auto& s : all) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::logic_error(std::string("missing builtin sensor ") + name);
}

SurveySystem make_survey_system(const char* name, const PlatformSpec& sv) {
    const auto sensors = builtin_sensors();
    // Reference subsea survey rig: RTK GNSS + MRU5 + USBL on the vessel,
    // MRU5 + MBE on the AUV. The AUV runs at the survey speed implied by the
    // critical-sync table, not the platform table's implausible 30 m/s.
    SurveySystem sys;
    sys.name = name;
    sys.sv = sv;
    sys.sv_payload.position = builtin_sensor(sensors, "Trimble R12 RTK");
    sys.sv_payload.attitude = builtin_sensor(sensors, "MRU5");
    sys.sv_payload.range_bearing = builtin_sensor(sensors, "USBL7000");
    sys.sv_payload.position_lever = Vec3(0, 0, -3.0);
    sys.sv_payload.range_bearing_lever = Vec3(0, 0, 2.0);
    sys.auv = PlatformSpec{"Survey AUV", 2.078, deg_to_rad(8.7), 30.0, 5.0};
    sys.auv_payload.attitude = builtin_sensor(sensors, "MRU5");
    sys.auv_payload.range_bearing = builtin_sensor(sensors, "Sonic 2026");
    sys.auv_payload.range_bearing_lever = Vec3(0, 0, 0.5);
    sys.auv_transponder_lever = Vec3(0, 0, -0.5);
    sys.d_sv_m = 1000.0;
    sys.d_auv_m = 30.0;
    return sys;
}

} // namespace

std::vector<SurveySystem> builtin_survey_systems() {
    const auto platforms = builtin_platforms();
    return {
        make_survey_system("Large SV survey", platforms[5]),
        make_survey_system("Small SV survey", platforms[6]),
    };
}

// =============================================================================
// Registry
// =============================================================================

namespace {

std::string normalized(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out.push_back(static_cast<char>(
                std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

// Exact normalized match first, then a unique-substring fallback.
template <typename T>
const T* find_by_name(const std::vector<T>& items, const std::string& query) {
    const std::string q = normalized(query);
    if (q.empty()) {
        return nullptr;
    }
    for (const auto& item : items) {
        if (normalized(item.name) == q) {
            return &item;
        }
    }
    const T* unique = nullptr;
    for (const auto& item : items) {
        if (normalized(item.name).find(q) != std::string::npos) {
            if (unique != nullptr) {
                return nullptr; // ambiguous
            }
            unique = &item;
        }
    }
    return unique;
}

template <typename T> void upsert(std::vector<T>& items, const T& entry) {
    for (auto& existing : items) {
        if (existing.name == entry.name) {
            existing = entry;
            return;
        }
    }
    items.push_back(entry);
}

} // namespace

Catalog Catalog::builtin() {
    Catalog c;
    c.platforms_ = builtin_platforms();
    c.sensors_ = builtin_sensors();
    c.systems_ = builtin_survey_systems();
    return c;
}

const PlatformSpec* Catalog::find_platform(const std::string& name) const {
    return find_by_name(platforms_, name);
}

const SensorSpec* Catalog::find_sensor(const std::string& name) const {
    return find_by_name(sensors_, name);
}

const SurveySystem* Catalog::find_survey_system(const std::string& name) const {
    return find_by_name(systems_, name);
}

void Catalog::add(const PlatformSpec& p) { upsert(platforms_, p); }
void Catalog::add(const SensorSpec& s) { upsert(sensors_, s); }
void Catalog::add(const SurveySystem& s) { upsert(systems_, s); }

// =============================================================================
// JSON schema
// =============================================================================

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("catalog: " + path + ": " + what);
}

void require_keys(const ordered_json& obj, const std::string& path,
                  const std::vector<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            fail(path + "." + key, "unknown key");
        }
    }
}

double get_number(const ordered_json& obj, const std::string& path,
                  const std::string& key) {
    if (!obj.contains(key)) {
        fail(path + "." + key, "missing required field");
    }
    if (!obj[key].is_number()) {
        fail(path + "." + key, "expected a number");
    }
    return obj[key].get<double>();
}

double get_nonnegative(const ordered_json& obj, const std::string& path,
                       const std::string& key) {
    const double v = get_number(obj, path, key);
    if (!(v >= 0.0)) {
        fail(path + "." + key, "must be >= 0");
    }
    return v;
}

std::string get_string(const ordered_json& obj, const std::string& path,
                       const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        fail(path + "." + key, "expected a string");
    }
    return obj[key].get<std::string>();
}

Vec3 get_vec3(const ordered_json& node, const std::string& path) {
    if (!node.is_array() || node.size() != 3 || !node[0].is_number() ||
        !node[1].is_number() || !node[2].is_number()) {
        fail(path, "expected a 3-element number array");
    }
    return Vec3(node[0].get<double>(), node[1].get<double>(),
                node[2].get<double>());
}

PlatformSpec parse_platform(const ordered_json& obj, const std::string& path) {
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    require_keys(obj, path, {"name", "v_max_mps", "omega_max_dps", "d_m", "b_m"});
    PlatformSpec p;
    p.name = get_string(obj, path, "name");
    p.v_max_mps = get_nonnegative(obj, path, "v_max_mps");
    p.omega_max_rps = deg_to_rad(get_nonnegative(obj, path, "omega_max_dps"));
    p.distance_m = get_number(obj, path, "d_m");
    if (!(p.distance_m > 0.0)) {
        fail(path + ".d_m", "must be > 0");
    }
    p.baseline_m = get_nonnegative(obj, path, "b_m");
    return p;
}

SensorSpec parse_sensor(const ordered_json& obj, const std::string& path) {
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    require_keys(obj, path,
                 {"name", "kind", "sigma_p_m", "sigma_rpy_deg", "sigma_r_m",
                  "sigma_az_deg", "sigma_el_deg"});
    const std::string name = get_string(obj, path, "name");
    const std::string kind = get_string(obj, path, "kind");
    auto forbid = [&](const char* key) {
        if (obj.contains(key)) {
            fail(path + "." + key, "field not valid for kind \"" + kind + "\"");
        }
    };
    if (kind == "position") {
        forbid("sigma_rpy_deg");
        forbid("sigma_r_m");
        forbid("sigma_az_deg");
        forbid("sigma_el_deg");
        return SensorSpec::position(name, get_nonnegative(obj, path, "sigma_p_m"));
    }
    if (kind == "attitude") {
        forbid("sigma_p_m");
        forbid("sigma_r_m");
        forbid("sigma_az_deg");
        forbid("sigma_el_deg");
        if (!obj.contains("sigma_rpy_deg")) {
            fail(path + ".sigma_rpy_deg", "missing required field");
        }
        const Vec3 rpy_deg = get_vec3(obj["sigma_rpy_deg"], path + ".sigma_rpy_deg");
        if (rpy_deg.minCoeff() < 0.0) {
            fail(path + ".sigma_rpy_deg", "must be >= 0");
        }
        return SensorSpec::attitude(name, deg_to_rad(1.0) * rpy_deg);
    }
    if (kind == "range_bearing") {
        forbid("sigma_p_m");
        forbid("sigma_rpy_deg");
        return SensorSpec::range_bearing(
            name, get_nonnegative(obj, path, "sigma_r_m"),
            deg_to_rad(get_nonnegative(obj, path, "sigma_az_deg")),
            deg_to_rad(get_nonnegative(obj, path, "sigma_el_deg")));
    }
    fail(path + ".kind", "expected position, attitude or range_bearing");
}

struct VehicleEntry {
    PlatformSpec platform;
    Payload payload;
    Vec3 transponder_lever{Vec3::Zero()};
};

VehicleEntry parse_vehicle(const ordered_json& obj, const std::string& path,
                           const Catalog& registry, bool allow_transponder) {
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    std::vector<std::string> allowed = {"platform", "position", "attitude",
                                        "range_bearing", "levers"};
    if (allow_transponder) {
        allowed.push_back("transponder_lever_m");
    }
    require_keys(obj, path, allowed);

    VehicleEntry entry;
    if (!obj.contains("platform")) {
        fail(path + ".platform", "missing required field");
    }
    if (obj["platform"].is_string()) {
        const auto* p = registry.find_platform(obj["platform"].get<std::string>());
        if (p == nullptr) {
            fail(path + ".platform", "unknown platform \"" +
                                         obj["platform"].get<std::string>() + "\"");
        }
        entry.platform = *p;
    } else {
        entry.platform = parse_platform(obj["platform"], path + ".platform");
    }

    auto sensor_ref = [&](const char* key, SensorKind kind) -> SensorSpec {
        if (!obj.contains(key)) {
            return SensorSpec::none(kind);
        }
        const std::string ref = get_string(obj, path, key);
        const auto* s = registry.find_sensor(ref);
        if (s == nullptr) {
            fail(path + "." + key, "unknown sensor \"" + ref + "\"");
        }
        if (s->kind != kind) {
            fail(path + "." + key, "sensor \"" + ref + "\" has the wrong kind");
        }
        return *s;
    };
    entry.payload.position = sensor_ref("position", SensorKind::Position);
    entry.payload.attitude = sensor_ref("attitude", SensorKind::Attitude);
    entry.payload.range_bearing =
        sensor_ref("range_bearing", SensorKind::RangeBearing);

    if (obj.contains("levers")) {
        const auto& levers = obj["levers"];
        if (!levers.is_object()) {
            fail(path + ".levers", "expected an object");
        }
        require_keys(levers, path + ".levers",
                     {"position", "attitude", "range_bearing"});
        if (levers.contains("position")) {
            entry.payload.position_lever =
                get_vec3(levers["position"], path + ".levers.position");
        }
        if (levers.contains("attitude")) {
            entry.payload.attitude_lever =
                get_vec3(levers["attitude"], path + ".levers.attitude");
        }
        if (levers.contains("range_bearing")) {
            entry.payload.range_bearing_lever =
                get_vec3(levers["range_bearing"], path + ".levers.range_bearing");
        }
    }
    if (allow_transponder && obj.contains("transponder_lever_m")) {
        entry.transponder_lever =
            get_vec3(obj["transponder_lever_m"], path + ".transponder_lever_m");
    }
    const double lever_limit =
        std::max(entry.payload.max_lever_norm(), entry.transponder_lever.norm());
    if (lever_limit > entry.platform.baseline_m + 1e-12) {
        fail(path + ".levers", "lever arm exceeds the platform baseline");
    }
    return entry;
}

SurveySystem parse_survey_system(const ordered_json& obj,
                                 const std::string& path,
                                 const Catalog& registry) {
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    require_keys(obj, path, {"name", "sv", "auv", "d_sv_m", "d_auv_m"});
    SurveySystem sys;
    sys.name = get_string(obj, path, "name");
    if (!obj.contains("sv") || !obj.contains("auv")) {
        fail(path, "missing sv/auv vehicle entries");
    }
    const VehicleEntry sv = parse_vehicle(obj["sv"], path + ".sv", registry, false);
    const VehicleEntry auv =
        parse_vehicle(obj["auv"], path + ".auv", registry, true);
    sys.sv = sv.platform;
    sys.sv_payload = sv.payload;
    sys.auv = auv.platform;
    sys.auv_payload = auv.payload;
    sys.auv_transponder_lever = auv.transponder_lever;
    sys.d_sv_m = get_number(obj, path, "d_sv_m");
    sys.d_auv_m = get_number(obj, path, "d_auv_m");
    if (!(sys.d_sv_m > 0.0)) {
        fail(path + ".d_sv_m", "must be > 0");
    }
    if (!(sys.d_auv_m > 0.0)) {
        fail(path + ".d_auv_m", "must be > 0");
    }
    return sys;
}

ordered_json platform_to_json(const PlatformSpec& p) {
    return ordered_json{{"name", p.name},
                        {"v_max_mps", p.v_max_mps},
                        {"omega_max_dps", rad_to_deg(p.omega_max_rps)},
                        {"d_m", p.distance_m},
                        {"b_m", p.baseline_m}};
}

ordered_json sensor_to_json(const SensorSpec& s) {
    ordered_json obj{{"name", s.name}};
    switch (s.kind) {
    case SensorKind::Position:
        obj["kind"] = "position";
        obj["sigma_p_m"] = s.sigma_p_m;
        break;
    case SensorKind::Attitude:
        obj["kind"] = "attitude";
        obj["sigma_rpy_deg"] = {rad_to_deg(s.sigma_rpy_rad.x()),
                                rad_to_deg(s.sigma_rpy_rad.y()),
                                rad_to_deg(s.sigma_rpy_rad.z())};
        break;
    case SensorKind::RangeBearing:
        obj["kind"] = "range_bearing";
        obj["sigma_r_m"] = s.sigma_r_m;
        obj["sigma_az_deg"] = rad_to_deg(s.sigma_az_rad);
        obj["sigma_el_deg"] = rad_to_deg(s.sigma_el_rad);
        break;
    }
    return obj;
}

ordered_json vec3_to_json(const Vec3& v) {
    return ordered_json{v.x(), v.y(), v.z()};
}

ordered_json vehicle_to_json(const PlatformSpec& platform, const Payload& payload,
                             const Vec3* transponder_lever) {
    ordered_json obj;
    obj["platform"] = platform_to_json(platform);
    if (payload.position.name != "none") {
        obj["position"] = payload.position.name;
    }
    if (payload.attitude.name != "none") {
        obj["attitude"] = payload.attitude.name;
    }
    if (payload.range_bearing.name != "none") {
        obj["range_bearing"] = payload.range_bearing.name;
    }
    obj["levers"] = ordered_json{
        {"position", vec3_to_json(payload.position_lever)},
        {"attitude", vec3_to_json(payload.attitude_lever)},
        {"range_bearing", vec3_to_json(payload.range_bearing_lever)}};
    if (transponder_lever != nullptr) {
        obj["transponder_lever_m"] = vec3_to_json(*transponder_lever);
    }
    return obj;
}

} // namespace

Catalog Catalog::load(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("catalog: ") + e.what());
    }
    if (!doc.is_object()) {
        fail("$", "top level must be an object");
    }
    require_keys(doc, "$", {"platforms", "sensors", "survey_systems"});

    Catalog registry = Catalog::builtin();
    if (doc.contains("platforms")) {
        if (!doc["platforms"].is_array()) {
            fail("platforms", "expected an array");
        }
        for (std::size_t i = 0; i < doc["platforms"].size(); ++i) {
            registry.add(parse_platform(doc["platforms"][i],
                                        "platforms[" + std::to_string(i) + "]"));
        }
    }
    if (doc.contains("sensors")) {
        if (!doc["sensors"].is_array()) {
            fail("sensors", "expected an array");
        }
        for (std::size_t i = 0; i < doc["sensors"].size(); ++i) {
            registry.add(parse_sensor(doc["sensors"][i],
                                      "sensors[" + std::to_string(i) + "]"));
        }
    }
    if (doc.contains("survey_systems")) {
        if (!doc["survey_systems"].is_array()) {
            fail("survey_systems", "expected an array");
        }
        for (std::size_t i = 0; i < doc["survey_systems"].size(); ++i) {
            registry.add(parse_survey_system(
                doc["survey_systems"][i],
                "survey_systems[" + std::to_string(i) + "]", registry));
        }
    }
    return registry;
}

std::string Catalog::to_json(int indent) const {
    ordered_json doc;
    doc["platforms"] = ordered_json::array();
    for (const auto& p : platforms_) {
        doc["platforms"].push_back(platform_to_json(p));
    }
    doc["sensors"] = ordered_json::array();
    for (const auto& s : sensors_) {
        doc["sensors"].push_back(sensor_to_json(s));
    }
    doc["survey_systems"] = ordered_json::array();
    for (const auto& sys : systems_) {
        ordered_json obj;
        obj["name"] = sys.name;
        obj["sv"] = vehicle_to_json(sys.sv, sys.sv_payload, nullptr);
        obj["auv"] =
            vehicle_to_json(sys.auv, sys.auv_payload, &sys.auv_transponder_lever);
        obj["d_sv_m"] = sys.d_sv_m;
        obj["d_auv_m"] = sys.d_auv_m;
        doc["survey_systems"].push_back(obj);
    }
    return doc.dump(indent);
}

// =============================================================================
// Value equality
// =============================================================================

bool operator==(const PlatformSpec& a, const PlatformSpec& b) {
    return a.name == b.name && a.v_max_mps == b.v_max_mps &&
           a.omega_max_rps == b.omega_max_rps && a.distance_m == b.distance_m &&
           a.baseline_m == b.baseline_m;
}

bool operator==(const SensorSpec& a, const SensorSpec& b) {
    return a.name == b.name && a.kind == b.kind && a.sigma_p_m == b.sigma_p_m &&
           a.sigma_rpy_rad == b.sigma_rpy_rad && a.sigma_r_m == b.sigma_r_m &&
           a.sigma_az_rad == b.sigma_az_rad && a.sigma_el_rad == b.sigma_el_rad;
}

bool operator==(const Payload& a, const Payload& b) {
    return a.position == b.position && a.attitude == b.attitude &&
           a.range_bearing == b.range_bearing &&
           a.position_lever == b.position_lever &&
           a.attitude_lever == b.attitude_lever &&
           a.range_bearing_lever == b.range_bearing_lever;
}

bool operator==(const SurveySystem& a, const SurveySystem& b) {
    return a.name == b.name && a.sv == b.sv && a.sv_payload == b.sv_payload &&
           a.auv == b.auv && a.auv_payload == b.auv_payload &&
           a.auv_transponder_lever == b.auv_transponder_lever &&
           a.d_sv_m == b.d_sv_m && a.d_auv_m == b.d_auv_m;
}

} // namespace syncline
