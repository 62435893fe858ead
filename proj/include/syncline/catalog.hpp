// Typed registry of robot platforms, sensors and two-vehicle survey systems,
// with the built-in parameter tables and JSON ingestion.
#pragma once

#include <syncline/types.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syncline {

/// Robot dynamics envelope. `distance_m` is the typical range to the objects
/// being localized, `baseline_m` the largest lever arm on the vehicle.
struct PlatformSpec {
    std::string name;
    double v_max_mps{0};
    double omega_max_rps{0}; // rad/s internally; deg/s at the config boundary
    double distance_m{0};
    double baseline_m{0};
};

enum class SensorKind { Position, Attitude, RangeBearing };

/// Per-sensor noise magnitudes, radians/meters. Only the fields of the
/// declared kind are meaningful; the rest stay zero.
struct SensorSpec {
    std::string name;
    SensorKind kind{SensorKind::Position};
    double sigma_p_m{0};                       // Position
    Vec3 sigma_rpy_rad{Vec3::Zero()};          // Attitude
    double sigma_r_m{0};                       // RangeBearing
    double sigma_az_rad{0};
    double sigma_el_rad{0};

    static SensorSpec position(std::string name, double sigma_p_m);
    static SensorSpec attitude(std::string name, const Vec3& sigma_rpy_rad);
    static SensorSpec range_bearing(std::string name, double sigma_r_m,
                                    double sigma_az_rad, double sigma_el_rad);
    /// Zero-noise placeholder of the given kind (degenerate payload slot).
    static SensorSpec none(SensorKind kind);
};

// Scalar aggregation of the per-axis sigmas, as consumed by the error budget.
// Position uses the 3-axis worst-case norm sqrt(3) * sigma_p; attitude and
// bearing use the Euclidean norm of their per-axis sigmas.
double effective_position_sigma(const SensorSpec& s);  // meters
double effective_attitude_sigma(const SensorSpec& s);  // radians
double effective_bearing_sigma(const SensorSpec& s);   // radians

/// The position/attitude/range-bearing sensor triple carried by one vehicle,
/// with body-frame mounting lever arms (meters, from the vehicle reference
/// point to each sensor).
struct Payload {
    SensorSpec position = SensorSpec::none(SensorKind::Position);
    SensorSpec attitude = SensorSpec::none(SensorKind::Attitude);
    SensorSpec range_bearing = SensorSpec::none(SensorKind::RangeBearing);
    Vec3 position_lever{Vec3::Zero()};
    Vec3 attitude_lever{Vec3::Zero()};
    Vec3 range_bearing_lever{Vec3::Zero()};

    /// Largest lever-arm norm; must not exceed the carrier's baseline.
    double max_lever_norm() const;
};

/// Surface vessel + AUV survey configuration. The vessel payload must carry
/// position/attitude/range-bearing (GNSS/INS/USBL); the AUV carries
/// attitude/range-bearing (INS/MBE) plus the acoustic transponder lever.
struct SurveySystem {
    std::string name;
    PlatformSpec sv;
    Payload sv_payload;
    PlatformSpec auv;
    Payload auv_payload;
    Vec3 auv_transponder_lever{Vec3::Zero()};
    double d_sv_m{0};  // vessel-to-AUV range
    double d_auv_m{0}; // AUV-to-seafloor range
};

/// Immutable-after-load registry. Lookup is case-insensitive and ignores
/// spaces/punctuation, so "AlphaPrime" and "alpha prime" both resolve.
class Catalog {
public:
    /// Registry preloaded with the built-in tables: 7 platforms, 15 sensors
    /// and the two reference survey systems.
    static Catalog builtin();

    /// Parses a JSON document and merges it over the builtins. User entries
    /// replace builtins of the same name. Throws std::invalid_argument with
    /// the offending JSON path on schema or constraint violations.
    static Catalog load(const std::string& json_text);

    const std::vector<PlatformSpec>& platforms() const { return platforms_; }
    const std::vector<SensorSpec>& sensors() const { return sensors_; }
    const std::vector<SurveySystem>& survey_systems() const { return systems_; }

    const PlatformSpec* find_platform(const std::string& name) const;
    const SensorSpec* find_sensor(const std::string& name) const;
    const SurveySystem* find_survey_system(const std::string& name) const;

    /// Serializes the registry back to the catalog JSON schema (angles in
    /// degrees, matching the input convention).
    std::string to_json(int indent = 2) const;

    void add(const PlatformSpec& p);
    void add(const SensorSpec& s);
    void add(const SurveySystem& s);

private:
    std::vector<PlatformSpec> platforms_;
    std::vector<SensorSpec> sensors_;
    std::vector<SurveySystem> systems_;
};

std::vector<PlatformSpec> builtin_platforms();
std::vector<SensorSpec> builtin_sensors();
std::vector<SurveySystem> builtin_survey_systems();

bool operator==(const PlatformSpec& a, const PlatformSpec& b);
bool operator==(const SensorSpec& a, const SensorSpec& b);
bool operator==(const Payload& a, const Payload& b);
bool operator==(const SurveySystem& a, const SurveySystem& b);

} // namespace syncline
