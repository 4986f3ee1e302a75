#include "afd/config.hpp"

#include <fstream>
#include <numbers>
#include <set>
#include <string>

#include "afd/errors.hpp"
#include "afd/units.hpp"

namespace afd {

namespace {

using nlohmann::json;

class Section {
public:
    Section(const json& doc, const char* name) : name_(name) {
        if (!doc.contains(name)) return;
        node_ = &doc.at(name);
        if (!node_->is_object()) throw ConfigError(std::string("config: section '") + name + "' must be an object");
    }

    void finish() const {
        if (!node_) return;
        for (const auto& [key, value] : node_->items()) {
            if (!seen_.count(key)) throw ConfigError("config: unknown key '" + name_ + "." + key + "'");
        }
    }

    bool has(const char* key) {
        seen_.insert(key);
        return node_ && node_->contains(key) && !node_->at(key).is_null();
    }

    template <typename T>
    void read(const char* key, T& out) {
        if (!has(key)) return;
        try {
            out = node_->at(key).get<T>();
        } catch (const json::exception& e) {
            throw ConfigError("config: bad value for '" + name_ + "." + key + "': " + e.what());
        }
    }

    double number(const char* key, double fallback) {
        double v = fallback;
        read(key, v);
        return v;
    }

private:
    std::string name_;
    const json* node_ = nullptr;
    std::set<std::string> seen_;
};

}  // namespace

ScenarioConfig config_from_json(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    static const std::set<std::string> sections{"scenario", "environment", "radio", "altitude", "uav"};
    for (const auto& [key, value] : doc.items()) {
        if (!sections.count(key)) throw ConfigError("config: unknown section '" + key + "'");
    }

    ScenarioConfig c = ScenarioConfig::defaults();
    bool radius_given = false;
    bool area_given = false;
    bool hover_limit_given = false;

    {
        Section s(doc, "environment");
        s.read("a", c.env.a);
        s.read("b", c.env.b);
        s.read("eta_los_db", c.env.eta_los_db);
        s.read("eta_nlos_db", c.env.eta_nlos_db);
        c.env.carrier_hz = units::ghz(s.number("carrier_ghz", c.env.carrier_hz / 1e9));
        s.read("light_speed_mps", c.env.light_speed);
        s.finish();
    }
    {
        Section s(doc, "radio");
        c.radio.bandwidth_hz = units::mhz(s.number("bandwidth_mhz", c.radio.bandwidth_hz / 1e6));
        if (s.has("noise_density_dbm_per_hz")) {
            c.radio.noise_density_w_per_hz = units::dbm_to_watts(s.number("noise_density_dbm_per_hz", 0.0));
        }
        if (s.has("snr_threshold_db")) c.radio.snr_threshold = units::db_to_linear(s.number("snr_threshold_db", 0.0));
        s.read("p_min_w", c.radio.p_min_w);
        if (s.has("p_max_dbm")) c.radio.p_max_w = units::dbm_to_watts(s.number("p_max_dbm", 0.0));
        s.finish();
    }
    {
        Section s(doc, "altitude");
        s.read("h_min_m", c.bounds.h_min);
        s.read("h_max_m", c.bounds.h_max);
        s.finish();
    }
    {
        Section s(doc, "uav");
        s.read("vehicle_kg", c.phys.vehicle_kg);
        s.read("battery_kg", c.phys.battery_kg);
        s.read("payload_kg", c.phys.payload_kg);
        s.read("epsilon", c.phys.epsilon);
        s.read("air_density", c.phys.air_density);
        s.read("chord_length_m", c.phys.chord_length);
        s.read("blade_drag_coeff", c.phys.blade_drag_coeff);
        s.read("advance_ratio", c.phys.advance_ratio);
        s.read("prop_radius_m", c.phys.prop_radius);
        s.read("rotor_count", c.phys.rotor_count);
        area_given = s.has("disk_area_m2");
        s.read("disk_area_m2", c.phys.disk_area);
        hover_limit_given = s.has("p_hov_max_w");
        s.read("p_hov_max_w", c.phys.p_hov_max);
        s.finish();
    }
    {
        Section s(doc, "scenario");
        s.read("n_users", c.n_users);
        s.read("n_uavs", c.n_uavs);
        s.read("omega_max", c.omega_max);
        s.read("excess_users", c.excess_users);
        radius_given = s.has("cell_radius_m");
        s.read("cell_radius_m", c.cell_radius);
        s.read("h_init_m", c.h_init);
        s.read("jfi_threshold", c.jfi_threshold);
        s.read("pl_allow_db", c.pl_allow_db);
        s.read("rng_seed", c.rng_seed);
        s.finish();
    }

    c.env.validate();
    c.bounds.validate();
    if (!area_given) c.phys.disk_area = std::numbers::pi * c.phys.prop_radius * c.phys.prop_radius;
    if (!hover_limit_given) c.phys.with_default_hover_limit(c.bounds.h_max);
    if (!radius_given && c.h_init > 0.0) {
        c.cell_radius = channel::coverage_radius(c.h_init, channel::optimal_elevation_angle(c.env));
    }
    c.validate();
    return c;
}

json config_to_json(const ScenarioConfig& c) {
    return json{
        {"scenario",
         {{"n_users", c.n_users},
          {"n_uavs", c.n_uavs},
          {"omega_max", c.omega_max},
          {"excess_users", c.excess_users},
          {"cell_radius_m", c.cell_radius},
          {"h_init_m", c.h_init},
          {"jfi_threshold", c.jfi_threshold},
          {"pl_allow_db", c.pl_allow_db},
          {"rng_seed", c.rng_seed}}},
        {"environment",
         {{"a", c.env.a},
          {"b", c.env.b},
          {"eta_los_db", c.env.eta_los_db},
          {"eta_nlos_db", c.env.eta_nlos_db},
          {"carrier_ghz", c.env.carrier_hz / 1e9},
          {"light_speed_mps", c.env.light_speed}}},
        {"radio",
         {{"bandwidth_mhz", c.radio.bandwidth_hz / 1e6},
          {"noise_density_dbm_per_hz", units::watts_to_dbm(c.radio.noise_density_w_per_hz)},
          {"snr_threshold_db", units::linear_to_db(c.radio.snr_threshold)},
          {"p_min_w", c.radio.p_min_w},
          {"p_max_dbm", units::watts_to_dbm(c.radio.p_max_w)}}},
        {"altitude", {{"h_min_m", c.bounds.h_min}, {"h_max_m", c.bounds.h_max}}},
        {"uav",
         {{"vehicle_kg", c.phys.vehicle_kg},
          {"battery_kg", c.phys.battery_kg},
          {"payload_kg", c.phys.payload_kg},
          {"epsilon", c.phys.epsilon},
          {"air_density", c.phys.air_density},
          {"chord_length_m", c.phys.chord_length},
          {"blade_drag_coeff", c.phys.blade_drag_coeff},
          {"advance_ratio", c.phys.advance_ratio},
          {"prop_radius_m", c.phys.prop_radius},
          {"rotor_count", c.phys.rotor_count},
          {"disk_area_m2", c.phys.disk_area},
          {"p_hov_max_w", c.phys.p_hov_max}}},
    };
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: " + path.string() + ": " + e.what());
    }
    try {
        return config_from_json(doc);
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace afd
