#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "afd/scenario.hpp"

// Scenario configuration files are JSON documents with one object per
// section. Every key is optional; missing keys keep the built-in defaults.
//
//   scenario:    n_users, n_uavs, omega_max, excess_users, cell_radius_m,
//                h_init_m, jfi_threshold, pl_allow_db, rng_seed
//   environment: a, b, eta_los_db, eta_nlos_db, carrier_ghz, light_speed_mps
//   radio:       bandwidth_mhz, noise_density_dbm_per_hz, snr_threshold_db,
//                p_min_w, p_max_dbm
//   altitude:    h_min_m, h_max_m
//   uav:         vehicle_kg, battery_kg, payload_kg, epsilon, air_density,
//                chord_length_m, blade_drag_coeff, advance_ratio,
//                prop_radius_m, rotor_count, disk_area_m2, p_hov_max_w
//
// cell_radius_m defaults to the coverage radius at h_init_m, disk_area_m2
// to pi * prop_radius_m^2 and p_hov_max_w to twice the hovering power at
// h_max_m. Unknown sections or keys are rejected.
namespace afd {

ScenarioConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const ScenarioConfig& config);

// Throws ConfigError with the path on I/O or parse failures.
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace afd
