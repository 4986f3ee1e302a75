#pragma once

#include <cmath>
#include <numbers>

// Conversions between the SI linear units used internally and the
// logarithmic / scaled units used in configuration and reports.
namespace afd::units {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

inline constexpr double mhz(double v) { return v * 1e6; }
inline constexpr double ghz(double v) { return v * 1e9; }

}  // namespace afd::units
