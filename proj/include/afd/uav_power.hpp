#pragma once

#include <numbers>
#include <span>

#include "afd/channel_model.hpp"

namespace afd {

// Rotary-wing airframe constants for the hovering-power model.
// Masses are in kg and enter the model literally.
struct UavPhysicalParams {
    double vehicle_kg = 10.0;
    double battery_kg = 2.0;
    double payload_kg = 8.0;
    double epsilon = 9.7e-5;          // 1/m
    double air_density = 1.225;       // kg/m^3
    double chord_length = 167.6e-3;   // m
    double blade_drag_coeff = 1.57e-3;
    double advance_ratio = 0.4;
    double prop_radius = 558.2e-3 / 2.0;  // m
    int rotor_count = 4;
    double disk_area = std::numbers::pi * prop_radius * prop_radius;  // m^2
    double p_hov_max = 0.0;               // W; filled by with_default_hover_limit

    static UavPhysicalParams defaults();

    // p_hov_max = 2 * hover_power(max_altitude).
    UavPhysicalParams& with_default_hover_limit(double max_altitude);

    void validate() const;

    double total_weight() const { return vehicle_kg + battery_kg + payload_kg; }
    double induced_hover_power() const;   // p0
    double blade_profile_factor() const;  // delta
    double ground_hover_power() const { return induced_hover_power() * (1.0 + blade_profile_factor()); }
};

struct AltitudeBounds {
    double h_min = 30.0;
    double h_max = 400.0;

    void validate() const;
    bool contains(double h) const { return h >= h_min && h <= h_max; }
    double clamp(double h) const;
};

namespace power {

// Throws HoverLimitError when the result exceeds phys.p_hov_max (if set).
double hover_power(const UavPhysicalParams& phys, double altitude);

double altitude_from_hover_power(const UavPhysicalParams& phys, double hover_w);

double total_power(std::span<const double> tx_powers, double hover_w);

double energy_efficiency(std::span<const double> rates, std::span<const double> tx_powers, double hover_w);

// Single-link energy efficiency B log2(1 + p g / (B sigma^2)) / (p + p_hov).
double link_energy_efficiency(double tx_power_w, double gain, const RadioParams& radio, double hover_w);

// Analytic derivative of link_energy_efficiency with respect to tx power.
double link_energy_efficiency_slope(double tx_power_w, double gain, const RadioParams& radio, double hover_w);

// Stationary point of link_energy_efficiency located by bisection on its
// slope over [1e-9 W, 10 p_max]; if the slope does not change sign the
// nearer bracket end is returned.
double stationary_tx_power(double gain, const RadioParams& radio, double hover_w);

// Stationary point clamped to the transmit power window: to
// [min_link, p_max] when min_link <= p_max, otherwise p_max.
double optimal_tx_power(double gain, const RadioParams& radio, double hover_w, double min_link_w);

// Minimum then optimal power for a link with the given path loss.
double provision_link_power(double path_loss_db, const RadioParams& radio, double hover_w);

}  // namespace power
}  // namespace afd
