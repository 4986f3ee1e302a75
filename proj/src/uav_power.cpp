#include "afd/uav_power.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "afd/errors.hpp"

namespace afd {

UavPhysicalParams UavPhysicalParams::defaults() {
    UavPhysicalParams p;
    p.with_default_hover_limit(400.0);
    return p;
}

UavPhysicalParams& UavPhysicalParams::with_default_hover_limit(double max_altitude) {
    p_hov_max = 0.0;
    p_hov_max = 2.0 * power::hover_power(*this, max_altitude);
    return *this;
}

void UavPhysicalParams::validate() const {
    const bool positive = vehicle_kg > 0 && battery_kg > 0 && payload_kg > 0 && epsilon > 0 &&
                          air_density > 0 && chord_length > 0 && blade_drag_coeff > 0 &&
                          advance_ratio > 0 && prop_radius > 0 && rotor_count > 0 && disk_area > 0 &&
                          p_hov_max > 0;
    if (!positive) throw ConfigError("uav: every physical parameter must be positive");
}

double UavPhysicalParams::induced_hover_power() const {
    return std::pow(total_weight(), 1.5) / std::sqrt(2.0 * air_density * rotor_count * disk_area);
}

double UavPhysicalParams::blade_profile_factor() const {
    return blade_drag_coeff * chord_length /
           (8.0 * advance_ratio * advance_ratio * advance_ratio * std::numbers::pi * prop_radius);
}

void AltitudeBounds::validate() const {
    if (!(h_min > 0.0 && h_min < h_max)) throw ConfigError("altitude bounds need 0 < h_min < h_max");
}

double AltitudeBounds::clamp(double h) const {
    if (h >= h_max) return h_max;
    if (h <= h_min) return h_min;
    return h;
}

namespace power {

double hover_power(const UavPhysicalParams& phys, double altitude) {
    if (!(altitude >= 0.0)) throw DomainError("hover_power: altitude must be >= 0");
    const double p = phys.ground_hover_power() * std::exp(phys.epsilon * altitude / 2.0);
    if (phys.p_hov_max > 0.0 && p > phys.p_hov_max) {
        throw HoverLimitError("hover_power: " + std::to_string(p) + " W at " + std::to_string(altitude) +
                              " m exceeds the airframe limit of " + std::to_string(phys.p_hov_max) + " W");
    }
    return p;
}

double altitude_from_hover_power(const UavPhysicalParams& phys, double hover_w) {
    const double base = phys.ground_hover_power();
    if (!(hover_w >= base)) {
        throw DomainError("altitude_from_hover_power: power below the ground-level hover power");
    }
    return 2.0 / phys.epsilon * std::log(hover_w / base);
}

double total_power(std::span<const double> tx_powers, double hover_w) {
    return std::accumulate(tx_powers.begin(), tx_powers.end(), 0.0) + hover_w;
}

double energy_efficiency(std::span<const double> rates, std::span<const double> tx_powers, double hover_w) {
    if (rates.size() != tx_powers.size()) {
        throw DomainError("energy_efficiency: rate and power lists differ in length");
    }
    const double denom = total_power(tx_powers, hover_w);
    if (!(denom > 0.0)) throw DomainError("energy_efficiency: total power is zero");
    return std::accumulate(rates.begin(), rates.end(), 0.0) / denom;
}

double link_energy_efficiency(double tx_power_w, double gain, const RadioParams& radio, double hover_w) {
    const double snr = tx_power_w * gain / radio.noise_power_w();
    return radio.bandwidth_hz * std::log2(1.0 + snr) / (tx_power_w + hover_w);
}

double link_energy_efficiency_slope(double tx_power_w, double gain, const RadioParams& radio, double hover_w) {
    const double noise = radio.noise_power_w();
    const double one_plus_snr = 1.0 + tx_power_w * gain / noise;
    const double total = tx_power_w + hover_w;
    return gain / (one_plus_snr * total * radio.noise_density_w_per_hz * std::numbers::ln2) -
           radio.bandwidth_hz * std::log2(one_plus_snr) / (total * total);
}

double stationary_tx_power(double gain, const RadioParams& radio, double hover_w) {
    double lo = 1e-9;
    double hi = 10.0 * radio.p_max_w;
    const auto slope = [&](double p) { return link_energy_efficiency_slope(p, gain, radio, hover_w); };

    // The objective is log-over-affine, so the slope crosses zero at most once
    // and from above.
    if (slope(lo) <= 0.0) return lo;
    if (slope(hi) >= 0.0) return hi;
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (slope(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double optimal_tx_power(double gain, const RadioParams& radio, double hover_w, double min_link_w) {
    const double p = stationary_tx_power(gain, radio, hover_w);
    if (min_link_w <= radio.p_max_w) {
        if (p <= min_link_w) return min_link_w;
        if (p >= radio.p_max_w) return radio.p_max_w;
        return p;
    }
    return radio.p_max_w;
}

double provision_link_power(double path_loss_db, const RadioParams& radio, double hover_w) {
    const double min_link = std::max(channel::min_tx_power(path_loss_db, radio), radio.p_min_w);
    return optimal_tx_power(channel::linear_gain(path_loss_db), radio, hover_w, min_link);
}

}  // namespace power
}  // namespace afd
