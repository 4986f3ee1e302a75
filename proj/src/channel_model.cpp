#include "afd/channel_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "afd/errors.hpp"
#include "afd/units.hpp"

namespace afd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

// Shared sigmoid term a * exp(-b (theta_deg - a)).
double sigmoid_exponent(const EnvironmentParams& env, double theta) {
    return env.a * std::exp(-env.b * (units::rad_to_deg(theta) - env.a));
}

}  // namespace

void EnvironmentParams::validate() const {
    if (!(a > 0.0)) throw ConfigError("environment: a must be positive");
    if (!(b > 0.0)) throw ConfigError("environment: b must be positive");
    if (!(eta_los_db >= 0.0)) throw ConfigError("environment: eta_los must be >= 0");
    if (!(eta_nlos_db >= eta_los_db)) throw ConfigError("environment: eta_nlos must be >= eta_los");
    if (!(carrier_hz > 0.0)) throw ConfigError("environment: carrier frequency must be positive");
    if (!(light_speed > 0.0)) throw ConfigError("environment: speed of light must be positive");
}

double EnvironmentParams::beta_db() const {
    return 20.0 * std::log10(4.0 * kPi * carrier_hz / light_speed) + eta_nlos_db;
}

LinkGeometry LinkGeometry::make(double horizontal, double altitude) {
    if (!(horizontal >= 0.0) || !(altitude > 0.0)) {
        throw DomainError("LinkGeometry: need horizontal >= 0 and altitude > 0");
    }
    LinkGeometry g;
    g.horizontal = horizontal;
    g.altitude = altitude;
    g.distance = std::hypot(horizontal, altitude);
    g.elevation = horizontal > 0.0 ? std::atan(altitude / horizontal) : kHalfPi;
    return g;
}

void RadioParams::validate() const {
    if (!(bandwidth_hz > 0.0)) throw ConfigError("radio: bandwidth must be positive");
    if (!(noise_density_w_per_hz > 0.0)) throw ConfigError("radio: noise density must be positive");
    if (!(snr_threshold > 0.0)) throw ConfigError("radio: SNR threshold must be positive");
    if (!(p_min_w >= 0.0 && p_min_w < p_max_w)) {
        throw ConfigError("radio: transmit power bounds need 0 <= p_min < p_max");
    }
}

namespace channel {

double los_probability(const EnvironmentParams& env, double theta) {
    if (!(theta >= 0.0 && theta <= kHalfPi)) {
        throw DomainError("los_probability: elevation angle outside [0, pi/2]: " + std::to_string(theta));
    }
    return 1.0 / (1.0 + sigmoid_exponent(env, theta));
}

double average_path_loss(const EnvironmentParams& env, double altitude, double horizontal) {
    if (!(altitude > 0.0) || !(horizontal >= 0.0)) {
        throw DomainError("average_path_loss: need altitude > 0 and horizontal distance >= 0");
    }
    return average_path_loss(env, LinkGeometry::make(horizontal, altitude));
}

double average_path_loss(const EnvironmentParams& env, const LinkGeometry& link) {
    if (!(link.distance > 0.0)) throw DomainError("average_path_loss: distance must be positive");
    return env.los_excess_delta_db() * los_probability(env, link.elevation) +
           20.0 * std::log10(link.distance) + env.beta_db();
}

double linear_gain(double path_loss_db) { return std::pow(10.0, -path_loss_db / 10.0); }

double snr(double tx_power_w, double path_loss_db, const RadioParams& radio) {
    if (!(tx_power_w >= 0.0)) throw DomainError("snr: transmit power must be >= 0");
    return tx_power_w * linear_gain(path_loss_db) / radio.noise_power_w();
}

double achievable_rate(const RadioParams& radio, double snr_linear) {
    if (!(snr_linear >= 0.0)) throw DomainError("achievable_rate: SNR must be >= 0");
    return radio.bandwidth_hz * std::log2(1.0 + snr_linear);
}

double min_tx_power(double path_loss_db, const RadioParams& radio) {
    return radio.snr_threshold * radio.noise_power_w() * std::pow(10.0, path_loss_db / 10.0);
}

double elevation_condition(const EnvironmentParams& env, double theta) {
    const double e = sigmoid_exponent(env, theta);
    const double denom = e + 1.0;
    return kPi * std::tan(theta) / (9.0 * std::log(10.0)) +
           env.b * env.los_excess_delta_db() * e / (denom * denom);
}

double optimal_elevation_angle(const EnvironmentParams& env) {
    double lo = 1e-6;
    double hi = kHalfPi - 1e-6;
    double f_lo = elevation_condition(env, lo);
    const double f_hi = elevation_condition(env, hi);
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        throw NoRootError("optimal_elevation_angle: no sign change on (0, pi/2) for these environment parameters");
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = elevation_condition(env, mid);
        if (f_mid == 0.0) return mid;
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double coverage_radius(double altitude, double theta_opt) {
    if (!(theta_opt > 0.0 && theta_opt < kHalfPi)) {
        throw DomainError("coverage_radius: optimal angle must lie in (0, pi/2)");
    }
    if (!(altitude > 0.0)) throw DomainError("coverage_radius: altitude must be positive");
    return altitude / std::tan(theta_opt);
}

double required_altitude(double horizontal, double theta_opt) { return horizontal * std::tan(theta_opt); }

double max_los_distance(double max_radius, double theta_opt) { return max_radius / std::cos(theta_opt); }

}  // namespace channel
}  // namespace afd
