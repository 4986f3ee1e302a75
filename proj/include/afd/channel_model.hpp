#pragma once

// Air-to-ground link model: geometry, LoS probability, average path loss,
// SNR, Shannon rate, minimum transmit power and the optimal elevation angle.
//
// All functions are pure. Inputs and outputs are SI linear units except
// path loss, which stays in dB because that is how it composes.

namespace afd {

struct EnvironmentParams {
    double a = 9.61;
    double b = 0.16;
    double eta_los_db = 1.0;
    double eta_nlos_db = 20.0;
    double carrier_hz = 2.4e9;
    double light_speed = 3e8;

    static EnvironmentParams urban() { return {}; }

    // Throws ConfigError when an invariant is broken.
    void validate() const;

    // A = eta_LoS - eta_NLoS (negative for every realistic environment).
    double los_excess_delta_db() const { return eta_los_db - eta_nlos_db; }
    // beta = 20 log10(4 pi f_c / c) + eta_NLoS.
    double beta_db() const;
};

struct LinkGeometry {
    double horizontal = 0.0;  // r, m
    double altitude = 0.0;    // h, m
    double distance = 0.0;    // d, m
    double elevation = 0.0;   // theta, rad

    static LinkGeometry make(double horizontal, double altitude);
};

struct RadioParams {
    double bandwidth_hz = 20e6;
    double noise_density_w_per_hz = 3.981071705534973e-21;  // -174 dBm/Hz
    double snr_threshold = 1.9952623149688795;              // 3 dB
    double p_min_w = 0.0;
    double p_max_w = 0.7943282347242815;                    // 29 dBm

    void validate() const;
    double noise_power_w() const { return bandwidth_hz * noise_density_w_per_hz; }
};

namespace channel {

double los_probability(const EnvironmentParams& env, double theta);

double average_path_loss(const EnvironmentParams& env, double altitude, double horizontal);
double average_path_loss(const EnvironmentParams& env, const LinkGeometry& link);

double linear_gain(double path_loss_db);

double snr(double tx_power_w, double path_loss_db, const RadioParams& radio);

double achievable_rate(const RadioParams& radio, double snr_linear);

// Power that puts the received SNR exactly at radio.snr_threshold.
double min_tx_power(double path_loss_db, const RadioParams& radio);

// Left-hand side of the stationarity condition for the coverage radius with
// respect to the elevation angle. Zero at the optimal angle.
double elevation_condition(const EnvironmentParams& env, double theta);

// Bisection on elevation_condition over (1e-6, pi/2 - 1e-6) to 1e-10 rad.
// Throws NoRootError if the bracket has no sign change.
double optimal_elevation_angle(const EnvironmentParams& env);

double coverage_radius(double altitude, double theta_opt);
double required_altitude(double horizontal, double theta_opt);
double max_los_distance(double max_radius, double theta_opt);

}  // namespace channel
}  // namespace afd
