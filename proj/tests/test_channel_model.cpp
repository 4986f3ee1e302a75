#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "afd/channel_model.hpp"
#include "afd/errors.hpp"
#include "afd/units.hpp"
#include "oracles.hpp"

using namespace afd;

namespace {
const EnvironmentParams kUrban = EnvironmentParams::urban();
const RadioParams kRadio{};
}  // namespace

TEST_CASE("los probability reference values") {
    CHECK(channel::los_probability(kUrban, units::deg_to_rad(9.61)) == doctest::Approx(0.09425070688030161).epsilon(1e-12));
    CHECK(channel::los_probability(kUrban, std::numbers::pi / 2) == doctest::Approx(0.999975074537903).epsilon(1e-12));
    CHECK(channel::los_probability(kUrban, units::deg_to_rad(60)) == doctest::Approx(0.9969803670004501).epsilon(1e-12));
    CHECK(channel::los_probability(kUrban, 0.0) > 0.0);
}

TEST_CASE("los probability rejects angles outside [0, pi/2]") {
    CHECK_THROWS_AS(channel::los_probability(kUrban, -1e-3), DomainError);
    CHECK_THROWS_AS(channel::los_probability(kUrban, std::numbers::pi / 2 + 1e-3), DomainError);
    CHECK_THROWS_AS(channel::los_probability(kUrban, std::nan("")), DomainError);
}

TEST_CASE("los probability is monotone in elevation") {
    double prev = 0.0;
    for (int k = 0; k <= 900; ++k) {
        const double p = channel::los_probability(kUrban, units::deg_to_rad(k * 0.1));
        CHECK(p >= prev);
        prev = p;
    }
}

TEST_CASE("environment constants") {
    CHECK(kUrban.los_excess_delta_db() == doctest::Approx(-19.0));
    CHECK(kUrban.beta_db() == doctest::Approx(60.0460).epsilon(1e-5));
}

TEST_CASE("average path loss reference values") {
    CHECK(channel::average_path_loss(kUrban, 100, 0) == doctest::Approx(81.04647060406064).epsilon(1e-12));
    CHECK(channel::average_path_loss(kUrban, 100, 100) == doctest::Approx(84.670150877923).epsilon(1e-12));
    CHECK(channel::average_path_loss(kUrban, 30, 400) == doctest::Approx(111.30353002210495).epsilon(1e-12));
}

TEST_CASE("average path loss matches an independent evaluation") {
    std::mt19937_64 g(11);
    std::uniform_real_distribution<double> h(30, 400), r(0, 1000);
    for (int k = 0; k < 2000; ++k) {
        const double hh = h(g), rr = r(g);
        CHECK(oracle::rel_diff(channel::average_path_loss(kUrban, hh, rr), oracle::urban_path_loss(hh, rr)) < 1e-12);
    }
}

TEST_CASE("link geometry") {
    const auto top = LinkGeometry::make(0, 50);
    CHECK(top.distance == doctest::Approx(50));
    CHECK(top.elevation == doctest::Approx(std::numbers::pi / 2));
    const auto diag = LinkGeometry::make(30, 40);
    CHECK(diag.distance == doctest::Approx(50));
    CHECK(diag.elevation == doctest::Approx(std::atan(4.0 / 3.0)));
    CHECK_THROWS_AS(LinkGeometry::make(-1, 10), DomainError);
    CHECK_THROWS_AS(LinkGeometry::make(0, 0), DomainError);
}

TEST_CASE("gain, snr and rate") {
    CHECK(channel::linear_gain(81.05) == doctest::Approx(7.85235634610071e-09).epsilon(1e-12));
    CHECK(kRadio.noise_power_w() == doctest::Approx(7.962143411069971e-14).epsilon(1e-12));
    CHECK(units::linear_to_db(channel::snr(0.7943, 93.0, kRadio)) == doctest::Approx(36.98954566885408).epsilon(1e-12));
    CHECK(channel::achievable_rate(kRadio, 1.995) == doctest::Approx(31651120.06028122).epsilon(1e-12));
    CHECK(channel::achievable_rate(kRadio, kRadio.snr_threshold) == doctest::Approx(31653647.098231126).epsilon(1e-12));
    CHECK(channel::achievable_rate(kRadio, 0.0) == 0.0);
    CHECK_THROWS_AS(channel::achievable_rate(kRadio, -0.5), DomainError);
    CHECK_THROWS_AS(channel::snr(-1.0, 90, kRadio), DomainError);
}

TEST_CASE("minimum transmit power meets the threshold exactly") {
    CHECK(channel::min_tx_power(100, kRadio) * 1e3 == doctest::Approx(1.5886564694485683).epsilon(1e-12));
    for (double pl = 60; pl < 140; pl += 0.37) {
        const double p = channel::min_tx_power(pl, kRadio);
        CHECK(oracle::rel_diff(channel::snr(p, pl, kRadio), kRadio.snr_threshold) < 1e-12);
    }
}

TEST_CASE("optimal elevation angle") {
    const double theta = channel::optimal_elevation_angle(kUrban);
    CHECK(theta == doctest::Approx(0.740692557696).epsilon(1e-10));
    CHECK(std::abs(channel::elevation_condition(kUrban, theta)) < 1e-8);
    const double grid = oracle::grid_root([](double t) { return channel::elevation_condition(kUrban, t); }, 1e-6,
                                          std::numbers::pi / 2 - 1e-6, 1'000'000);
    CHECK(std::abs(units::rad_to_deg(grid - theta)) < 1e-3);

    EnvironmentParams shifted = kUrban;
    shifted.a *= 1.01;
    CHECK(units::rad_to_deg(channel::optimal_elevation_angle(shifted)) == doctest::Approx(42.5659784922189).epsilon(1e-8));
}

TEST_CASE("optimal elevation angle without a root") {
    EnvironmentParams flat = kUrban;
    flat.eta_los_db = flat.eta_nlos_db;  // LoS gives no advantage
    CHECK_THROWS_AS(channel::optimal_elevation_angle(flat), NoRootError);
}

TEST_CASE("coverage radius and altitude") {
    const double theta = channel::optimal_elevation_angle(kUrban);
    CHECK(channel::coverage_radius(400, theta) == doctest::Approx(437.4643112272199).epsilon(1e-9));
    CHECK(channel::coverage_radius(30, theta) == doctest::Approx(32.8098233420415).epsilon(1e-9));
    CHECK(channel::required_altitude(200, theta) == doctest::Approx(182.87206052437915).epsilon(1e-9));
    CHECK(channel::required_altitude(437, theta) == doctest::Approx(399.5754522457684).epsilon(1e-9));
    CHECK(channel::max_los_distance(437.4643112272199, theta) == doctest::Approx(592.7689462155604).epsilon(1e-9));
    CHECK_THROWS_AS(channel::coverage_radius(-5, theta), DomainError);
    CHECK_THROWS_AS(channel::coverage_radius(100, std::numbers::pi / 2), DomainError);
}

TEST_CASE("parameter validation") {
    EnvironmentParams env = kUrban;
    env.carrier_hz = 0;
    CHECK_THROWS_AS(env.validate(), ConfigError);
    RadioParams radio = kRadio;
    radio.p_min_w = 1.0;
    CHECK_THROWS_AS(radio.validate(), ConfigError);
    radio = kRadio;
    radio.bandwidth_hz = -1;
    CHECK_THROWS_AS(radio.validate(), ConfigError);
    CHECK_NOTHROW(kRadio.validate());
    CHECK_NOTHROW(kUrban.validate());
}

TEST_CASE("unit conversions") {
    CHECK(units::dbm_to_watts(29) == doctest::Approx(kRadio.p_max_w).epsilon(1e-15));
    CHECK(units::dbm_to_watts(-174) == doctest::Approx(kRadio.noise_density_w_per_hz).epsilon(1e-15));
    CHECK(units::db_to_linear(3) == doctest::Approx(kRadio.snr_threshold).epsilon(1e-15));
    CHECK(units::watts_to_dbm(units::dbm_to_watts(17.5)) == doctest::Approx(17.5));
}
