#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "afd/channel_model.hpp"
#include "afd/errors.hpp"
#include "afd/uav_power.hpp"
#include "oracles.hpp"

using namespace afd;

TEST_CASE("hover power reference values") {
    const auto phys = UavPhysicalParams::defaults();
    CHECK(phys.induced_hover_power() == doctest::Approx(57.75600998595037).epsilon(1e-12));
    CHECK(phys.blade_profile_factor() == doctest::Approx(0.0005861300621089075).epsilon(1e-12));
    CHECK(power::hover_power(phys, 0) == doctest::Approx(57.78986251967059).epsilon(1e-12));
    CHECK(power::hover_power(phys, 100) == doctest::Approx(58.07082413406281).epsilon(1e-12));
    CHECK(power::hover_power(phys, 400) == doctest::Approx(58.9219314156114).epsilon(1e-12));
    CHECK(phys.p_hov_max == doctest::Approx(2 * 58.9219314156114).epsilon(1e-12));
}

TEST_CASE("hover power is strictly increasing and invertible") {
    const auto phys = UavPhysicalParams::defaults();
    double prev = 0.0;
    for (double h = 0; h <= 400; h += 2.5) {
        const double p = power::hover_power(phys, h);
        CHECK(p > prev);
        prev = p;
        CHECK(oracle::rel_diff(power::altitude_from_hover_power(phys, p), h) < 1e-9);
    }
}

TEST_CASE("hover power errors") {
    auto phys = UavPhysicalParams::defaults();
    CHECK_THROWS_AS(power::hover_power(phys, -1), DomainError);
    CHECK_THROWS_AS(power::altitude_from_hover_power(phys, 10), DomainError);
    phys.p_hov_max = 58.0;
    CHECK_THROWS_AS(power::hover_power(phys, 400), HoverLimitError);
    CHECK_NOTHROW(power::hover_power(phys, 30));
}

TEST_CASE("physical parameter validation") {
    auto phys = UavPhysicalParams::defaults();
    CHECK_NOTHROW(phys.validate());
    phys.rotor_count = 0;
    CHECK_THROWS_AS(phys.validate(), ConfigError);
    AltitudeBounds bounds{400, 30};
    CHECK_THROWS_AS(bounds.validate(), ConfigError);
    const AltitudeBounds ok{};
    CHECK(ok.clamp(10) == 30);
    CHECK(ok.clamp(500) == 400);
    CHECK(ok.clamp(123) == 123);
}

TEST_CASE("energy efficiency aggregates") {
    const std::vector<double> rates{31.65e6};
    const std::vector<double> powers{1.59e-3};
    CHECK(power::energy_efficiency(rates, powers, 58) == doctest::Approx(545674.6961591915).epsilon(1e-12));
    CHECK(power::total_power(powers, 58) == doctest::Approx(58.00159));
    const std::vector<double> two{1, 2};
    CHECK_THROWS_AS(power::energy_efficiency(two, powers, 58), DomainError);
    const std::vector<double> none;
    CHECK_THROWS_AS(power::energy_efficiency(none, none, 0), DomainError);
}

TEST_CASE("slope matches a central difference") {
    const RadioParams radio{};
    std::mt19937_64 g(7);
    for (int k = 0; k < 500; ++k) {
        const double gain = std::pow(10.0, -oracle::log_uniform(g, 70, 130) / 10.0);
        const double hover = oracle::log_uniform(g, 1e-4, 100);
        const double p = oracle::log_uniform(g, 1e-6, 5);
        const double step = p * 1e-6;
        const double fd = (power::link_energy_efficiency(p + step, gain, radio, hover) -
                           power::link_energy_efficiency(p - step, gain, radio, hover)) /
                          (2 * step);
        const double an = power::link_energy_efficiency_slope(p, gain, radio, hover);
        CHECK(std::abs(an - fd) <= 1e-5 * (std::abs(an) + std::abs(fd)) + 1e-6 * std::abs(power::link_energy_efficiency(p, gain, radio, hover) / p));
    }
}

TEST_CASE("optimal tx power equals the golden-section maximum") {
    const RadioParams radio{};
    std::mt19937_64 g(2024);
    std::uniform_real_distribution<double> pl_dist(70, 130);
    for (int k = 0; k < 300; ++k) {
        const double pl = pl_dist(g);
        const double gain = channel::linear_gain(pl);
        const double hover = oracle::log_uniform(g, 1e-4, 120);
        const double pmin = channel::min_tx_power(pl, radio);
        const double got = power::optimal_tx_power(gain, radio, hover, pmin);
        if (pmin > radio.p_max_w) {
            CHECK(got == radio.p_max_w);
            continue;
        }
        const double want = oracle::golden_section_max(
            [&](double p) { return oracle::link_ee(p, gain, radio.bandwidth_hz, radio.noise_power_w(), hover); }, pmin,
            radio.p_max_w);
        CHECK(oracle::rel_diff(got, want) < 1e-6);
    }
}

TEST_CASE("optimal tx power clamps at the defaults") {
    const RadioParams radio{};
    const auto phys = UavPhysicalParams::defaults();
    const double hover = power::hover_power(phys, 30);
    for (double pl = 70; pl < 120; pl += 5) {
        CHECK(power::provision_link_power(pl, radio, hover) == radio.p_max_w);
    }
    // Far below the noise floor the threshold cannot be met; transmit at p_max.
    CHECK(power::provision_link_power(150, radio, hover) == radio.p_max_w);
    // A tiny hover draw yields an interior optimum above the threshold.
    const double p = power::provision_link_power(90, radio, 1e-3);
    CHECK(p > channel::min_tx_power(90, radio));
    CHECK(p < radio.p_max_w);
}
