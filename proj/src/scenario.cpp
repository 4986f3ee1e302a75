#include "afd/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "afd/errors.hpp"

namespace afd {

AssociationMap::AssociationMap(std::size_t users, std::size_t uavs)
    : omega(uavs), tx_power(users, uavs), served(users, false), serving(users, -1) {}

std::size_t AssociationMap::associated_count() const {
    std::size_t n = 0;
    for (const auto& o : omega) n += o.size();
    return n;
}

void AssociationMap::assign(int user, int uav) {
    omega[static_cast<std::size_t>(uav)].push_back(user);
    served[static_cast<std::size_t>(user)] = true;
    serving[static_cast<std::size_t>(user)] = uav;
}

void AssociationMap::move(int user, int from, int to) {
    auto& src = omega[static_cast<std::size_t>(from)];
    const auto it = std::find(src.begin(), src.end(), user);
    if (it == src.end()) {
        throw std::logic_error("AssociationMap::move: user " + std::to_string(user) + " is not associated with UAV " +
                               std::to_string(from));
    }
    src.erase(it);
    omega[static_cast<std::size_t>(to)].push_back(user);
    serving[static_cast<std::size_t>(user)] = to;
    tx_power.at(static_cast<std::size_t>(user), static_cast<std::size_t>(from)) = 0.0;
}

ScenarioConfig ScenarioConfig::defaults() {
    ScenarioConfig c;
    c.phys = UavPhysicalParams::defaults();
    c.cell_radius = channel::coverage_radius(c.h_init, channel::optimal_elevation_angle(c.env));
    return c;
}

void ScenarioConfig::validate() const {
    env.validate();
    phys.validate();
    radio.validate();
    bounds.validate();
    if (n_uavs < 2) throw ConfigError("scenario: need at least 2 UAV-BSs");
    if (omega_max == 0) throw ConfigError("scenario: omega_max must be positive");
    if (n_users < omega_max + excess_users) {
        throw ConfigError("scenario: n_users (" + std::to_string(n_users) + ") < omega_max + excess_users (" +
                          std::to_string(omega_max + excess_users) + ")");
    }
    if (!(cell_radius > 0.0)) throw ConfigError("scenario: cell_radius must be positive");
    if (!bounds.contains(h_init)) throw ConfigError("scenario: h_init outside [h_min, h_max]");
    if (!(jfi_threshold >= 0.0 && jfi_threshold <= 1.0)) throw ConfigError("scenario: jfi_threshold outside [0, 1]");
}

namespace {

struct LatticePoint {
    int ring;
    double angle;
    double x;
    double y;
};

}  // namespace

std::vector<UavBsState> place_uavbs(const ScenarioConfig& config) {
    if (config.n_uavs < 1) throw ConfigError("place_uavbs: need at least one UAV-BS");
    const double spacing = std::sqrt(3.0) * config.cell_radius;

    // Enough rings to hold n_uavs points: 1 + 3 n (n + 1) >= K.
    int rings = 0;
    while (1 + 3 * rings * (rings + 1) < static_cast<int>(config.n_uavs)) ++rings;

    std::vector<LatticePoint> points;
    for (int q = -rings; q <= rings; ++q) {
        for (int r = -rings; r <= rings; ++r) {
            const int ring = std::max({std::abs(q), std::abs(r), std::abs(q + r)});
            if (ring > rings) continue;
            const double x = spacing * (q + 0.5 * r);
            const double y = spacing * (std::sqrt(3.0) / 2.0 * r);
            double angle = std::atan2(y, x);
            if (angle < -1e-12) angle += 2.0 * std::numbers::pi;
            points.push_back({ring, std::max(angle, 0.0), x, y});
        }
    }
    std::sort(points.begin(), points.end(), [](const LatticePoint& l, const LatticePoint& r) {
        if (l.ring != r.ring) return l.ring < r.ring;
        return l.angle < r.angle;
    });

    const double p_hov = power::hover_power(config.phys, config.h_init);
    std::vector<UavBsState> uavs;
    uavs.reserve(config.n_uavs);
    for (std::size_t j = 0; j < config.n_uavs; ++j) {
        uavs.push_back({static_cast<int>(j), points[j].x, points[j].y, config.h_init, p_hov, false});
    }
    uavs[0].x = 0.0;
    uavs[0].y = 0.0;
    return uavs;
}

std::vector<GroundUser> generate_users(const ScenarioConfig& config, Rng& rng) {
    const std::size_t central = config.omega_max + config.excess_users;
    if (config.n_users < central) {
        throw ConfigError("generate_users: n_users smaller than omega_max + excess_users");
    }
    const std::size_t remainder = config.n_users - central;
    if (remainder > 0 && config.n_uavs < 2) {
        throw ConfigError("generate_users: users left over for neighbor cells but only one UAV-BS");
    }
    const auto uavs = place_uavbs(config);
    const std::size_t neighbors = config.n_uavs - 1;

    std::vector<GroundUser> users;
    users.reserve(config.n_users);
    const auto drop = [&](const UavBsState& cell) {
        const double radius = config.cell_radius * std::sqrt(rng.uniform());
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        users.push_back({static_cast<int>(users.size()), cell.x + radius * std::cos(angle),
                         cell.y + radius * std::sin(angle)});
    };
    for (std::size_t k = 0; k < central; ++k) drop(uavs[0]);
    for (std::size_t k = 0; k < remainder; ++k) drop(uavs[1 + k % neighbors]);
    return users;
}

double horizontal_distance(const GroundUser& user, const UavBsState& uav) {
    return std::hypot(uav.x - user.x, uav.y - user.y);
}

AssociationMap greedy_associate(const std::vector<GroundUser>& users, const std::vector<UavBsState>& uavs,
                                const RadioParams& radio, const EnvironmentParams& env, std::size_t omega_max,
                                bool enforce_capacity) {
    if (uavs.empty()) throw ConfigError("greedy_associate: no UAV-BSs");
    const std::size_t n = users.size();
    const std::size_t k = uavs.size();

    std::vector<int> best(n, 0);
    std::vector<double> best_snr(n, -1.0);
    LinkMatrix loss(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            loss.at(i, j) = channel::average_path_loss(env, uavs[j].h, horizontal_distance(users[i], uavs[j]));
            const double s = channel::snr(radio.p_max_w, loss.at(i, j), radio);
            if (s > best_snr[i]) {
                best_snr[i] = s;
                best[i] = static_cast<int>(j);
            }
        }
    }

    std::vector<std::vector<int>> candidates(k);
    for (std::size_t i = 0; i < n; ++i) candidates[static_cast<std::size_t>(best[i])].push_back(static_cast<int>(i));

    AssociationMap map(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto& c = candidates[j];
        if (enforce_capacity && c.size() > omega_max) {
            std::stable_sort(c.begin(), c.end(), [&](int l, int r) {
                return best_snr[static_cast<std::size_t>(l)] > best_snr[static_cast<std::size_t>(r)];
            });
            c.resize(omega_max);
            std::sort(c.begin(), c.end());
        }
        for (const int i : c) {
            map.assign(i, static_cast<int>(j));
            map.tx_power.at(static_cast<std::size_t>(i), j) =
                power::provision_link_power(loss.at(static_cast<std::size_t>(i), j), radio, uavs[j].p_hov);
        }
    }
    return map;
}

double WorldState::path_loss(int user, int uav) const {
    return channel::average_path_loss(config.env, uavs[static_cast<std::size_t>(uav)].h,
                                      horizontal.at(static_cast<std::size_t>(user), static_cast<std::size_t>(uav)));
}

double WorldState::snr(int user, int uav) const {
    return channel::snr(association.tx_power.at(static_cast<std::size_t>(user), static_cast<std::size_t>(uav)),
                        path_loss(user, uav), config.radio);
}

WorldState build_world(const ScenarioConfig& config, Rng& rng, bool enforce_capacity) {
    config.validate();
    WorldState w;
    w.config = config;
    w.uavs = place_uavbs(config);
    w.users = generate_users(config, rng);
    w.horizontal = LinkMatrix(w.users.size(), w.uavs.size());
    for (std::size_t i = 0; i < w.users.size(); ++i) {
        for (std::size_t j = 0; j < w.uavs.size(); ++j) w.horizontal.at(i, j) = horizontal_distance(w.users[i], w.uavs[j]);
    }
    w.association = greedy_associate(w.users, w.uavs, config.radio, config.env, config.omega_max, enforce_capacity);
    return w;
}

}  // namespace afd
