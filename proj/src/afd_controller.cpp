#include "afd/afd_controller.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "afd/errors.hpp"
#include "afd/metrics.hpp"

namespace afd {

const char* to_string(ReassociationScheme scheme) {
    switch (scheme) {
        case ReassociationScheme::SnrAware: return "snr_aware";
        case ReassociationScheme::LoadAware: return "load_aware";
        case ReassociationScheme::RandomHandover: return "random_handover";
    }
    return "unknown";
}

DeploymentPlan plan_from_world(const WorldState& world) {
    DeploymentPlan plan;
    plan.altitudes.reserve(world.uavs.size());
    plan.hover_powers.reserve(world.uavs.size());
    for (const auto& u : world.uavs) {
        plan.altitudes.push_back(u.h);
        plan.hover_powers.push_back(u.p_hov);
    }
    plan.association = world.association;
    plan.users = world.users;
    plan.uavs = world.uavs;
    return plan;
}

std::size_t reassociation_bound(ReassociationScheme scheme, std::size_t omega_size, std::size_t n_uavs) {
    switch (scheme) {
        case ReassociationScheme::SnrAware: return omega_size + 4 * (n_uavs - 1);
        case ReassociationScheme::LoadAware: return omega_size + (n_uavs - 1);
        case ReassociationScheme::RandomHandover: return n_uavs;
    }
    return 0;
}

Reassignment reassociate(ReassociationScheme scheme, int overloaded, const WorldState& world, Rng& rng) {
    const auto& assoc = world.association;
    const auto& omega = assoc.omega.at(static_cast<std::size_t>(overloaded));
    const std::size_t omega_max = world.config.omega_max;
    if (omega.size() <= omega_max) {
        throw DomainError(fmt::format("reassociate: UAV {} is not overloaded ({} <= {})", overloaded, omega.size(),
                                      omega_max));
    }
    if (world.uavs.size() < 2) throw DomainError("reassociate: need at least two UAV-BSs");

    std::vector<int> neighbors;
    for (const auto& u : world.uavs) {
        if (u.id != overloaded && assoc.load(u.id) < omega_max) neighbors.push_back(u.id);
    }
    if (neighbors.empty()) {
        throw NoCandidateError(fmt::format("reassociate: every neighbor of UAV {} is at capacity", overloaded));
    }

    const auto r = [&](int user, int uav) {
        return world.horizontal.at(static_cast<std::size_t>(user), static_cast<std::size_t>(uav));
    };
    // argmin over users with ties broken by the lower user id
    const auto better_user = [](double v, int id, double best_v, int best_id) {
        return v < best_v || (v == best_v && id < best_id);
    };

    Reassignment out;
    switch (scheme) {
        case ReassociationScheme::SnrAware: {
            double worst = 0.0;
            for (const int i : omega) {
                ++out.operations;
                const double s = world.snr(i, overloaded);
                if (out.user < 0 || better_user(s, i, worst, out.user)) {
                    worst = s;
                    out.user = i;
                }
            }
            const double theta = channel::optimal_elevation_angle(world.config.env);
            double nearest = 0.0;
            for (const int j : neighbors) {
                // angle, candidate altitude, LoS distance, comparison
                out.operations += 4;
                const double d = channel::max_los_distance(r(out.user, j), theta);
                if (out.uav < 0 || d < nearest) {
                    nearest = d;
                    out.uav = j;
                }
            }
            break;
        }
        case ReassociationScheme::LoadAware: {
            std::size_t lightest = 0;
            for (const int j : neighbors) {
                ++out.operations;
                if (out.uav < 0 || assoc.load(j) < lightest) {
                    lightest = assoc.load(j);
                    out.uav = j;
                }
            }
            double closest = 0.0;
            for (const int i : omega) {
                ++out.operations;
                const double d = r(i, out.uav);
                if (out.user < 0 || better_user(d, i, closest, out.user)) {
                    closest = d;
                    out.user = i;
                }
            }
            break;
        }
        case ReassociationScheme::RandomHandover: {
            ++out.operations;
            out.user = omega[rng.index(omega.size())];
            double closest = 0.0;
            for (const int j : neighbors) {
                ++out.operations;
                const double d = r(out.user, j);
                if (out.uav < 0 || d < closest) {
                    closest = d;
                    out.uav = j;
                }
            }
            break;
        }
    }
    return out;
}

DeploymentPlan run_afd(WorldState world, ReassociationScheme scheme, Rng& rng, AfdTrace* trace) {
    const auto& config = world.config;
    const std::size_t k = world.uavs.size();
    const double theta_opt = channel::optimal_elevation_angle(config.env);
    std::vector<bool> marked(k, false);

    for (std::size_t j = 0; j < k; ++j) {
        const int from = static_cast<int>(j);
        while (count_excess(world.association.omega[j], config.omega_max) > 0) {
            ReassociationRecord record;
            record.from = from;
            record.omega_size = world.association.omega[j].size();
            try {
                record.choice = reassociate(scheme, from, world, rng);
            } catch (const NoCandidateError& e) {
                throw InfeasibleError(fmt::format("run_afd: {} excess users remain on UAV {} and no neighbor has room",
                                                  count_excess(world.association.omega[j], config.omega_max), from));
            }
            const int user = record.choice.user;
            const int target = record.choice.uav;

            const double needed = config.bounds.clamp(channel::required_altitude(
                world.horizontal.at(static_cast<std::size_t>(user), static_cast<std::size_t>(target)), theta_opt));
            world.association.move(user, from, target);

            auto& uav = world.uavs[static_cast<std::size_t>(target)];
            uav.h = std::max(uav.h, needed);
            uav.altitude_changed = true;
            marked[static_cast<std::size_t>(target)] = true;
            marked[j] = true;

            record.committed_altitude = uav.h;
            if (trace) trace->records.push_back(record);
        }
    }

    for (std::size_t j = 0; j < k; ++j) {
        if (!marked[j]) continue;
        auto& uav = world.uavs[j];
        uav.p_hov = power::hover_power(config.phys, uav.h);
        for (const int i : world.association.omega[j]) {
            const double loss = world.path_loss(i, uav.id);
            world.association.tx_power.at(static_cast<std::size_t>(i), j) =
                power::provision_link_power(loss, config.radio, uav.p_hov);
        }
        if (trace) trace->reoptimized_uavs.push_back(uav.id);
    }
    return plan_from_world(world);
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Altitude: return "altitude";
        case ViolationKind::HoverPower: return "hover_power";
        case ViolationKind::TxPower: return "tx_power";
        case ViolationKind::MinPower: return "min_power";
        case ViolationKind::Capacity: return "capacity";
        case ViolationKind::Association: return "association";
        case ViolationKind::Fairness: return "fairness";
    }
    return "unknown";
}

std::string Violation::describe() const {
    return fmt::format("{}: uav={} user={} value={:.17g} limit={:.17g}", to_string(kind), uav, user, value, limit);
}

std::vector<Violation> validate_plan(const DeploymentPlan& plan, const ScenarioConfig& config) {
    std::vector<Violation> out;
    const auto& assoc = plan.association;
    const auto& radio = config.radio;
    const std::size_t k = plan.uavs.size();
    const std::size_t n = plan.users.size();
    // relative slack for values that went through pow/log round trips
    constexpr double kSlack = 1e-9;

    for (std::size_t j = 0; j < k; ++j) {
        const int id = static_cast<int>(j);
        const double h = plan.altitudes[j];
        if (h < config.bounds.h_min || h > config.bounds.h_max) {
            out.push_back({ViolationKind::Altitude, id, -1, h, h < config.bounds.h_min ? config.bounds.h_min : config.bounds.h_max});
        }
        if (plan.hover_powers[j] > config.phys.p_hov_max) {
            out.push_back({ViolationKind::HoverPower, id, -1, plan.hover_powers[j], config.phys.p_hov_max});
        }
        if (assoc.load(id) > config.omega_max) {
            out.push_back({ViolationKind::Capacity, id, -1, static_cast<double>(assoc.load(id)),
                           static_cast<double>(config.omega_max)});
        }
    }

    std::vector<int> appearances(n, 0);
    for (std::size_t j = 0; j < k; ++j) {
        for (const int i : assoc.omega[j]) {
            ++appearances[static_cast<std::size_t>(i)];
            if (assoc.serving[static_cast<std::size_t>(i)] != static_cast<int>(j)) {
                out.push_back({ViolationKind::Association, static_cast<int>(j), i, 0.0, 0.0});
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const int user = static_cast<int>(i);
        if (assoc.served[i] && appearances[i] != 1) {
            out.push_back({ViolationKind::Association, assoc.serving[i], user, static_cast<double>(appearances[i]), 1.0});
        }
        for (std::size_t j = 0; j < k; ++j) {
            const double p = assoc.tx_power.at(i, j);
            const bool linked = assoc.served[i] && assoc.serving[i] == static_cast<int>(j);
            if (p < 0.0 || p > radio.p_max_w * (1.0 + kSlack)) {
                out.push_back({ViolationKind::TxPower, static_cast<int>(j), user, p, radio.p_max_w});
            } else if (!linked && p != 0.0) {
                out.push_back({ViolationKind::Association, static_cast<int>(j), user, p, 0.0});
            }
            if (!linked) continue;
            const double loss = channel::average_path_loss(config.env, plan.altitudes[j],
                                                           horizontal_distance(plan.users[i], plan.uavs[j]));
            const double floor = std::max(channel::min_tx_power(loss, radio), radio.p_min_w);
            if (floor <= radio.p_max_w && p < floor * (1.0 - kSlack)) {
                out.push_back({ViolationKind::MinPower, static_cast<int>(j), user, p, floor});
            }
        }
    }

    std::vector<double> capacities;
    capacities.reserve(k);
    for (std::size_t j = 0; j < k; ++j) capacities.push_back(metrics::cell_capacity(plan, static_cast<int>(j), radio, config.env));
    const double jfi = metrics::jain_fairness(capacities);
    if (jfi < config.jfi_threshold) out.push_back({ViolationKind::Fairness, -1, -1, jfi, config.jfi_threshold});
    return out;
}

}  // namespace afd
