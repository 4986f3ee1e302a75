#include "afd/metrics.hpp"

#include <algorithm>

namespace afd::metrics {

double link_rate(const DeploymentPlan& plan, int user, int uav, const RadioParams& radio, const EnvironmentParams& env) {
    const auto i = static_cast<std::size_t>(user);
    const auto j = static_cast<std::size_t>(uav);
    const double loss = channel::average_path_loss(env, plan.altitudes[j], horizontal_distance(plan.users[i], plan.uavs[j]));
    return channel::achievable_rate(radio, channel::snr(plan.association.tx_power.at(i, j), loss, radio));
}

double cell_capacity(const DeploymentPlan& plan, int uav, const RadioParams& radio, const EnvironmentParams& env) {
    double total = 0.0;
    for (const int i : plan.association.omega[static_cast<std::size_t>(uav)]) {
        if (plan.association.served[static_cast<std::size_t>(i)]) total += link_rate(plan, i, uav, radio, env);
    }
    return total;
}

double jain_fairness(std::span<const double> capacities) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const double c : capacities) {
        sum += c;
        sum_sq += c * c;
    }
    if (capacities.empty() || sum_sq == 0.0) return 1.0;
    return sum * sum / (static_cast<double>(capacities.size()) * sum_sq);
}

TrialMetrics aggregate_trial(const DeploymentPlan& plan, const ScenarioConfig& config) {
    TrialMetrics m;
    const std::size_t k = plan.uavs.size();
    const auto& assoc = plan.association;
    double tx_total = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> rates;
        std::vector<double> powers;
        for (const int i : assoc.omega[j]) {
            if (!assoc.served[static_cast<std::size_t>(i)]) continue;
            rates.push_back(link_rate(plan, i, static_cast<int>(j), config.radio, config.env));
            powers.push_back(assoc.tx_power.at(static_cast<std::size_t>(i), j));
        }
        double capacity = 0.0;
        for (const double r : rates) capacity += r;
        m.per_cell_capacity.push_back(capacity);
        m.per_cell_ee.push_back(power::energy_efficiency(rates, powers, plan.hover_powers[j]));
        m.total_capacity += capacity;
        m.total_ee += m.per_cell_ee.back();
        m.hover_power_total += plan.hover_powers[j];
        for (const double p : powers) tx_total += p;
    }
    m.power_total = m.hover_power_total + tx_total;
    m.aggregate_ee = m.total_capacity / m.power_total;
    m.jfi_degenerate = std::all_of(m.per_cell_capacity.begin(), m.per_cell_capacity.end(), [](double c) { return c == 0.0; });
    m.jfi = jain_fairness(m.per_cell_capacity);
    m.served_count = static_cast<std::size_t>(std::count(assoc.served.begin(), assoc.served.end(), true));
    m.unserved_count = assoc.served.size() - m.served_count;
    return m;
}

}  // namespace afd::metrics
