#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "afd/afd_controller.hpp"

namespace afd {

struct TrialMetrics {
    std::vector<double> per_cell_capacity;  // bit/s
    std::vector<double> per_cell_ee;        // bit/J
    double total_capacity = 0.0;            // bit/s
    double total_ee = 0.0;                  // sum of per-cell EE, bit/J
    double aggregate_ee = 0.0;              // total capacity / total power, bit/J
    double hover_power_total = 0.0;         // W
    double power_total = 0.0;               // W, hover + transmit
    double jfi = 1.0;
    bool jfi_degenerate = false;  // every cell capacity was zero
    std::size_t served_count = 0;
    std::size_t unserved_count = 0;

    bool operator==(const TrialMetrics&) const = default;
};

namespace metrics {

// Rate of one associated link at its committed power and plan geometry.
double link_rate(const DeploymentPlan& plan, int user, int uav, const RadioParams& radio, const EnvironmentParams& env);

double cell_capacity(const DeploymentPlan& plan, int uav, const RadioParams& radio, const EnvironmentParams& env);

// (sum C)^2 / (K sum C^2); 1 for an all-zero vector.
double jain_fairness(std::span<const double> capacities);

TrialMetrics aggregate_trial(const DeploymentPlan& plan, const ScenarioConfig& config);

}  // namespace metrics
}  // namespace afd
