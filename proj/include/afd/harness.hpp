#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afd/afd_controller.hpp"
#include "afd/metrics.hpp"

namespace afd {

enum class Scheme { SnrAware, LoadAware, RandomHandover, GreedyBaseline };

inline constexpr Scheme kAllSchemes[] = {Scheme::SnrAware, Scheme::LoadAware, Scheme::RandomHandover,
                                         Scheme::GreedyBaseline};

const char* to_string(Scheme scheme);
// Accepts the CLI short names (snr, load, random, greedy) and to_string names.
std::optional<Scheme> parse_scheme(std::string_view name);

struct SweepSpec {
    std::vector<std::size_t> excess_values{0, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
    std::size_t trials = 1000;
    std::vector<Scheme> schemes{std::begin(kAllSchemes), std::end(kAllSchemes)};
    std::uint64_t base_seed = 1;
    bool keep_trials = false;  // retain per-trial metrics in the result

    void validate() const;
};

// Per-trial random streams. Users come from the placement stream, shared by
// every scheme for the same (seed, excess, trial); random handover draws
// from its own stream.
std::uint64_t placement_seed(std::uint64_t base_seed, std::size_t excess, std::size_t trial_index);
std::uint64_t handover_seed(std::uint64_t base_seed, std::size_t excess, std::size_t trial_index);

struct TrialOutcome {
    TrialMetrics metrics;
    DeploymentPlan plan;
    AfdTrace trace;
    std::vector<Violation> violations;
};

// config.rng_seed is the base seed and config.excess_users selects the
// hotspot size. Throws InfeasibleError with trial context.
TrialOutcome run_trial_detailed(const ScenarioConfig& config, Scheme scheme, std::size_t trial_index);
TrialMetrics run_trial(const ScenarioConfig& config, Scheme scheme, std::size_t trial_index);

std::vector<std::string> metric_names(std::size_t n_uavs);
std::vector<double> flatten(const TrialMetrics& metrics);

struct MetricSummary {
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation; 0 for a single trial
};

struct CellAggregate {
    Scheme scheme = Scheme::SnrAware;
    std::size_t excess = 0;
    std::size_t trials = 0;     // successful trials entering the statistics
    std::size_t failed = 0;     // trials that raised
    std::size_t violating = 0;  // successful trials whose plan failed validation
    std::vector<MetricSummary> metrics;  // aligned with AggregateResult::metric_names
};

struct TrialFailure {
    Scheme scheme = Scheme::SnrAware;
    std::size_t excess = 0;
    std::size_t trial = 0;
    std::string message;
};

struct TrialRecord {
    Scheme scheme = Scheme::SnrAware;
    std::size_t excess = 0;
    std::size_t trial = 0;
    TrialMetrics metrics;
};

struct AggregateResult {
    std::vector<std::string> metric_names;
    std::vector<CellAggregate> cells;  // scheme-major, then excess, in SweepSpec order
    std::vector<TrialFailure> failures;
    std::vector<TrialRecord> trials;   // only with SweepSpec::keep_trials
    std::uint64_t base_seed = 0;

    const CellAggregate& cell(Scheme scheme, std::size_t excess) const;
    double mean(Scheme scheme, std::size_t excess, std::string_view metric) const;
    std::size_t metric_index(std::string_view metric) const;
    std::size_t total_failed() const;
    std::size_t total_trials() const;
};

// Reference implementation: one trial after another.
AggregateResult run_sweep_serial(const SweepSpec& spec, const ScenarioConfig& config);

// Trials fanned out over `workers` OpenMP threads (0 = runtime default).
// Results are merged by (scheme, excess, trial) key, so the output is
// bitwise identical to run_sweep_serial for any worker count.
AggregateResult run_sweep(const SweepSpec& spec, const ScenarioConfig& config, int workers = 0);

}  // namespace afd
