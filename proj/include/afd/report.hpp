#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "afd/harness.hpp"

// Result emission. Floats are written with 17 significant digits so every
// value parses back to the same double.
//
// results.csv columns: scheme,excess,metric,mean,std,trials,failed
// trials.csv columns:  scheme,excess,trial, then trial_csv_header(K)
namespace afd::report {

std::string format_double(double v);

std::string results_csv(const AggregateResult& result);

struct ResultRow {
    std::string scheme;
    std::size_t excess = 0;
    std::string metric;
    double mean = 0.0;
    double std = 0.0;
    std::size_t trials = 0;
    std::size_t failed = 0;
};

std::vector<ResultRow> parse_results_csv(std::string_view text);

nlohmann::json summary_json(const AggregateResult& result, const ScenarioConfig& config);

// One TrialMetrics as a CSV row. Columns: total_capacity, total_ee,
// aggregate_ee, hover_power_total, power_total, jfi, jfi_degenerate,
// served_count, unserved_count, cell_capacity_0..K-1, cell_ee_0..K-1.
std::string trial_csv_header(std::size_t n_uavs);
std::string trial_csv_row(const TrialMetrics& metrics);

std::string trials_csv(const AggregateResult& result);

// Per-UAV altitude (m) and hover power (W), and every nonzero link power (W).
nlohmann::json plan_json(const DeploymentPlan& plan);

// Writes text to path, creating parent directories. Throws
// std::runtime_error naming the path on failure.
void write_file(const std::filesystem::path& path, std::string_view text);

struct EmitOptions {
    bool csv = true;
    bool summary = true;
    bool trials = false;
};

// Writes results.csv / summary.json / trials.csv under out_dir.
std::vector<std::filesystem::path> emit_results(const AggregateResult& result, const ScenarioConfig& config,
                                                const std::filesystem::path& out_dir, const EmitOptions& options = {});

}  // namespace afd::report
