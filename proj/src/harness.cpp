#include "afd/harness.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>
#include <omp.h>

#include "afd/errors.hpp"

namespace afd {

const char* to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::SnrAware: return "snr_aware";
        case Scheme::LoadAware: return "load_aware";
        case Scheme::RandomHandover: return "random_handover";
        case Scheme::GreedyBaseline: return "greedy_baseline";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    if (name == "snr" || name == "snr_aware") return Scheme::SnrAware;
    if (name == "load" || name == "load_aware") return Scheme::LoadAware;
    if (name == "random" || name == "random_handover") return Scheme::RandomHandover;
    if (name == "greedy" || name == "greedy_baseline") return Scheme::GreedyBaseline;
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (trials < 1) throw ConfigError("sweep: trials must be >= 1");
    if (excess_values.empty()) throw ConfigError("sweep: no excess values");
    if (schemes.empty()) throw ConfigError("sweep: no schemes");
    for (std::size_t a = 0; a < excess_values.size(); ++a) {
        for (std::size_t b = a + 1; b < excess_values.size(); ++b) {
            if (excess_values[a] == excess_values[b]) throw ConfigError("sweep: duplicate excess value");
        }
    }
    for (std::size_t a = 0; a < schemes.size(); ++a) {
        for (std::size_t b = a + 1; b < schemes.size(); ++b) {
            if (schemes[a] == schemes[b]) throw ConfigError("sweep: duplicate scheme");
        }
    }
}

std::uint64_t placement_seed(std::uint64_t base_seed, std::size_t excess, std::size_t trial_index) {
    return derive_seed(base_seed, {excess, trial_index});
}

std::uint64_t handover_seed(std::uint64_t base_seed, std::size_t excess, std::size_t trial_index) {
    return derive_seed(base_seed, {excess, trial_index, 1});
}

TrialOutcome run_trial_detailed(const ScenarioConfig& config, Scheme scheme, std::size_t trial_index) {
    Rng placement(placement_seed(config.rng_seed, config.excess_users, trial_index));
    TrialOutcome out;
    if (scheme == Scheme::GreedyBaseline) {
        out.plan = plan_from_world(build_world(config, placement, true));
    } else {
        Rng handover(handover_seed(config.rng_seed, config.excess_users, trial_index));
        const auto afd_scheme = scheme == Scheme::SnrAware    ? ReassociationScheme::SnrAware
                                : scheme == Scheme::LoadAware ? ReassociationScheme::LoadAware
                                                              : ReassociationScheme::RandomHandover;
        try {
            out.plan = run_afd(build_world(config, placement, false), afd_scheme, handover, &out.trace);
        } catch (const InfeasibleError& e) {
            throw InfeasibleError(fmt::format("{} (scheme={}, excess={}, trial={}, seed={})", e.what(), to_string(scheme),
                                              config.excess_users, trial_index, config.rng_seed));
        }
    }
    out.violations = validate_plan(out.plan, config);
    out.metrics = metrics::aggregate_trial(out.plan, config);
    return out;
}

TrialMetrics run_trial(const ScenarioConfig& config, Scheme scheme, std::size_t trial_index) {
    return run_trial_detailed(config, scheme, trial_index).metrics;
}

std::vector<std::string> metric_names(std::size_t n_uavs) {
    std::vector<std::string> names{"total_capacity", "total_ee",       "aggregate_ee",  "hover_power_total",
                                   "power_total",    "jfi",            "jfi_degenerate", "served_count",
                                   "unserved_count"};
    for (std::size_t j = 0; j < n_uavs; ++j) names.push_back(fmt::format("cell_capacity_{}", j));
    for (std::size_t j = 0; j < n_uavs; ++j) names.push_back(fmt::format("cell_ee_{}", j));
    return names;
}

std::vector<double> flatten(const TrialMetrics& m) {
    std::vector<double> v{m.total_capacity,
                          m.total_ee,
                          m.aggregate_ee,
                          m.hover_power_total,
                          m.power_total,
                          m.jfi,
                          m.jfi_degenerate ? 1.0 : 0.0,
                          static_cast<double>(m.served_count),
                          static_cast<double>(m.unserved_count)};
    v.insert(v.end(), m.per_cell_capacity.begin(), m.per_cell_capacity.end());
    v.insert(v.end(), m.per_cell_ee.begin(), m.per_cell_ee.end());
    return v;
}

const CellAggregate& AggregateResult::cell(Scheme scheme, std::size_t excess) const {
    for (const auto& c : cells) {
        if (c.scheme == scheme && c.excess == excess) return c;
    }
    throw std::out_of_range(fmt::format("no sweep cell for scheme={} excess={}", to_string(scheme), excess));
}

std::size_t AggregateResult::metric_index(std::string_view metric) const {
    for (std::size_t k = 0; k < metric_names.size(); ++k) {
        if (metric_names[k] == metric) return k;
    }
    throw std::out_of_range(fmt::format("unknown metric {}", metric));
}

double AggregateResult::mean(Scheme scheme, std::size_t excess, std::string_view metric) const {
    return cell(scheme, excess).metrics.at(metric_index(metric)).mean;
}

std::size_t AggregateResult::total_failed() const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.failed;
    return n;
}

std::size_t AggregateResult::total_trials() const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.trials + c.failed;
    return n;
}

namespace {

struct WorkUnit {
    Scheme scheme;
    std::size_t excess;
    std::size_t trial;
};

struct UnitResult {
    std::optional<TrialMetrics> metrics;
    bool violating = false;
    std::string error;
};

std::vector<WorkUnit> enumerate_units(const SweepSpec& spec) {
    std::vector<WorkUnit> units;
    units.reserve(spec.schemes.size() * spec.excess_values.size() * spec.trials);
    for (const auto s : spec.schemes) {
        for (const auto e : spec.excess_values) {
            for (std::size_t t = 0; t < spec.trials; ++t) units.push_back({s, e, t});
        }
    }
    return units;
}

std::vector<ScenarioConfig> configs_per_excess(const SweepSpec& spec, const ScenarioConfig& base) {
    spec.validate();
    std::vector<ScenarioConfig> out;
    for (const auto e : spec.excess_values) {
        ScenarioConfig c = base;
        c.excess_users = e;
        c.rng_seed = spec.base_seed;
        c.validate();
        out.push_back(c);
    }
    return out;
}

UnitResult run_unit(const WorkUnit& unit, const ScenarioConfig& config) {
    UnitResult r;
    try {
        auto outcome = run_trial_detailed(config, unit.scheme, unit.trial);
        r.violating = !outcome.violations.empty();
        r.metrics = std::move(outcome.metrics);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

AggregateResult merge(const SweepSpec& spec, const ScenarioConfig& config, const std::vector<WorkUnit>& units,
                      std::vector<UnitResult>& results) {
    AggregateResult out;
    out.metric_names = metric_names(config.n_uavs);
    out.base_seed = spec.base_seed;
    const std::size_t m = out.metric_names.size();

    std::size_t u = 0;
    for (const auto s : spec.schemes) {
        for (const auto e : spec.excess_values) {
            CellAggregate cell;
            cell.scheme = s;
            cell.excess = e;
            std::vector<std::vector<double>> samples;
            for (std::size_t t = 0; t < spec.trials; ++t, ++u) {
                auto& r = results[u];
                if (!r.metrics) {
                    ++cell.failed;
                    out.failures.push_back({s, e, units[u].trial, r.error});
                    continue;
                }
                if (r.violating) ++cell.violating;
                samples.push_back(flatten(*r.metrics));
                if (spec.keep_trials) out.trials.push_back({s, e, units[u].trial, std::move(*r.metrics)});
            }
            cell.trials = samples.size();
            cell.metrics.assign(m, {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()});
            if (!samples.empty()) {
                const double n = static_cast<double>(samples.size());
                for (std::size_t k = 0; k < m; ++k) {
                    double sum = 0.0;
                    for (const auto& x : samples) sum += x[k];
                    const double mean = sum / n;
                    double ss = 0.0;
                    for (const auto& x : samples) ss += (x[k] - mean) * (x[k] - mean);
                    cell.metrics[k] = {mean, samples.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0};
                }
            }
            out.cells.push_back(std::move(cell));
        }
    }
    return out;
}

std::size_t excess_slot(const SweepSpec& spec, std::size_t excess) {
    for (std::size_t k = 0; k < spec.excess_values.size(); ++k) {
        if (spec.excess_values[k] == excess) return k;
    }
    return 0;
}

}  // namespace

AggregateResult run_sweep_serial(const SweepSpec& spec, const ScenarioConfig& config) {
    const auto configs = configs_per_excess(spec, config);
    const auto units = enumerate_units(spec);
    std::vector<UnitResult> results(units.size());
    for (std::size_t u = 0; u < units.size(); ++u) {
        results[u] = run_unit(units[u], configs[excess_slot(spec, units[u].excess)]);
    }
    return merge(spec, config, units, results);
}

AggregateResult run_sweep(const SweepSpec& spec, const ScenarioConfig& config, int workers) {
    const auto configs = configs_per_excess(spec, config);
    const auto units = enumerate_units(spec);
    std::vector<UnitResult> results(units.size());
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    const auto n = static_cast<std::ptrdiff_t>(units.size());

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t u = 0; u < n; ++u) {
        const auto& unit = units[static_cast<std::size_t>(u)];
        results[static_cast<std::size_t>(u)] = run_unit(unit, configs[excess_slot(spec, unit.excess)]);
    }
    return merge(spec, config, units, results);
}

}  // namespace afd
