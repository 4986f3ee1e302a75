// afd_sim: Monte Carlo sweep driver for the UAV-BS deployment heuristics.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "afd/config.hpp"
#include "afd/errors.hpp"
#include "afd/harness.hpp"
#include "afd/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitAllFailed = 3;
constexpr int kExitIo = 4;

std::size_t to_count(const std::string& s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw afd::ConfigError("bad excess value '" + s + "'");
    return v;
}

// "0,10,20" or "lo:hi:step" (inclusive).
std::vector<std::size_t> parse_excess(const std::string& text) {
    std::vector<std::size_t> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t pos; (pos = text.find(':', start)) != std::string::npos; start = pos + 1) {
            parts.push_back(text.substr(start, pos - start));
        }
        parts.push_back(text.substr(start));
        if (parts.size() != 2 && parts.size() != 3) throw afd::ConfigError("excess range must be lo:hi[:step]");
        const std::size_t lo = to_count(parts[0]);
        const std::size_t hi = to_count(parts[1]);
        const std::size_t step = parts.size() == 3 ? to_count(parts[2]) : 1;
        if (step == 0 || hi < lo) throw afd::ConfigError("bad excess range '" + text + "'");
        for (std::size_t e = lo; e <= hi; e += step) out.push_back(e);
    } else {
        std::size_t start = 0;
        for (std::size_t pos; (pos = text.find(',', start)) != std::string::npos; start = pos + 1) {
            out.push_back(to_count(text.substr(start, pos - start)));
        }
        out.push_back(to_count(text.substr(start)));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sweep the altitude/power deployment heuristics over hotspot sizes"};

    std::string config_path;
    std::string scheme_name = "all";
    std::string excess_text = "0:50:5";
    std::size_t trials = 1000;
    std::optional<std::uint64_t> seed;
    std::string out_dir = "results";
    int workers = 0;
    std::vector<std::string> emit{"csv", "summary"};

    app.add_option("--config", config_path, "scenario JSON file")->envname("AFD_CONFIG");
    // Values are checked after parsing: CLI11 silently drops environment
    // values that fail a validator, and a bad AFD_* setting should be an error.
    app.add_option("--scheme", scheme_name, "snr, load, random, greedy or all")->envname("AFD_SCHEME");
    app.add_option("--excess", excess_text, "list (0,10,20) or range (lo:hi:step)")->envname("AFD_EXCESS");
    app.add_option("--trials", trials, "trials per (scheme, excess)")->envname("AFD_TRIALS");
    app.add_option("--seed", seed, "base seed (default: scenario rng_seed)")->envname("AFD_SEED");
    app.add_option("--out", out_dir, "output directory")->envname("AFD_OUT");
    app.add_option("--workers", workers, "OpenMP threads, 0 = runtime default")->envname("AFD_WORKERS");
    app.add_option("--emit", emit, "outputs: csv, summary, plan, trials")
        ->delimiter(',')
        ->envname("AFD_EMIT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    afd::ScenarioConfig config;
    afd::SweepSpec spec;
    try {
        if (scheme_name != "all" && !afd::parse_scheme(scheme_name)) {
            throw afd::ConfigError("unknown scheme '" + scheme_name + "'");
        }
        if (workers < 0) throw afd::ConfigError("--workers must be >= 0");
        for (const auto& e : emit) {
            if (e != "csv" && e != "summary" && e != "plan" && e != "trials") {
                throw afd::ConfigError("unknown --emit value '" + e + "'");
            }
        }
        config = config_path.empty() ? afd::ScenarioConfig::defaults() : afd::load_config(config_path);
        spec.excess_values = parse_excess(excess_text);
        spec.trials = trials;
        spec.base_seed = seed.value_or(config.rng_seed);
        if (scheme_name != "all") spec.schemes = {*afd::parse_scheme(scheme_name)};
        spec.validate();
        for (const auto e : spec.excess_values) {
            auto c = config;
            c.excess_users = e;
            c.validate();
        }
    } catch (const std::exception& e) {
        fmt::print(stderr, "afd_sim: config error: {}\n", e.what());
        return kExitConfig;
    }

    const auto has = [&](const char* name) { return std::find(emit.begin(), emit.end(), name) != emit.end(); };
    spec.keep_trials = has("trials");

    const auto result = afd::run_sweep(spec, config, workers);

    for (const auto& cell : result.cells) {
        fmt::print("{:<16} excess={:<3} trials={:<5} failed={:<4} capacity={:.4f} Gbit/s  jfi={:.5f}\n",
                   afd::to_string(cell.scheme), cell.excess, cell.trials, cell.failed,
                   cell.trials ? result.mean(cell.scheme, cell.excess, "total_capacity") / 1e9 : 0.0,
                   cell.trials ? result.mean(cell.scheme, cell.excess, "jfi") : 0.0);
    }
    for (const auto& f : result.failures) {
        fmt::print(stderr, "afd_sim: {} excess={} trial={}: {}\n", afd::to_string(f.scheme), f.excess, f.trial,
                   f.message);
    }

    if (result.total_failed() == result.total_trials()) {
        fmt::print(stderr, "afd_sim: every trial failed\n");
        return kExitAllFailed;
    }

    try {
        afd::report::EmitOptions options{has("csv"), has("summary"), has("trials")};
        for (const auto& p : afd::report::emit_results(result, config, out_dir, options)) {
            fmt::print("wrote {}\n", p.string());
        }
        if (has("plan")) {
            for (const auto scheme : spec.schemes) {
                for (const auto e : spec.excess_values) {
                    auto c = config;
                    c.excess_users = e;
                    c.rng_seed = spec.base_seed;
                    const auto path = std::filesystem::path(out_dir) / "plans" /
                                      fmt::format("{}_excess{}_trial0.json", afd::to_string(scheme), e);
                    try {
                        const auto outcome = afd::run_trial_detailed(c, scheme, 0);
                        afd::report::write_file(path, afd::report::plan_json(outcome.plan).dump(2) + "\n");
                    } catch (const afd::InfeasibleError& err) {
                        fmt::print(stderr, "afd_sim: no plan for {}: {}\n", path.filename().string(), err.what());
                        continue;
                    }
                    fmt::print("wrote {}\n", path.string());
                }
            }
        }
    } catch (const std::exception& e) {
        fmt::print(stderr, "afd_sim: {}\n", e.what());
        return kExitIo;
    }
    return 0;
}
