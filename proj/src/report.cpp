#include "afd/report.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "afd/config.hpp"

namespace afd::report {

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

std::string results_csv(const AggregateResult& result) {
    std::string out = "scheme,excess,metric,mean,std,trials,failed\n";
    for (std::size_t k = 0; k < result.metric_names.size(); ++k) {
        for (const auto& cell : result.cells) {
            out += fmt::format("{},{},{},{},{},{},{}\n", to_string(cell.scheme), cell.excess, result.metric_names[k],
                               format_double(cell.metrics[k].mean), format_double(cell.metrics[k].std), cell.trials,
                               cell.failed);
        }
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view s) {
    // std::from_chars for double is not available on every toolchain we build with
    const std::string tmp(s);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(tmp.c_str(), &end);
    if (end == tmp.c_str() || *end != '\0') throw std::runtime_error("results.csv: bad number '" + tmp + "'");
    return v;
}

std::size_t parse_count(std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("results.csv: bad count '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::vector<ResultRow> parse_results_csv(std::string_view text) {
    std::vector<ResultRow> rows;
    bool header = true;
    for (const auto line : split(text, '\n')) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 7) throw std::runtime_error("results.csv: expected 7 fields");
        rows.push_back({std::string(f[0]), parse_count(f[1]), std::string(f[2]), parse_double(f[3]), parse_double(f[4]),
                        parse_count(f[5]), parse_count(f[6])});
    }
    return rows;
}

nlohmann::json summary_json(const AggregateResult& result, const ScenarioConfig& config) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : result.cells) {
        nlohmann::json metrics = nlohmann::json::object();
        for (std::size_t k = 0; k < result.metric_names.size(); ++k) {
            metrics[result.metric_names[k]] = {{"mean", cell.metrics[k].mean}, {"std", cell.metrics[k].std}};
        }
        cells.push_back({{"scheme", to_string(cell.scheme)},
                         {"excess", cell.excess},
                         {"trials", cell.trials},
                         {"failed", cell.failed},
                         {"violating", cell.violating},
                         {"metrics", std::move(metrics)}});
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : result.failures) {
        failures.push_back({{"scheme", to_string(f.scheme)}, {"excess", f.excess}, {"trial", f.trial}, {"message", f.message}});
    }
    return {{"base_seed", result.base_seed},
            {"config", config_to_json(config)},
            {"metric_names", result.metric_names},
            {"cells", std::move(cells)},
            {"failures", std::move(failures)}};
}

std::string trial_csv_header(std::size_t n_uavs) {
    std::string out;
    for (const auto& name : metric_names(n_uavs)) {
        if (!out.empty()) out += ',';
        out += name;
    }
    return out;
}

std::string trial_csv_row(const TrialMetrics& metrics) {
    std::string out;
    for (const double v : flatten(metrics)) {
        if (!out.empty()) out += ',';
        out += format_double(v);
    }
    return out;
}

std::string trials_csv(const AggregateResult& result) {
    const std::size_t k = result.trials.empty() ? 0 : result.trials.front().metrics.per_cell_capacity.size();
    std::string out = "scheme,excess,trial," + trial_csv_header(k) + "\n";
    for (const auto& t : result.trials) {
        out += fmt::format("{},{},{},{}\n", to_string(t.scheme), t.excess, t.trial, trial_csv_row(t.metrics));
    }
    return out;
}

nlohmann::json plan_json(const DeploymentPlan& plan) {
    nlohmann::json uavs = nlohmann::json::array();
    for (std::size_t j = 0; j < plan.uavs.size(); ++j) {
        uavs.push_back({{"id", plan.uavs[j].id},
                        {"x_m", plan.uavs[j].x},
                        {"y_m", plan.uavs[j].y},
                        {"altitude_m", plan.altitudes[j]},
                        {"hover_power_w", plan.hover_powers[j]},
                        {"load", plan.association.load(static_cast<int>(j))}});
    }
    nlohmann::json links = nlohmann::json::array();
    for (std::size_t i = 0; i < plan.users.size(); ++i) {
        const int j = plan.association.serving[i];
        if (j < 0) continue;
        links.push_back({{"user", plan.users[i].id},
                         {"uav", j},
                         {"tx_power_w", plan.association.tx_power.at(i, static_cast<std::size_t>(j))}});
    }
    nlohmann::json unserved = nlohmann::json::array();
    for (std::size_t i = 0; i < plan.users.size(); ++i) {
        if (!plan.association.served[i]) unserved.push_back(plan.users[i].id);
    }
    return {{"uavs", std::move(uavs)}, {"links", std::move(links)}, {"unserved", std::move(unserved)}};
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing: " + std::strerror(errno));
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<std::filesystem::path> emit_results(const AggregateResult& result, const ScenarioConfig& config,
                                                const std::filesystem::path& out_dir, const EmitOptions& options) {
    if (result.cells.empty()) throw std::invalid_argument("emit_results: empty result");
    std::vector<std::filesystem::path> written;
    if (options.csv) {
        written.push_back(out_dir / "results.csv");
        write_file(written.back(), results_csv(result));
    }
    if (options.summary) {
        written.push_back(out_dir / "summary.json");
        write_file(written.back(), summary_json(result, config).dump(2) + "\n");
    }
    if (options.trials) {
        written.push_back(out_dir / "trials.csv");
        write_file(written.back(), trials_csv(result));
    }
    return written;
}

}  // namespace afd::report
