#include "casclab_tool/outputs.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "casclab/errors.hpp"

namespace casclab::tool {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ValidationError("cannot open for writing: " + path);
    return os;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

void write_sizes_csv(const std::string& path, const ExperimentSummary& summary) {
    auto os = open_out(path);
    os << "realization,shock,seed_node,size,steps,is_global\n";
    for (std::size_t r = 0; r < summary.per_realization.size(); ++r) {
        const auto& shocks = summary.per_realization[r].shocks;
        for (std::size_t j = 0; j < shocks.size(); ++j) {
            const ShockRecord& sr = shocks[j];
            os << r << ',' << j << ',' << sr.seed << ',' << sr.size << ',' << sr.steps << ','
               << (sr.is_global ? 1 : 0) << '\n';
        }
    }
}

void write_summary_json(const std::string& path, const ExperimentSummary& summary) {
    nlohmann::json j;
    j["n"] = summary.n;
    j["frequency_mean"] = summary.frequency_mean;
    j["frequency_ci95"] = {summary.ci_lo, summary.ci_hi};
    j["ci_degenerate"] = summary.ci_degenerate;
    j["mean_size_all"] = summary.mean_size_all;
    if (summary.mean_size_global)
        j["mean_size_global"] = *summary.mean_size_global;
    else
        j["mean_size_global"] = nullptr;
    j["zero_fraction"] = summary.zero_fraction;
    auto& per = j["per_realization"] = nlohmann::json::array();
    for (const auto& rec : summary.per_realization) {
        per.push_back({{"giant_size", rec.giant_size},
                       {"global_count", rec.global_count},
                       {"zero_count", rec.zero_count},
                       {"shocks", rec.shocks.size()}});
    }
    auto& cc = j["ccdf"] = nlohmann::json::array();
    for (const auto& [x, p] : summary.ccdf_points) cc.push_back({x, p});
    open_out(path) << j.dump(2) << "\n";
}

void write_sweep_csv(const std::string& path,
                     const std::vector<std::pair<double, ExperimentSummary>>& results) {
    auto os = open_out(path);
    os << "param_value,frequency_mean,ci_lo,ci_hi,mean_size_all,mean_size_global\n";
    for (const auto& [value, summary] : results) {
        os << fmt(value) << ',' << fmt(summary.frequency_mean) << ',' << fmt(summary.ci_lo)
           << ',' << fmt(summary.ci_hi) << ',' << fmt(summary.mean_size_all) << ','
           << (summary.mean_size_global ? fmt(*summary.mean_size_global) : std::string("nan"))
           << '\n';
    }
}

void write_betweenness_csv(const std::string& path,
                           const std::vector<BetweennessDegreePoint>& points) {
    auto os = open_out(path);
    os << "s,mean_degree,ci_lo,ci_hi,excluded\n";
    for (const auto& pt : points) {
        os << fmt(pt.s) << ',';
        if (pt.mean_degree)
            os << fmt(*pt.mean_degree) << ',' << fmt(pt.ci_lo) << ',' << fmt(pt.ci_hi);
        else
            os << "nan,nan,nan";
        os << ',' << pt.excluded << '\n';
    }
}

std::string timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const std::string& path, const std::string& config_echo,
                    std::uint64_t master_seed, const std::string& started,
                    const std::string& finished,
                    const std::vector<std::pair<std::string, std::string>>& extra) {
    nlohmann::json j;
    j["tool_version"] = CASCLAB_VERSION;
    j["config_echo"] = config_echo;
    j["master_seed"] = master_seed;
    j["started"] = started;
    j["finished"] = finished;
    j["conventions"] = {
        {"directed_degree", "out-degree"},
        {"directed_cascade_inputs", "in-neighbors, threshold normalized by in-degree"},
        {"components", "weak connectivity for directed graphs"},
        {"betweenness_normalization", "(n-1)(n-2)/2"},
        {"update_rule", "strict: active neighbor count > phi * z"},
        {"zero_cascade", "final size exactly 1"},
    };
    for (const auto& [k, v] : extra) j[k] = v;
    open_out(path) << j.dump(2) << "\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(field);
    return out;
}

} // namespace

SizesFile read_sizes_csv(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open: " + path);
    SizesFile out;
    std::string line;
    if (!std::getline(is, line) || line.rfind("realization,", 0) != 0)
        throw ValidationError("not a sizes.csv file: " + path);
    std::uint32_t max_size = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() < 6) throw ValidationError("malformed sizes.csv row: " + line);
        const auto size = static_cast<std::uint32_t>(std::stoul(fields[3]));
        out.sizes.push_back(size);
        max_size = std::max(max_size, size);
    }
    const auto summary_path = std::filesystem::path(path).parent_path() / "summary.json";
    if (std::filesystem::exists(summary_path)) {
        std::ifstream ss(summary_path);
        nlohmann::json j;
        ss >> j;
        out.n = j.value("n", static_cast<std::size_t>(max_size));
    } else {
        out.n = max_size;
    }
    return out;
}

std::vector<SweepRow> read_sweep_csv(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open: " + path);
    std::string line;
    if (!std::getline(is, line) || line.rfind("param_value,", 0) != 0)
        throw ValidationError("not a sweep.csv file: " + path);
    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() < 4) throw ValidationError("malformed sweep.csv row: " + line);
        rows.push_back({std::stod(fields[0]), std::stod(fields[1]), std::stod(fields[2]),
                        std::stod(fields[3])});
    }
    return rows;
}

std::vector<BetweennessRow> read_betweenness_csv(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open: " + path);
    std::string line;
    if (!std::getline(is, line) || line.rfind("s,", 0) != 0)
        throw ValidationError("not a betweenness.csv file: " + path);
    std::vector<BetweennessRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() < 5) throw ValidationError("malformed betweenness.csv row: " + line);
        BetweennessRow row;
        row.s = std::stod(fields[0]);
        row.mean_degree = std::stod(fields[1]);
        row.ci_lo = std::stod(fields[2]);
        row.ci_hi = std::stod(fields[3]);
        row.missing = std::isnan(row.mean_degree);
        rows.push_back(row);
    }
    return rows;
}

} // namespace casclab::tool
