#pragma once

#include <string>
#include <utility>
#include <vector>

#include "casclab/experiments.hpp"

namespace casclab::tool {

/// sizes.csv: realization,shock,seed_node,size,steps,is_global — integers
/// only, '\n' newlines, byte-identical for a fixed master seed.
void write_sizes_csv(const std::string& path, const ExperimentSummary& summary);

void write_summary_json(const std::string& path, const ExperimentSummary& summary);

/// sweep.csv: param_value,frequency_mean,ci_lo,ci_hi,mean_size_all,mean_size_global
void write_sweep_csv(const std::string& path,
                     const std::vector<std::pair<double, ExperimentSummary>>& results);

/// betweenness.csv: s,mean_degree,ci_lo,ci_hi,excluded
void write_betweenness_csv(const std::string& path,
                           const std::vector<BetweennessDegreePoint>& points);

/// Manifest describing one run: resolved config echo, tool version,
/// timestamps, master seed and the conventions this build fixes.
void write_manifest(const std::string& path, const std::string& config_echo,
                    std::uint64_t master_seed, const std::string& started,
                    const std::string& finished,
                    const std::vector<std::pair<std::string, std::string>>& extra = {});

std::string timestamp_now();

// Readers used by the plot command.
struct SizesFile {
    std::vector<std::uint32_t> sizes;
    std::size_t n = 0; // taken from the sibling summary.json when present
};
SizesFile read_sizes_csv(const std::string& path);

struct SweepRow {
    double value = 0.0;
    double frequency = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};
std::vector<SweepRow> read_sweep_csv(const std::string& path);

struct BetweennessRow {
    double s = 0.0;
    double mean_degree = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    bool missing = false;
};
std::vector<BetweennessRow> read_betweenness_csv(const std::string& path);

} // namespace casclab::tool
