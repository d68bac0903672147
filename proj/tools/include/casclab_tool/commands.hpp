#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace casclab::tool {

struct GenerateOptions {
    std::string model; // er | waxman | ba | price
    std::size_t n = 0;
    double s = 0.0;
    double z = 0.0;
    double q = -1.0; // <0 means "not given"; er derives q from z then
    std::size_t m = 0;
    double c = 0.0;
    bool directed = false;
    std::uint64_t seed = 0;
    std::string out_prefix = "graph";
};

/// Writes <prefix>.edges, <prefix>.pos (spatial models) and
/// <prefix>.manifest.json.
void cmd_generate(const GenerateOptions& opt);

struct ExperimentOptions {
    std::string config_path;
    std::string out_dir;
    unsigned threads = 0;
};

/// Writes sizes.csv, summary.json and manifest.json under out_dir.
void cmd_experiment(const ExperimentOptions& opt);

struct SweepOptions {
    std::string config_path;
    std::string param; // s | z | c
    std::vector<double> values;
    std::string out_dir;
    unsigned threads = 0;
};

/// Writes sweep.csv, manifest.json, and per-value subdirectories with the
/// full experiment outputs.
void cmd_sweep(const SweepOptions& opt);

struct BetweennessOptions {
    std::vector<double> s_values;
    std::size_t n = 0;
    double z = 6.0;
    std::size_t realizations = 30;
    double tau = 0.03;
    std::uint64_t seed = 0;
    std::string out_dir;
    unsigned threads = 0;
};

/// Writes betweenness.csv and manifest.json under out_dir.
void cmd_betweenness(const BetweennessOptions& opt);

struct PlotOptions {
    std::string kind; // ccdf | sweep | betweenness
    std::vector<std::string> inputs;
    std::string out_path = "plot.svg";
};

void cmd_plot(const PlotOptions& opt);

} // namespace casclab::tool
