#include "casclab_tool/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "casclab/errors.hpp"
#include "casclab/experiments.hpp"
#include "casclab/graph_io.hpp"
#include "casclab/line_picking.hpp"
#include "casclab_tool/config.hpp"
#include "casclab_tool/outputs.hpp"
#include "casclab_tool/svg.hpp"

namespace fs = std::filesystem;

namespace casclab::tool {

namespace {

std::string fmt_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

GeneratorSpec spec_from_options(const GenerateOptions& opt) {
    if (opt.model == "er") {
        ErSpec spec;
        spec.n = opt.n;
        spec.q = opt.q >= 0.0 ? opt.q : opt.z / static_cast<double>(opt.n - 1);
        if (spec.q < 0.0 || spec.q > 1.0)
            throw ValidationError("--q must lie in [0,1], got " + fmt_value(spec.q));
        return spec;
    }
    if (opt.model == "waxman") return WaxmanSpec{opt.n, opt.s, opt.z};
    if (opt.model == "ba") return BaSpec{opt.n, opt.m};
    if (opt.model == "price") return PriceSpec{opt.n, opt.c, opt.directed};
    throw ValidationError("--model must be er, waxman, ba or price: " + opt.model);
}

std::string describe_spec(const GeneratorSpec& spec) {
    ExperimentConfig cfg;
    cfg.generator = spec;
    // Reuse the config renderer; only the model lines matter here.
    std::istringstream is(render_experiment_config(cfg));
    std::ostringstream os;
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("model", 0) == 0 || line.rfind("n =", 0) == 0 ||
            line.rfind("s =", 0) == 0 || line.rfind("z =", 0) == 0 ||
            line.rfind("q =", 0) == 0 || line.rfind("m =", 0) == 0 ||
            line.rfind("c =", 0) == 0 || line.rfind("directed", 0) == 0)
            os << line << "\n";
    }
    return os.str();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ValidationError("cannot create output directory " + dir + ": " + ec.message());
}

void write_experiment_outputs(const std::string& dir, const ExperimentConfig& cfg,
                              const ExperimentSummary& summary, const std::string& started) {
    ensure_dir(dir);
    write_sizes_csv((fs::path(dir) / "sizes.csv").string(), summary);
    write_summary_json((fs::path(dir) / "summary.json").string(), summary);
    write_manifest((fs::path(dir) / "manifest.json").string(), render_experiment_config(cfg),
                   cfg.master_seed, started, timestamp_now());
}

} // namespace

void cmd_generate(const GenerateOptions& opt) {
    const GeneratorSpec spec = spec_from_options(opt);
    const std::string started = timestamp_now();
    Rng rng(opt.seed, substream(kStreamGraph, 0));
    const Graph g = generate(spec, rng);

    write_edge_list_file(opt.out_prefix + ".edges", g);
    if (g.has_positions()) write_positions_file(opt.out_prefix + ".pos", g);

    std::ostringstream echo;
    echo << describe_spec(spec) << "seed = " << opt.seed << "\n";
    write_manifest(opt.out_prefix + ".manifest.json", echo.str(), opt.seed, started,
                   timestamp_now(),
                   {{"edges_file", opt.out_prefix + ".edges"},
                    {"positions_file", g.has_positions() ? opt.out_prefix + ".pos" : ""}});
    std::printf("wrote %s.edges (n=%zu, e=%zu, mean degree %.4f)\n", opt.out_prefix.c_str(),
                g.num_nodes(), g.num_edges(), g.mean_degree());
}

void cmd_experiment(const ExperimentOptions& opt) {
    const ExperimentConfig cfg = load_experiment_config(opt.config_path);
    const std::string started = timestamp_now();
    const ExperimentSummary summary = run_experiment(cfg, opt.threads);
    write_experiment_outputs(opt.out_dir, cfg, summary, started);
    std::printf("global-cascade frequency %.4f [%.4f, %.4f], zero fraction %.4f\n",
                summary.frequency_mean, summary.ci_lo, summary.ci_hi, summary.zero_fraction);
}

void cmd_sweep(const SweepOptions& opt) {
    const ExperimentConfig base = load_experiment_config(opt.config_path);
    SweepParam param;
    if (opt.param == "s")
        param = SweepParam::S;
    else if (opt.param == "z")
        param = SweepParam::Z;
    else if (opt.param == "c")
        param = SweepParam::C;
    else
        throw ValidationError("--param must be s, z or c: " + opt.param);

    const std::string started = timestamp_now();
    const auto results = sweep(param, opt.values, base, opt.threads);
    ensure_dir(opt.out_dir);
    write_sweep_csv((fs::path(opt.out_dir) / "sweep.csv").string(), results);
    for (const auto& [value, summary] : results) {
        ExperimentConfig cfg = base;
        const std::string sub =
            (fs::path(opt.out_dir) / (opt.param + "=" + fmt_value(value))).string();
        ensure_dir(sub);
        write_sizes_csv((fs::path(sub) / "sizes.csv").string(), summary);
        write_summary_json((fs::path(sub) / "summary.json").string(), summary);
    }
    write_manifest((fs::path(opt.out_dir) / "manifest.json").string(),
                   render_experiment_config(base), base.master_seed, started, timestamp_now(),
                   {{"sweep_param", opt.param}});
    std::printf("wrote %s/sweep.csv with %zu rows\n", opt.out_dir.c_str(), results.size());
}

void cmd_betweenness(const BetweennessOptions& opt) {
    const std::string started = timestamp_now();
    const auto points = betweenness_degree_experiment(opt.s_values, opt.n, opt.z,
                                                      opt.realizations, opt.tau, opt.seed,
                                                      opt.threads);
    ensure_dir(opt.out_dir);
    write_betweenness_csv((fs::path(opt.out_dir) / "betweenness.csv").string(), points);
    std::ostringstream echo;
    echo << "n = " << opt.n << "\nz = " << opt.z << "\nrealizations = " << opt.realizations
         << "\ntau = " << opt.tau << "\nmaster_seed = " << opt.seed << "\n";
    write_manifest((fs::path(opt.out_dir) / "manifest.json").string(), echo.str(), opt.seed,
                   started, timestamp_now());
    std::printf("wrote %s/betweenness.csv with %zu rows\n", opt.out_dir.c_str(), points.size());
}

void cmd_plot(const PlotOptions& opt) {
    if (opt.inputs.empty()) throw ValidationError("plot needs at least one input file");
    PlotSpec plot;
    if (opt.kind == "ccdf") {
        plot.title = "Cascade size CCDF";
        plot.x_label = "cascade size fraction";
        plot.y_label = "P(size >= x)";
        plot.log_x = true;
        plot.log_y = true;
        for (const std::string& path : opt.inputs) {
            const SizesFile sf = read_sizes_csv(path);
            const auto points = ccdf(sf.sizes, sf.n);
            Series series;
            series.label = fs::path(path).parent_path().filename().string();
            if (series.label.empty()) series.label = fs::path(path).filename().string();
            series.step = true;
            for (const auto& [x, p] : points) {
                series.x.push_back(x);
                series.y.push_back(p);
            }
            plot.series.push_back(std::move(series));
        }
    } else if (opt.kind == "sweep") {
        plot.title = "Global cascade frequency";
        plot.x_label = "parameter value";
        plot.y_label = "frequency";
        for (const std::string& path : opt.inputs) {
            Series series;
            series.label = fs::path(path).parent_path().filename().string();
            if (series.label.empty()) series.label = fs::path(path).filename().string();
            for (const SweepRow& row : read_sweep_csv(path)) {
                series.x.push_back(row.value);
                series.y.push_back(row.frequency);
                series.y_lo.push_back(row.ci_lo);
                series.y_hi.push_back(row.ci_hi);
            }
            plot.series.push_back(std::move(series));
        }
    } else if (opt.kind == "betweenness") {
        plot.title = "Mean degree of high-betweenness nodes";
        plot.x_label = "s";
        plot.y_label = "mean degree";
        for (const std::string& path : opt.inputs) {
            Series series;
            series.label = fs::path(path).parent_path().filename().string();
            if (series.label.empty()) series.label = fs::path(path).filename().string();
            for (const BetweennessRow& row : read_betweenness_csv(path)) {
                if (row.missing) continue;
                series.x.push_back(row.s);
                series.y.push_back(row.mean_degree);
                series.y_lo.push_back(row.ci_lo);
                series.y_hi.push_back(row.ci_hi);
            }
            plot.series.push_back(std::move(series));
        }
    } else {
        throw ValidationError("--kind must be ccdf, sweep or betweenness: " + opt.kind);
    }
    write_svg(opt.out_path, plot);
    std::printf("wrote %s\n", opt.out_path.c_str());
}

} // namespace casclab::tool
