#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "casclab_tool/commands.hpp"

namespace {

unsigned env_threads() {
    if (const char* v = std::getenv("CASCLAB_THREADS")) {
        const long t = std::strtol(v, nullptr, 10);
        if (t > 0) return static_cast<unsigned>(t);
    }
    return 0; // library default (hardware concurrency)
}

std::string default_out_dir(const std::string& fallback) {
    if (const char* v = std::getenv("CASCLAB_OUT_DIR")) return v;
    return fallback;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"casclab: threshold-cascade simulation on random graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(CASCLAB_VERSION));

    using namespace casclab::tool;

    GenerateOptions gen;
    auto* cmd_gen = app.add_subcommand("generate", "Generate a random graph and write edge-list files");
    cmd_gen->add_option("--model", gen.model, "er | waxman | ba | price")->required();
    cmd_gen->add_option("--n", gen.n, "node count")->required();
    cmd_gen->add_option("--s", gen.s, "Waxman locality decay");
    cmd_gen->add_option("--z", gen.z, "target mean degree (waxman, or er without --q)");
    cmd_gen->add_option("--q", gen.q, "attachment probability (er)");
    cmd_gen->add_option("--m", gen.m, "initial connections (ba)");
    cmd_gen->add_option("--c", gen.c, "mean initial connections (price)");
    cmd_gen->add_flag("--directed", gen.directed, "directed Price variant");
    cmd_gen->add_option("--seed", gen.seed, "RNG seed");
    cmd_gen->add_option("--out", gen.out_prefix, "output file prefix (default: graph)");

    ExperimentOptions exp;
    auto* cmd_exp = app.add_subcommand("experiment", "Run a cascade experiment from a config file");
    cmd_exp->add_option("--config", exp.config_path, "config file")->required();
    cmd_exp->add_option("--out", exp.out_dir, "output directory");
    cmd_exp->add_option("--threads", exp.threads, "worker threads (0 = auto)");

    SweepOptions swp;
    auto* cmd_swp = app.add_subcommand("sweep", "Run one experiment per parameter value");
    cmd_swp->add_option("--config", swp.config_path, "base config file")->required();
    cmd_swp->add_option("--param", swp.param, "s | z | c")->required();
    cmd_swp->add_option("--values", swp.values, "parameter values")->required()->delimiter(',');
    cmd_swp->add_option("--out", swp.out_dir, "output directory");
    cmd_swp->add_option("--threads", swp.threads, "worker threads (0 = auto)");

    BetweennessOptions btw;
    auto* cmd_btw = app.add_subcommand("betweenness",
                                       "Mean degree of high-betweenness nodes across s values");
    cmd_btw->add_option("--s", btw.s_values, "s values")->required()->delimiter(',');
    cmd_btw->add_option("--n", btw.n, "node count")->required();
    cmd_btw->add_option("--z", btw.z, "target mean degree (default 6)");
    cmd_btw->add_option("--realizations", btw.realizations, "realizations per s (default 30)");
    cmd_btw->add_option("--tau", btw.tau, "betweenness threshold (default 0.03)");
    cmd_btw->add_option("--seed", btw.seed, "RNG seed");
    cmd_btw->add_option("--out", btw.out_dir, "output directory");
    cmd_btw->add_option("--threads", btw.threads, "worker threads (0 = auto)");

    PlotOptions plt;
    auto* cmd_plt = app.add_subcommand("plot", "Render results to a deterministic SVG");
    cmd_plt->add_option("--kind", plt.kind, "ccdf | sweep | betweenness")->required();
    cmd_plt->add_option("--out", plt.out_path, "output SVG path (default plot.svg)");
    cmd_plt->add_option("inputs", plt.inputs, "input result files")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_gen) {
            cmd_generate(gen);
        } else if (*cmd_exp) {
            if (exp.out_dir.empty()) exp.out_dir = default_out_dir("results");
            if (exp.threads == 0) exp.threads = env_threads();
            cmd_experiment(exp);
        } else if (*cmd_swp) {
            if (swp.out_dir.empty()) swp.out_dir = default_out_dir("sweep_results");
            if (swp.threads == 0) swp.threads = env_threads();
            cmd_sweep(swp);
        } else if (*cmd_btw) {
            if (btw.out_dir.empty()) btw.out_dir = default_out_dir("betweenness_results");
            if (btw.threads == 0) btw.threads = env_threads();
            cmd_betweenness(btw);
        } else if (*cmd_plt) {
            cmd_plot(plt);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
