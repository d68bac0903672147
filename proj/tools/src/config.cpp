#include "casclab_tool/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "casclab/errors.hpp"

namespace casclab::tool {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class KeyValues {
public:
    explicit KeyValues(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ValidationError("config line is not 'key = value': " + line);
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty()) throw ValidationError("config line has empty key: " + line);
            if (!map_.emplace(key, value).second)
                throw ValidationError("duplicate config key: " + key);
        }
    }

    bool has(const std::string& key) const { return map_.count(key) > 0; }

    std::string get(const std::string& key) const {
        auto it = map_.find(key);
        if (it == map_.end()) throw ValidationError("missing required config key: " + key);
        used_.insert(it->first);
        return it->second;
    }

    std::string get_or(const std::string& key, const std::string& fallback) const {
        return has(key) ? get(key) : fallback;
    }

    double get_double(const std::string& key) const {
        const std::string v = get(key);
        try {
            std::size_t pos = 0;
            const double d = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return d;
        } catch (const std::exception&) {
            throw ValidationError("config key '" + key + "' is not a number: " + v);
        }
    }

    std::uint64_t get_uint(const std::string& key) const {
        const std::string v = get(key);
        try {
            std::size_t pos = 0;
            const std::uint64_t u = std::stoull(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return u;
        } catch (const std::exception&) {
            throw ValidationError("config key '" + key + "' is not a non-negative integer: " + v);
        }
    }

    bool get_bool(const std::string& key) const {
        const std::string v = get(key);
        if (v == "0" || v == "false") return false;
        if (v == "1" || v == "true") return true;
        throw ValidationError("config key '" + key + "' is not a boolean (0/1/true/false): " + v);
    }

    void check_all_used() const {
        for (const auto& [k, v] : map_)
            if (!used_.count(k)) throw ValidationError("unknown config key: " + k);
    }

private:
    std::map<std::string, std::string> map_;
    mutable std::set<std::string> used_;
};

} // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
    const KeyValues kv(text);
    ExperimentConfig cfg;

    const std::string model = kv.get("model");
    const std::uint64_t n = kv.get_uint("n");
    if (n < 1) throw ValidationError("config key 'n' must be >= 1");
    if (model == "er") {
        ErSpec spec;
        spec.n = n;
        if (kv.has("q"))
            spec.q = kv.get_double("q");
        else
            spec.q = kv.get_double("z") / static_cast<double>(n - 1);
        if (spec.q < 0.0 || spec.q > 1.0)
            throw ValidationError("config key 'q' must lie in [0,1]");
        cfg.generator = spec;
    } else if (model == "waxman") {
        WaxmanSpec spec;
        spec.n = n;
        spec.s = kv.get_double("s");
        spec.target_z = kv.get_double("z");
        cfg.generator = spec;
    } else if (model == "ba") {
        BaSpec spec;
        spec.n = n;
        spec.m = kv.get_uint("m");
        cfg.generator = spec;
    } else if (model == "price") {
        PriceSpec spec;
        spec.n = n;
        spec.c = kv.get_double("c");
        spec.directed = kv.has("directed") ? kv.get_bool("directed") : false;
        cfg.generator = spec;
    } else {
        throw ValidationError("config key 'model' must be er, waxman, ba or price: " + model);
    }
    validate(cfg.generator);

    if (kv.has("phi_lo") || kv.has("phi_hi")) {
        UniformThreshold u;
        u.lo = kv.get_double("phi_lo");
        u.hi = kv.get_double("phi_hi");
        cfg.thresholds = u;
    } else {
        DeltaThreshold d;
        d.phi_star = kv.has("phi_star") ? kv.get_double("phi_star") : 0.18;
        if (d.phi_star <= 0.0 || d.phi_star > 1.0)
            throw ValidationError("config key 'phi_star' must lie in (0,1]");
        cfg.thresholds = d;
    }

    cfg.shocks = kv.get_uint("k");
    if (cfg.shocks < 1) throw ValidationError("config key 'k' must be >= 1");
    cfg.realizations = kv.get_uint("realizations");
    if (cfg.realizations < 1) throw ValidationError("config key 'realizations' must be >= 1");

    const std::string rule = kv.get_or("rule", "fraction_of_network");
    if (rule == "fraction_of_network") {
        FractionOfNetwork r;
        r.b = kv.has("b") ? kv.get_double("b") : 0.1;
        if (r.b <= 0.0 || r.b > 1.0) throw ValidationError("config key 'b' must lie in (0,1]");
        cfg.rule = r;
    } else if (rule == "fraction_of_giant") {
        FractionOfGiant r;
        r.gamma = kv.has("gamma") ? kv.get_double("gamma") : 1.0;
        if (r.gamma <= 0.0 || r.gamma > 1.0)
            throw ValidationError("config key 'gamma' must lie in (0,1]");
        cfg.rule = r;
    } else if (rule == "empirical_max") {
        cfg.rule = EmpiricalMax{};
    } else {
        throw ValidationError("config key 'rule' must be fraction_of_network, "
                              "fraction_of_giant or empirical_max: " + rule);
    }

    const std::string strategy = kv.get_or("seed_strategy", "uniform");
    if (strategy == "uniform") {
        cfg.seed_strategy = UniformRandomSeed{};
    } else if (strategy == "top_degree") {
        TopDegreeFraction t;
        t.p = kv.has("top_fraction") ? kv.get_double("top_fraction") : 0.01;
        if (t.p <= 0.0 || t.p > 1.0)
            throw ValidationError("config key 'top_fraction' must lie in (0,1]");
        cfg.seed_strategy = t;
    } else if (strategy == "explicit") {
        ExplicitSeeds ex;
        std::istringstream ls(kv.get("seeds"));
        std::string tok;
        while (std::getline(ls, tok, ','))
            ex.nodes.push_back(static_cast<NodeId>(std::stoull(trim(tok))));
        if (ex.nodes.empty()) throw ValidationError("config key 'seeds' must list at least one node");
        cfg.seed_strategy = ex;
    } else {
        throw ValidationError("config key 'seed_strategy' must be uniform, top_degree "
                              "or explicit: " + strategy);
    }

    cfg.master_seed = kv.has("master_seed") ? kv.get_uint("master_seed") : 0;
    kv.check_all_used();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_experiment_config(buf.str());
}

std::string render_experiment_config(const ExperimentConfig& config) {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&os](const auto& sp) {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, ErSpec>) {
                os << "model = er\nn = " << sp.n << "\nq = " << sp.q << "\n";
            } else if constexpr (std::is_same_v<T, WaxmanSpec>) {
                os << "model = waxman\nn = " << sp.n << "\ns = " << sp.s
                   << "\nz = " << sp.target_z << "\n";
            } else if constexpr (std::is_same_v<T, BaSpec>) {
                os << "model = ba\nn = " << sp.n << "\nm = " << sp.m << "\n";
            } else {
                os << "model = price\nn = " << sp.n << "\nc = " << sp.c
                   << "\ndirected = " << (sp.directed ? 1 : 0) << "\n";
            }
        },
        config.generator);
    if (const auto* d = std::get_if<DeltaThreshold>(&config.thresholds)) {
        os << "phi_star = " << d->phi_star << "\n";
    } else {
        const auto& u = std::get<UniformThreshold>(config.thresholds);
        os << "phi_lo = " << u.lo << "\nphi_hi = " << u.hi << "\n";
    }
    os << "k = " << config.shocks << "\nrealizations = " << config.realizations << "\n";
    if (const auto* r = std::get_if<FractionOfNetwork>(&config.rule)) {
        os << "rule = fraction_of_network\nb = " << r->b << "\n";
    } else if (const auto* gf = std::get_if<FractionOfGiant>(&config.rule)) {
        os << "rule = fraction_of_giant\ngamma = " << gf->gamma << "\n";
    } else {
        os << "rule = empirical_max\n";
    }
    if (std::holds_alternative<UniformRandomSeed>(config.seed_strategy)) {
        os << "seed_strategy = uniform\n";
    } else if (const auto* t = std::get_if<TopDegreeFraction>(&config.seed_strategy)) {
        os << "seed_strategy = top_degree\ntop_fraction = " << t->p << "\n";
    } else {
        const auto& ex = std::get<ExplicitSeeds>(config.seed_strategy);
        os << "seed_strategy = explicit\nseeds = ";
        for (std::size_t i = 0; i < ex.nodes.size(); ++i)
            os << (i ? "," : "") << ex.nodes[i];
        os << "\n";
    }
    os << "master_seed = " << config.master_seed << "\n";
    return os.str();
}

} // namespace casclab::tool
