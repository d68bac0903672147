#pragma once

#include <cstddef>
#include <variant>

#include "casclab/graph.hpp"
#include "casclab/rng.hpp"

namespace casclab {

struct ErSpec {
    std::size_t n = 0;
    double q = 0.0; // attachment probability
};

struct WaxmanSpec {
    std::size_t n = 0;
    double s = 0.0;        // locality decay
    double target_z = 0.0; // desired mean degree; q is calibrated from it
};

struct BaSpec {
    std::size_t n = 0;
    std::size_t m = 1; // initial connections per arriving node
};

struct PriceSpec {
    std::size_t n = 0;
    double c = 1.0; // mean initial connections (zero-truncated Poisson)
    bool directed = false;
};

using GeneratorSpec = std::variant<ErSpec, WaxmanSpec, BaSpec, PriceSpec>;

/// G(n, q): every unordered pair is an edge independently with probability q.
Graph gen_er(std::size_t n, double q, Rng& rng);

/// Spatial graph on the unit square: pair (u,v) at distance d is an edge with
/// probability q * exp(-s d). Positions are stored on the Graph. s = 0
/// coincides with gen_er in distribution.
Graph gen_waxman(std::size_t n, double s, double q, Rng& rng);

/// Preferential attachment from m isolated seed nodes; every arrival attaches
/// m edges to distinct existing nodes with probability proportional to current
/// degree (degree-0 nodes weighted as 1 during bootstrap). e = (n-m)*m.
Graph gen_ba(std::size_t n, std::size_t m, Rng& rng);

/// BA growth with a zero-truncated Poisson(c) number of initial connections,
/// capped at the number of existing nodes. The directed variant orients every
/// edge from the new node to the existing node.
Graph gen_price(std::size_t n, double c, bool directed, Rng& rng);

/// Dispatch on the spec; Waxman calibrates q via waxman_q.
Graph generate(const GeneratorSpec& spec, Rng& rng);

/// Throws ValidationError if the spec violates its parameter domain.
void validate(const GeneratorSpec& spec);

} // namespace casclab
