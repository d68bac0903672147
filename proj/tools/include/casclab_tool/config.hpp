#pragma once

#include <string>

#include "casclab/experiments.hpp"

namespace casclab::tool {

/// Parses the flat key = value experiment config format. Recognized keys:
///   model (er|waxman|ba|price), n, q, s, z, m, c, directed,
///   phi_star | phi_lo + phi_hi, k, realizations,
///   rule (fraction_of_network|fraction_of_giant|empirical_max), b, gamma,
///   seed_strategy (uniform|top_degree|explicit), top_fraction, seeds,
///   master_seed.
/// Lines starting with '#' are comments. Unknown keys and malformed values
/// raise ValidationError naming the field.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

/// Round-trip: render a config back to the flat text format.
std::string render_experiment_config(const ExperimentConfig& config);

} // namespace casclab::tool
