#pragma once

#include <cstdint>
#include <string>

#include "entroute/network.hpp"

namespace entroute {

enum class GraphModel { erdos_renyi, random_geometric };

/// Ensemble parameters for random test networks. Defaults reproduce the
/// reference experimental setup.
struct GeneratorConfig {
  GraphModel model = GraphModel::erdos_renyi;
  std::uint64_t n = 20;
  double avg_degree = 3.0;
  double p_min = 0.5;
  double t_min = 1.0;
  double t_max = 100.0;
  double sigma_min = 1e4;
  double sigma_max = 1e5;
  double f_trunc = 0.9;
  double alpha = 2.0;
  std::uint64_t seed = 0;
};

/// Lower bound of the link-fidelity sampling window implied by cfg: the
/// truncation fidelity raised to alpha over the model's typical maximum
/// path length.
double fidelity_floor(const GeneratorConfig& cfg);

/// Deterministic random network for the configured ensemble.
Network generate(const GeneratorConfig& cfg);

/// T distinct nodes drawn uniformly without replacement.
TerminalSet sample_terminals(const Network& net, std::size_t count, std::uint64_t seed);

/// Stable per-instance seed stream from one master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

GraphModel parse_model(const std::string& name);
std::string model_name(GraphModel model);

} // namespace entroute
