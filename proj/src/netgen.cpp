#include "entroute/netgen.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace entroute {
namespace {

// Samplers are pinned to explicit bit manipulation of the mt19937_64
// stream so that generated networks are bit-stable across platforms and
// standard-library versions.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + uniform_unit(rng) * (hi - lo);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) {
      return x % n;
    }
  }
}

std::string node_id(std::uint64_t index, std::uint64_t n) {
  std::size_t width = 1;
  for (std::uint64_t v = n - 1; v >= 10; v /= 10) {
    ++width;
  }
  std::string digits = std::to_string(index);
  std::string out = "n";
  out.append(width - digits.size(), '0');
  out += digits;
  return out;
}

void check_config(const GeneratorConfig& cfg) {
  if (cfg.n < 3) {
    throw ValidationError("generator needs at least 3 nodes");
  }
  if (!(cfg.avg_degree > 0.0) || cfg.avg_degree >= static_cast<double>(cfg.n)) {
    throw ValidationError("avg_degree must lie in (0, N)");
  }
  if (cfg.model == GraphModel::erdos_renyi && !(cfg.avg_degree > 1.0)) {
    throw ValidationError("Erdos-Renyi ensemble needs avg_degree > 1");
  }
  if (!(cfg.p_min > 0.0 && cfg.p_min < 1.0)) {
    throw ValidationError("p_min must lie in (0, 1)");
  }
  if (!(cfg.t_min > 0.0 && cfg.t_min <= cfg.t_max)) {
    throw ValidationError("time bounds must satisfy 0 < t_min <= t_max");
  }
  if (!(cfg.sigma_min > 0.0 && cfg.sigma_min <= cfg.sigma_max)) {
    throw ValidationError("memory bounds must satisfy 0 < sigma_min <= sigma_max");
  }
  if (!(cfg.f_trunc > 0.0 && cfg.f_trunc < 1.0)) {
    throw ValidationError("f_trunc must lie in (0, 1)");
  }
  if (!(cfg.alpha > 0.0)) {
    throw ValidationError("alpha must be positive");
  }
}

} // namespace

double fidelity_floor(const GeneratorConfig& cfg) {
  const double n = static_cast<double>(cfg.n);
  double d_max = 0.0;
  switch (cfg.model) {
  case GraphModel::erdos_renyi:
    d_max = std::log(n) / std::log(cfg.avg_degree);
    break;
  case GraphModel::random_geometric:
    d_max = std::sqrt(n / std::log(n));
    break;
  }
  return std::pow(cfg.f_trunc, cfg.alpha / d_max);
}

Network generate(const GeneratorConfig& cfg) {
  check_config(cfg);
  const double f_min = fidelity_floor(cfg);
  if (!(f_min > 0.5)) {
    throw ValidationError("configuration yields a fidelity floor at or below 1/2; "
                          "links would carry no entanglement");
  }

  std::mt19937_64 rng(cfg.seed);
  const std::uint64_t n = cfg.n;

  // draw order is frozen: positions (geometric model only), topology,
  // node parameters, link parameters
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  if (cfg.model == GraphModel::erdos_renyi) {
    const double p_link = cfg.avg_degree / static_cast<double>(n - 1);
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = i + 1; j < n; ++j) {
        if (uniform_unit(rng) < p_link) {
          pairs.emplace_back(static_cast<NodeIndex>(i), static_cast<NodeIndex>(j));
        }
      }
    }
  } else {
    std::vector<double> x(n);
    std::vector<double> y(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      x[i] = uniform_unit(rng);
      y[i] = uniform_unit(rng);
    }
    const double radius =
        std::sqrt(cfg.avg_degree / (std::numbers::pi * static_cast<double>(n)));
    const double r2 = radius * radius;
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = i + 1; j < n; ++j) {
        const double dx = x[i] - x[j];
        const double dy = y[i] - y[j];
        if (dx * dx + dy * dy <= r2) {
          pairs.emplace_back(static_cast<NodeIndex>(i), static_cast<NodeIndex>(j));
        }
      }
    }
  }

  std::vector<NodeParams> nodes;
  nodes.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    NodeParams node;
    node.id = node_id(i, n);
    node.k = uniform_in(rng, cfg.p_min, 1.0);
    node.sigma = uniform_in(rng, cfg.sigma_min, cfg.sigma_max);
    nodes.push_back(std::move(node));
  }

  std::vector<Network::LinkSpec> links;
  links.reserve(pairs.size());
  for (const auto& [i, j] : pairs) {
    Network::LinkSpec spec;
    spec.u = nodes[i].id;
    spec.v = nodes[j].id;
    const double F = uniform_in(rng, f_min, 1.0);
    spec.gamma = (4.0 * F - 1.0) / 3.0;
    spec.p = uniform_in(rng, cfg.p_min, 1.0);
    spec.t = uniform_in(rng, cfg.t_min, cfg.t_max);
    links.push_back(std::move(spec));
  }

  return Network(std::move(nodes), links);
}

TerminalSet sample_terminals(const Network& net, std::size_t count, std::uint64_t seed) {
  if (count < 2) {
    throw ValidationError("terminal set needs at least two nodes");
  }
  if (count > net.node_count()) {
    throw ValidationError("cannot sample more terminals than nodes");
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeIndex> pool(net.node_count());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    pool[i] = static_cast<NodeIndex>(i);
  }
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t pick = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[pick]);
    ids.push_back(net.node(pool[i]).id);
  }
  return make_terminals(net, ids);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

GraphModel parse_model(const std::string& name) {
  if (name == "er" || name == "erdos-renyi") {
    return GraphModel::erdos_renyi;
  }
  if (name == "rgg" || name == "random-geometric") {
    return GraphModel::random_geometric;
  }
  throw ValidationError("unknown graph model '" + name + "' (expected er or rgg)");
}

std::string model_name(GraphModel model) {
  return model == GraphModel::erdos_renyi ? "er" : "rgg";
}

} // namespace entroute
