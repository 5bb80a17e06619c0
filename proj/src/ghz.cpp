#include "entroute/ghz.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace entroute {
namespace {

void check_branch_fidelity(double F) {
  if (!(F >= 0.25 && F <= 1.0)) {
    throw std::invalid_argument("branch fidelity must lie in [1/4, 1]");
  }
}

struct TreeIndex {
  std::vector<std::vector<std::size_t>> incident; // edge indices per vertex
  std::vector<bool> is_terminal;
  std::vector<bool> is_steiner;
};

TreeIndex index_tree(const TreeSpec& tree) {
  if (tree.vertex_count == 0) {
    throw ValidationError("tree has no vertices");
  }
  TreeIndex ix;
  ix.incident.resize(tree.vertex_count);
  ix.is_terminal.assign(tree.vertex_count, false);
  ix.is_steiner.assign(tree.vertex_count, false);
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    const auto& edge = tree.edges[e];
    if (edge.a >= tree.vertex_count || edge.b >= tree.vertex_count || edge.a == edge.b) {
      throw ValidationError("tree edge endpoints out of range");
    }
    ix.incident[edge.a].push_back(e);
    ix.incident[edge.b].push_back(e);
  }
  if (tree.terminals.size() < 2) {
    throw ValidationError("tree needs at least two terminals");
  }
  for (std::size_t t : tree.terminals) {
    if (t >= tree.vertex_count) {
      throw ValidationError("terminal vertex out of range");
    }
    if (ix.is_terminal[t]) {
      throw ValidationError("duplicate terminal vertex");
    }
    ix.is_terminal[t] = true;
  }
  for (std::size_t s : tree.steiner) {
    if (s >= tree.vertex_count) {
      throw ValidationError("Steiner vertex out of range");
    }
    ix.is_steiner[s] = true;
  }
  if (!tree.time_overhead.empty()) {
    if (tree.time_overhead.size() != tree.vertex_count) {
      throw ValidationError("time_overhead must cover every vertex");
    }
    for (double w : tree.time_overhead) {
      if (!(w > 0.0)) {
        throw ValidationError("time_overhead factors must be positive");
      }
    }
  }
  // connectivity: a tree on V vertices has V-1 edges and one component
  if (tree.edges.size() + 1 != tree.vertex_count) {
    throw ValidationError("disconnected tree");
  }
  std::vector<bool> seen(tree.vertex_count, false);
  std::queue<std::size_t> bfs;
  bfs.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!bfs.empty()) {
    std::size_t v = bfs.front();
    bfs.pop();
    for (std::size_t e : ix.incident[v]) {
      std::size_t w = tree.edges[e].a == v ? tree.edges[e].b : tree.edges[e].a;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        bfs.push(w);
      }
    }
  }
  if (reached != tree.vertex_count) {
    throw ValidationError("disconnected tree");
  }
  return ix;
}

// One-to-all branch-time sums along the unique tree paths.
std::vector<double> times_from(const TreeSpec& tree, const TreeIndex& ix, std::size_t root) {
  std::vector<double> dist(tree.vertex_count, -1.0);
  dist[root] = 0.0;
  std::queue<std::size_t> bfs;
  bfs.push(root);
  while (!bfs.empty()) {
    std::size_t v = bfs.front();
    bfs.pop();
    for (std::size_t e : ix.incident[v]) {
      std::size_t w = tree.edges[e].a == v ? tree.edges[e].b : tree.edges[e].a;
      if (dist[w] < 0.0) {
        dist[w] = dist[v] + tree.edges[e].metrics.t;
        bfs.push(w);
      }
    }
  }
  return dist;
}

} // namespace

double star_rate(std::span<const BranchMetrics> branches) {
  if (branches.size() < 2) {
    throw std::invalid_argument("star rate needs at least two branches");
  }
  double prob = 1.0;
  double slowest = 0.0;
  for (const BranchMetrics& b : branches) {
    prob *= b.p;
    slowest = std::max(slowest, b.t);
  }
  if (!(slowest > 0.0)) {
    throw std::invalid_argument("star rate needs a positive slowest branch time");
  }
  return prob / (2.0 * slowest);
}

double star_fidelity(std::span<const double> branch_fidelities) {
  if (branch_fidelities.size() < 2) {
    throw std::invalid_argument("star fidelity needs at least two branches");
  }
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  for (double F : branch_fidelities) {
    check_branch_fidelity(F);
    a *= (1.0 + 2.0 * F) / 3.0;
    b *= 2.0 * (1.0 - F) / 3.0;
    c *= (4.0 * F - 1.0) / 3.0;
  }
  return 0.5 * (a + b + c);
}

double star_fidelity(std::span<const BranchMetrics> branches) {
  std::vector<double> fs;
  fs.reserve(branches.size());
  for (const BranchMetrics& b : branches) {
    fs.push_back(b.F);
  }
  return star_fidelity(std::span<const double>(fs));
}

GhzFidelitySignature ghz_extend(const GhzFidelitySignature& sig, double F) {
  check_branch_fidelity(F);
  return {sig.a * (1.0 + 2.0 * F) / 3.0, sig.b * 2.0 * (1.0 - F) / 3.0,
          sig.c * (4.0 * F - 1.0) / 3.0};
}

double ghz_value(const GhzFidelitySignature& sig) {
  double f = 0.5 * (sig.a + sig.b + sig.c);
  return f >= 0.5 ? f : 0.0;
}

RateSignature rate_extend(const RateSignature& sig, double p, double t) {
  if (!(p > 0.0 && p <= 1.0) || !(t > 0.0)) {
    throw std::invalid_argument("rate extension needs p in (0, 1] and t > 0");
  }
  return {sig.a * p, std::max(sig.b, t)};
}

double rate_value(const RateSignature& sig) {
  if (!(sig.b > 0.0)) {
    throw std::invalid_argument("rate signature has no folded branches");
  }
  return sig.a / (2.0 * sig.b);
}

TreeFidelityAccumulator fold_steiner(TreeFidelityAccumulator acc, double F) {
  check_branch_fidelity(F);
  const double even = (1.0 + 2.0 * F) / 3.0;
  const double odd = 2.0 * (1.0 - F) / 3.0;
  const double E = acc.E * even + acc.O * odd;
  const double O = acc.O * even + acc.E * odd;
  acc.E = E;
  acc.O = O;
  acc.c *= (4.0 * F - 1.0) / 3.0;
  return acc;
}

TreeFidelityAccumulator fold_terminal(TreeFidelityAccumulator acc, double F) {
  check_branch_fidelity(F);
  acc.a *= (1.0 + 2.0 * F) / 3.0;
  acc.b *= 2.0 * (1.0 - F) / 3.0;
  acc.c *= (4.0 * F - 1.0) / 3.0;
  return acc;
}

double accumulator_value(const TreeFidelityAccumulator& acc) {
  return 0.5 * (acc.E * acc.a + acc.O * acc.b + acc.c);
}

double tree_rate(const TreeSpec& tree, std::span<const std::size_t> candidates) {
  const TreeIndex ix = index_tree(tree);
  std::vector<std::size_t> pool(candidates.begin(), candidates.end());
  if (pool.empty()) {
    pool = tree.steiner;
  }
  if (pool.empty()) {
    pool.resize(tree.vertex_count);
    for (std::size_t v = 0; v < pool.size(); ++v) {
      pool[v] = v;
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s : pool) {
    if (s >= tree.vertex_count) {
      throw std::invalid_argument("coordination candidate out of range");
    }
    const std::vector<double> dist = times_from(tree, ix, s);
    double worst = 0.0;
    for (std::size_t t : tree.terminals) {
      worst = std::max(worst, dist[t]);
    }
    best = std::min(best, worst);
  }
  double prob = 1.0;
  for (const auto& edge : tree.edges) {
    prob *= edge.metrics.p;
  }
  double expected_time = 2.0 * best / prob;
  if (!tree.time_overhead.empty()) {
    for (std::size_t s : tree.steiner) {
      expected_time *= tree.time_overhead[s];
    }
  }
  if (!(expected_time > 0.0)) {
    throw std::invalid_argument("tree rate needs a positive coordination time");
  }
  return 1.0 / expected_time;
}

TreeFidelityAccumulator tree_fidelity_parts(const TreeSpec& tree,
                                            std::size_t initial_terminal) {
  const TreeIndex ix = index_tree(tree);
  if (initial_terminal >= tree.vertex_count || !ix.is_terminal[initial_terminal]) {
    throw ValidationError("initial vertex is not a terminal");
  }
  for (std::size_t v = 0; v < tree.vertex_count; ++v) {
    if (ix.is_terminal[v] && ix.is_steiner[v]) {
      throw ValidationError("vertex is both terminal and Steiner");
    }
    if (!ix.is_terminal[v] && !ix.is_steiner[v]) {
      throw ValidationError("vertex is neither terminal nor Steiner");
    }
  }
  // Root the tree at the initial terminal; every other vertex folds the
  // fidelity of the branch toward its parent.
  TreeFidelityAccumulator acc;
  std::vector<bool> seen(tree.vertex_count, false);
  std::queue<std::size_t> bfs;
  bfs.push(initial_terminal);
  seen[initial_terminal] = true;
  while (!bfs.empty()) {
    std::size_t v = bfs.front();
    bfs.pop();
    for (std::size_t e : ix.incident[v]) {
      std::size_t w = tree.edges[e].a == v ? tree.edges[e].b : tree.edges[e].a;
      if (seen[w]) {
        continue;
      }
      seen[w] = true;
      const double F = tree.edges[e].metrics.F;
      acc = ix.is_steiner[w] ? fold_steiner(acc, F) : fold_terminal(acc, F);
      bfs.push(w);
    }
  }
  return acc;
}

double tree_fidelity(const TreeSpec& tree, std::size_t initial_terminal) {
  return accumulator_value(tree_fidelity_parts(tree, initial_terminal));
}

double tree_fidelity_best(const TreeSpec& tree, std::size_t* chosen) {
  double best = -1.0;
  std::size_t best_terminal = 0;
  for (std::size_t t : tree.terminals) {
    double f = tree_fidelity(tree, t);
    if (f > best) {
      best = f;
      best_terminal = t;
    }
  }
  if (chosen != nullptr) {
    *chosen = best_terminal;
  }
  return best;
}

} // namespace entroute
