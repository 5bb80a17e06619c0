#pragma once

#include <cstdint>
#include <vector>

#include "entroute/algebra.hpp"
#include "entroute/network.hpp"

namespace entroute {

struct SolverOptions {
  /// Keep signatures whose four metrics tie an existing member but whose
  /// node sequence differs. Off by default: ties are treated as duplicates.
  bool keep_equal_paths = false;
  /// Cap on the per-node frontier size; 0 means exact (unbounded). A
  /// nonzero cap turns the solver into a heuristic and is reported in the
  /// stats as truncation.
  std::size_t max_front_size = 0;
};

struct SolverStats {
  std::uint64_t queue_pops = 0;
  std::uint64_t expansions = 0;
  std::uint64_t inserts = 0;
  std::uint64_t rejected = 0;
  bool duplicate_expansion = false; ///< a (node, signature) pair expanded twice
  bool truncated = false;           ///< some frontier hit max_front_size
};

/// Pareto fronts for every node, indexed by NodeIndex. The source's front
/// holds its zero-hop signature. Fronts are sorted by (t, -p, -gamma,
/// inv_sigma, nodes) for deterministic iteration.
using FrontTable = std::vector<std::vector<PathSignature>>;

/// Label-correcting multi-objective search from `source`. With default
/// options every returned front is exactly the set of non-dominated
/// feasible simple-path signatures.
FrontTable shortest_paths(const Network& net, NodeIndex source,
                          const SolverOptions& options = {},
                          SolverStats* stats = nullptr);

/// Maps a signature produced by shortest_paths back to its link sequence.
std::vector<LinkIndex> reconstruct(const PathSignature& sig, const Network& net);

/// Canonical front order used by the solver output.
bool signature_order(const PathSignature& a, const PathSignature& b);

} // namespace entroute
