#pragma once

#include <span>
#include <vector>

#include "entroute/algebra.hpp"
#include "entroute/mosp.hpp"
#include "entroute/network.hpp"

namespace entroute {

/// One Pareto-optimal way to span the terminals by a star.
struct StarSolution {
  NodeIndex center = 0;
  /// One path per terminal, ordered like TerminalSet::members, oriented
  /// center -> terminal. A terminal acting as center gets the zero-hop
  /// signature.
  std::vector<PathSignature> branches;
  double xi = 0.0; ///< distribution rate
  double f = 0.0;  ///< GHZ fidelity, always >= 1/2 in returned solutions
  bool overlap = false; ///< some link is used by two or more branches
};

enum class StarStatus {
  ok,
  infeasible, ///< no node is reachable from every terminal
};

struct StarOptions {
  /// Drop link-sharing stars instead of returning them flagged.
  bool discard_overlap = false;
  /// Forwarded to the path solver (path multiplicity on metric ties).
  bool keep_equal_paths = false;
};

struct StarResult {
  StarStatus status = StarStatus::ok;
  /// False only when discard_overlap removed a candidate that no returned
  /// disjoint solution matches or beats.
  bool complete = true;
  /// Mutually non-dominated under (xi maximize, f maximize); sorted by
  /// descending xi, then descending f, then center.
  std::vector<StarSolution> solutions;
};

/// Nodes that carry at least one surviving path signature from every
/// terminal; the necessary feasibility condition for a spanning star.
std::vector<NodeIndex> feasibility_check(std::span<const FrontTable> fronts);

/// Exact star search: per-terminal path fronts, candidate-center
/// enumeration, rate/fidelity evaluation over every front combination,
/// fidelity-floor truncation, and a global Pareto filter.
StarResult t_star_exact(const Network& net, const TerminalSet& terminals,
                        const StarOptions& options = {});

} // namespace entroute
