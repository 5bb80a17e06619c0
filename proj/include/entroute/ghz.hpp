#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "entroute/algebra.hpp"

namespace entroute {

/// Expected GHZ distribution rate of a star: product of branch success
/// probabilities over twice the slowest branch time.
double star_rate(std::span<const BranchMetrics> branches);

/// Fidelity of the GHZ state assembled from Werner branches. Returns the
/// raw closed-form value, which can fall below 1/2; callers that need the
/// physical floor apply ghz_value truncation. Accepts fidelities down to
/// the separable floor 1/4 inclusive.
double star_fidelity(std::span<const double> branch_fidelities);
double star_fidelity(std::span<const BranchMetrics> branches);

/// Running product triple behind the star fidelity formula.
struct GhzFidelitySignature {
  double a = 1.0; ///< product of (1+2F)/3 terms
  double b = 1.0; ///< product of 2(1-F)/3 terms
  double c = 1.0; ///< product of (4F-1)/3 terms
};

GhzFidelitySignature ghz_extend(const GhzFidelitySignature& sig, double F);

/// h: the physical fidelity of the signature, truncated to 0 below 1/2.
double ghz_value(const GhzFidelitySignature& sig);

/// Running pair behind the star rate formula.
struct RateSignature {
  double a = 1.0; ///< probability product
  double b = 0.0; ///< slowest branch time; 0 until the first extension
};

RateSignature rate_extend(const RateSignature& sig, double p, double t);

/// g: the rate a/(2b). Requires at least one folded branch.
double rate_value(const RateSignature& sig);

/// Parity-weighted accumulator for the tree scheme. E and O weight the
/// even and odd numbers of failed expansion steps; a, b, c extend the star
/// products over the non-initial terminal branches.
struct TreeFidelityAccumulator {
  double E = 1.0;
  double O = 0.0;
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
};

/// Folds one expansion branch (a branch from a Steiner node toward the
/// initial terminal side) into the parity weights.
TreeFidelityAccumulator fold_steiner(TreeFidelityAccumulator acc, double F);

/// Folds one non-initial terminal branch.
TreeFidelityAccumulator fold_terminal(TreeFidelityAccumulator acc, double F);

/// (E*a + O*b + c) / 2, untruncated.
double accumulator_value(const TreeFidelityAccumulator& acc);

/// Distribution tree over abstract vertices 0..vertex_count-1. Each edge
/// is one contracted branch. terminals and steiner partition the vertices
/// for fidelity evaluation; time_overhead (optional, per vertex) scales the
/// expected distribution time for rate sensitivity studies.
struct TreeSpec {
  struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    BranchMetrics metrics;
  };

  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> terminals;
  std::vector<std::size_t> steiner;
  std::vector<double> time_overhead;
};

/// Rate of the tree scheme. The coordination node is chosen from
/// `candidates`; when empty, the Steiner set is used, and when that is
/// also empty, every tree vertex is a candidate.
double tree_rate(const TreeSpec& tree, std::span<const std::size_t> candidates = {});

/// Fidelity of the tree scheme with distribution started at the given
/// terminal. Returns the raw closed-form value, like star_fidelity.
double tree_fidelity(const TreeSpec& tree, std::size_t initial_terminal);

/// The accumulator state behind tree_fidelity, for law checks.
TreeFidelityAccumulator tree_fidelity_parts(const TreeSpec& tree,
                                            std::size_t initial_terminal);

/// Maximizes tree_fidelity over the choice of initial terminal; returns
/// the best value and sets *chosen to the winning terminal.
double tree_fidelity_best(const TreeSpec& tree, std::size_t* chosen = nullptr);

} // namespace entroute
