#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "entroute/network.hpp"

namespace entroute {

/// Aggregate cost of one path. `nodes` lists the visited nodes in order,
/// so the head (most recent endpoint) is nodes.back(). The four metrics
/// evolve under extend_signature; inv_sigma already includes both
/// endpoints' memory contributions.
struct PathSignature {
  double p = 1.0;         ///< end-to-end success probability (maximize)
  double t = 0.0;         ///< accumulated round-trip latency (minimize)
  double gamma = 1.0;     ///< Werner parameter of the delivered pair (maximize)
  double inv_sigma = 0.0; ///< summed inverse memory lifetime (minimize)
  std::vector<NodeIndex> nodes;

  NodeIndex source() const { return nodes.front(); }
  NodeIndex head() const { return nodes.back(); }
  bool trivial() const { return nodes.size() == 1; }
};

/// The zero-hop signature anchored at s: p=1, t=0, gamma=1, and the
/// source memory term already counted.
PathSignature source_signature(const Network& net, NodeIndex s);

/// Extends a signature across one link. The swap factor head_k belongs to
/// the node the path leaves, and is charged only when that node becomes an
/// interior node (i.e. the signature is not trivial). Returns nullopt when
/// the extended Werner parameter falls below the threshold.
std::optional<PathSignature> extend_signature(const PathSignature& sig, double link_p,
                                              double link_t, double link_gamma,
                                              double head_k, double arrive_sigma,
                                              NodeIndex arrive);

/// Graph-aware wrapper: checks that the link joins the head to `arrive`
/// and that the walk stays simple. Those violations are caller bugs and
/// throw std::invalid_argument.
std::optional<PathSignature> extend_path(const PathSignature& sig, const LinkParams& link,
                                         NodeIndex arrive, const Network& net);

/// Path collapsed to a single logical pair between its endpoints.
struct BranchMetrics {
  double p = 1.0; ///< success probability, unchanged by contraction
  double t = 0.0; ///< latency, unchanged by contraction
  double F = 1.0; ///< fidelity of the delivered Werner pair
};

double branch_fidelity(double gamma, double t, double inv_sigma);
double fidelity_to_werner(double F);

BranchMetrics contract(const PathSignature& sig);

enum class Sense { maximize, minimize };

/// Strict Pareto dominance over arbitrary metric vectors.
bool dominates(std::span<const double> a, std::span<const double> b,
               std::span<const Sense> senses);

/// Specialization for the path metrics (p up, t down, gamma up, inv_sigma down).
inline bool dominates(const PathSignature& a, const PathSignature& b) {
  if (a.p < b.p || a.t > b.t || a.gamma < b.gamma || a.inv_sigma > b.inv_sigma) {
    return false;
  }
  return a.p > b.p || a.t < b.t || a.gamma > b.gamma || a.inv_sigma < b.inv_sigma;
}

inline bool equal_metrics(const PathSignature& a, const PathSignature& b) {
  return a.p == b.p && a.t == b.t && a.gamma == b.gamma && a.inv_sigma == b.inv_sigma;
}

/// Incremental Pareto front. Dominates and Duplicate are binary predicates
/// on T; insert keeps the set mutually non-dominated and duplicate-free.
template <typename T, typename Dominates, typename Duplicate>
class ParetoSet {
public:
  ParetoSet() = default;
  ParetoSet(Dominates dom, Duplicate dup) : dom_(std::move(dom)), dup_(std::move(dup)) {}

  /// Returns true when the candidate enters the front. Dominated members
  /// are evicted; an incoming candidate that is dominated or duplicates an
  /// existing member is rejected.
  bool insert(T candidate) {
    for (const T& m : members_) {
      if (dom_(m, candidate) || dup_(m, candidate)) {
        return false;
      }
    }
    std::erase_if(members_, [&](const T& m) { return dom_(candidate, m); });
    members_.push_back(std::move(candidate));
    return true;
  }

  const std::vector<T>& members() const { return members_; }
  std::vector<T>& members() { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

private:
  std::vector<T> members_;
  Dominates dom_{};
  Duplicate dup_{};
};

} // namespace entroute
