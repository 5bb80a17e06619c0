#include "entroute/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entroute {

PathSignature source_signature(const Network& net, NodeIndex s) {
  if (s >= net.node_count()) {
    throw std::invalid_argument("source index out of range");
  }
  PathSignature sig;
  sig.inv_sigma = 2.0 / net.node(s).sigma;
  sig.nodes.push_back(s);
  return sig;
}

std::optional<PathSignature> extend_signature(const PathSignature& sig, double link_p,
                                              double link_t, double link_gamma,
                                              double head_k, double arrive_sigma,
                                              NodeIndex arrive) {
  double gamma = sig.gamma * link_gamma;
  if (gamma < kGammaThreshold) {
    return std::nullopt;
  }
  PathSignature out;
  out.p = sig.p * link_p;
  if (!sig.trivial()) {
    out.p *= head_k; // the old head becomes an interior swap node
  }
  out.t = sig.t + 2.0 * link_t;
  out.gamma = gamma;
  out.inv_sigma = sig.inv_sigma + 2.0 / arrive_sigma;
  out.nodes.reserve(sig.nodes.size() + 1);
  out.nodes.assign(sig.nodes.begin(), sig.nodes.end());
  out.nodes.push_back(arrive);
  return out;
}

std::optional<PathSignature> extend_path(const PathSignature& sig, const LinkParams& link,
                                         NodeIndex arrive, const Network& net) {
  if (sig.nodes.empty()) {
    throw std::invalid_argument("cannot extend an empty signature");
  }
  const NodeIndex head = sig.head();
  if (!link.joins(head, arrive)) {
    throw std::invalid_argument("link does not join the path head to the arrival node");
  }
  if (std::find(sig.nodes.begin(), sig.nodes.end(), arrive) != sig.nodes.end()) {
    throw std::invalid_argument("extension revisits a node already on the path");
  }
  return extend_signature(sig, link.p, link.t, link.gamma, net.node(head).k,
                          net.node(arrive).sigma, arrive);
}

double branch_fidelity(double gamma, double t, double inv_sigma) {
  return (3.0 * gamma * std::exp(-t * inv_sigma) + 1.0) / 4.0;
}

double fidelity_to_werner(double F) { return (4.0 * F - 1.0) / 3.0; }

BranchMetrics contract(const PathSignature& sig) {
  BranchMetrics out;
  out.p = sig.p;
  out.t = sig.t;
  out.F = branch_fidelity(sig.gamma, sig.t, sig.inv_sigma);
  return out;
}

bool dominates(std::span<const double> a, std::span<const double> b,
               std::span<const Sense> senses) {
  if (a.size() != b.size() || a.size() != senses.size()) {
    throw std::invalid_argument("dominance requires equally sized metric vectors");
  }
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool max = senses[i] == Sense::maximize;
    const double x = max ? a[i] : -a[i];
    const double y = max ? b[i] : -b[i];
    if (x < y) {
      return false;
    }
    if (x > y) {
      strict = true;
    }
  }
  return strict;
}

} // namespace entroute
