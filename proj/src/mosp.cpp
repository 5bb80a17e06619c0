#include "entroute/mosp.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace entroute {
namespace {

struct Label {
  PathSignature sig;
  bool expanded = false;
};

using Key = std::tuple<double, double, double, double>;

Key key_of(const PathSignature& s) { return {s.t, -s.p, -s.gamma, s.inv_sigma}; }

struct QueueEntry {
  Key key;
  NodeIndex node = 0;
  std::uint64_t stamp = 0;
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    return std::tie(a.key, a.node) > std::tie(b.key, b.node);
  }
};

enum class NodeState : std::uint8_t { unseen, open, closed };

// Bitwise identity of a (node, metrics) pair, used only for the optional
// duplicate-expansion diagnostic.
struct ExpandedKey {
  NodeIndex node;
  double m[4];
  bool operator==(const ExpandedKey& o) const {
    return node == o.node && std::memcmp(m, o.m, sizeof m) == 0;
  }
};

struct ExpandedKeyHash {
  std::size_t operator()(const ExpandedKey& k) const {
    std::uint64_t h = 1469598103934665603ull ^ k.node;
    for (double d : k.m) {
      std::uint64_t bits;
      std::memcpy(&bits, &d, sizeof bits);
      h = (h ^ bits) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

class Solver {
public:
  Solver(const Network& net, NodeIndex source, const SolverOptions& options,
         SolverStats* stats)
      : net_(net), options_(options), stats_(stats), fronts_(net.node_count()),
        state_(net.node_count(), NodeState::unseen), stamp_(net.node_count(), 0) {
    push_label(source, {source_signature(net, source), false});
  }

  FrontTable run() {
    while (!queue_.empty()) {
      const QueueEntry entry = queue_.top();
      queue_.pop();
      if (stats_) {
        ++stats_->queue_pops;
      }
      const NodeIndex u = entry.node;
      if (state_[u] != NodeState::open || entry.stamp != stamp_[u]) {
        continue; // stale entry
      }
      state_[u] = NodeState::closed;
      expand_node(u);
    }
    FrontTable out(fronts_.size());
    for (std::size_t n = 0; n < fronts_.size(); ++n) {
      out[n].reserve(fronts_[n].size());
      for (Label& l : fronts_[n]) {
        out[n].push_back(std::move(l.sig));
      }
      std::sort(out[n].begin(), out[n].end(), signature_order);
    }
    return out;
  }

private:
  void expand_node(NodeIndex u) {
    // Extensions land on neighbors only, so fronts_[u] cannot change while
    // this loop walks it.
    for (std::size_t i = 0; i < fronts_[u].size(); ++i) {
      if (fronts_[u][i].expanded) {
        continue;
      }
      fronts_[u][i].expanded = true;
      if (stats_) {
        ++stats_->expansions;
        note_expansion(u, fronts_[u][i].sig);
      }
      const PathSignature& sig = fronts_[u][i].sig;
      for (LinkIndex li : net_.incident(u)) {
        const LinkParams& link = net_.link(li);
        const NodeIndex v = link.other(u);
        if (std::find(sig.nodes.begin(), sig.nodes.end(), v) != sig.nodes.end()) {
          continue;
        }
        auto ext = extend_signature(sig, link.p, link.t, link.gamma, net_.node(u).k,
                                    net_.node(v).sigma, v);
        if (!ext) {
          continue;
        }
        push_label(v, {std::move(*ext), false});
      }
    }
  }

  void push_label(NodeIndex v, Label candidate) {
    auto& front = fronts_[v];
    for (const Label& m : front) {
      if (dominates(m.sig, candidate.sig)) {
        reject();
        return;
      }
      if (equal_metrics(m.sig, candidate.sig) &&
          (!options_.keep_equal_paths || m.sig.nodes == candidate.sig.nodes)) {
        reject();
        return;
      }
    }
    std::erase_if(front, [&](const Label& m) { return dominates(candidate.sig, m.sig); });
    front.push_back(std::move(candidate));
    if (stats_) {
      ++stats_->inserts;
    }
    if (options_.max_front_size > 0 && front.size() > options_.max_front_size) {
      trim_front(front);
    }
    ++stamp_[v];
    if (state_[v] != NodeState::open) {
      state_[v] = NodeState::open;
    }
    queue_.push({front_key(front), v, stamp_[v]});
  }

  void trim_front(std::vector<Label>& front) {
    std::sort(front.begin(), front.end(), [](const Label& a, const Label& b) {
      if (a.expanded != b.expanded) {
        return a.expanded > b.expanded; // never drop already-expanded labels
      }
      return signature_order(a.sig, b.sig);
    });
    front.resize(options_.max_front_size);
    if (stats_) {
      stats_->truncated = true;
    }
  }

  Key front_key(const std::vector<Label>& front) const {
    Key best = key_of(front.front().sig);
    for (std::size_t i = 1; i < front.size(); ++i) {
      best = std::min(best, key_of(front[i].sig));
    }
    return best;
  }

  void reject() {
    if (stats_) {
      ++stats_->rejected;
    }
  }

  void note_expansion(NodeIndex u, const PathSignature& sig) {
    ExpandedKey k{u, {sig.p, sig.t, sig.gamma, sig.inv_sigma}};
    if (options_.keep_equal_paths) {
      return; // equal-metric labels are legitimate distinct expansions
    }
    if (!seen_.insert(k).second) {
      stats_->duplicate_expansion = true;
    }
  }

  const Network& net_;
  const SolverOptions& options_;
  SolverStats* stats_;
  std::vector<std::vector<Label>> fronts_;
  std::vector<NodeState> state_;
  std::vector<std::uint64_t> stamp_;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue_;
  std::unordered_set<ExpandedKey, ExpandedKeyHash> seen_;
};

} // namespace

bool signature_order(const PathSignature& a, const PathSignature& b) {
  return std::tie(a.t, b.p, b.gamma, a.inv_sigma, a.nodes) <
         std::tie(b.t, a.p, a.gamma, b.inv_sigma, b.nodes);
}

FrontTable shortest_paths(const Network& net, NodeIndex source,
                          const SolverOptions& options, SolverStats* stats) {
  if (source >= net.node_count()) {
    throw std::invalid_argument("source index out of range");
  }
  if (stats) {
    *stats = SolverStats{};
  }
  Solver solver(net, source, options, stats);
  return solver.run();
}

std::vector<LinkIndex> reconstruct(const PathSignature& sig, const Network& net) {
  if (sig.nodes.empty()) {
    throw std::invalid_argument("cannot reconstruct an empty signature");
  }
  std::vector<LinkIndex> out;
  out.reserve(sig.nodes.size() - 1);
  for (std::size_t i = 1; i < sig.nodes.size(); ++i) {
    auto li = net.find_link(sig.nodes[i - 1], sig.nodes[i]);
    if (!li) {
      throw std::invalid_argument("signature references a link absent from the network");
    }
    out.push_back(*li);
  }
  return out;
}

} // namespace entroute
