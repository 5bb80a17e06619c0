#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace entroute {

using NodeIndex = std::uint32_t;
using LinkIndex = std::uint32_t;

/// Werner parameter at or below this value carries no entanglement.
inline constexpr double kGammaThreshold = 1.0 / 3.0;

struct NodeParams {
  std::string id;
  double k = 1.0;     ///< swap success probability, in (0, 1]
  double sigma = 1.0; ///< memory decoherence time, positive

  friend bool operator==(const NodeParams&, const NodeParams&) = default;
};

/// Undirected link, endpoints normalized so that u < v.
struct LinkParams {
  NodeIndex u = 0;
  NodeIndex v = 0;
  double p = 1.0;     ///< generation success probability, in (0, 1]
  double t = 1.0;     ///< one-way classical latency, positive
  double gamma = 1.0; ///< Werner parameter of the generated pair, in (1/3, 1]

  NodeIndex other(NodeIndex n) const { return n == u ? v : u; }
  bool joins(NodeIndex a, NodeIndex b) const {
    return (u == a && v == b) || (u == b && v == a);
  }

  friend bool operator==(const LinkParams&, const LinkParams&) = default;
};

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed document text, as opposed to a well-formed document that
/// violates a model invariant.
class ParseError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// File access failure (open/read/write), not a content problem.
class IoError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Immutable network graph. All parameter ranges are enforced at
/// construction; instances are safe to share across threads.
class Network {
public:
  struct LinkSpec {
    std::string u;
    std::string v;
    double p = 1.0;
    double t = 1.0;
    double gamma = 1.0;
  };

  Network(std::vector<NodeParams> nodes, const std::vector<LinkSpec>& links);

  static Network from_json(const std::string& text);
  static Network load(const std::string& path);
  std::string to_json() const;
  void save(const std::string& path) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t link_count() const { return links_.size(); }
  const NodeParams& node(NodeIndex i) const { return nodes_.at(i); }
  const LinkParams& link(LinkIndex i) const { return links_.at(i); }
  std::span<const NodeParams> nodes() const { return nodes_; }
  std::span<const LinkParams> links() const { return links_; }

  std::optional<NodeIndex> find(std::string_view id) const;
  /// Resolves an id or throws ValidationError naming the missing node.
  NodeIndex require(std::string_view id) const;

  std::span<const LinkIndex> incident(NodeIndex i) const { return adjacency_.at(i); }
  std::optional<LinkIndex> find_link(NodeIndex a, NodeIndex b) const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.nodes_ == b.nodes_ && a.links_ == b.links_;
  }

private:
  std::vector<NodeParams> nodes_;
  std::vector<LinkParams> links_;
  std::vector<std::vector<LinkIndex>> adjacency_;
  std::unordered_map<std::string, NodeIndex> by_id_;
};

/// Terminal set for a distribution request. Members are unique node
/// indices sorted by node id; the first is the canonical initial terminal.
struct TerminalSet {
  std::vector<NodeIndex> members;

  std::size_t size() const { return members.size(); }
  bool contains(NodeIndex n) const;
};

TerminalSet make_terminals(const Network& net, std::span<const std::string> ids);
void validate_terminals(const Network& net, const TerminalSet& terminals);

} // namespace entroute
