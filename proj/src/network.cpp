#include "entroute/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace entroute {
namespace {

using nlohmann::json;

std::string link_name(const std::string& u, const std::string& v) {
  return "link '" + u + ":" + v + "'";
}

void check_finite(double value, const std::string& what) {
  if (!std::isfinite(value)) {
    throw ValidationError(what + " must be finite");
  }
}

void check_node_params(const NodeParams& n) {
  if (n.id.empty()) {
    throw ValidationError("node id must be non-empty");
  }
  check_finite(n.k, "node '" + n.id + "': k");
  check_finite(n.sigma, "node '" + n.id + "': sigma");
  if (!(n.k > 0.0 && n.k <= 1.0)) {
    throw ValidationError("node '" + n.id + "': k must be in (0, 1]");
  }
  if (!(n.sigma > 0.0)) {
    throw ValidationError("node '" + n.id + "': sigma must be positive");
  }
}

void check_link_params(const std::string& name, double p, double t, double gamma) {
  check_finite(p, name + ": p");
  check_finite(t, name + ": t");
  check_finite(gamma, name + ": gamma");
  if (!(p > 0.0 && p <= 1.0)) {
    throw ValidationError(name + ": p must be in (0, 1]");
  }
  if (!(t > 0.0)) {
    throw ValidationError(name + ": t must be positive");
  }
  if (!(gamma <= 1.0)) {
    throw ValidationError(name + ": gamma must be at most 1");
  }
  if (!(gamma > kGammaThreshold)) {
    throw ValidationError(name + ": link below entanglement threshold (gamma must exceed 1/3)");
  }
}

double require_number(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  if (!it->is_number()) {
    throw ValidationError(where + ": field '" + key + "' must be a number");
  }
  return it->get<double>();
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  if (!it->is_string()) {
    throw ValidationError(where + ": field '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

} // namespace

Network::Network(std::vector<NodeParams> nodes, const std::vector<LinkSpec>& links)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) {
    throw ValidationError("network must contain at least one node");
  }
  by_id_.reserve(nodes_.size());
  for (NodeIndex i = 0; i < nodes_.size(); ++i) {
    check_node_params(nodes_[i]);
    auto [_, inserted] = by_id_.emplace(nodes_[i].id, i);
    if (!inserted) {
      throw ValidationError("duplicate node id '" + nodes_[i].id + "'");
    }
  }
  adjacency_.resize(nodes_.size());
  links_.reserve(links.size());
  for (const LinkSpec& spec : links) {
    const std::string name = link_name(spec.u, spec.v);
    auto iu = by_id_.find(spec.u);
    if (iu == by_id_.end()) {
      throw ValidationError(name + " references unknown node '" + spec.u + "'");
    }
    auto iv = by_id_.find(spec.v);
    if (iv == by_id_.end()) {
      throw ValidationError(name + " references unknown node '" + spec.v + "'");
    }
    if (iu->second == iv->second) {
      throw ValidationError("self-loop " + name + " is not allowed");
    }
    check_link_params(name, spec.p, spec.t, spec.gamma);
    LinkParams lp;
    lp.u = std::min(iu->second, iv->second);
    lp.v = std::max(iu->second, iv->second);
    lp.p = spec.p;
    lp.t = spec.t;
    lp.gamma = spec.gamma;
    if (find_link(lp.u, lp.v)) {
      throw ValidationError("duplicate " + name);
    }
    const auto idx = static_cast<LinkIndex>(links_.size());
    links_.push_back(lp);
    adjacency_[lp.u].push_back(idx);
    adjacency_[lp.v].push_back(idx);
  }
}

std::optional<NodeIndex> Network::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) {
    return std::nullopt;
  }
  return it->second;
}

NodeIndex Network::require(std::string_view id) const {
  if (auto idx = find(id)) {
    return *idx;
  }
  throw ValidationError("unknown node '" + std::string(id) + "'");
}

std::optional<LinkIndex> Network::find_link(NodeIndex a, NodeIndex b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) {
    return std::nullopt;
  }
  for (LinkIndex l : adjacency_[a]) {
    if (links_[l].joins(a, b)) {
      return l;
    }
  }
  return std::nullopt;
}

Network Network::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid network JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("network document must be a JSON object");
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw ValidationError("network document requires a 'nodes' array");
  }
  if (!doc.contains("links") || !doc["links"].is_array()) {
    throw ValidationError("network document requires a 'links' array");
  }
  std::vector<NodeParams> nodes;
  nodes.reserve(doc["nodes"].size());
  for (const json& jn : doc["nodes"]) {
    if (!jn.is_object()) {
      throw ValidationError("node entries must be JSON objects");
    }
    NodeParams n;
    n.id = require_string(jn, "id", "node");
    const std::string where = "node '" + n.id + "'";
    n.k = require_number(jn, "k", where);
    n.sigma = require_number(jn, "sigma", where);
    nodes.push_back(std::move(n));
  }
  std::vector<LinkSpec> links;
  links.reserve(doc["links"].size());
  for (const json& jl : doc["links"]) {
    if (!jl.is_object()) {
      throw ValidationError("link entries must be JSON objects");
    }
    LinkSpec spec;
    spec.u = require_string(jl, "u", "link");
    spec.v = require_string(jl, "v", "link");
    const std::string where = link_name(spec.u, spec.v);
    spec.p = require_number(jl, "p", where);
    spec.t = require_number(jl, "t", where);
    spec.gamma = require_number(jl, "gamma", where);
    links.push_back(std::move(spec));
  }
  return Network(std::move(nodes), links);
}

Network Network::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open network file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string Network::to_json() const {
  json doc;
  doc["nodes"] = json::array();
  for (const NodeParams& n : nodes_) {
    doc["nodes"].push_back({{"id", n.id}, {"k", n.k}, {"sigma", n.sigma}});
  }
  doc["links"] = json::array();
  for (const LinkParams& l : links_) {
    doc["links"].push_back({{"u", nodes_[l.u].id},
                            {"v", nodes_[l.v].id},
                            {"p", l.p},
                            {"t", l.t},
                            {"gamma", l.gamma}});
  }
  return doc.dump(2) + "\n";
}

void Network::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write network file '" + path + "'");
  }
  out << to_json();
}

bool TerminalSet::contains(NodeIndex n) const {
  return std::find(members.begin(), members.end(), n) != members.end();
}

TerminalSet make_terminals(const Network& net, std::span<const std::string> ids) {
  if (ids.size() < 2) {
    throw ValidationError("terminal set needs at least two nodes");
  }
  TerminalSet ts;
  ts.members.reserve(ids.size());
  for (const std::string& id : ids) {
    NodeIndex idx = net.require(id);
    if (ts.contains(idx)) {
      throw ValidationError("duplicate terminal '" + id + "'");
    }
    ts.members.push_back(idx);
  }
  std::sort(ts.members.begin(), ts.members.end(), [&](NodeIndex a, NodeIndex b) {
    return net.node(a).id < net.node(b).id;
  });
  return ts;
}

void validate_terminals(const Network& net, const TerminalSet& terminals) {
  if (terminals.size() < 2) {
    throw ValidationError("terminal set needs at least two nodes");
  }
  for (std::size_t i = 0; i < terminals.members.size(); ++i) {
    NodeIndex n = terminals.members[i];
    if (n >= net.node_count()) {
      throw ValidationError("terminal index out of range");
    }
    for (std::size_t j = i + 1; j < terminals.members.size(); ++j) {
      if (terminals.members[j] == n) {
        throw ValidationError("duplicate terminal '" + net.node(n).id + "'");
      }
    }
  }
}

} // namespace entroute
