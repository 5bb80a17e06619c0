#include "entroute/star.hpp"

#include <algorithm>
#include <tuple>

#include "entroute/ghz.hpp"

namespace entroute {
namespace {

struct BranchChoice {
  const PathSignature* sig = nullptr;
  BranchMetrics metrics;
  std::vector<LinkIndex> links; // sorted, for overlap detection
};

std::vector<LinkIndex> sorted_links(const PathSignature& sig, const Network& net) {
  std::vector<LinkIndex> links = reconstruct(sig, net);
  std::sort(links.begin(), links.end());
  return links;
}

bool any_shared_link(std::span<const BranchChoice* const> picks) {
  for (std::size_t i = 0; i < picks.size(); ++i) {
    for (std::size_t j = i + 1; j < picks.size(); ++j) {
      const auto& a = picks[i]->links;
      const auto& b = picks[j]->links;
      std::size_t x = 0;
      std::size_t y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
          return true;
        }
        if (a[x] < b[y]) {
          ++x;
        } else {
          ++y;
        }
      }
    }
  }
  return false;
}

bool solution_order(const StarSolution& a, const StarSolution& b) {
  auto nodes_of = [](const StarSolution& s) {
    std::vector<std::vector<NodeIndex>> seqs;
    seqs.reserve(s.branches.size());
    for (const PathSignature& br : s.branches) {
      seqs.push_back(br.nodes);
    }
    return seqs;
  };
  if (a.xi != b.xi) {
    return a.xi > b.xi;
  }
  if (a.f != b.f) {
    return a.f > b.f;
  }
  if (a.center != b.center) {
    return a.center < b.center;
  }
  return nodes_of(a) < nodes_of(b);
}

// Pareto bookkeeping on the (xi, f) plane without solution payloads.
struct MetricFront {
  std::vector<std::pair<double, double>> members;

  bool insert(double xi, double f) {
    for (auto [mx, mf] : members) {
      if ((mx >= xi && mf >= f && (mx > xi || mf > f)) || (mx == xi && mf == f)) {
        return false;
      }
    }
    std::erase_if(members, [&](const std::pair<double, double>& m) {
      return xi >= m.first && f >= m.second && (xi > m.first || f > m.second);
    });
    members.emplace_back(xi, f);
    return true;
  }
};

} // namespace

std::vector<NodeIndex> feasibility_check(std::span<const FrontTable> fronts) {
  if (fronts.empty()) {
    return {};
  }
  std::vector<NodeIndex> candidates;
  const std::size_t node_count = fronts.front().size();
  for (std::size_t n = 0; n < node_count; ++n) {
    bool everywhere = true;
    for (const FrontTable& table : fronts) {
      if (table[n].empty()) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) {
      candidates.push_back(static_cast<NodeIndex>(n));
    }
  }
  return candidates;
}

StarResult t_star_exact(const Network& net, const TerminalSet& terminals,
                        const StarOptions& options) {
  validate_terminals(net, terminals);
  const std::size_t T = terminals.size();

  SolverOptions solver_options;
  solver_options.keep_equal_paths = options.keep_equal_paths;
  std::vector<FrontTable> fronts;
  fronts.reserve(T);
  for (NodeIndex terminal : terminals.members) {
    fronts.push_back(shortest_paths(net, terminal, solver_options));
  }

  const std::vector<NodeIndex> candidates = feasibility_check(fronts);
  StarResult result;
  if (candidates.empty()) {
    result.status = StarStatus::infeasible;
    return result;
  }

  std::vector<StarSolution> front;          // surviving solutions
  MetricFront overlap_front;                // overlap candidates under --disjoint
  bool any_overlap_discarded = false;

  std::vector<std::vector<BranchChoice>> choices(T);
  std::vector<const BranchChoice*> picks(T);
  std::vector<BranchMetrics> metrics(T);
  std::vector<double> fidelities(T);
  std::vector<std::size_t> odo(T);

  for (NodeIndex center : candidates) {
    for (std::size_t i = 0; i < T; ++i) {
      const std::vector<PathSignature>& members = fronts[i][center];
      choices[i].clear();
      choices[i].reserve(members.size());
      for (const PathSignature& sig : members) {
        BranchChoice choice;
        choice.sig = &sig;
        choice.metrics = contract(sig);
        choice.links = sorted_links(sig, net);
        choices[i].push_back(std::move(choice));
      }
    }

    std::fill(odo.begin(), odo.end(), 0);
    while (true) {
      for (std::size_t i = 0; i < T; ++i) {
        picks[i] = &choices[i][odo[i]];
        metrics[i] = picks[i]->metrics;
        fidelities[i] = metrics[i].F;
      }
      const double xi = star_rate(metrics);
      const double f = star_fidelity(std::span<const double>(fidelities));
      if (f >= 0.5) {
        if (options.discard_overlap && any_shared_link(picks)) {
          any_overlap_discarded = true;
          overlap_front.insert(xi, f);
        } else {
          bool rejected = false;
          for (const StarSolution& m : front) {
            if ((m.xi >= xi && m.f >= f && (m.xi > xi || m.f > f)) ||
                (m.xi == xi && m.f == f && m.center == center)) {
              rejected = true;
              break;
            }
          }
          if (!rejected) {
            std::erase_if(front, [&](const StarSolution& m) {
              return xi >= m.xi && f >= m.f && (xi > m.xi || f > m.f);
            });
            StarSolution sol;
            sol.center = center;
            sol.xi = xi;
            sol.f = f;
            sol.branches.reserve(T);
            for (std::size_t i = 0; i < T; ++i) {
              PathSignature branch = *picks[i]->sig;
              std::reverse(branch.nodes.begin(), branch.nodes.end());
              sol.branches.push_back(std::move(branch));
            }
            sol.overlap = !options.discard_overlap && any_shared_link(picks);
            front.push_back(std::move(sol));
          }
        }
      }
      // advance the odometer
      std::size_t pos = 0;
      while (pos < T) {
        if (++odo[pos] < choices[pos].size()) {
          break;
        }
        odo[pos] = 0;
        ++pos;
      }
      if (pos == T) {
        break;
      }
    }
  }

  if (options.discard_overlap && any_overlap_discarded) {
    for (auto [xi, f] : overlap_front.members) {
      bool covered = false;
      for (const StarSolution& d : front) {
        if (d.xi >= xi && d.f >= f) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        result.complete = false;
        break;
      }
    }
  }

  std::sort(front.begin(), front.end(), solution_order);
  result.solutions = std::move(front);
  return result;
}

} // namespace entroute
