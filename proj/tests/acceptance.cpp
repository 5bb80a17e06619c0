// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Criteria 1-3 pit the closed forms against the density-matrix oracle,
// 4-5 pit the solvers against exhaustive enumeration, 6 runs the algebra
// law battery, 7 checks the structural optimality claims, 8 exercises the
// CLI sweep at scale, and 9 checks byte-level determinism of every command.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "entroute/algebra.hpp"
#include "entroute/ghz.hpp"
#include "entroute/mosp.hpp"
#include "entroute/network.hpp"
#include "entroute/oracle.hpp"
#include "entroute/star.hpp"
#include "entroute/verify.hpp"
#include "support/brute.hpp"
#include "support/nets.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string note;
};

int g_failures = 0;

void report(int index, const std::string& name, const Outcome& outcome) {
  std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": "
            << name;
  if (!outcome.note.empty()) {
    std::cout << " (" << outcome.note << ")";
  }
  std::cout << std::endl;
  if (!outcome.pass) {
    ++g_failures;
  }
}

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", value);
  return buf;
}

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

// ---- CLI plumbing ------------------------------------------------------

std::string cli_bin() {
  if (const char* env = std::getenv("ENTROUTE_CLI_BIN")) {
    return env;
  }
#ifdef ENTROUTE_CLI_BIN
  return ENTROUTE_CLI_BIN;
#else
  return "entroute_cli";
#endif
}

int run_cli(const std::string& args, const std::string& stdout_path) {
  std::string cmd = "\"" + cli_bin() + "\" " + args;
  if (!stdout_path.empty()) {
    cmd += " > " + stdout_path;
  }
  cmd += " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) {
    return -1;
  }
  return WEXITSTATUS(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

// Measured wall time is the one legitimately nondeterministic output field;
// blank it before comparing sweep runs.
std::string mask_runtime(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields = split_csv(line);
    if (line.rfind("# summary", 0) == 0) {
      if (fields.size() > 3) {
        fields[3] = "-";
      }
    } else if (line.rfind("model,", 0) != 0 && fields.size() > 4) {
      fields[4] = "-";
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      out << (i == 0 ? "" : ",") << fields[i];
    }
    out << "\n";
  }
  return out.str();
}

std::vector<double> midranks(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size(), 0.0);
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && values[idx[j + 1]] == values[idx[i]]) {
      ++j;
    }
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      ranks[idx[k]] = mid;
    }
    i = j + 1;
  }
  return ranks;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const std::vector<double> rx = midranks(x);
  const std::vector<double> ry = midranks(y);
  const double n = static_cast<double>(rx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double cov = 0.0, vx = 0.0, vy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    cov += (rx[i] - mx) * (ry[i] - my);
    vx += (rx[i] - mx) * (rx[i] - mx);
    vy += (ry[i] - my) * (ry[i] - my);
  }
  if (vx == 0.0 || vy == 0.0) {
    return 0.0;
  }
  return cov / std::sqrt(vx * vy);
}

// ---- criterion 1 -------------------------------------------------------

Outcome star_closed_form_vs_oracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int branches = 2; branches <= 5; ++branches) {
    for (int i = 0; i < 100; ++i) {
      std::vector<double> fs(branches);
      for (double& F : fs) {
        F = support::draw_in(rng, 0.25, 1.0);
      }
      const double closed = entroute::star_fidelity(std::span<const double>(fs));
      const double oracle = entroute::oracle::star_oracle(fs);
      worst = std::max(worst, std::abs(closed - oracle));
    }
  }
  const double secs = seconds_since(start);
  Outcome out;
  out.pass = worst <= 1e-12 && secs < 10.0;
  out.note = "400 tuples, max |diff| " + fmt(worst) + ", " + fmt(secs) + " s";
  return out;
}

// ---- criterion 2 -------------------------------------------------------

Outcome tree_closed_form_vs_oracle() {
  std::mt19937_64 rng(202);
  double worst = 0.0;
  double worst_reduction = 0.0;
  int one_steiner = 0;
  int two_steiner = 0;
  for (int i = 0; i < 100; ++i) {
    entroute::TreeSpec spec;
    std::vector<double> terminal_f;
    std::vector<double> steiner_f;
    auto add_edge = [&](std::size_t a, std::size_t b) {
      entroute::TreeSpec::Edge edge;
      edge.a = a;
      edge.b = b;
      edge.metrics.p = support::draw_in(rng, 0.3, 1.0);
      edge.metrics.t = support::draw_in(rng, 1.0, 50.0);
      edge.metrics.F = support::draw_in(rng, 0.25, 1.0);
      spec.edges.push_back(edge);
      return edge.metrics.F;
    };

    if (pick(rng, 2) == 0) {
      // one Steiner node: a star whose center is the Steiner vertex
      ++one_steiner;
      const int terminals = 2 + pick(rng, 3);
      spec.vertex_count = static_cast<std::size_t>(terminals) + 1;
      const std::size_t center = terminals;
      spec.steiner = {center};
      for (int t = 0; t < terminals; ++t) {
        spec.terminals.push_back(t);
        const double F = add_edge(center, t);
        if (t == 0) {
          steiner_f.push_back(F);
        } else {
          terminal_f.push_back(F);
        }
      }
      // star reduction: the parity pair must equal the initial branch terms
      const entroute::TreeFidelityAccumulator acc =
          entroute::tree_fidelity_parts(spec, 0);
      const double f0 = steiner_f.front();
      worst_reduction =
          std::max(worst_reduction, std::abs(acc.E - (1.0 + 2.0 * f0) / 3.0));
      worst_reduction =
          std::max(worst_reduction, std::abs(acc.O - 2.0 * (1.0 - f0) / 3.0));
      std::vector<double> all_f = {f0};
      all_f.insert(all_f.end(), terminal_f.begin(), terminal_f.end());
      worst_reduction = std::max(
          worst_reduction,
          std::abs(entroute::tree_fidelity(spec, 0) -
                   entroute::star_fidelity(std::span<const double>(all_f))));
    } else {
      // two Steiner nodes: spine 0-1-2 with extra terminals on the spine
      ++two_steiner;
      const int extra = 1 + pick(rng, 2);
      spec.vertex_count = 3 + static_cast<std::size_t>(extra);
      spec.terminals = {0};
      spec.steiner = {1, 2};
      steiner_f.push_back(add_edge(0, 1));
      steiner_f.push_back(add_edge(1, 2));
      for (int e = 0; e < extra; ++e) {
        const std::size_t vertex = 3 + static_cast<std::size_t>(e);
        const std::size_t host = e == 0 ? 2 : (pick(rng, 2) == 0 ? 1 : 2);
        spec.terminals.push_back(vertex);
        terminal_f.push_back(add_edge(host, vertex));
      }
    }

    const double closed = entroute::tree_fidelity(spec, 0);
    const double oracle = entroute::oracle::tree_oracle(terminal_f, steiner_f);
    worst = std::max(worst, std::abs(closed - oracle));
  }
  Outcome out;
  out.pass = worst <= 1e-12 && worst_reduction <= 1e-12 && one_steiner > 0 &&
             two_steiner > 0;
  out.note = std::to_string(one_steiner) + "+" + std::to_string(two_steiner) +
             " instances, max |diff| " + fmt(worst) + ", reduction " +
             fmt(worst_reduction);
  return out;
}

// ---- criterion 3 -------------------------------------------------------

Outcome spot_values() {
  const std::vector<double> perfect = {1.0, 1.0, 1.0};
  const std::vector<double> separable = {0.25, 1.0, 1.0};
  const double d1 =
      std::abs(entroute::star_fidelity(std::span<const double>(perfect)) - 1.0);
  const double d2 =
      std::abs(entroute::star_fidelity(std::span<const double>(separable)) - 0.25);
  const entroute::oracle::DensityMatrix mixed =
      entroute::oracle::DensityMatrix::Identity(8, 8) / 8.0;
  const double d3 =
      std::abs(entroute::oracle::fidelity(mixed, entroute::oracle::ghz_state(3)) -
               0.125);
  Outcome out;
  out.pass = d1 <= 1e-12 && d2 <= 1e-12 && d3 <= 1e-12;
  out.note = "diffs " + fmt(d1) + ", " + fmt(d2) + ", " + fmt(d3);
  return out;
}

// ---- criterion 4 -------------------------------------------------------

Outcome fronts_vs_enumeration() {
  const auto start = Clock::now();
  Outcome out;
  int nets = 0;
  for (std::uint64_t seed = 1; seed <= 52; ++seed) {
    const std::size_t n = 4 + static_cast<std::size_t>(seed % 7);
    const double link_prob = 0.35 + 0.05 * static_cast<double>(seed % 4);
    const entroute::Network net = support::random_net(seed, n, link_prob);
    const entroute::NodeIndex source =
        static_cast<entroute::NodeIndex>(seed % net.node_count());
    const entroute::FrontTable solved = entroute::shortest_paths(net, source);
    const auto brute = support::brute_fronts(net, source);
    for (std::size_t v = 0; v < net.node_count(); ++v) {
      if (support::metric_tuples(solved[v]) != support::metric_tuples(brute[v])) {
        out.note = "front mismatch at seed " + std::to_string(seed) + ", node " +
                   net.node(static_cast<entroute::NodeIndex>(v)).id;
        return out;
      }
    }
    ++nets;
  }
  const double secs = seconds_since(start);
  out.pass = nets >= 50 && secs < 60.0;
  out.note = std::to_string(nets) + " networks, exact tuple equality, " + fmt(secs) +
             " s";
  return out;
}

// ---- criteria 5 and 7 --------------------------------------------------

struct StarAcceptance {
  Outcome equivalence;
  Outcome structure;
};

// Link disjointness at three terminals is an ensemble property, not a
// theorem: a node with a harsh swap penalty can make the overlapping star
// centered on it strictly faster, so the enumeration keeps it (the star
// unit fixtures pin one such instance by hand). The accepted instance set
// is therefore the first 52 seeds whose true front is link-disjoint;
// instances with overlap optima are not hidden but verified separately
// (solver still matches the enumeration, the solution carries the overlap
// flag) and their seeds are printed.
StarAcceptance star_vs_enumeration() {
  const auto start = Clock::now();
  StarAcceptance out;
  std::string equivalence_fault;
  std::string structure_fault;
  int accepted = 0;
  std::vector<std::uint64_t> overlap_seeds;
  std::size_t total_solutions = 0;
  for (std::uint64_t seed = 1; seed <= 80 && accepted < 52 && equivalence_fault.empty();
       ++seed) {
    const std::size_t n = 5 + static_cast<std::size_t>(seed % 4);
    const double link_prob = 0.45 + 0.05 * static_cast<double>(seed % 3);
    const entroute::Network net = support::random_net(seed * 100 + 7, n, link_prob);
    const std::size_t mid = 1 + static_cast<std::size_t>(seed % (n - 2));
    const std::vector<std::string> ids = {"v0", "v" + std::to_string(mid),
                                          "v" + std::to_string(n - 1)};
    const entroute::TerminalSet terminals = entroute::make_terminals(net, ids);
    const entroute::StarResult result = entroute::t_star_exact(net, terminals);
    const std::vector<support::StarPoint> brute = support::brute_star(net, terminals);

    if (result.status == entroute::StarStatus::infeasible) {
      if (!brute.empty()) {
        equivalence_fault = "solver infeasible but enumeration found stars, seed " +
                            std::to_string(seed);
      }
      ++accepted;
      continue;
    }
    if (result.solutions.size() != brute.size()) {
      equivalence_fault = "front size mismatch at seed " + std::to_string(seed);
      continue;
    }
    for (std::size_t i = 0; i < brute.size(); ++i) {
      const entroute::StarSolution& got = result.solutions[i];
      const support::StarPoint& want = brute[i];
      if (got.center != want.center || std::abs(got.xi - want.xi) > 1e-12 ||
          std::abs(got.f - want.f) > 1e-12) {
        equivalence_fault = "solution mismatch at seed " + std::to_string(seed) +
                            ", index " + std::to_string(i);
        break;
      }
    }
    if (!equivalence_fault.empty()) {
      continue;
    }

    // structural checks; branch-front membership and link accounting hold
    // for every instance, the no-reuse claim only for the accepted set
    std::vector<entroute::FrontTable> fronts;
    fronts.reserve(terminals.size());
    for (entroute::NodeIndex terminal : terminals.members) {
      fronts.push_back(entroute::shortest_paths(net, terminal));
    }
    bool any_reuse = false;
    for (const entroute::StarSolution& solution : result.solutions) {
      std::vector<entroute::LinkIndex> used;
      for (std::size_t b = 0; b < solution.branches.size(); ++b) {
        const entroute::PathSignature& branch = solution.branches[b];
        std::vector<entroute::NodeIndex> reversed(branch.nodes.rbegin(),
                                                  branch.nodes.rend());
        bool member = false;
        for (const entroute::PathSignature& sig : fronts[b][solution.center]) {
          if (sig.nodes == reversed && sig.p == branch.p && sig.t == branch.t &&
              sig.gamma == branch.gamma && sig.inv_sigma == branch.inv_sigma) {
            member = true;
            break;
          }
        }
        if (!member && structure_fault.empty()) {
          structure_fault =
              "branch not on its terminal front, seed " + std::to_string(seed);
        }
        for (std::size_t hop = 1; hop < branch.nodes.size(); ++hop) {
          used.push_back(*net.find_link(branch.nodes[hop - 1], branch.nodes[hop]));
        }
      }
      std::sort(used.begin(), used.end());
      const bool reuses = std::adjacent_find(used.begin(), used.end()) != used.end();
      if (reuses != solution.overlap && structure_fault.empty()) {
        structure_fault = "overlap flag disagrees with the used links, seed " +
                          std::to_string(seed);
      }
      any_reuse = any_reuse || reuses;
      ++total_solutions;
    }
    if (any_reuse) {
      overlap_seeds.push_back(seed);
      continue;
    }
    ++accepted;
  }
  const double secs = seconds_since(start);
  if (!equivalence_fault.empty()) {
    out.equivalence.note = equivalence_fault;
    out.structure.note = "not trusted: " + equivalence_fault;
    return out;
  }
  std::string overlap_note;
  for (std::uint64_t seed : overlap_seeds) {
    overlap_note += (overlap_note.empty() ? "" : " ") + std::to_string(seed);
  }
  out.equivalence.pass = accepted >= 52 && total_solutions > 0 && secs < 300.0;
  out.equivalence.note = std::to_string(accepted) + " + " +
                         std::to_string(overlap_seeds.size()) +
                         " networks vs enumeration, " +
                         std::to_string(total_solutions) + " solutions, " + fmt(secs) +
                         " s";
  out.structure.pass = out.equivalence.pass && structure_fault.empty();
  out.structure.note =
      structure_fault.empty()
          ? "branches on their terminal fronts in all instances; no link reuse in "
            "the accepted set; flagged overlap optima demonstrated at seeds " +
                (overlap_note.empty() ? std::string("none") : overlap_note)
          : structure_fault;
  return out;
}

// ---- criterion 6 -------------------------------------------------------

Outcome law_battery() {
  const entroute::verify::Report report = entroute::verify::run_all();
  const std::vector<std::string> law_suites = {
      "path-monotonicity",      "path-isotonicity",   "contraction-dominance",
      "ghz-label-isotonicity",  "rate-label-isotonicity", "parity-identities",
      "ghz-monotonicity",       "rate-monotonicity",  "pareto-filter",
  };
  Outcome out;
  int total_cases = 0;
  bool witness_seen = false;
  for (const entroute::verify::SuiteResult& suite : report.suites) {
    total_cases += suite.cases;
    if (suite.failures != 0) {
      out.note = "suite " + suite.name + " failed: " + suite.detail;
      return out;
    }
    if (suite.name == "collapsed-metric-witness") {
      witness_seen = true;
    }
  }
  for (const std::string& name : law_suites) {
    bool found = false;
    for (const entroute::verify::SuiteResult& suite : report.suites) {
      if (suite.name == name) {
        found = true;
        if (suite.cases < 1000) {
          out.note = "suite " + name + " has only " + std::to_string(suite.cases) +
                     " cases";
          return out;
        }
      }
    }
    if (!found) {
      out.note = "law suite " + name + " missing";
      return out;
    }
  }
  if (!witness_seen) {
    out.note = "collapsed-metric witness suite missing";
    return out;
  }
  out.pass = true;
  out.note = std::to_string(report.suites.size()) + " suites, " +
             std::to_string(total_cases) + " cases, collapsed-metric witness held";
  return out;
}

// ---- criterion 8 -------------------------------------------------------

Outcome sweep_shape() {
  const auto start = Clock::now();
  Outcome out;
  const std::string config_path = "acceptance_sweep.json";
  const std::string csv_path = "acceptance_sweep.csv";
  write_file(config_path, R"({
  "models": ["er", "rgg"],
  "n": [20, 40, 80, 160],
  "t": 3,
  "instances": 20,
  "seed": 424242
})");
  const int rc = run_cli("sweep " + config_path + " -o " + csv_path, "");
  if (rc != 0) {
    out.note = "sweep exited with code " + std::to_string(rc);
    return out;
  }

  struct Point {
    std::string model;
    double n = 0.0;
    double runtime = 0.0;
    double stars = 0.0;
    double feasibility = 0.0;
  };
  std::vector<Point> points;
  std::istringstream in(read_file(csv_path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# summary", 0) != 0) {
      continue;
    }
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() < 6) {
      out.note = "malformed summary line";
      return out;
    }
    Point point;
    point.model = fields[1];
    point.n = std::stod(fields[2]);
    point.runtime = std::stod(fields[3]);
    point.feasibility = std::stod(fields[5]);
    if (point.feasibility <= 0.0) {
      out.note = "no feasible instance for " + point.model + " at N=" + fields[2];
      return out;
    }
    point.stars = std::stod(fields[4]);
    if (point.stars < 1.0) {
      out.note = "mean stars below one for " + point.model + " at N=" + fields[2];
      return out;
    }
    points.push_back(point);
  }
  if (points.size() != 8) {
    out.note = "expected 8 summary points, got " + std::to_string(points.size());
    return out;
  }

  std::string rho_note;
  for (const std::string& model : {"er", "rgg"}) {
    std::vector<double> ns;
    std::vector<double> runtimes;
    for (const Point& point : points) {
      if (point.model == model) {
        ns.push_back(point.n);
        runtimes.push_back(point.runtime);
      }
    }
    const double rho = spearman(ns, runtimes);
    rho_note += std::string(rho_note.empty() ? "" : ", ") + model + " rho " + fmt(rho);
    if (rho <= 0.0) {
      out.note = "runtime not increasing in N for " + model + " (rho " + fmt(rho) + ")";
      return out;
    }
  }
  const double secs = seconds_since(start);
  out.pass = secs < 900.0;
  out.note = "160 instances, feasibility > 0 at all 8 points, " + rho_note + ", " +
             fmt(secs) + " s";
  return out;
}

// ---- criterion 9 -------------------------------------------------------

Outcome determinism() {
  Outcome out;
  const std::string net_er = "acceptance_d_er.json";
  const std::string net_er2 = "acceptance_d_er2.json";
  const std::string net_rgg = "acceptance_d_rgg.json";
  const std::string net_rgg2 = "acceptance_d_rgg2.json";

  if (run_cli("gen --model er --n 24 --seed 11 -o " + net_er, "") != 0 ||
      run_cli("gen --model er --n 24 --seed 11 -o " + net_er2, "") != 0) {
    out.note = "gen er failed";
    return out;
  }
  if (read_file(net_er) != read_file(net_er2)) {
    out.note = "gen er output differs between runs";
    return out;
  }
  if (run_cli("gen --model rgg --n 30 --seed 12 -o " + net_rgg, "") != 0 ||
      run_cli("gen --model rgg --n 30 --seed 12 -o " + net_rgg2, "") != 0) {
    out.note = "gen rgg failed";
    return out;
  }
  if (read_file(net_rgg) != read_file(net_rgg2)) {
    out.note = "gen rgg output differs between runs";
    return out;
  }

  if (run_cli("paths " + net_er + " --source n00", "acceptance_d_p1.txt") != 0 ||
      run_cli("paths " + net_er + " --source n00", "acceptance_d_p2.txt") != 0) {
    out.note = "paths failed";
    return out;
  }
  if (read_file("acceptance_d_p1.txt") != read_file("acceptance_d_p2.txt")) {
    out.note = "paths output differs between runs";
    return out;
  }

  const int star1 =
      run_cli("star " + net_er + " --terminals n01,n05,n09", "acceptance_d_s1.txt");
  const int star2 =
      run_cli("star " + net_er + " --terminals n01,n05,n09", "acceptance_d_s2.txt");
  if (star1 != star2 || (star1 != 0 && star1 != 3)) {
    out.note = "star exit codes differ or are invalid";
    return out;
  }
  if (read_file("acceptance_d_s1.txt") != read_file("acceptance_d_s2.txt")) {
    out.note = "star output differs between runs";
    return out;
  }

  write_file("acceptance_d_sweep.json", R"({
  "models": ["er"],
  "n": [16],
  "t": 3,
  "instances": 4,
  "seed": 77
})");
  if (run_cli("sweep acceptance_d_sweep.json -o acceptance_d_c1.csv", "") != 0 ||
      run_cli("sweep acceptance_d_sweep.json -o acceptance_d_c2.csv", "") != 0) {
    out.note = "sweep failed";
    return out;
  }
  if (mask_runtime(read_file("acceptance_d_c1.csv")) !=
      mask_runtime(read_file("acceptance_d_c2.csv"))) {
    out.note = "sweep output differs between runs beyond the timing field";
    return out;
  }

  if (run_cli("verify", "acceptance_d_v1.txt") != 0 ||
      run_cli("verify", "acceptance_d_v2.txt") != 0) {
    out.note = "verify failed";
    return out;
  }
  if (read_file("acceptance_d_v1.txt") != read_file("acceptance_d_v2.txt")) {
    out.note = "verify output differs between runs";
    return out;
  }

  out.pass = true;
  out.note = "gen/paths/star/sweep/verify byte-identical; measured-time field masked "
             "in sweep";
  return out;
}

} // namespace

int main() {
  std::cout << "acceptance: cli binary " << cli_bin() << std::endl;

  report(1, "star fidelity closed form vs density-matrix oracle",
         star_closed_form_vs_oracle());
  report(2, "tree fidelity closed form vs density-matrix oracle",
         tree_closed_form_vs_oracle());
  report(3, "analytic spot values", spot_values());
  report(4, "path fronts vs exhaustive enumeration", fronts_vs_enumeration());
  const StarAcceptance stars = star_vs_enumeration();
  report(5, "star search vs exhaustive enumeration", stars.equivalence);
  report(6, "algebra law battery", law_battery());
  report(7, "branch optimality and link disjointness", stars.structure);
  report(8, "scaling sweep shape", sweep_shape());
  report(9, "byte-identical determinism", determinism());

  if (g_failures != 0) {
    std::cout << g_failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
