#include "entroute/verify.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "entroute/algebra.hpp"
#include "entroute/ghz.hpp"
#include "entroute/oracle.hpp"

namespace entroute::verify {
namespace {

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + unit(rng) * (hi - lo);
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) {
      return x % n;
    }
  }
}

class Check {
public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const char* what) {
    ++result_.cases;
    if (!ok) {
      ++result_.failures;
      if (result_.detail.empty()) {
        result_.detail = what;
      }
    }
  }

  void expect_near(double got, double want, double tol, const char* what) {
    expect(std::abs(got - want) <= tol, what);
  }

  SuiteResult done() { return std::move(result_); }

private:
  SuiteResult result_;
};

constexpr double kTol = 1e-12;

PathSignature random_signature(std::mt19937_64& rng, int max_hops) {
  PathSignature sig;
  sig.inv_sigma = 2.0 / uniform_in(rng, 1e3, 1e5);
  sig.nodes.push_back(0);
  const int hops = static_cast<int>(below(rng, max_hops + 1));
  for (int h = 0; h < hops; ++h) {
    auto ext = extend_signature(sig, uniform_in(rng, 0.5, 1.0), uniform_in(rng, 1.0, 100.0),
                                uniform_in(rng, 0.8, 1.0), uniform_in(rng, 0.5, 1.0),
                                uniform_in(rng, 1e3, 1e5),
                                static_cast<NodeIndex>(sig.nodes.size()));
    if (!ext) {
      break;
    }
    sig = std::move(*ext);
  }
  return sig;
}

GhzFidelitySignature random_reachable_ghz(std::mt19937_64& rng) {
  GhzFidelitySignature sig;
  const int folds = 1 + static_cast<int>(below(rng, 4));
  for (int i = 0; i < folds; ++i) {
    sig = ghz_extend(sig, uniform_in(rng, 0.26, 1.0));
  }
  return sig;
}

double raw_ghz_value(const GhzFidelitySignature& sig) {
  return 0.5 * (sig.a + sig.b + sig.c);
}

SuiteResult suite_star_fidelity_oracle() {
  Check check("star-fidelity-oracle");
  std::mt19937_64 rng(0x5f1d7a01u);
  for (int T = 2; T <= 5; ++T) {
    for (int i = 0; i < 100; ++i) {
      std::vector<double> fs(T);
      for (double& F : fs) {
        F = uniform_in(rng, 0.26, 1.0);
      }
      check.expect_near(star_fidelity(std::span<const double>(fs)),
                        oracle::star_oracle(fs), kTol,
                        "star closed form drifted from the density-matrix oracle");
    }
  }
  return check.done();
}

SuiteResult suite_tree_fidelity_oracle() {
  Check check("tree-fidelity-oracle");
  std::mt19937_64 rng(0x7e3a2b9cu);
  for (int i = 0; i < 100; ++i) {
    const bool two_steiner = (i % 2) == 1;
    TreeSpec spec;
    std::vector<double> terminal_f;
    std::vector<double> steiner_f;
    if (!two_steiner) {
      // star: center is the lone Steiner vertex
      const int T = 2 + static_cast<int>(below(rng, 4));
      spec.vertex_count = static_cast<std::size_t>(T) + 1;
      const std::size_t center = T;
      spec.steiner = {center};
      for (int t = 0; t < T; ++t) {
        spec.terminals.push_back(t);
        TreeSpec::Edge edge;
        edge.a = center;
        edge.b = t;
        edge.metrics = {0.5, 1.0, uniform_in(rng, 0.26, 1.0)};
        spec.edges.push_back(edge);
        if (t == 0) {
          steiner_f.push_back(edge.metrics.F);
        } else {
          terminal_f.push_back(edge.metrics.F);
        }
      }
      // star reduction: the parity pair collapses to the initial branch terms
      const TreeFidelityAccumulator acc = tree_fidelity_parts(spec, 0);
      const double F0 = steiner_f.front();
      check.expect_near(acc.E, (1.0 + 2.0 * F0) / 3.0, kTol,
                        "star reduction: even weight is not the initial branch term");
      check.expect_near(acc.O, 2.0 * (1.0 - F0) / 3.0, kTol,
                        "star reduction: odd weight is not the initial branch term");
      std::vector<double> all_f = {F0};
      all_f.insert(all_f.end(), terminal_f.begin(), terminal_f.end());
      check.expect_near(tree_fidelity(spec, 0), star_fidelity(std::span<const double>(all_f)),
                        kTol, "tree scheme on a star drifted from the star closed form");
      check.expect_near(tree_fidelity(spec, 0), tree_fidelity(spec, spec.terminals.back()),
                        kTol, "star fidelity depends on the initial terminal");
    } else {
      // caterpillar: tau0 - s1 - s2 with extra terminals on both spine nodes
      const int extra = 2 + static_cast<int>(below(rng, 2));
      spec.vertex_count = 3 + static_cast<std::size_t>(extra);
      spec.terminals = {0};
      spec.steiner = {1, 2};
      auto add_edge = [&](std::size_t a, std::size_t b) {
        TreeSpec::Edge edge;
        edge.a = a;
        edge.b = b;
        edge.metrics = {0.5, 1.0, uniform_in(rng, 0.26, 1.0)};
        spec.edges.push_back(edge);
        return edge.metrics.F;
      };
      steiner_f.push_back(add_edge(0, 1)); // s1 toward tau0
      steiner_f.push_back(add_edge(1, 2)); // s2 toward s1
      for (int e = 0; e < extra; ++e) {
        const std::size_t vertex = 3 + static_cast<std::size_t>(e);
        const std::size_t host = e == 0 ? 2 : (below(rng, 2) == 0 ? 1 : 2);
        spec.terminals.push_back(vertex);
        terminal_f.push_back(add_edge(host, vertex));
      }
    }
    check.expect_near(tree_fidelity(spec, 0),
                      oracle::tree_oracle(terminal_f, steiner_f), kTol,
                      "tree closed form drifted from the density-matrix oracle");
  }
  return check.done();
}

SuiteResult suite_spot_values() {
  Check check("spot-values");
  {
    const std::vector<double> fs = {1.0, 1.0, 1.0};
    check.expect_near(star_fidelity(std::span<const double>(fs)), 1.0, kTol,
                      "perfect branches must give fidelity one");
  }
  {
    const std::vector<double> fs = {0.25, 1.0, 1.0};
    check.expect_near(star_fidelity(std::span<const double>(fs)), 0.25, kTol,
                      "one separable branch must pin fidelity at one quarter");
    check.expect_near(oracle::star_oracle(fs), 0.25, kTol,
                      "oracle disagrees on the separable-branch spot value");
  }
  {
    const auto target = oracle::ghz_state(3);
    const oracle::DensityMatrix mixed = oracle::DensityMatrix::Identity(8, 8) / 8.0;
    check.expect_near(oracle::fidelity(mixed, target), 0.125, kTol,
                      "maximally mixed three-qubit fidelity must be one eighth");
  }
  {
    const std::vector<double> fs = {0.95, 0.95, 0.95};
    check.expect_near(star_fidelity(std::span<const double>(fs)), 0.8581851851851852, kTol,
                      "three 0.95 branches spot value");
  }
  {
    check.expect_near(branch_fidelity(0.9, 100.0, 1e-4), 0.9182836377806884, kTol,
                      "contraction spot value");
    check.expect_near(branch_fidelity(1.0, 0.0, 5e-4), 1.0, kTol,
                      "fresh pair contracts to fidelity one");
  }
  return check.done();
}

SuiteResult suite_path_monotonicity() {
  Check check("path-monotonicity");
  std::mt19937_64 rng(0x11aa22bbu);
  for (int i = 0; i < 1000; ++i) {
    const PathSignature sig = random_signature(rng, 4);
    const double link_p = uniform_in(rng, 0.5, 1.0);
    const double link_t = uniform_in(rng, 1.0, 100.0);
    const double link_gamma = uniform_in(rng, 0.6, 1.0);
    const auto ext = extend_signature(sig, link_p, link_t, link_gamma,
                                      uniform_in(rng, 0.5, 1.0), uniform_in(rng, 1e3, 1e5),
                                      static_cast<NodeIndex>(sig.nodes.size()));
    if (!ext) {
      check.expect(sig.gamma * link_gamma < kGammaThreshold,
                   "extension rejected above the entanglement threshold");
      continue;
    }
    check.expect(ext->p <= sig.p, "success probability grew under extension");
    check.expect(ext->t >= sig.t, "latency shrank under extension");
    check.expect(ext->gamma <= sig.gamma, "Werner parameter grew under extension");
    check.expect(ext->inv_sigma >= sig.inv_sigma, "memory load shrank under extension");
  }
  return check.done();
}

SuiteResult suite_path_isotonicity() {
  Check check("path-isotonicity");
  std::mt19937_64 rng(0x33cc44ddu);
  for (int i = 0; i < 1000; ++i) {
    PathSignature lhs = random_signature(rng, 3);
    PathSignature rhs = random_signature(rng, 3);
    rhs.nodes.front() = 100; // distinct node spaces, shared metric space
    for (std::size_t k = 1; k < rhs.nodes.size(); ++k) {
      rhs.nodes[k] = 100 + static_cast<NodeIndex>(k);
    }
    const double link_p = uniform_in(rng, 0.5, 1.0);
    const double link_t = uniform_in(rng, 1.0, 100.0);
    const double link_gamma = uniform_in(rng, 0.6, 1.0);
    const double head_k = uniform_in(rng, 0.5, 1.0);
    const double arrive_sigma = uniform_in(rng, 1e3, 1e5);
    const auto el = extend_signature(lhs, link_p, link_t, link_gamma, head_k, arrive_sigma, 200);
    const auto er = extend_signature(rhs, link_p, link_t, link_gamma, head_k, arrive_sigma, 201);
    if (!el || !er) {
      check.expect((!el && lhs.gamma * link_gamma < kGammaThreshold) ||
                       (!er && rhs.gamma * link_gamma < kGammaThreshold),
                   "extension rejected above the entanglement threshold");
      continue;
    }
    const bool same_kind = lhs.trivial() == rhs.trivial();
    if (same_kind && lhs.p >= rhs.p) {
      check.expect(el->p >= er->p, "probability order flipped under a shared label");
    }
    if (lhs.t <= rhs.t) {
      check.expect(el->t <= er->t, "latency order flipped under a shared label");
    }
    if (lhs.gamma >= rhs.gamma) {
      check.expect(el->gamma >= er->gamma, "Werner order flipped under a shared label");
    }
    if (lhs.inv_sigma <= rhs.inv_sigma) {
      check.expect(el->inv_sigma <= er->inv_sigma,
                   "memory-load order flipped under a shared label");
    }
  }
  return check.done();
}

SuiteResult suite_contraction_dominance() {
  Check check("contraction-dominance");
  std::mt19937_64 rng(0x55ee66ffu);
  for (int i = 0; i < 1000; ++i) {
    double g1 = uniform_in(rng, 0.34, 1.0);
    double g2 = uniform_in(rng, 0.34, 1.0);
    if (g1 < g2) {
      std::swap(g1, g2);
    }
    double t1 = uniform_in(rng, 0.0, 500.0);
    double t2 = uniform_in(rng, 0.0, 500.0);
    if (t1 > t2) {
      std::swap(t1, t2);
    }
    double s1 = uniform_in(rng, 0.0, 0.01);
    double s2 = uniform_in(rng, 0.0, 0.01);
    if (s1 > s2) {
      std::swap(s1, s2);
    }
    check.expect(branch_fidelity(g1, t1, s1) >= branch_fidelity(g2, t2, s2),
                 "contraction broke the dominance implication");
  }
  return check.done();
}

SuiteResult suite_collapsed_metric_witness() {
  Check check("collapsed-metric-witness");
  // Frozen witness: collapsing (gamma, t, inv_sigma) into the single branch
  // fidelity is not isotone, which is why the solver routes them separately.
  PathSignature first;
  first.gamma = 0.95;
  first.t = 1.0;
  first.inv_sigma = 0.01;
  first.nodes = {0};
  PathSignature second;
  second.gamma = 0.90;
  second.t = 50.0;
  second.inv_sigma = 1e-5;
  second.nodes = {1};
  const double before_first = contract(first).F;
  const double before_second = contract(second).F;
  check.expect(before_first > before_second, "witness must start with the first path ahead");
  const auto ext_first = extend_signature(first, 0.9, 500.0, 0.999, 0.9, 1e9, 2);
  const auto ext_second = extend_signature(second, 0.9, 500.0, 0.999, 0.9, 1e9, 2);
  check.expect(ext_first.has_value() && ext_second.has_value(),
               "witness extensions must stay above the entanglement threshold");
  if (ext_first && ext_second) {
    check.expect(ext_first->gamma > kGammaThreshold && ext_second->gamma > kGammaThreshold,
                 "witness extensions must stay entangled");
    check.expect(contract(*ext_first).F < contract(*ext_second).F,
                 "witness must flip the fidelity order after the shared extension");
  }
  return check.done();
}

SuiteResult suite_ghz_label_isotonicity() {
  Check check("ghz-label-isotonicity");
  std::mt19937_64 rng(0x77ab88cdu);
  for (int i = 0; i < 1000; ++i) {
    // arbitrary signatures: the truncated value h is order-preserving
    GhzFidelitySignature sig;
    sig.a = uniform_in(rng, 1e-6, 1.0);
    sig.b = uniform_in(rng, 1e-6, 1.0);
    sig.c = uniform_in(rng, 1e-6, 1.0);
    double f1 = uniform_in(rng, 0.25, 1.0);
    double f2 = uniform_in(rng, 0.25, 1.0);
    if (f1 < f2) {
      std::swap(f1, f2);
    }
    check.expect(ghz_value(ghz_extend(sig, f1)) >= ghz_value(ghz_extend(sig, f2)),
                 "truncated fidelity order flipped under a better branch");
  }
  for (int i = 0; i < 1000; ++i) {
    // reachable signatures: even the raw value is order-preserving
    const GhzFidelitySignature sig = random_reachable_ghz(rng);
    double f1 = uniform_in(rng, 0.25, 1.0);
    double f2 = uniform_in(rng, 0.25, 1.0);
    if (f1 < f2) {
      std::swap(f1, f2);
    }
    check.expect(raw_ghz_value(ghz_extend(sig, f1)) >=
                     raw_ghz_value(ghz_extend(sig, f2)),
                 "raw fidelity order flipped on a reachable signature");
    check.expect(sig.a + 2.0 * sig.c >= sig.b,
                 "reachable signature lost the positive-slope guarantee");
  }
  return check.done();
}

SuiteResult suite_rate_label_isotonicity() {
  Check check("rate-label-isotonicity");
  std::mt19937_64 rng(0x99ef0a1bu);
  for (int i = 0; i < 1000; ++i) {
    RateSignature sig;
    sig.a = uniform_in(rng, 1e-3, 1.0);
    sig.b = uniform_in(rng, 1.0, 200.0);
    double p1 = uniform_in(rng, 1e-3, 1.0);
    double p2 = uniform_in(rng, 1e-3, 1.0);
    if (p1 < p2) {
      std::swap(p1, p2);
    }
    const double t = uniform_in(rng, 1.0, 200.0);
    check.expect(rate_value(rate_extend(sig, p1, t)) >= rate_value(rate_extend(sig, p2, t)),
                 "rate order flipped under a better probability");
    double t1 = uniform_in(rng, 1.0, 200.0);
    double t2 = uniform_in(rng, 1.0, 200.0);
    if (t1 > t2) {
      std::swap(t1, t2);
    }
    const double p = uniform_in(rng, 1e-3, 1.0);
    check.expect(rate_value(rate_extend(sig, p, t1)) >= rate_value(rate_extend(sig, p, t2)),
                 "rate order flipped under a faster branch");
  }
  return check.done();
}

SuiteResult suite_parity_identities() {
  Check check("parity-identities");
  std::mt19937_64 rng(0xbb0dcc2eu);
  for (int i = 0; i < 1000; ++i) {
    TreeFidelityAccumulator acc;
    double expected_gap = 1.0; // E - O tracks the product of (4F-1)/3
    const int folds = 1 + static_cast<int>(below(rng, 6));
    for (int s = 0; s < folds; ++s) {
      const double F = uniform_in(rng, 0.25, 1.0);
      const TreeFidelityAccumulator prev = acc;
      acc = fold_steiner(acc, F);
      const double shrink = 2.0 * (1.0 - F) / 3.0;
      check.expect_near(prev.E - acc.E, (prev.E - prev.O) * shrink, kTol,
                        "even-weight difference identity failed");
      check.expect_near(acc.O - prev.O, (prev.E - prev.O) * shrink, kTol,
                        "odd-weight difference identity failed");
      expected_gap *= (4.0 * F - 1.0) / 3.0;
    }
    check.expect_near(acc.E + acc.O, 1.0, kTol, "parity weights must sum to one");
    check.expect(acc.E >= acc.O - kTol, "even weight fell below the odd weight");
    check.expect_near(acc.E - acc.O, expected_gap, kTol,
                      "parity gap drifted from the branch product");
  }
  return check.done();
}

SuiteResult suite_ghz_monotonicity() {
  Check check("ghz-monotonicity");
  std::mt19937_64 rng(0xdd2fee40u);
  for (int i = 0; i < 1000; ++i) {
    const GhzFidelitySignature sig = random_reachable_ghz(rng);
    const double F = uniform_in(rng, 0.25, 1.0);
    const GhzFidelitySignature ext = ghz_extend(sig, F);
    check.expect(ghz_value(ext) <= ghz_value(sig) + kTol,
                 "appending a branch increased the truncated fidelity");
    check.expect(raw_ghz_value(ext) <= raw_ghz_value(sig) + kTol,
                 "appending a branch increased the raw fidelity");
  }
  {
    const GhzFidelitySignature sig = {0.9, 0.2, 0.5};
    const GhzFidelitySignature ext = ghz_extend(sig, 1.0);
    check.expect(ext.a == sig.a && ext.b == 0.0 && ext.c == sig.c,
                 "a perfect branch must only clear the odd product");
  }
  return check.done();
}

SuiteResult suite_rate_monotonicity() {
  Check check("rate-monotonicity");
  std::mt19937_64 rng(0xff41aa52u);
  for (int i = 0; i < 1000; ++i) {
    RateSignature sig;
    sig.a = uniform_in(rng, 1e-3, 1.0);
    sig.b = uniform_in(rng, 1.0, 200.0);
    const RateSignature ext =
        rate_extend(sig, uniform_in(rng, 1e-3, 1.0), uniform_in(rng, 1.0, 400.0));
    check.expect(rate_value(ext) <= rate_value(sig) + kTol,
                 "appending a branch increased the rate");
  }
  return check.done();
}

SuiteResult suite_pareto_filter() {
  Check check("pareto-filter");
  std::mt19937_64 rng(0x1357bd79u);
  const double p_pool[] = {0.5, 0.7, 0.9};
  const double t_pool[] = {2.0, 4.0, 6.0};
  const double g_pool[] = {0.8, 0.9, 1.0};
  const double s_pool[] = {1e-4, 2e-4};
  struct Dom {
    bool operator()(const PathSignature& a, const PathSignature& b) const {
      return dominates(a, b);
    }
  };
  struct Dup {
    bool operator()(const PathSignature& a, const PathSignature& b) const {
      return equal_metrics(a, b);
    }
  };
  for (int round = 0; round < 200; ++round) {
    const int count = 20 + static_cast<int>(below(rng, 61));
    std::vector<PathSignature> items;
    items.reserve(count);
    for (int i = 0; i < count; ++i) {
      PathSignature sig;
      sig.p = p_pool[below(rng, 3)];
      sig.t = t_pool[below(rng, 3)];
      sig.gamma = g_pool[below(rng, 3)];
      sig.inv_sigma = s_pool[below(rng, 2)];
      sig.nodes = {static_cast<NodeIndex>(i)};
      items.push_back(std::move(sig));
    }
    ParetoSet<PathSignature, Dom, Dup> set;
    for (const PathSignature& sig : items) {
      set.insert(sig);
    }
    for (const PathSignature& m : set.members()) {
      for (const PathSignature& other : set.members()) {
        check.expect(!dominates(m, other), "a kept member dominates another");
        if (&m != &other) {
          check.expect(!equal_metrics(m, other), "kept members share identical metrics");
        }
      }
    }
    // brute filter over unique metric tuples
    std::vector<PathSignature> expected;
    for (const PathSignature& cand : items) {
      bool keep = true;
      for (const PathSignature& other : items) {
        if (dominates(other, cand)) {
          keep = false;
          break;
        }
      }
      if (keep) {
        for (const PathSignature& seen : expected) {
          if (equal_metrics(seen, cand)) {
            keep = false;
            break;
          }
        }
      }
      if (keep) {
        expected.push_back(cand);
      }
    }
    bool same = expected.size() == set.members().size();
    if (same) {
      for (const PathSignature& want : expected) {
        bool found = false;
        for (const PathSignature& got : set.members()) {
          if (equal_metrics(want, got)) {
            found = true;
            break;
          }
        }
        if (!found) {
          same = false;
          break;
        }
      }
    }
    check.expect(same, "incremental front differs from the brute-force filter");
  }
  return check.done();
}

using SuiteFn = SuiteResult (*)();

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"star-fidelity-oracle", suite_star_fidelity_oracle},
    {"tree-fidelity-oracle", suite_tree_fidelity_oracle},
    {"spot-values", suite_spot_values},
    {"path-monotonicity", suite_path_monotonicity},
    {"path-isotonicity", suite_path_isotonicity},
    {"contraction-dominance", suite_contraction_dominance},
    {"collapsed-metric-witness", suite_collapsed_metric_witness},
    {"ghz-label-isotonicity", suite_ghz_label_isotonicity},
    {"rate-label-isotonicity", suite_rate_label_isotonicity},
    {"parity-identities", suite_parity_identities},
    {"ghz-monotonicity", suite_ghz_monotonicity},
    {"rate-monotonicity", suite_rate_monotonicity},
    {"pareto-filter", suite_pareto_filter},
};

} // namespace

Report run_all() {
  Report report;
  for (const SuiteEntry& entry : kSuites) {
    report.suites.push_back(entry.fn());
  }
  return report;
}

SuiteResult run_suite(const std::string& name) {
  for (const SuiteEntry& entry : kSuites) {
    if (name == entry.name) {
      return entry.fn();
    }
  }
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const SuiteEntry& entry : kSuites) {
    names.emplace_back(entry.name);
  }
  return names;
}

std::string format(const Report& report) {
  std::ostringstream out;
  int total_cases = 0;
  int total_failures = 0;
  for (const SuiteResult& s : report.suites) {
    total_cases += s.cases;
    total_failures += s.failures;
    out << "suite " << s.name;
    for (std::size_t pad = s.name.size(); pad < 26; ++pad) {
      out << ' ';
    }
    out << s.cases << " cases, " << s.failures << " failures";
    if (!s.detail.empty()) {
      out << "  [" << s.detail << "]";
    }
    out << '\n';
  }
  out << "status: " << (report.ok() ? "PASS" : "FAIL") << " (" << report.suites.size()
      << " suites, " << total_cases << " cases, " << total_failures << " failures)\n";
  return out.str();
}

} // namespace entroute::verify
