#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "entroute/netgen.hpp"

using namespace entroute;

namespace {

GeneratorConfig config(GraphModel model, std::uint64_t n, double degree,
                       std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.model = model;
  cfg.n = n;
  cfg.avg_degree = degree;
  cfg.seed = seed;
  return cfg;
}

double mean_degree(const Network& net) {
  return 2.0 * static_cast<double>(net.link_count()) /
         static_cast<double>(net.node_count());
}

} // namespace

TEST_CASE("generator: pair-probability ensemble hits its target degree") {
  double total = 0.0;
  const int instances = 100;
  for (int i = 0; i < instances; ++i) {
    const Network net =
        generate(config(GraphModel::erdos_renyi, 100, 3.0, 1000 + i));
    CHECK(net.node_count() == 100);
    total += mean_degree(net);
  }
  const double mean = total / instances;
  CHECK(mean > 2.4);
  CHECK(mean < 3.6);
}

TEST_CASE("generator: geometric ensemble lands near its target degree") {
  double total = 0.0;
  const int instances = 100;
  for (int i = 0; i < instances; ++i) {
    const Network net =
        generate(config(GraphModel::random_geometric, 100, 8.0, 2000 + i));
    total += mean_degree(net);
  }
  // border clipping pulls the expectation slightly under the target
  const double mean = total / instances;
  CHECK(mean > 6.4);
  CHECK(mean < 9.6);
}

TEST_CASE("generator: fidelity floor follows the model's depth scale") {
  GeneratorConfig er = config(GraphModel::erdos_renyi, 100, 3.0, 0);
  CHECK(fidelity_floor(er) ==
        std::pow(0.9, 2.0 / (std::log(100.0) / std::log(3.0))));

  GeneratorConfig rgg = config(GraphModel::random_geometric, 100, 8.0, 0);
  CHECK(fidelity_floor(rgg) == std::pow(0.9, 2.0 / std::sqrt(100.0 / std::log(100.0))));

  // deeper networks demand better links
  GeneratorConfig small = config(GraphModel::erdos_renyi, 20, 3.0, 0);
  CHECK(fidelity_floor(er) > fidelity_floor(small));
}

TEST_CASE("generator: sampled links stay above the fidelity floor") {
  const GeneratorConfig cfg = config(GraphModel::random_geometric, 100, 8.0, 5);
  const double floor = fidelity_floor(cfg);
  REQUIRE(floor > 0.5);
  const Network net = generate(cfg);
  REQUIRE(net.link_count() > 0);
  for (const LinkParams& link : net.links()) {
    const double F = (3.0 * link.gamma + 1.0) / 4.0;
    CHECK(F >= floor - 1e-12);
    CHECK(F < 1.0);
    CHECK(link.gamma > kGammaThreshold);
  }
}

TEST_CASE("generator: node and link parameters respect their windows") {
  const Network net = generate(config(GraphModel::erdos_renyi, 100, 3.0, 11));
  for (const NodeParams& node : net.nodes()) {
    CHECK(node.k >= 0.5);
    CHECK(node.k <= 1.0);
    CHECK(node.sigma >= 1e4);
    CHECK(node.sigma <= 1e5);
  }
  for (const LinkParams& link : net.links()) {
    CHECK(link.p >= 0.5);
    CHECK(link.p <= 1.0);
    CHECK(link.t >= 1.0);
    CHECK(link.t <= 100.0);
  }
}

TEST_CASE("generator: node ids are zero-padded to a fixed width") {
  const Network net = generate(config(GraphModel::erdos_renyi, 100, 3.0, 3));
  CHECK(net.node(0).id == "n00");
  CHECK(net.node(12).id == "n12");
  CHECK(net.node(99).id == "n99");
}

TEST_CASE("generator: identical configurations reproduce identical networks") {
  const GeneratorConfig cfg = config(GraphModel::erdos_renyi, 50, 3.0, 7);
  const Network a = generate(cfg);
  const Network b = generate(cfg);
  CHECK(a == b);
  CHECK(a.to_json() == b.to_json());

  GeneratorConfig other = cfg;
  other.seed = 8;
  CHECK(generate(other).to_json() != a.to_json());
}

TEST_CASE("generator: invalid configurations are rejected") {
  const GeneratorConfig base = config(GraphModel::erdos_renyi, 20, 3.0, 0);
  auto tweaked = [&](auto mutate) {
    GeneratorConfig cfg = base;
    mutate(cfg);
    return cfg;
  };

  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.n = 2; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.avg_degree = 0.0; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.avg_degree = 20.0; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.avg_degree = 1.0; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.p_min = 0.0; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.p_min = 1.0; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.t_min = 0.0; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) {
                    c.t_min = 5.0;
                    c.t_max = 4.0;
                  })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.sigma_min = 0.0; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) {
                    c.sigma_min = 2e5;
                  })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.f_trunc = 0.0; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.f_trunc = 1.0; })),
                  ValidationError);
  CHECK_THROWS_AS(generate(tweaked([](GeneratorConfig& c) { c.alpha = 0.0; })),
                  ValidationError);

  // a valid-looking window whose implied floor gives useless links
  try {
    generate(tweaked([](GeneratorConfig& c) {
      c.f_trunc = 0.55;
      c.alpha = 8.0;
    }));
    FAIL("expected a fidelity floor rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("fidelity floor") != std::string::npos);
  }

  // the geometric ensemble tolerates sparse degree targets
  GeneratorConfig rgg = config(GraphModel::random_geometric, 20, 1.0, 0);
  CHECK_NOTHROW(generate(rgg));
}

TEST_CASE("generator: terminal sampling is seeded and well-formed") {
  const Network net = generate(config(GraphModel::erdos_renyi, 30, 3.0, 9));

  const TerminalSet a = sample_terminals(net, 3, 1);
  const TerminalSet b = sample_terminals(net, 3, 1);
  CHECK(a.members == b.members);

  const TerminalSet c = sample_terminals(net, 3, 2);
  CHECK(a.members != c.members);

  const TerminalSet all = sample_terminals(net, 30, 4);
  CHECK(all.size() == 30);

  for (const TerminalSet* ts : {&a, &c, &all}) {
    CHECK(std::is_sorted(ts->members.begin(), ts->members.end(),
                         [&](NodeIndex lhs, NodeIndex rhs) {
                           return net.node(lhs).id < net.node(rhs).id;
                         }));
    for (std::size_t i = 1; i < ts->members.size(); ++i) {
      CHECK(ts->members[i - 1] != ts->members[i]);
    }
  }

  CHECK_THROWS_AS(sample_terminals(net, 31, 0), ValidationError);
  CHECK_THROWS_AS(sample_terminals(net, 1, 0), ValidationError);
}

TEST_CASE("generator: instance seed stream is stable") {
  CHECK(derive_seed(42, 0) == 0xbdd732262feb6e95ull);
  CHECK(derive_seed(42, 1) == 0x28efe333b266f103ull);
  CHECK(derive_seed(0, 0) == 0xe220a8397b1dcdafull);
  CHECK(derive_seed(7, 5) == 0x3fdabe86cbbeaa11ull);

  // distinct indices decorrelate
  for (std::uint64_t i = 1; i < 32; ++i) {
    CHECK(derive_seed(42, i) != derive_seed(42, 0));
  }
}

TEST_CASE("generator: model names parse and print both ways") {
  CHECK(parse_model("er") == GraphModel::erdos_renyi);
  CHECK(parse_model("erdos-renyi") == GraphModel::erdos_renyi);
  CHECK(parse_model("rgg") == GraphModel::random_geometric);
  CHECK(parse_model("random-geometric") == GraphModel::random_geometric);
  CHECK(model_name(GraphModel::erdos_renyi) == "er");
  CHECK(model_name(GraphModel::random_geometric) == "rgg");

  try {
    parse_model("lattice");
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("lattice") != std::string::npos);
  }
}
