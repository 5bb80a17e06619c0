// entroute command line tool. Talks to the library through the C API only.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "entroute.h"

namespace {

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string fmt_ms(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

int api_error() { return usage_error(entroute_last_error()); }

struct NetworkHandle {
  entroute_network* ptr = nullptr;
  NetworkHandle() = default;
  NetworkHandle(const NetworkHandle&) = delete;
  NetworkHandle& operator=(const NetworkHandle&) = delete;
  ~NetworkHandle() { entroute_network_free(ptr); }
};

struct FrontsHandle {
  entroute_fronts* ptr = nullptr;
  FrontsHandle() = default;
  FrontsHandle(const FrontsHandle&) = delete;
  FrontsHandle& operator=(const FrontsHandle&) = delete;
  ~FrontsHandle() { entroute_fronts_free(ptr); }
};

struct StarHandle {
  entroute_star_result* ptr = nullptr;
  StarHandle() = default;
  StarHandle(const StarHandle&) = delete;
  StarHandle& operator=(const StarHandle&) = delete;
  ~StarHandle() { entroute_star_result_free(ptr); }
};

struct TerminalIds {
  char** ids = nullptr;
  size_t count = 0;
  TerminalIds() = default;
  TerminalIds(const TerminalIds&) = delete;
  TerminalIds& operator=(const TerminalIds&) = delete;
  ~TerminalIds() { entroute_string_array_free(ids, count); }
};

int write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    return usage_error("cannot open output file '" + path + "'");
  }
  out << text;
  if (!out.flush()) {
    return usage_error("cannot write output file '" + path + "'");
  }
  return 0;
}

// ---- gen -------------------------------------------------------------

struct GenFlags {
  std::string model = "er";
  std::uint64_t n = 0;
  double avg_degree = 0.0;
  double p_min = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double f_trunc = 0.0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int model_code(const std::string& name) {
  if (name == "er") {
    return ENTROUTE_MODEL_ER;
  }
  if (name == "rgg") {
    return ENTROUTE_MODEL_RGG;
  }
  return -1;
}

double default_degree(int model) {
  return model == ENTROUTE_MODEL_RGG ? 8.0 : 3.0;
}

int cmd_gen(const GenFlags& flags, bool degree_given) {
  entroute_gen_config cfg;
  entroute_gen_config_init(&cfg);
  const int code = model_code(flags.model);
  if (code < 0) {
    return usage_error("unknown model '" + flags.model + "' (expected er or rgg)");
  }
  cfg.model = code;
  cfg.n = flags.n;
  cfg.avg_degree = degree_given ? flags.avg_degree : default_degree(code);
  cfg.p_min = flags.p_min;
  cfg.t_min = flags.t_min;
  cfg.t_max = flags.t_max;
  cfg.sigma_min = flags.sigma_min;
  cfg.sigma_max = flags.sigma_max;
  cfg.f_trunc = flags.f_trunc;
  cfg.alpha = flags.alpha;
  cfg.seed = flags.seed;

  NetworkHandle net;
  if (entroute_generate(&cfg, &net.ptr) != ENTROUTE_OK) {
    return api_error();
  }
  if (!flags.out.empty()) {
    if (entroute_network_save(net.ptr, flags.out.c_str()) != ENTROUTE_OK) {
      return api_error();
    }
    return 0;
  }
  char* text = nullptr;
  if (entroute_network_to_json(net.ptr, &text) != ENTROUTE_OK) {
    return api_error();
  }
  std::cout << text;
  entroute_string_free(text);
  return 0;
}

// ---- paths -----------------------------------------------------------

int cmd_paths(const std::string& net_path, const std::string& source, bool multipath) {
  NetworkHandle net;
  if (entroute_network_load(net_path.c_str(), &net.ptr) != ENTROUTE_OK) {
    return api_error();
  }
  FrontsHandle fronts;
  if (entroute_shortest_paths(net.ptr, source.c_str(), multipath ? 1 : 0,
                              &fronts.ptr) != ENTROUTE_OK) {
    return api_error();
  }
  std::ostringstream out;
  out << "source: " << source << "\n";
  const size_t nodes = entroute_fronts_node_count(fronts.ptr);
  for (size_t node = 0; node < nodes; ++node) {
    const size_t size = entroute_fronts_size(fronts.ptr, node);
    out << "node " << entroute_network_node_id(net.ptr, node) << ": " << size
        << " path(s)\n";
    for (size_t member = 0; member < size; ++member) {
      double p = 0.0, t = 0.0, gamma = 0.0, inv_sigma = 0.0, fidelity = 0.0;
      entroute_fronts_metrics(fronts.ptr, node, member, &p, &t, &gamma, &inv_sigma,
                              &fidelity);
      out << "  p=" << fmt(p) << " t=" << fmt(t) << " gamma=" << fmt(gamma)
          << " inv_sigma=" << fmt(inv_sigma) << " F=" << fmt(fidelity) << " nodes=";
      const size_t length = entroute_fronts_path_length(fronts.ptr, node, member);
      for (size_t i = 0; i < length; ++i) {
        if (i != 0) {
          out << "->";
        }
        out << entroute_fronts_path_node(fronts.ptr, node, member, i);
      }
      out << "\n";
    }
  }
  std::cout << out.str();
  return 0;
}

// ---- star ------------------------------------------------------------

int cmd_star(const std::string& net_path, const std::vector<std::string>& terminals,
             bool disjoint, bool multipath) {
  NetworkHandle net;
  if (entroute_network_load(net_path.c_str(), &net.ptr) != ENTROUTE_OK) {
    return api_error();
  }
  std::vector<const char*> ids;
  ids.reserve(terminals.size());
  for (const std::string& id : terminals) {
    ids.push_back(id.c_str());
  }
  StarHandle result;
  if (entroute_star(net.ptr, ids.data(), ids.size(), disjoint ? 1 : 0,
                    multipath ? 1 : 0, &result.ptr) != ENTROUTE_OK) {
    return api_error();
  }

  std::ostringstream out;
  out << "terminals:";
  for (size_t i = 0; i < terminals.size(); ++i) {
    out << (i == 0 ? " " : ",") << entroute_star_terminal(result.ptr, i);
  }
  out << "\n";

  const size_t count = entroute_star_solution_count(result.ptr);
  if (entroute_star_feasible(result.ptr) == 0) {
    out << "status: no spanning star\n";
    std::cout << out.str();
    return 3;
  }
  if (count == 0) {
    out << "status: no solution above the fidelity floor\n";
    std::cout << out.str();
    return 3;
  }
  out << "status: ok\n";
  out << "complete: " << (entroute_star_complete(result.ptr) != 0 ? "yes" : "no")
      << "\n";
  out << "solutions: " << count << "\n";
  for (size_t i = 0; i < count; ++i) {
    double xi = 0.0, f = 0.0;
    int overlap = 0;
    entroute_star_metrics(result.ptr, i, &xi, &f, &overlap);
    out << "solution " << (i + 1) << ": center=" << entroute_star_center(result.ptr, i)
        << " xi=" << fmt(xi) << " f=" << fmt(f) << " overlap="
        << (overlap != 0 ? "yes" : "no") << "\n";
    for (size_t branch = 0; branch < terminals.size(); ++branch) {
      out << "  " << entroute_star_terminal(result.ptr, branch) << ": ";
      const size_t length = entroute_star_branch_length(result.ptr, i, branch);
      for (size_t pos = 0; pos < length; ++pos) {
        if (pos != 0) {
          out << "->";
        }
        out << entroute_star_branch_node(result.ptr, i, branch, pos);
      }
      out << "\n";
    }
  }
  std::cout << out.str();
  return 0;
}

// ---- sweep -----------------------------------------------------------

struct SweepConfig {
  std::vector<std::string> models;
  std::vector<std::uint64_t> n_grid;
  size_t t = 3;
  size_t instances = 1;
  std::uint64_t seed = 0;
  double er_degree = 3.0;
  double rgg_degree = 8.0;
  entroute_gen_config bounds; // p_min..alpha overrides; model/n/seed ignored
};

SweepConfig parse_sweep_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open config file '" + path + "'");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("config is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) {
    throw std::runtime_error("config must be a JSON object");
  }

  SweepConfig cfg;
  entroute_gen_config_init(&cfg.bounds);

  const char* known[] = {"models",    "n",         "t",         "instances",
                         "seed",      "avg_degree", "p_min",    "t_min",
                         "t_max",     "sigma_min", "sigma_max", "f_trunc",
                         "alpha"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const char* key : known) {
      if (it.key() == key) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw std::runtime_error("unknown config key '" + it.key() + "'");
    }
  }

  if (!doc.contains("models") || !doc["models"].is_array() || doc["models"].empty()) {
    throw std::runtime_error("config needs a nonempty 'models' array");
  }
  for (const auto& entry : doc["models"]) {
    if (!entry.is_string() || model_code(entry.get<std::string>()) < 0) {
      throw std::runtime_error("'models' entries must be \"er\" or \"rgg\"");
    }
    cfg.models.push_back(entry.get<std::string>());
  }
  if (!doc.contains("n") || !doc["n"].is_array() || doc["n"].empty()) {
    throw std::runtime_error("config needs a nonempty 'n' array");
  }
  for (const auto& entry : doc["n"]) {
    if (!entry.is_number_unsigned() || entry.get<std::uint64_t>() < 3) {
      throw std::runtime_error("'n' entries must be integers >= 3");
    }
    cfg.n_grid.push_back(entry.get<std::uint64_t>());
  }
  if (!doc.contains("t") || !doc["t"].is_number_unsigned() ||
      doc["t"].get<std::uint64_t>() < 2) {
    throw std::runtime_error("config needs an integer 't' >= 2");
  }
  cfg.t = doc["t"].get<size_t>();
  if (!doc.contains("instances") || !doc["instances"].is_number_unsigned() ||
      doc["instances"].get<std::uint64_t>() < 1) {
    throw std::runtime_error("config needs an integer 'instances' >= 1");
  }
  cfg.instances = doc["instances"].get<size_t>();
  if (!doc.contains("seed") || !doc["seed"].is_number_unsigned()) {
    throw std::runtime_error("config needs an unsigned integer 'seed'");
  }
  cfg.seed = doc["seed"].get<std::uint64_t>();

  if (doc.contains("avg_degree")) {
    const auto& deg = doc["avg_degree"];
    if (deg.is_number()) {
      cfg.er_degree = cfg.rgg_degree = deg.get<double>();
    } else if (deg.is_object()) {
      for (auto it = deg.begin(); it != deg.end(); ++it) {
        if (it.key() == "er" && it.value().is_number()) {
          cfg.er_degree = it.value().get<double>();
        } else if (it.key() == "rgg" && it.value().is_number()) {
          cfg.rgg_degree = it.value().get<double>();
        } else {
          throw std::runtime_error("'avg_degree' object keys must be er/rgg numbers");
        }
      }
    } else {
      throw std::runtime_error("'avg_degree' must be a number or {er,rgg} object");
    }
  }

  struct Override {
    const char* key;
    double* slot;
  } overrides[] = {
      {"p_min", &cfg.bounds.p_min},         {"t_min", &cfg.bounds.t_min},
      {"t_max", &cfg.bounds.t_max},         {"sigma_min", &cfg.bounds.sigma_min},
      {"sigma_max", &cfg.bounds.sigma_max}, {"f_trunc", &cfg.bounds.f_trunc},
      {"alpha", &cfg.bounds.alpha},
  };
  for (const Override& ov : overrides) {
    if (doc.contains(ov.key)) {
      if (!doc[ov.key].is_number()) {
        throw std::runtime_error(std::string("'") + ov.key + "' must be a number");
      }
      *ov.slot = doc[ov.key].get<double>();
    }
  }
  return cfg;
}

struct SweepTask {
  std::string model;
  int code = 0;
  std::uint64_t n = 0;
  double avg_degree = 0.0;
  std::uint64_t net_seed = 0;
  std::uint64_t term_seed = 0;
};

struct SweepRow {
  bool failed = false;
  std::string error;
  double runtime_ms = 0.0;
  size_t stars = 0;
  double best_f = 0.0;
  double best_xi = 0.0;
  bool feasible = false;
};

void run_sweep_task(const SweepConfig& cfg, const SweepTask& task, SweepRow& row) {
  entroute_gen_config gen = cfg.bounds;
  gen.model = task.code;
  gen.n = task.n;
  gen.avg_degree = task.avg_degree;
  gen.seed = task.net_seed;

  NetworkHandle net;
  if (entroute_generate(&gen, &net.ptr) != ENTROUTE_OK) {
    row.failed = true;
    row.error = entroute_last_error();
    return;
  }
  TerminalIds terminals;
  if (entroute_sample_terminals(net.ptr, cfg.t, task.term_seed, &terminals.ids) !=
      ENTROUTE_OK) {
    row.failed = true;
    row.error = entroute_last_error();
    return;
  }
  terminals.count = cfg.t;

  const auto start = std::chrono::steady_clock::now();
  StarHandle result;
  const int rc = entroute_star(net.ptr, terminals.ids, cfg.t, 0, 0, &result.ptr);
  const auto stop = std::chrono::steady_clock::now();
  if (rc != ENTROUTE_OK) {
    row.failed = true;
    row.error = entroute_last_error();
    return;
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  row.stars = entroute_star_solution_count(result.ptr);
  row.feasible = row.stars > 0;
  for (size_t i = 0; i < row.stars; ++i) {
    double xi = 0.0, f = 0.0;
    entroute_star_metrics(result.ptr, i, &xi, &f, nullptr);
    if (i == 0 || f > row.best_f) {
      row.best_f = f;
    }
    if (i == 0 || xi > row.best_xi) {
      row.best_xi = xi;
    }
  }
}

size_t default_jobs() { return 1; }

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              size_t jobs) {
  SweepConfig cfg;
  try {
    cfg = parse_sweep_config(config_path);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  for (const std::string& model : cfg.models) {
    for (std::uint64_t n : cfg.n_grid) {
      if (cfg.t > n) {
        return usage_error("terminal count exceeds node count at N=" +
                           std::to_string(n));
      }
    }
  }

  std::vector<SweepTask> tasks;
  for (const std::string& model : cfg.models) {
    const int code = model_code(model);
    for (std::uint64_t n : cfg.n_grid) {
      for (size_t i = 0; i < cfg.instances; ++i) {
        SweepTask task;
        task.model = model;
        task.code = code;
        task.n = n;
        task.avg_degree = code == ENTROUTE_MODEL_RGG ? cfg.rgg_degree : cfg.er_degree;
        const std::uint64_t index = tasks.size();
        task.net_seed = entroute_derive_seed(cfg.seed, 2 * index);
        task.term_seed = entroute_derive_seed(cfg.seed, 2 * index + 1);
        tasks.push_back(task);
      }
    }
  }

  std::vector<SweepRow> rows(tasks.size());
  if (jobs == 0) {
    jobs = default_jobs();
  }
  if (jobs > tasks.size()) {
    jobs = tasks.size();
  }
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) {
      run_sweep_task(cfg, tasks[i], rows[i]);
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
          run_sweep_task(cfg, tasks[i], rows[i]);
        }
      });
    }
    for (std::thread& worker : workers) {
      worker.join();
    }
  }

  for (const SweepRow& row : rows) {
    if (row.failed) {
      return usage_error(row.error);
    }
  }

  std::ostringstream out;
  out << "model,N,T,seed,runtime_ms,num_pareto_stars,best_f,best_xi,feasible\n";
  for (size_t i = 0; i < tasks.size(); ++i) {
    const SweepTask& task = tasks[i];
    const SweepRow& row = rows[i];
    out << task.model << "," << task.n << "," << cfg.t << "," << task.net_seed << ","
        << fmt_ms(row.runtime_ms) << "," << row.stars << ",";
    if (row.feasible) {
      out << fmt(row.best_f) << "," << fmt(row.best_xi) << ",1\n";
    } else {
      out << ",,0\n";
    }
  }

  size_t cursor = 0;
  for (const std::string& model : cfg.models) {
    for (std::uint64_t n : cfg.n_grid) {
      double runtime_sum = 0.0;
      double star_sum = 0.0;
      size_t feasible = 0;
      for (size_t i = 0; i < cfg.instances; ++i) {
        const SweepRow& row = rows[cursor + i];
        runtime_sum += row.runtime_ms;
        if (row.feasible) {
          star_sum += static_cast<double>(row.stars);
          ++feasible;
        }
      }
      cursor += cfg.instances;
      out << "# summary," << model << "," << n << ","
          << fmt_ms(runtime_sum / static_cast<double>(cfg.instances)) << ",";
      if (feasible > 0) {
        out << fmt(star_sum / static_cast<double>(feasible));
      }
      out << "," << fmt(static_cast<double>(feasible) /
                        static_cast<double>(cfg.instances))
          << "\n";
    }
  }
  return write_text(out_path, out.str());
}

// ---- verify ----------------------------------------------------------

int cmd_verify() {
  char* report = nullptr;
  int failed = 0;
  if (entroute_verify(&report, &failed) != ENTROUTE_OK) {
    return api_error();
  }
  std::cout << report;
  entroute_string_free(report);
  return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pareto-optimal GHZ distribution over noisy quantum networks"};
  app.require_subcommand(1);

  // gen
  GenFlags gen_flags;
  {
    entroute_gen_config defaults;
    entroute_gen_config_init(&defaults);
    gen_flags.n = defaults.n;
    gen_flags.avg_degree = defaults.avg_degree;
    gen_flags.p_min = defaults.p_min;
    gen_flags.t_min = defaults.t_min;
    gen_flags.t_max = defaults.t_max;
    gen_flags.sigma_min = defaults.sigma_min;
    gen_flags.sigma_max = defaults.sigma_max;
    gen_flags.f_trunc = defaults.f_trunc;
    gen_flags.alpha = defaults.alpha;
    gen_flags.seed = defaults.seed;
  }
  CLI::App* gen = app.add_subcommand("gen", "Generate a random network file");
  gen->add_option("--model", gen_flags.model, "Graph model: er or rgg")
      ->capture_default_str();
  gen->add_option("--n", gen_flags.n, "Node count")->capture_default_str();
  CLI::Option* degree_opt =
      gen->add_option("--avg-degree", gen_flags.avg_degree,
                      "Target mean degree (default 3 for er, 8 for rgg)");
  gen->add_option("--p-min", gen_flags.p_min, "Lower bound for link p and node k")
      ->capture_default_str();
  gen->add_option("--t-min", gen_flags.t_min, "Lower bound for link time")
      ->capture_default_str();
  gen->add_option("--t-max", gen_flags.t_max, "Upper bound for link time")
      ->capture_default_str();
  gen->add_option("--sigma-min", gen_flags.sigma_min, "Lower bound for node sigma")
      ->capture_default_str();
  gen->add_option("--sigma-max", gen_flags.sigma_max, "Upper bound for node sigma")
      ->capture_default_str();
  gen->add_option("--f-trunc", gen_flags.f_trunc, "Truncation fidelity for the floor")
      ->capture_default_str();
  gen->add_option("--alpha", gen_flags.alpha, "Fidelity floor scaling exponent")
      ->capture_default_str();
  gen->add_option("--seed", gen_flags.seed, "Generator seed")->capture_default_str();
  gen->add_option("-o,--out", gen_flags.out, "Output file (stdout when omitted)");

  // paths
  std::string paths_net;
  std::string paths_source;
  bool paths_multipath = false;
  CLI::App* paths =
      app.add_subcommand("paths", "Pareto fronts of simple paths from a source node");
  paths->add_option("net", paths_net, "Network JSON file")->required();
  paths->add_option("--source", paths_source, "Source node id")->required();
  paths->add_flag("--multipath", paths_multipath,
                  "Keep equal-metric paths with distinct routes");

  // star
  std::string star_net;
  std::vector<std::string> star_terminals;
  bool star_disjoint = false;
  bool star_keep_overlap = false;
  bool star_multipath = false;
  CLI::App* star = app.add_subcommand("star", "Pareto-optimal stars over terminals");
  star->add_option("net", star_net, "Network JSON file")->required();
  star->add_option("--terminals", star_terminals, "Comma-separated terminal ids")
      ->required()
      ->delimiter(',');
  CLI::Option* disjoint_opt = star->add_flag("--disjoint", star_disjoint,
                                             "Discard stars whose branches share a link");
  star->add_flag("--keep-overlap", star_keep_overlap,
                 "Keep link-sharing stars (default)")
      ->excludes(disjoint_opt);
  star->add_flag("--multipath", star_multipath,
                 "Keep equal-metric paths with distinct routes");

  // sweep
  std::string sweep_config;
  std::string sweep_out;
  size_t sweep_jobs = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "Scaling sweep over random ensembles");
  sweep->add_option("config", sweep_config, "Sweep config JSON file")->required();
  sweep->add_option("-o,--out", sweep_out, "Output CSV file (stdout when omitted)");
  sweep->add_option("--jobs", sweep_jobs, "Concurrent instances")
      ->envname("ENTROUTE_JOBS");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Run the oracle and law suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (gen->parsed()) {
    return cmd_gen(gen_flags, degree_opt->count() > 0);
  }
  if (paths->parsed()) {
    return cmd_paths(paths_net, paths_source, paths_multipath);
  }
  if (star->parsed()) {
    return cmd_star(star_net, star_terminals, star_disjoint, star_multipath);
  }
  if (sweep->parsed()) {
    return cmd_sweep(sweep_config, sweep_out, sweep_jobs);
  }
  if (verify->parsed()) {
    return cmd_verify();
  }
  return 2;
}
