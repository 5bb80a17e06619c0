#include "entroute.h"

#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "entroute/algebra.hpp"
#include "entroute/ghz.hpp"
#include "entroute/mosp.hpp"
#include "entroute/netgen.hpp"
#include "entroute/network.hpp"
#include "entroute/star.hpp"
#include "entroute/verify.hpp"

struct entroute_network {
  entroute::Network impl;
};

struct entroute_fronts {
  std::vector<std::string> node_ids;
  entroute::FrontTable fronts;
};

struct entroute_star_result {
  std::vector<std::string> node_ids;
  std::vector<std::string> terminal_ids;
  entroute::StarResult impl;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return ENTROUTE_OK;
  } catch (const entroute::ParseError& e) {
    return fail(ENTROUTE_ERROR_PARSE, e.what());
  } catch (const entroute::IoError& e) {
    return fail(ENTROUTE_ERROR_IO, e.what());
  } catch (const entroute::ValidationError& e) {
    return fail(ENTROUTE_ERROR_VALIDATION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ENTROUTE_ERROR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::vector<std::string> collect_ids(const entroute::Network& net) {
  std::vector<std::string> ids;
  ids.reserve(net.node_count());
  for (const entroute::NodeParams& node : net.nodes()) {
    ids.push_back(node.id);
  }
  return ids;
}

const entroute::PathSignature* front_member(const entroute_fronts* fronts, size_t node,
                                            size_t member) {
  if (fronts == nullptr || node >= fronts->fronts.size() ||
      member >= fronts->fronts[node].size()) {
    return nullptr;
  }
  return &fronts->fronts[node][member];
}

const entroute::StarSolution* star_solution(const entroute_star_result* result,
                                            size_t index) {
  if (result == nullptr || index >= result->impl.solutions.size()) {
    return nullptr;
  }
  return &result->impl.solutions[index];
}

} // namespace

const char* entroute_last_error(void) { return g_last_error.c_str(); }

void entroute_string_free(char* text) { delete[] text; }

void entroute_string_array_free(char** items, size_t count) {
  if (items == nullptr) {
    return;
  }
  for (size_t i = 0; i < count; ++i) {
    delete[] items[i];
  }
  delete[] items;
}

int entroute_network_parse(const char* text, entroute_network** out) {
  if (text == nullptr || out == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new entroute_network{entroute::Network::from_json(text)};
  });
}

int entroute_network_load(const char* path, entroute_network** out) {
  if (path == nullptr || out == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = new entroute_network{entroute::Network::load(path)}; });
}

int entroute_network_to_json(const entroute_network* net, char** out_text) {
  if (net == nullptr || out_text == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] { *out_text = copy_string(net->impl.to_json()); });
}

int entroute_network_save(const entroute_network* net, const char* path) {
  if (net == nullptr || path == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] { net->impl.save(path); });
}

void entroute_network_free(entroute_network* net) { delete net; }

size_t entroute_network_node_count(const entroute_network* net) {
  return net == nullptr ? 0 : net->impl.node_count();
}

size_t entroute_network_link_count(const entroute_network* net) {
  return net == nullptr ? 0 : net->impl.link_count();
}

const char* entroute_network_node_id(const entroute_network* net, size_t index) {
  if (net == nullptr || index >= net->impl.node_count()) {
    return nullptr;
  }
  return net->impl.node(static_cast<entroute::NodeIndex>(index)).id.c_str();
}

void entroute_gen_config_init(entroute_gen_config* cfg) {
  if (cfg == nullptr) {
    return;
  }
  const entroute::GeneratorConfig defaults;
  cfg->model = ENTROUTE_MODEL_ER;
  cfg->n = defaults.n;
  cfg->avg_degree = defaults.avg_degree;
  cfg->p_min = defaults.p_min;
  cfg->t_min = defaults.t_min;
  cfg->t_max = defaults.t_max;
  cfg->sigma_min = defaults.sigma_min;
  cfg->sigma_max = defaults.sigma_max;
  cfg->f_trunc = defaults.f_trunc;
  cfg->alpha = defaults.alpha;
  cfg->seed = defaults.seed;
}

int entroute_generate(const entroute_gen_config* cfg, entroute_network** out) {
  if (cfg == nullptr || out == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    entroute::GeneratorConfig config;
    switch (cfg->model) {
    case ENTROUTE_MODEL_ER:
      config.model = entroute::GraphModel::erdos_renyi;
      break;
    case ENTROUTE_MODEL_RGG:
      config.model = entroute::GraphModel::random_geometric;
      break;
    default:
      throw entroute::ValidationError("unknown graph model code");
    }
    config.n = cfg->n;
    config.avg_degree = cfg->avg_degree;
    config.p_min = cfg->p_min;
    config.t_min = cfg->t_min;
    config.t_max = cfg->t_max;
    config.sigma_min = cfg->sigma_min;
    config.sigma_max = cfg->sigma_max;
    config.f_trunc = cfg->f_trunc;
    config.alpha = cfg->alpha;
    config.seed = cfg->seed;
    *out = new entroute_network{entroute::generate(config)};
  });
}

uint64_t entroute_derive_seed(uint64_t master, uint64_t index) {
  return entroute::derive_seed(master, index);
}

int entroute_sample_terminals(const entroute_network* net, size_t count, uint64_t seed,
                              char*** out_ids) {
  if (net == nullptr || out_ids == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const entroute::TerminalSet terminals =
        entroute::sample_terminals(net->impl, count, seed);
    char** ids = new char*[terminals.size()];
    for (size_t i = 0; i < terminals.size(); ++i) {
      ids[i] = copy_string(net->impl.node(terminals.members[i]).id);
    }
    *out_ids = ids;
  });
}

int entroute_shortest_paths(const entroute_network* net, const char* source_id,
                            int keep_equal_paths, entroute_fronts** out) {
  if (net == nullptr || source_id == nullptr || out == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const entroute::NodeIndex source = net->impl.require(source_id);
    entroute::SolverOptions options;
    options.keep_equal_paths = keep_equal_paths != 0;
    auto fronts = std::make_unique<entroute_fronts>();
    fronts->node_ids = collect_ids(net->impl);
    fronts->fronts = entroute::shortest_paths(net->impl, source, options);
    *out = fronts.release();
  });
}

void entroute_fronts_free(entroute_fronts* fronts) { delete fronts; }

size_t entroute_fronts_node_count(const entroute_fronts* fronts) {
  return fronts == nullptr ? 0 : fronts->fronts.size();
}

size_t entroute_fronts_size(const entroute_fronts* fronts, size_t node) {
  if (fronts == nullptr || node >= fronts->fronts.size()) {
    return 0;
  }
  return fronts->fronts[node].size();
}

int entroute_fronts_metrics(const entroute_fronts* fronts, size_t node, size_t member,
                            double* p, double* t, double* gamma, double* inv_sigma,
                            double* fidelity) {
  const entroute::PathSignature* sig = front_member(fronts, node, member);
  if (sig == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "front member out of range");
  }
  if (p != nullptr) {
    *p = sig->p;
  }
  if (t != nullptr) {
    *t = sig->t;
  }
  if (gamma != nullptr) {
    *gamma = sig->gamma;
  }
  if (inv_sigma != nullptr) {
    *inv_sigma = sig->inv_sigma;
  }
  if (fidelity != nullptr) {
    *fidelity = entroute::contract(*sig).F;
  }
  return ENTROUTE_OK;
}

size_t entroute_fronts_path_length(const entroute_fronts* fronts, size_t node,
                                   size_t member) {
  const entroute::PathSignature* sig = front_member(fronts, node, member);
  return sig == nullptr ? 0 : sig->nodes.size();
}

const char* entroute_fronts_path_node(const entroute_fronts* fronts, size_t node,
                                      size_t member, size_t position) {
  const entroute::PathSignature* sig = front_member(fronts, node, member);
  if (sig == nullptr || position >= sig->nodes.size()) {
    return nullptr;
  }
  return fronts->node_ids[sig->nodes[position]].c_str();
}

int entroute_star(const entroute_network* net, const char* const* terminal_ids,
                  size_t terminal_count, int discard_overlap, int keep_equal_paths,
                  entroute_star_result** out) {
  if (net == nullptr || terminal_ids == nullptr || out == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<std::string> ids;
    ids.reserve(terminal_count);
    for (size_t i = 0; i < terminal_count; ++i) {
      if (terminal_ids[i] == nullptr) {
        throw std::invalid_argument("null terminal id");
      }
      ids.emplace_back(terminal_ids[i]);
    }
    const entroute::TerminalSet terminals = entroute::make_terminals(net->impl, ids);
    entroute::StarOptions options;
    options.discard_overlap = discard_overlap != 0;
    options.keep_equal_paths = keep_equal_paths != 0;
    auto result = std::make_unique<entroute_star_result>();
    result->node_ids = collect_ids(net->impl);
    for (entroute::NodeIndex terminal : terminals.members) {
      result->terminal_ids.push_back(net->impl.node(terminal).id);
    }
    result->impl = entroute::t_star_exact(net->impl, terminals, options);
    *out = result.release();
  });
}

void entroute_star_result_free(entroute_star_result* result) { delete result; }

int entroute_star_feasible(const entroute_star_result* result) {
  return result != nullptr && result->impl.status == entroute::StarStatus::ok ? 1 : 0;
}

int entroute_star_complete(const entroute_star_result* result) {
  return result != nullptr && result->impl.complete ? 1 : 0;
}

size_t entroute_star_solution_count(const entroute_star_result* result) {
  return result == nullptr ? 0 : result->impl.solutions.size();
}

const char* entroute_star_terminal(const entroute_star_result* result, size_t branch) {
  if (result == nullptr || branch >= result->terminal_ids.size()) {
    return nullptr;
  }
  return result->terminal_ids[branch].c_str();
}

const char* entroute_star_center(const entroute_star_result* result, size_t index) {
  const entroute::StarSolution* sol = star_solution(result, index);
  return sol == nullptr ? nullptr : result->node_ids[sol->center].c_str();
}

int entroute_star_metrics(const entroute_star_result* result, size_t index, double* xi,
                          double* f, int* overlap) {
  const entroute::StarSolution* sol = star_solution(result, index);
  if (sol == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "star solution out of range");
  }
  if (xi != nullptr) {
    *xi = sol->xi;
  }
  if (f != nullptr) {
    *f = sol->f;
  }
  if (overlap != nullptr) {
    *overlap = sol->overlap ? 1 : 0;
  }
  return ENTROUTE_OK;
}

size_t entroute_star_branch_length(const entroute_star_result* result, size_t index,
                                   size_t branch) {
  const entroute::StarSolution* sol = star_solution(result, index);
  if (sol == nullptr || branch >= sol->branches.size()) {
    return 0;
  }
  return sol->branches[branch].nodes.size();
}

const char* entroute_star_branch_node(const entroute_star_result* result, size_t index,
                                      size_t branch, size_t position) {
  const entroute::StarSolution* sol = star_solution(result, index);
  if (sol == nullptr || branch >= sol->branches.size() ||
      position >= sol->branches[branch].nodes.size()) {
    return nullptr;
  }
  return result->node_ids[sol->branches[branch].nodes[position]].c_str();
}

int entroute_verify(char** out_report, int* out_failed_suites) {
  if (out_report == nullptr) {
    return fail(ENTROUTE_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const entroute::verify::Report report = entroute::verify::run_all();
    *out_report = copy_string(entroute::verify::format(report));
    if (out_failed_suites != nullptr) {
      int failed = 0;
      for (const auto& suite : report.suites) {
        if (suite.failures != 0) {
          ++failed;
        }
      }
      *out_failed_suites = failed;
    }
  });
}
