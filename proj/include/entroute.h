#ifndef ENTROUTE_H
#define ENTROUTE_H

/* C interface to the entroute library: quantum-network loading and
 * generation, multi-objective path fronts, exact star search, and the
 * built-in verification suites. All functions returning int yield
 * ENTROUTE_OK or an error code; entroute_last_error() describes the most
 * recent failure on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  ENTROUTE_OK = 0,
  ENTROUTE_ERROR_PARSE = 1,      /* malformed document text */
  ENTROUTE_ERROR_VALIDATION = 2, /* well-formed input violating an invariant */
  ENTROUTE_ERROR_BAD_ARGUMENT = 3,
  ENTROUTE_ERROR_IO = 4,
  ENTROUTE_ERROR_INTERNAL = 5
};

const char* entroute_last_error(void);

/* Frees any string or string array returned by this API. */
void entroute_string_free(char* text);
void entroute_string_array_free(char** items, size_t count);

/* ---- networks ---- */

typedef struct entroute_network entroute_network;

int entroute_network_parse(const char* text, entroute_network** out);
int entroute_network_load(const char* path, entroute_network** out);
int entroute_network_to_json(const entroute_network* net, char** out_text);
int entroute_network_save(const entroute_network* net, const char* path);
void entroute_network_free(entroute_network* net);

size_t entroute_network_node_count(const entroute_network* net);
size_t entroute_network_link_count(const entroute_network* net);
/* Borrowed pointer, valid while the network lives. NULL when out of range. */
const char* entroute_network_node_id(const entroute_network* net, size_t index);

/* ---- random ensembles ---- */

enum { ENTROUTE_MODEL_ER = 0, ENTROUTE_MODEL_RGG = 1 };

typedef struct entroute_gen_config {
  int model;
  uint64_t n;
  double avg_degree;
  double p_min;
  double t_min;
  double t_max;
  double sigma_min;
  double sigma_max;
  double f_trunc;
  double alpha;
  uint64_t seed;
} entroute_gen_config;

/* Fills cfg with the reference ensemble parameters. */
void entroute_gen_config_init(entroute_gen_config* cfg);

int entroute_generate(const entroute_gen_config* cfg, entroute_network** out);

uint64_t entroute_derive_seed(uint64_t master, uint64_t index);

/* count node ids drawn uniformly without replacement, returned in
 * canonical order. Free with entroute_string_array_free(ids, count). */
int entroute_sample_terminals(const entroute_network* net, size_t count,
                              uint64_t seed, char*** out_ids);

/* ---- multi-objective path fronts ---- */

typedef struct entroute_fronts entroute_fronts;

int entroute_shortest_paths(const entroute_network* net, const char* source_id,
                            int keep_equal_paths, entroute_fronts** out);
void entroute_fronts_free(entroute_fronts* fronts);

size_t entroute_fronts_node_count(const entroute_fronts* fronts);
/* Number of Pareto-optimal signatures at the node; 0 when unreachable. */
size_t entroute_fronts_size(const entroute_fronts* fronts, size_t node);
/* Any output pointer may be NULL. fidelity receives the contracted branch
 * fidelity of the signature. */
int entroute_fronts_metrics(const entroute_fronts* fronts, size_t node, size_t member,
                            double* p, double* t, double* gamma, double* inv_sigma,
                            double* fidelity);
size_t entroute_fronts_path_length(const entroute_fronts* fronts, size_t node,
                                   size_t member);
/* Borrowed node id along the path, source first. NULL when out of range. */
const char* entroute_fronts_path_node(const entroute_fronts* fronts, size_t node,
                                      size_t member, size_t position);

/* ---- star search ---- */

typedef struct entroute_star_result entroute_star_result;

int entroute_star(const entroute_network* net, const char* const* terminal_ids,
                  size_t terminal_count, int discard_overlap, int keep_equal_paths,
                  entroute_star_result** out);
void entroute_star_result_free(entroute_star_result* result);

/* 0 when no node is reachable from every terminal. */
int entroute_star_feasible(const entroute_star_result* result);
int entroute_star_complete(const entroute_star_result* result);
size_t entroute_star_solution_count(const entroute_star_result* result);
/* Terminal ids in canonical order; branch i of every solution targets
 * terminal i. */
const char* entroute_star_terminal(const entroute_star_result* result, size_t branch);
const char* entroute_star_center(const entroute_star_result* result, size_t index);
int entroute_star_metrics(const entroute_star_result* result, size_t index, double* xi,
                          double* f, int* overlap);
size_t entroute_star_branch_length(const entroute_star_result* result, size_t index,
                                   size_t branch);
/* Borrowed node id along the branch, center first. NULL when out of range. */
const char* entroute_star_branch_node(const entroute_star_result* result, size_t index,
                                      size_t branch, size_t position);

/* ---- verification ---- */

/* Runs the law and oracle suites. Writes a human-readable report (free
 * with entroute_string_free) and the number of failed suites. */
int entroute_verify(char** out_report, int* out_failed_suites);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ENTROUTE_H */
