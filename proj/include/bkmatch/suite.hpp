#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bkmatch/verify.hpp"

namespace bkmatch {

// Which checkers a per-graph run executes, and how many seeded instances of
// each. Defaults match the standard sweep profile.
struct SuiteOptions {
  std::uint64_t seed = 1;
  int event_pairs = 200;            // random increasing-event pairs
  bool exhaustive_small_events = true;  // all event pairs when |V| <= 4 (bk only)
  bool with_bk = true;
  bool with_cell_chain = true;
  bool with_partition = true;
  bool with_weighted = false;
  bool with_maximum = false;
  bool with_conditioned = false;
  int condition_budget = 2;         // max |V+| + |V-|
  int conditioned_pairs = 20;       // event pairs per satisfiable condition
  bool with_na = false;
  int na_instances = 50;
  bool with_submodularity = false;
  int submodularity_instances = 50;
  bool probe_sensitivity = false;
};

struct SuiteResult {
  // check name -> (passed, failed)
  std::map<std::string, std::pair<long, long>> counts;
  std::vector<CheckReport> failures;
  std::vector<CheckReport> probe_reports;  // expected-failure probe runs

  long total_passed() const;
  long total_failed() const;
  bool all_hold() const { return total_failed() == 0; }
  void record(const CheckReport& report);
  void merge(const SuiteResult& other);
};

// Runs the configured checkers on one graph. Deterministic given the seed.
SuiteResult run_graph_suite(const BipartiteGraph& g, const SuiteOptions& opt);

struct SweepOptions {
  SuiteOptions suite;
  int max_vertex_sum = 7;   // enumerate all (s,t) with s+t <= this
  int random_count = 0;     // when > 0, seeded random graphs instead
  int random_s = 3;
  int random_t = 3;
  Rat edge_probability = Rat(1, 2);
  int threads = 1;
  int max_vertices = 12;    // hard caps on accepted instances
  int max_edges = 16;
};

struct SweepResult {
  // One entry per graph, in sweep order: (graph key, per-graph result).
  std::vector<std::pair<std::string, SuiteResult>> per_graph;
  SuiteResult combined;
};

// Runs the suite over the sweep's graphs. Output order is the sweep order
// regardless of thread count.
SweepResult run_sweep(const SweepOptions& opt);

// Byte-stable JSON report documents (keys sorted, rationals as strings).
std::string suite_report_json(const std::string& command,
                              const std::string& instance_key,
                              const SuiteOptions& opt, const SuiteResult& res);
std::string sweep_report_json(const SweepOptions& opt, const SweepResult& res);

// Replaces every edge weight with a seeded random pick from
// {1/3, 1/2, 1, 2, 3}.
BipartiteGraph with_random_weights(const BipartiteGraph& g, std::uint64_t seed);

// All (v_plus, v_minus) pairs of disjoint vertex sets with total size at most
// budget for which some matching satisfies the condition.
std::vector<std::pair<Mask, Mask>> satisfiable_conditions(
    const GraphContext& ctx, int budget);

}  // namespace bkmatch
