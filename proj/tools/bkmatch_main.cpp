// bkmatch: exact verification of boundary-set correlation inequalities for
// random matchings in small bipartite graphs.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bkmatch/suite.hpp"

namespace {

using namespace bkmatch;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int vertex_cap() {
  if (const char* env = std::getenv("BKMATCH_MAX_VERTICES")) {
    return std::atoi(env);
  }
  return 12;
}

BipartiteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  BipartiteGraph g = parse_graph(buf.str());
  if (g.vertex_count() > vertex_cap()) {
    throw std::invalid_argument("graph exceeds vertex cap");
  }
  if (g.edge_count() > 16) {
    throw std::invalid_argument("graph exceeds edge cap");
  }
  return g;
}

void write_report(const std::string& path, const std::string& body) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write report file: " + path);
  out << body;
}

std::string edge_names(const BipartiteGraph& g, Mask edge_mask) {
  std::string out = "[";
  bool first = true;
  for (Mask bits = edge_mask; bits != 0; bits &= bits - 1) {
    const Edge& e = g.edge(std::countr_zero(bits));
    if (!first) out += ",";
    out += "(" + g.vertex_name(e.s) + "," + g.vertex_name(e.t) + ")";
    first = false;
  }
  return out + "]";
}

void print_summary(const SuiteResult& res) {
  for (const auto& [name, pf] : res.counts) {
    std::cout << name << ": " << pf.first << " passed, " << pf.second
              << " failed\n";
  }
  for (const CheckReport& r : res.failures) {
    std::cout << "FAIL " << r.name << " [" << r.instance
              << "] lhs=" << rat_to_string(r.lhs)
              << " rhs=" << rat_to_string(r.rhs) << " " << r.witness << "\n";
  }
  for (const CheckReport& r : res.probe_reports) {
    std::cout << "probe " << r.name << ": holds=" << (r.holds ? "true" : "false")
              << " lhs=" << rat_to_string(r.lhs)
              << " rhs=" << rat_to_string(r.rhs)
              << (r.holds ? " (UNEXPECTED: probe should fail)"
                          : " (expected failure)")
              << "\n";
  }
}

// Event literal: a JSON list of subsets, each subset a list of vertex names.
// Interpreted as an explicit member family, or as the generators of an
// increasing event when `increasing` is set.
Event parse_event_literal(const std::string& text, const BipartiteGraph& g,
                          bool increasing) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("malformed event literal");
  }
  if (!doc.is_array()) throw std::invalid_argument("malformed event literal");
  std::vector<Mask> subsets;
  for (const auto& entry : doc) {
    if (!entry.is_array()) {
      throw std::invalid_argument("malformed event literal");
    }
    subsets.push_back(g.mask_of_names(entry.get<std::vector<std::string>>()));
  }
  const GroundSet ground = graph_ground(g);
  if (increasing) return upward_closure(ground, subsets).expand();
  return Event(ground, std::move(subsets));
}

// Targeted run: the checker battery on one explicit event pair.
int cmd_verify_pair(const BipartiteGraph& g, const std::string& literal_a,
                    const std::string& literal_b, bool increasing,
                    const std::string& out_path) {
  const Event a = parse_event_literal(literal_a, g, increasing);
  const Event b = parse_event_literal(literal_b, g, increasing);
  SuiteResult res;
  res.record(check_bk(g, a, b));
  const GraphContext ctx = build_context(g);
  const IncreasingEvent ia(a.ground(), a.members());
  const IncreasingEvent ib(b.ground(), b.members());
  res.record(check_bk_weighted(ctx, ia, ib));
  res.record(check_bk_maximum(ctx, ia, ib));
  res.record(verify_cell_chain(ctx, ia, ib));
  print_summary(res);
  write_report(out_path, suite_report_json("verify", describe_graph(g),
                                           SuiteOptions{}, res));
  std::cout << (res.all_hold() ? "all checks hold" : "violations found")
            << "\n";
  return res.all_hold() ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& graph_path, std::uint64_t seed,
               int num_events, bool probe, const std::string& out_path) {
  BipartiteGraph g = load_graph(graph_path);
  SuiteOptions opt;
  opt.seed = seed;
  opt.event_pairs = num_events;
  opt.with_weighted = true;
  opt.with_maximum = true;
  opt.with_conditioned = true;
  opt.conditioned_pairs = std::max(1, num_events / 10);
  opt.with_na = true;
  opt.na_instances = std::max(1, num_events / 4);
  opt.with_submodularity = true;
  opt.submodularity_instances = std::max(1, num_events / 4);
  opt.probe_sensitivity = probe;
  const SuiteResult res = run_graph_suite(g, opt);
  print_summary(res);
  write_report(out_path,
               suite_report_json("verify", describe_graph(g), opt, res));
  bool ok = res.all_hold();
  // The probe is a designed failure: it must report holds == false.
  for (const CheckReport& r : res.probe_reports) {
    if (r.holds) ok = false;
  }
  std::cout << (ok ? "all checks hold" : "violations found") << "\n";
  return ok ? kExitOk : kExitViolation;
}

int cmd_sweep(int max_vertex_sum, int random_count, int random_s, int random_t,
              const std::string& edge_prob, std::uint64_t seed, int pairs,
              int threads, const std::string& out_path) {
  SweepOptions opt;
  opt.suite.seed = seed;
  opt.suite.event_pairs = pairs;
  opt.suite.with_weighted = false;
  opt.suite.with_maximum = true;
  opt.suite.with_conditioned = true;
  opt.suite.conditioned_pairs = 5;
  opt.suite.with_na = true;
  opt.suite.na_instances = 20;
  opt.suite.with_submodularity = true;
  opt.suite.submodularity_instances = 20;
  opt.max_vertex_sum = max_vertex_sum;
  opt.random_count = random_count;
  opt.random_s = random_s;
  opt.random_t = random_t;
  opt.edge_probability = parse_rational(edge_prob);
  opt.threads = threads;
  opt.max_vertices = vertex_cap();
  const SweepResult res = run_sweep(opt);
  std::cout << "graphs: " << res.per_graph.size() << "\n";
  print_summary(res.combined);
  write_report(out_path, sweep_report_json(opt, res));
  std::cout << (res.combined.all_hold() ? "all checks hold"
                                        : "violations found")
            << "\n";
  return res.combined.all_hold() ? kExitOk : kExitViolation;
}

int cmd_dist(const std::string& graph_path, const std::string& t_value,
             bool maximum, bool weighted, const std::string& plus_names,
             const std::string& minus_names) {
  BipartiteGraph g = load_graph(graph_path);
  const bool conditioned = !plus_names.empty() || !minus_names.empty();
  if ((maximum && !t_value.empty()) || (conditioned && maximum) ||
      (conditioned && !t_value.empty())) {
    throw std::invalid_argument("conflicting distribution selectors");
  }
  auto parse_names = [&g](const std::string& csv) {
    std::vector<std::string> names;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) names.push_back(item);
    }
    return g.mask_of_names(names);
  };
  BoundaryDistribution d;
  if (maximum) {
    d = max_matching_distribution(g);
  } else if (!t_value.empty()) {
    d = scaled_distribution(g, parse_rational(t_value));
  } else if (conditioned) {
    try {
      d = conditioned_distribution(g, parse_names(plus_names),
                                   parse_names(minus_names));
    } catch (const std::invalid_argument& e) {
      // An unsatisfiable condition is a verification outcome, not a usage
      // error.
      if (std::string(e.what()) == "empty conditioned space") {
        std::cerr << "error: empty conditioned space\n";
        return kExitViolation;
      }
      throw;
    }
  } else if (weighted) {
    d = weighted_boundary_distribution(g);
  } else {
    d = boundary_distribution(g);
  }
  for (const auto& [mask, prob] : d.pmf) {
    std::cout << d.ground.mask_to_names(mask) << " " << rat_to_string(prob)
              << "\n";
  }
  return kExitOk;
}

void print_cell(const GraphContext& ctx, int id) {
  const BipartiteGraph& g = *ctx.graph;
  const CellRecord& rec = ctx.cells[id];
  const CellIndex& c = rec.index;
  std::cout << "cell " << id << ":\n";
  std::cout << "  W=" << g.mask_to_names(c.cycle_vertices)
            << " K=" << edge_names(g, c.c_cycle_edges.edge_mask)
            << " L=" << edge_names(g, c.d_cycle_edges.edge_mask) << "\n";
  for (std::size_t j = 0; j < c.paths.size(); ++j) {
    const PathComponent& p = c.paths[j];
    std::cout << "  path " << j << ": edges=" << edge_names(g, p.edge_mask)
              << " split0=" << edge_names(g, p.split_zero)
              << " split1=" << edge_names(g, p.split_one)
              << " v0=" << g.vertex_name(p.end_zero)
              << " v1=" << g.vertex_name(p.end_one) << "\n";
  }
  std::cout << "  H=" << g.mask_to_names(c.endpoint_mask)
            << " B=" << g.mask_to_names(c.base_boundary)
            << " U=" << g.mask_to_names(c.one_endpoint_mask) << "\n";
  std::cout << "  X:";
  for (Mask w = 0; w < (Mask{1} << rec.path_count); ++w) {
    std::cout << " ("
              << edge_names(g, ctx.matchings[rec.c_index[w]].edge_mask) << ","
              << edge_names(g, ctx.matchings[rec.d_index[w]].edge_mask) << ")";
  }
  std::cout << "\n";
}

int cmd_cells(const std::string& graph_path, const std::string& pair_selector) {
  BipartiteGraph g = load_graph(graph_path);
  const GraphContext ctx = build_context(g);
  if (!pair_selector.empty()) {
    const auto comma = pair_selector.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("pair selector must be I,J");
    }
    const int i = std::stoi(pair_selector.substr(0, comma));
    const int j = std::stoi(pair_selector.substr(comma + 1));
    if (i < 0 || j < 0 || i >= ctx.matching_count() ||
        j >= ctx.matching_count()) {
      throw std::invalid_argument("pair index out of range");
    }
    print_cell(ctx, ctx.cell_of(i, j));
    return kExitOk;
  }
  for (std::size_t cid = 0; cid < ctx.cells.size(); ++cid) {
    print_cell(ctx, static_cast<int>(cid));
  }
  std::cout << ctx.cells.size() << " cells, " << ctx.matching_count()
            << " matchings\n";
  return kExitOk;
}

int cmd_reimer(int universe, bool exhaustive, long samples,
               std::uint64_t seed) {
  const CheckReport r =
      exhaustive ? verify_reimer(universe, ReimerMode::kExhaustive)
                 : verify_reimer(universe, ReimerMode::kSampled, seed, samples);
  std::cout << r.name << " " << r.instance << ": violations="
            << rat_to_string(r.lhs) << (r.holds ? " ok" : " FAIL") << "\n";
  if (!r.holds) std::cout << "witness: " << r.witness << "\n";
  return r.holds ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for boundary-set correlation inequalities of "
               "random matchings"};
  app.require_subcommand(1);

  std::string graph_path, out_path, pair_selector, t_value, plus_names, minus_names;
  std::string event_a, event_b;
  bool events_increasing = false;
  std::string edge_prob = "1/2";
  std::uint64_t seed = 1;
  int num_events = 200;
  int max_vertex_sum = 7;
  int random_count = 0, random_s = 3, random_t = 3;
  int threads = 1;
  int universe = 3;
  long samples = 0;
  bool probe = false, maximum = false, weighted = false, exhaustive = false;

  auto* verify = app.add_subcommand("verify", "run the checker suite on one graph");
  verify->add_option("--graph", graph_path, "graph document path")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--num-events", num_events, "random event pairs");
  verify->add_flag("--probe-sensitivity", probe,
                   "also run the designed-failure probe");
  verify->add_option("--event-a", event_a,
                     "event literal: JSON list of subsets (vertex-name lists)");
  verify->add_option("--event-b", event_b, "second event literal");
  verify->add_flag("--events-increasing", events_increasing,
                   "treat event literals as generators of increasing events");
  verify->add_option("--out", out_path, "report file path");

  auto* sweep = app.add_subcommand("sweep", "verify across enumerated graphs");
  sweep->add_option("--max-vertices", max_vertex_sum,
                    "enumerate all graphs with |S|+|T| <= N");
  sweep->add_option("--random", random_count, "use K random graphs instead");
  sweep->add_option("--s", random_s, "random graph S side size");
  sweep->add_option("--t", random_t, "random graph T side size");
  sweep->add_option("--edge-prob", edge_prob, "random edge probability p/q");
  sweep->add_option("--seed", seed, "random seed");
  sweep->add_option("--pairs", num_events, "event pairs per graph");
  sweep->add_option("--threads", threads, "worker threads");
  sweep->add_option("--out", out_path, "report file path");

  auto* dist = app.add_subcommand("dist", "print a boundary distribution");
  dist->add_option("--graph", graph_path, "graph document path")->required();
  dist->add_option("--t", t_value, "scale all edge weights by t");
  dist->add_flag("--max", maximum, "uniform over maximum matchings");
  dist->add_flag("--weighted", weighted, "weight-proportional measure");
  dist->add_option("--plus", plus_names, "condition: names inside B(M)");
  dist->add_option("--minus", minus_names, "condition: names outside B(M)");

  auto* cells = app.add_subcommand("cells", "dump the pair-decomposition cells");
  cells->add_option("--graph", graph_path, "graph document path")->required();
  cells->add_option("--pair", pair_selector, "matching pair selector I,J");

  auto* reimer = app.add_subcommand("reimer", "check the Reimer inequality");
  reimer->add_option("--universe", universe, "ground set size")->required();
  reimer->add_flag("--exhaustive", exhaustive, "all event pairs (size <= 3)");
  reimer->add_option("--samples", samples, "random event pairs");
  reimer->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (event_a.empty() != event_b.empty()) {
        throw std::invalid_argument("--event-a and --event-b come together");
      }
      if (!event_a.empty()) {
        const BipartiteGraph g = load_graph(graph_path);
        return cmd_verify_pair(g, event_a, event_b, events_increasing,
                               out_path);
      }
      return cmd_verify(graph_path, seed, num_events, probe, out_path);
    }
    if (sweep->parsed()) {
      return cmd_sweep(max_vertex_sum, random_count, random_s, random_t,
                       edge_prob, seed, num_events, threads, out_path);
    }
    if (dist->parsed()) {
      return cmd_dist(graph_path, t_value, maximum, weighted, plus_names,
                      minus_names);
    }
    if (cells->parsed()) return cmd_cells(graph_path, pair_selector);
    if (reimer->parsed()) {
      if (exhaustive == (samples > 0)) {
        throw std::invalid_argument(
            "choose exactly one of --exhaustive / --samples");
      }
      return cmd_reimer(universe, exhaustive, samples, seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
