#include "bkmatch/suite.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bkmatch {

using nlohmann::json;

long SuiteResult::total_passed() const {
  long n = 0;
  for (const auto& [name, pf] : counts) n += pf.first;
  return n;
}

long SuiteResult::total_failed() const {
  long n = 0;
  for (const auto& [name, pf] : counts) n += pf.second;
  return n;
}

void SuiteResult::record(const CheckReport& report) {
  auto& [passed, failed] = counts[report.name];
  if (report.holds) {
    ++passed;
  } else {
    ++failed;
    failures.push_back(report);
  }
}

void SuiteResult::merge(const SuiteResult& other) {
  for (const auto& [name, pf] : other.counts) {
    counts[name].first += pf.first;
    counts[name].second += pf.second;
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  probe_reports.insert(probe_reports.end(), other.probe_reports.begin(),
                       other.probe_reports.end());
}

BipartiteGraph with_random_weights(const BipartiteGraph& g,
                                   std::uint64_t seed) {
  static const char* kWeights[] = {"1/3", "1/2", "1", "2", "3"};
  Rng rng(seed);
  std::vector<std::string> s_names, t_names;
  for (int v = 0; v < g.s_count(); ++v) s_names.push_back(g.vertex_name(v));
  for (int v = g.s_count(); v < g.vertex_count(); ++v) {
    t_names.push_back(g.vertex_name(v));
  }
  BipartiteGraph out(std::move(s_names), std::move(t_names));
  for (const Edge& e : g.edges()) {
    out.add_edge_ids(e.s, e.t, parse_rational(kWeights[rng.below(5)]));
  }
  return out;
}

std::vector<std::pair<Mask, Mask>> satisfiable_conditions(
    const GraphContext& ctx, int budget) {
  const Mask full = ctx.graph->vertex_mask();
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask plus = 0;; ++plus) {
    if (popcount(plus) <= budget) {
      const Mask rest = full & ~plus;
      for (Mask minus = rest;; minus = (minus - 1) & rest) {
        if (popcount(plus) + popcount(minus) <= budget) {
          bool satisfiable = false;
          for (Mask b : ctx.boundaries) {
            if (is_subset(plus, b) && !(minus & b)) {
              satisfiable = true;
              break;
            }
          }
          if (satisfiable) out.emplace_back(plus, minus);
        }
        if (minus == 0) break;
      }
    }
    if (plus == full) break;
  }
  return out;
}

namespace {

// Event-pair schedule: generator counts cycle through small values so empty
// and near-full events show up alongside generic ones.
IncreasingEvent scheduled_event(const GroundSet& ground, std::uint64_t seed,
                                int pair_index, int side) {
  const int generator_count = (pair_index + side) % 5;
  return random_increasing_event(ground, mix_seed(seed, pair_index, side),
                                 generator_count);
}

Event lifted_event(const GroundSet& ground, Mask support, std::uint64_t seed,
                   bool decreasing) {
  // Increasing event generated inside the support coordinates, then
  // complemented when a decreasing event is requested.
  Rng rng(seed);
  std::vector<Mask> generators;
  const int count = 1 + static_cast<int>(rng.below(3));
  for (int i = 0; i < count; ++i) {
    generators.push_back(rng.subset(ground.size()) & support);
  }
  const Event up = upward_closure(ground, generators).expand();
  return decreasing ? complement_event(up) : up;
}

}  // namespace

SuiteResult run_graph_suite(const BipartiteGraph& g, const SuiteOptions& opt) {
  SuiteResult res;
  const GroundSet ground = graph_ground(g);
  const GraphContext ctx = build_context(g);

  if (opt.with_partition) res.record(verify_partition(ctx));

  const std::string graph_label = describe_graph(g);

  const auto run_event_pair = [&](const IncreasingEvent& a,
                                  const IncreasingEvent& b, bool full_set) {
    if (opt.with_bk) {
      res.record(check_bk_core(ctx.uniform_dist, a, b, "bk",
                               graph_label + " a=" + describe_event(a) +
                                   " b=" + describe_event(b)));
    }
    if (!full_set) return;
    if (opt.with_cell_chain) res.record(verify_cell_chain(ctx, a, b));
    if (opt.with_weighted) res.record(check_bk_weighted(ctx, a, b));
    if (opt.with_maximum) res.record(check_bk_maximum(ctx, a, b));
  };

  if (opt.exhaustive_small_events && g.vertex_count() <= 4) {
    const std::vector<IncreasingEvent> events = all_increasing_events(ground);
    for (const IncreasingEvent& a : events) {
      for (const IncreasingEvent& b : events) {
        run_event_pair(a, b, /*full_set=*/false);
      }
    }
  }
  for (int p = 0; p < opt.event_pairs; ++p) {
    const IncreasingEvent a = scheduled_event(ground, opt.seed, p, 0);
    const IncreasingEvent b = scheduled_event(ground, opt.seed, p, 1);
    run_event_pair(a, b, /*full_set=*/true);
  }

  if (opt.with_maximum && opt.event_pairs == 0) {
    // Ensure the maximum-matching law is exercised at least once.
    const IncreasingEvent a = scheduled_event(ground, opt.seed, 0, 0);
    const IncreasingEvent b = scheduled_event(ground, opt.seed, 0, 1);
    res.record(check_bk_maximum(ctx, a, b));
  }

  if (opt.with_conditioned) {
    const auto conditions = satisfiable_conditions(ctx, opt.condition_budget);
    int combo = 0;
    for (const auto& [plus, minus] : conditions) {
      res.record(verify_partition_conditioned(ctx, plus, minus));
      const BoundaryDistribution cond = conditioned_distribution(g, plus, minus);
      for (int p = 0; p < opt.conditioned_pairs; ++p) {
        const IncreasingEvent a = scheduled_event(
            cond.ground, mix_seed(opt.seed, 1000 + combo), p, 0);
        const IncreasingEvent b = scheduled_event(
            cond.ground, mix_seed(opt.seed, 1000 + combo), p, 1);
        res.record(check_bk_core(
            cond, a, b, "bk_conditioned",
            graph_label + " plus=" + ground.mask_to_names(plus) +
                " minus=" + ground.mask_to_names(minus) +
                " a=" + describe_event(a) + " b=" + describe_event(b)));
      }
      ++combo;
    }
  }

  if (opt.with_na) {
    const int n = g.vertex_count();
    for (int i = 0; i < opt.na_instances; ++i) {
      Rng rng(mix_seed(opt.seed, 2000, i));
      const Mask v0a = rng.subset(n);
      const Mask v0b = rng.subset(n) & ~v0a;
      const bool dec_a = rng.below(2) == 1;
      const bool dec_b = rng.below(2) == 1;
      const Event a =
          lifted_event(ground, v0a, mix_seed(opt.seed, 2001, i), dec_a);
      const Event b =
          lifted_event(ground, v0b, mix_seed(opt.seed, 2002, i), dec_b);
      res.record(check_na(g, a, b, v0a, v0b));
    }
  }

  if (opt.with_submodularity) {
    const int n = g.vertex_count();
    for (int i = 0; i < opt.submodularity_instances; ++i) {
      Rng rng(mix_seed(opt.seed, 3000, i));
      res.record(check_submodularity(g, rng.subset(n), rng.subset(n)));
    }
  }

  if (opt.probe_sensitivity) {
    res.probe_reports.push_back(sensitivity_probe());
  }
  return res;
}

namespace {

struct SweepItem {
  std::string key;
  BipartiteGraph graph;
  std::uint64_t seed;
};

std::vector<SweepItem> sweep_items(const SweepOptions& opt) {
  std::vector<SweepItem> items;
  std::uint64_t index = 0;
  if (opt.random_count > 0) {
    for (int i = 0; i < opt.random_count; ++i) {
      BipartiteGraph g =
          random_graph(opt.random_s, opt.random_t, opt.edge_probability,
                       mix_seed(opt.suite.seed, 7777, i));
      std::ostringstream key;
      key << "random[" << i << "] s=" << opt.random_s << " t=" << opt.random_t;
      items.push_back(
          {key.str(), std::move(g), mix_seed(opt.suite.seed, index)});
      ++index;
    }
    return items;
  }
  for (int total = 0; total <= opt.max_vertex_sum; ++total) {
    for (int s = 0; s <= total; ++s) {
      const int t = total - s;
      if (s + t > opt.max_vertices) continue;
      const long long slots = 1LL * s * t;
      if (slots > opt.max_edges) {
        throw std::invalid_argument("sweep too large");
      }
      for (Mask bits = 0; bits < (Mask{1} << slots); ++bits) {
        std::ostringstream key;
        key << "s=" << s << " t=" << t << " bits=" << bits;
        items.push_back({key.str(), graph_from_edge_bits(s, t, bits),
                         mix_seed(opt.suite.seed, index)});
        ++index;
      }
    }
  }
  return items;
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opt) {
  std::vector<SweepItem> items = sweep_items(opt);
  std::vector<SuiteResult> results(items.size());

  const int threads =
      std::max(1, std::min<int>(opt.threads, static_cast<int>(items.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      SuiteOptions per = opt.suite;
      per.seed = items[i].seed;
      results[i] = run_graph_suite(items[i].graph, per);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&]() {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= items.size()) break;
          SuiteOptions per = opt.suite;
          per.seed = items[i].seed;
          results[i] = run_graph_suite(items[i].graph, per);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  SweepResult out;
  out.per_graph.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    out.combined.merge(results[i]);
    out.per_graph.emplace_back(items[i].key, std::move(results[i]));
  }
  return out;
}

namespace {

json report_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  j["instance"] = r.instance;
  j["lhs"] = rat_to_string(r.lhs);
  j["rhs"] = rat_to_string(r.rhs);
  j["holds"] = r.holds;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

json result_json(const SuiteResult& res) {
  json j;
  j["checks"] = json::object();
  for (const auto& [name, pf] : res.counts) {
    j["checks"][name] = {{"passed", pf.first}, {"failed", pf.second}};
  }
  j["failures"] = json::array();
  for (const CheckReport& r : res.failures) j["failures"].push_back(report_json(r));
  if (!res.probe_reports.empty()) {
    j["probes"] = json::array();
    for (const CheckReport& r : res.probe_reports) {
      j["probes"].push_back(report_json(r));
    }
  }
  return j;
}

json options_json(const SuiteOptions& o) {
  json j;
  j["seed"] = o.seed;
  j["event_pairs"] = o.event_pairs;
  j["exhaustive_small_events"] = o.exhaustive_small_events;
  j["bk"] = o.with_bk;
  j["cell_chain"] = o.with_cell_chain;
  j["partition"] = o.with_partition;
  j["weighted"] = o.with_weighted;
  j["maximum"] = o.with_maximum;
  j["conditioned"] = o.with_conditioned;
  j["condition_budget"] = o.condition_budget;
  j["conditioned_pairs"] = o.conditioned_pairs;
  j["na"] = o.with_na;
  j["na_instances"] = o.na_instances;
  j["submodularity"] = o.with_submodularity;
  j["submodularity_instances"] = o.submodularity_instances;
  return j;
}

}  // namespace

namespace {

json summary_json(const SuiteResult& res) {
  json j = {{"passed", res.total_passed()},
            {"failed", res.total_failed()},
            {"all_hold", res.all_hold()}};
  if (res.failures.empty()) {
    j["first_witness"] = nullptr;
  } else {
    j["first_witness"] = report_json(res.failures.front());
  }
  return j;
}

}  // namespace

std::string suite_report_json(const std::string& command,
                              const std::string& instance_key,
                              const SuiteOptions& opt, const SuiteResult& res) {
  json j;
  j["command"] = command;
  j["instance"] = instance_key;
  j["options"] = options_json(opt);
  j["result"] = result_json(res);
  j["summary"] = summary_json(res);
  return j.dump(2) + "\n";
}

std::string sweep_report_json(const SweepOptions& opt, const SweepResult& res) {
  json j;
  j["command"] = "sweep";
  j["options"] = options_json(opt.suite);
  j["options"]["max_vertex_sum"] = opt.max_vertex_sum;
  j["options"]["random_count"] = opt.random_count;
  j["options"]["threads"] = opt.threads;
  j["graphs"] = json::array();
  for (const auto& [key, result] : res.per_graph) {
    json entry;
    entry["graph"] = key;
    entry["result"] = result_json(result);
    j["graphs"].push_back(entry);
  }
  j["summary"] = summary_json(res.combined);
  j["summary"]["graphs"] = res.per_graph.size();
  return j.dump(2) + "\n";
}

}  // namespace bkmatch
