#include "bkmatch/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bkmatch {

std::string describe_graph(const BipartiteGraph& g) {
  std::ostringstream os;
  os << "s=" << g.s_count() << " t=" << g.t_count() << " E=[";
  for (const Edge& e : g.edges()) {
    if (e.rank > 0) os << ",";
    os << "(" << g.vertex_name(e.s) << "," << g.vertex_name(e.t);
    if (e.weight != 1) os << ";" << rat_to_string(e.weight);
    os << ")";
  }
  os << "]";
  return os.str();
}

std::string describe_event(const IncreasingEvent& e) {
  std::string out = "up{";
  bool first = true;
  for (Mask gen : e.generators()) {
    if (!first) out += ",";
    out += e.ground().mask_to_names(gen);
    first = false;
  }
  return out + "}";
}

namespace {

std::string pair_instance(const BipartiteGraph& g, const IncreasingEvent& a,
                          const IncreasingEvent& b) {
  return describe_graph(g) + " a=" + describe_event(a) +
         " b=" + describe_event(b);
}

}  // namespace

GraphContext build_context(const BipartiteGraph& g) {
  GraphContext ctx;
  ctx.graph = &g;
  ctx.matchings = enumerate_all_matchings(g);
  const int count = ctx.matching_count();
  ctx.boundaries.reserve(count);
  ctx.weights.reserve(count);
  std::map<Mask, int> index_of;
  for (int i = 0; i < count; ++i) {
    ctx.boundaries.push_back(boundary(ctx.matchings[i], g));
    ctx.weights.push_back(matching_weight(ctx.matchings[i], g));
    index_of.emplace(ctx.matchings[i].edge_mask, i);
  }

  ctx.uniform_dist = boundary_distribution(g);
  ctx.weighted_dist = weighted_boundary_distribution(g);
  ctx.maximum_dist = max_matching_distribution(g);

  ctx.pair_cell.assign(static_cast<std::size_t>(count) * count, -1);
  ctx.pair_switch.assign(static_cast<std::size_t>(count) * count, 0);
  std::map<std::vector<Mask>, int> cell_ids;
  for (int ci = 0; ci < count; ++ci) {
    for (int di = 0; di < count; ++di) {
      auto [cell, switch_bits] =
          decompose_pair(ctx.matchings[ci], ctx.matchings[di], g);
      auto [it, inserted] =
          cell_ids.emplace(cell_key(cell), static_cast<int>(ctx.cells.size()));
      if (inserted) {
        CellRecord rec;
        rec.index = std::move(cell);
        rec.path_count = rec.index.path_count();
        if (rec.path_count > 6) {
          // 2^k switch traces are folded into one 64-bit word downstream.
          throw std::logic_error("cell ground too large");
        }
        const CellFamily fam = build_cell(rec.index, g);
        const Mask u_mask = rec.index.one_endpoint_mask;
        const std::size_t switches = fam.c_side.size();
        rec.c_index.reserve(switches);
        rec.d_index.reserve(switches);
        rec.trace_c.reserve(switches);
        rec.trace_d.reserve(switches);
        for (std::size_t w = 0; w < switches; ++w) {
          rec.c_index.push_back(index_of.at(fam.c_side[w].edge_mask));
          rec.d_index.push_back(index_of.at(fam.d_side[w].edge_mask));
          rec.trace_c.push_back(
              project_mask(boundary(fam.c_side[w], g) & u_mask, u_mask));
          rec.trace_d.push_back(
              project_mask(boundary(fam.d_side[w], g) & u_mask, u_mask));
        }
        ctx.cells.push_back(std::move(rec));
      }
      ctx.pair_cell[static_cast<std::size_t>(ci) * count + di] = it->second;
      ctx.pair_switch[static_cast<std::size_t>(ci) * count + di] = switch_bits;
    }
  }

  // Event-independent structure of every cell: the boundary of each
  // switching is the cell's base boundary plus one chosen endpoint per path,
  // traces on the two sides are complementary, and the trace map is a
  // bijection onto the subsets of the projection ground.
  ctx.structure_holds = true;
  ctx.weight_product_constant = true;
  const int s_count = g.s_count();
  for (std::size_t cid = 0;
       cid < ctx.cells.size() &&
       (ctx.structure_holds || ctx.weight_product_constant);
       ++cid) {
    const CellRecord& rec = ctx.cells[cid];
    const CellIndex& idx = rec.index;
    const int k = rec.path_count;
    const Mask full_trace = low_bits(k);
    std::uint64_t seen_c = 0, seen_d = 0;
    Rat product0;
    for (Mask w = 0; w < (Mask{1} << k); ++w) {
      Mask expected_c = idx.base_boundary;
      Mask expected_d = idx.base_boundary;
      for (int j = 0; j < k; ++j) {
        const PathComponent& p = idx.paths[j];
        const bool one = (w >> j) & 1u;
        expected_c |= Mask{1} << (one ? p.end_one : p.end_zero);
        expected_d |= Mask{1} << (one ? p.end_zero : p.end_one);
      }
      const Mask bc = ctx.boundaries[rec.c_index[w]];
      const Mask bd = ctx.boundaries[rec.d_index[w]];
      if (ctx.structure_holds &&
          (bc != expected_c || bd != expected_d ||
           popcount(bc) != s_count || popcount(bd) != s_count ||
           rec.trace_c[w] != (full_trace ^ rec.trace_d[w]))) {
        ctx.structure_holds = false;
        ctx.structure_witness = "cell " + std::to_string(cid) + " switch " +
                                std::to_string(w) + ": boundary/trace identity";
      }
      seen_c |= std::uint64_t{1} << rec.trace_c[w];
      seen_d |= std::uint64_t{1} << rec.trace_d[w];
      if (ctx.weight_product_constant) {
        Rat product = ctx.weights[rec.c_index[w]] * ctx.weights[rec.d_index[w]];
        if (w == 0) {
          product0 = product;
        } else if (product != product0) {
          ctx.weight_product_constant = false;
          ctx.weight_witness = "cell " + std::to_string(cid) +
                               ": weight product differs at switch " +
                               std::to_string(w);
        }
      }
    }
    const std::uint64_t all = family_universe_u64(k);
    if (ctx.structure_holds && (seen_c != all || seen_d != all)) {
      ctx.structure_holds = false;
      ctx.structure_witness =
          "cell " + std::to_string(cid) + ": trace map not bijective";
    }
  }
  return ctx;
}

CheckReport check_bk_core(const BoundaryDistribution& d,
                          const IncreasingEvent& a, const IncreasingEvent& b,
                          std::string name, std::string instance) {
  CheckReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  const IncreasingEvent box = box_increasing(a, b);
  r.lhs = event_probability(d, box);
  r.rhs = event_probability(d, a) * event_probability(d, b);
  r.holds = r.lhs <= r.rhs;
  if (!r.holds) {
    r.witness = "P(box)=" + rat_to_string(r.lhs) + " > " + rat_to_string(r.rhs);
  }
  return r;
}

CheckReport check_bk(const BipartiteGraph& g, const IncreasingEvent& a,
                     const IncreasingEvent& b) {
  return check_bk_core(boundary_distribution(g), a, b, "bk",
                       pair_instance(g, a, b));
}

CheckReport check_bk(const BipartiteGraph& g, const Event& a, const Event& b) {
  if (!is_increasing(a) || !is_increasing(b)) {
    throw std::invalid_argument("event not increasing");
  }
  return check_bk(g, IncreasingEvent(a.ground(), a.members()),
                  IncreasingEvent(b.ground(), b.members()));
}

CheckReport check_bk_weighted(const GraphContext& ctx, const IncreasingEvent& a,
                              const IncreasingEvent& b) {
  CheckReport r = check_bk_core(ctx.weighted_dist, a, b, "bk_weighted",
                                pair_instance(*ctx.graph, a, b));
  if (!ctx.weight_product_constant) {
    r.holds = false;
    r.witness += (r.witness.empty() ? "" : "; ") + ctx.weight_witness;
  }
  return r;
}

CheckReport check_bk_weighted(const BipartiteGraph& g, const IncreasingEvent& a,
                              const IncreasingEvent& b) {
  return check_bk_weighted(build_context(g), a, b);
}

CheckReport check_bk_conditioned(const BipartiteGraph& g, Mask v_plus,
                                 Mask v_minus, const IncreasingEvent& a,
                                 const IncreasingEvent& b) {
  const BoundaryDistribution d = conditioned_distribution(g, v_plus, v_minus);
  std::string instance = describe_graph(g) +
                         " plus=" + graph_ground(g).mask_to_names(v_plus) +
                         " minus=" + graph_ground(g).mask_to_names(v_minus) +
                         " a=" + describe_event(a) + " b=" + describe_event(b);
  return check_bk_core(d, a, b, "bk_conditioned", std::move(instance));
}

CheckReport check_bk_maximum(const GraphContext& ctx, const IncreasingEvent& a,
                             const IncreasingEvent& b) {
  return check_bk_core(ctx.maximum_dist, a, b, "bk_maximum",
                       pair_instance(*ctx.graph, a, b));
}

CheckReport check_bk_maximum(const BipartiteGraph& g, const IncreasingEvent& a,
                             const IncreasingEvent& b) {
  return check_bk_core(max_matching_distribution(g), a, b, "bk_maximum",
                       pair_instance(g, a, b));
}

CheckReport check_na(const BipartiteGraph& g, const Event& a, const Event& b,
                     Mask v0_a, Mask v0_b) {
  if (v0_a & v0_b) throw std::invalid_argument("precondition failed");
  if (!depends_only_on(a, v0_a) || !depends_only_on(b, v0_b)) {
    throw std::invalid_argument("precondition failed");
  }
  const bool inc_a = is_increasing(a), dec_a = is_decreasing(a);
  const bool inc_b = is_increasing(b), dec_b = is_decreasing(b);
  if ((!inc_a && !dec_a) || (!inc_b && !dec_b)) {
    throw std::invalid_argument("precondition failed");
  }
  const bool same_direction = (inc_a && inc_b) || (dec_a && dec_b);
  const BoundaryDistribution d = weighted_boundary_distribution(g);
  Rat p_a(0), p_b(0), p_ab(0);
  for (const auto& [mask, prob] : d.pmf) {
    const bool in_a = a.contains(mask);
    const bool in_b = b.contains(mask);
    if (in_a) p_a += prob;
    if (in_b) p_b += prob;
    if (in_a && in_b) p_ab += prob;
  }
  CheckReport r;
  r.name = "negative_association";
  r.instance = describe_graph(g) + " |a|=" + std::to_string(a.size()) +
               " |b|=" + std::to_string(b.size()) +
               (same_direction ? " same-direction" : " mixed");
  r.lhs = p_ab;
  r.rhs = p_a * p_b;
  r.holds = same_direction ? r.lhs <= r.rhs : r.lhs >= r.rhs;
  if (!r.holds) {
    r.witness = "P(a&b)=" + rat_to_string(r.lhs) +
                (same_direction ? " > " : " < ") + rat_to_string(r.rhs);
  }
  return r;
}

namespace {

Rat containment_probability(const BoundaryDistribution& d, Mask set) {
  Rat p(0);
  for (const auto& [mask, prob] : d.pmf) {
    if (is_subset(set, mask)) p += prob;
  }
  return p;
}

}  // namespace

CheckReport check_submodularity(const BipartiteGraph& g, Mask x, Mask y) {
  const BoundaryDistribution d = weighted_boundary_distribution(g);
  CheckReport r;
  r.name = "submodularity";
  r.instance = describe_graph(g) + " x=" + d.ground.mask_to_names(x) +
               " y=" + d.ground.mask_to_names(y);
  r.lhs = containment_probability(d, x) * containment_probability(d, y);
  r.rhs = containment_probability(d, x & y) * containment_probability(d, x | y);
  r.holds = r.lhs >= r.rhs;
  if (!r.holds) {
    r.witness = rat_to_string(r.lhs) + " < " + rat_to_string(r.rhs);
  }
  return r;
}

CheckReport verify_partition(const GraphContext& ctx) {
  const int count = ctx.matching_count();
  CheckReport r;
  r.name = "partition";
  r.instance = describe_graph(*ctx.graph);
  long long coverage = 0;
  r.holds = true;
  for (std::size_t cid = 0; cid < ctx.cells.size() && r.holds; ++cid) {
    const CellRecord& rec = ctx.cells[cid];
    coverage += std::int64_t{1} << rec.path_count;
    for (Mask w = 0; w < (Mask{1} << rec.path_count); ++w) {
      const std::size_t pair =
          static_cast<std::size_t>(rec.c_index[w]) * count + rec.d_index[w];
      if (ctx.pair_cell[pair] != static_cast<int>(cid) ||
          ctx.pair_switch[pair] != w) {
        r.holds = false;
        r.witness = "cell " + std::to_string(cid) + " switch " +
                    std::to_string(w) + " does not round-trip";
        break;
      }
    }
  }
  r.lhs = Rat(static_cast<long>(coverage));
  r.rhs = Rat(static_cast<long>(count)) * Rat(static_cast<long>(count));
  if (r.lhs != r.rhs) {
    r.holds = false;
    if (r.witness.empty()) r.witness = "coverage mismatch";
  }
  return r;
}

CheckReport verify_partition(const BipartiteGraph& g) {
  return verify_partition(build_context(g));
}

CheckReport verify_partition_conditioned(const GraphContext& ctx, Mask v_plus,
                                         Mask v_minus) {
  if (v_plus & v_minus) throw std::invalid_argument("invalid condition");
  const int count = ctx.matching_count();
  std::vector<char> conditioned(count, 0);
  long long conditioned_count = 0;
  for (int i = 0; i < count; ++i) {
    const Mask b = ctx.boundaries[i];
    if (is_subset(v_plus, b) && !(v_minus & b)) {
      conditioned[i] = 1;
      ++conditioned_count;
    }
  }
  CheckReport r;
  r.name = "partition_conditioned";
  r.instance = describe_graph(*ctx.graph) +
               " plus=" + graph_ground(*ctx.graph).mask_to_names(v_plus) +
               " minus=" + graph_ground(*ctx.graph).mask_to_names(v_minus);
  r.holds = true;
  std::vector<char> realized(ctx.cells.size(), 0);
  for (int ci = 0; ci < count && r.holds; ++ci) {
    if (!conditioned[ci]) continue;
    for (int di = 0; di < count; ++di) {
      if (!conditioned[di]) continue;
      const int cid = ctx.cell_of(ci, di);
      realized[cid] = 1;
      const CellIndex& idx = ctx.cells[cid].index;
      // The realized cell must satisfy the conditioned index constraints.
      if (!is_subset(v_plus, idx.base_boundary) ||
          (v_minus & (idx.base_boundary | idx.endpoint_mask))) {
        r.holds = false;
        r.witness = "cell " + std::to_string(cid) +
                    " violates the conditioned index constraints";
        break;
      }
    }
  }
  long long coverage = 0;
  for (std::size_t cid = 0; cid < ctx.cells.size() && r.holds; ++cid) {
    if (!realized[cid]) continue;
    const CellRecord& rec = ctx.cells[cid];
    coverage += std::int64_t{1} << rec.path_count;
    for (Mask w = 0; w < (Mask{1} << rec.path_count); ++w) {
      if (!conditioned[rec.c_index[w]] || !conditioned[rec.d_index[w]]) {
        r.holds = false;
        r.witness = "cell " + std::to_string(cid) + " switch " +
                    std::to_string(w) + " leaves the conditioned space";
        break;
      }
    }
  }
  r.lhs = Rat(static_cast<long>(coverage));
  r.rhs = Rat(static_cast<long>(conditioned_count)) *
          Rat(static_cast<long>(conditioned_count));
  if (r.holds && r.lhs != r.rhs) {
    r.holds = false;
    r.witness = "conditioned coverage mismatch";
  }
  return r;
}

CheckReport verify_partition_conditioned(const BipartiteGraph& g, Mask v_plus,
                                         Mask v_minus) {
  return verify_partition_conditioned(build_context(g), v_plus, v_minus);
}

CheckReport verify_cell_chain(const GraphContext& ctx, const IncreasingEvent& a,
                              const IncreasingEvent& b) {
  const BipartiteGraph& g = *ctx.graph;
  const int count = ctx.matching_count();
  CheckReport r;
  r.name = "cell_chain";
  r.instance = pair_instance(g, a, b);
  if (!ctx.structure_holds) {
    r.holds = false;
    r.witness = ctx.structure_witness;
    return r;
  }

  const IncreasingEvent box = box_increasing(a, b);
  std::vector<char> in_a(count), in_b(count), in_box(count);
  long long count_a = 0, count_b = 0, count_box = 0;
  for (int i = 0; i < count; ++i) {
    in_a[i] = a.contains(ctx.boundaries[i]);
    in_b[i] = b.contains(ctx.boundaries[i]);
    in_box[i] = box.contains(ctx.boundaries[i]);
    count_a += in_a[i];
    count_b += in_b[i];
    count_box += in_box[i];
  }

  r.holds = true;
  long long sum_lhs = 0, sum_rhs = 0;
  for (std::size_t cid = 0; cid < ctx.cells.size(); ++cid) {
    const CellRecord& rec = ctx.cells[cid];
    const int k = rec.path_count;
    if (k > 6) throw std::logic_error("cell ground too large");
    long long lhs_i = 0, rhs_i = 0;
    std::uint64_t fam_a_c = 0, fam_a_d = 0, fam_b_c = 0, fam_b_d = 0;
    std::uint64_t fam_box_c = 0, fam_box_d = 0;
    for (Mask w = 0; w < (Mask{1} << k); ++w) {
      const int ci = rec.c_index[w];
      const int di = rec.d_index[w];
      const std::uint64_t bit_c = std::uint64_t{1} << rec.trace_c[w];
      const std::uint64_t bit_d = std::uint64_t{1} << rec.trace_d[w];
      if (in_box[ci]) {
        ++lhs_i;
        fam_box_c |= bit_c;
      }
      if (in_box[di]) fam_box_d |= bit_d;
      if (in_a[ci]) fam_a_c |= bit_c;
      if (in_a[di]) fam_a_d |= bit_d;
      if (in_b[ci]) fam_b_c |= bit_c;
      if (in_b[di]) fam_b_d |= bit_d;
      if (in_a[ci] && in_b[di]) ++rhs_i;
    }
    sum_lhs += lhs_i;
    sum_rhs += rhs_i;
    if (!r.holds) continue;  // keep aggregating for the sums, skip diagnosis

    const auto fail = [&](const char* what) {
      r.holds = false;
      r.witness = "cell " + std::to_string(cid) + ": " + what;
    };
    // Projections computed through the two sides of the cell must agree.
    if (fam_a_c != fam_a_d || fam_b_c != fam_b_d || fam_box_c != fam_box_d) {
      fail("projection sides disagree");
      continue;
    }
    // Cardinality identities linking pair counts to projected families.
    if (lhs_i != std::popcount(fam_box_c)) {
      fail("box pair count differs from projected family size");
      continue;
    }
    const std::uint64_t a_and_reflect_b =
        fam_a_c & reflect_u64(k, fam_b_c);
    if (rhs_i != std::popcount(a_and_reflect_b)) {
      fail("pair count differs from a cap reflect(b)");
      continue;
    }
    // The projected box event sits inside the box of the projections.
    const std::uint64_t projected_box = box_general_u64(k, fam_a_c, fam_b_c);
    if (fam_box_c & ~projected_box) {
      fail("projected box not contained in box of projections");
      continue;
    }
    // Reimer step on the cell ground.
    if (std::popcount(projected_box) > std::popcount(a_and_reflect_b)) {
      fail("Reimer inequality fails on the cell ground");
      continue;
    }
    // Per-cell count inequality.
    if (lhs_i > rhs_i) {
      fail("per-cell count inequality fails");
      continue;
    }
  }

  r.lhs = Rat(static_cast<long>(count_box)) * Rat(static_cast<long>(count));
  r.rhs = Rat(static_cast<long>(count_a)) * Rat(static_cast<long>(count_b));
  if (sum_lhs != count_box * static_cast<long long>(count)) {
    r.holds = false;
    r.witness = "cell sums do not aggregate to |M_box| * |M|";
  }
  if (sum_rhs != count_a * static_cast<long long>(count_b)) {
    r.holds = false;
    r.witness = "cell sums do not aggregate to |M_a| * |M_b|";
  }
  if (r.holds && r.lhs > r.rhs) {
    r.holds = false;
    r.witness = "global count inequality fails";
  }
  return r;
}

CheckReport verify_cell_chain(const BipartiteGraph& g, const IncreasingEvent& a,
                              const IncreasingEvent& b) {
  return verify_cell_chain(build_context(g), a, b);
}

CheckReport verify_reimer(int universe_size, ReimerMode mode,
                          std::uint64_t seed, long samples) {
  CheckReport r;
  r.name = "reimer";
  long long violations = 0;
  long long pairs = 0;
  const auto check_pair = [&](std::uint64_t x, std::uint64_t y) {
    ++pairs;
    const std::uint64_t box = box_general_u64(universe_size, x, y);
    const std::uint64_t cap = x & reflect_u64(universe_size, y);
    if (std::popcount(box) > std::popcount(cap)) {
      ++violations;
      if (r.witness.empty()) {
        r.witness = "x=" + std::to_string(x) + " y=" + std::to_string(y);
      }
    }
  };
  if (mode == ReimerMode::kExhaustive) {
    if (universe_size < 0 || universe_size > 3) {
      throw std::invalid_argument("exhaustive cap exceeded");
    }
    const std::uint64_t families =
        std::uint64_t{1} << (std::size_t{1} << universe_size);
    for (std::uint64_t x = 0; x < families; ++x) {
      for (std::uint64_t y = 0; y < families; ++y) check_pair(x, y);
    }
    r.instance = "universe=" + std::to_string(universe_size) + " exhaustive";
  } else {
    if (universe_size < 0 || universe_size > 6) {
      throw std::invalid_argument("sampled universe too large");
    }
    const std::uint64_t live = family_universe_u64(universe_size);
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
      check_pair(rng.next() & live, rng.next() & live);
    }
    r.instance = "universe=" + std::to_string(universe_size) + " samples=" +
                 std::to_string(samples) + " seed=" + std::to_string(seed);
  }
  r.instance += " pairs=" + std::to_string(pairs);
  r.lhs = Rat(static_cast<long>(violations));
  r.rhs = Rat(0);
  r.holds = violations == 0;
  return r;
}

CheckReport sensitivity_probe() {
  GroundSet ground({"a", "b"});
  BoundaryDistribution d;
  d.ground = ground;
  d.provenance = Provenance::kUniform;
  d.pmf.emplace_back(Mask{0}, Rat(1, 2));
  d.pmf.emplace_back(Mask{3}, Rat(1, 2));
  const IncreasingEvent a = upward_closure(ground, {Mask{1}});
  const IncreasingEvent b = upward_closure(ground, {Mask{2}});
  return check_bk_core(d, a, b, "sensitivity_probe",
                       "uniform on {{},{a,b}} with a=up{a}, b=up{b}");
}

}  // namespace bkmatch
