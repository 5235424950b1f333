#include "bkmatch/cells.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bkmatch {

namespace {

// Edge ranks incident to each vertex within one edge set (at most one per
// vertex when the set is a matching).
std::vector<int> incidence(const BipartiteGraph& g, Mask edge_mask) {
  std::vector<int> at(g.vertex_count(), -1);
  for (Mask bits = edge_mask; bits != 0; bits &= bits - 1) {
    const int rank = std::countr_zero(bits);
    at[g.edge(rank).s] = rank;
    at[g.edge(rank).t] = rank;
  }
  return at;
}

int other_endpoint(const BipartiteGraph& g, int rank, int v) {
  const Edge& e = g.edge(rank);
  return e.s == v ? e.t : e.s;
}

}  // namespace

PathComponent make_path_component(const std::vector<int>& ranks,
                                  const BipartiteGraph& g) {
  if (ranks.empty()) throw std::invalid_argument("not a path");
  // Degree check: a simple path has exactly two degree-1 vertices and all
  // other incident vertices of degree 2.
  std::vector<int> degree(g.vertex_count(), 0);
  Mask edge_mask = 0;
  for (int rank : ranks) {
    if (rank < 0 || rank >= g.edge_count()) {
      throw std::invalid_argument("not a path");
    }
    if ((edge_mask >> rank) & 1u) throw std::invalid_argument("not a path");
    edge_mask |= Mask{1} << rank;
    ++degree[g.edge(rank).s];
    ++degree[g.edge(rank).t];
  }
  std::vector<int> ends;
  Mask vertex_mask = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (degree[v] == 0) continue;
    if (degree[v] > 2) throw std::invalid_argument("not a path");
    vertex_mask |= Mask{1} << v;
    if (degree[v] == 1) ends.push_back(v);
  }
  if (ends.size() != 2) throw std::invalid_argument("not a path");
  if (popcount(vertex_mask) != static_cast<int>(ranks.size()) + 1) {
    throw std::invalid_argument("not a path");
  }

  // Walk from the smaller endpoint; connectivity failure shows up as a dead
  // end before all edges are used.
  PathComponent p;
  p.edge_mask = edge_mask;
  p.vertex_mask = vertex_mask;
  std::vector<int> at_count(g.vertex_count(), 0);
  std::vector<std::array<int, 2>> at(g.vertex_count(), {-1, -1});
  for (int rank : ranks) {
    const Edge& e = g.edge(rank);
    at[e.s][at_count[e.s]++] = rank;
    at[e.t][at_count[e.t]++] = rank;
  }
  int v = std::min(ends[0], ends[1]);
  int prev_rank = -1;
  for (std::size_t step = 0; step < ranks.size(); ++step) {
    const int next = at[v][0] == prev_rank ? at[v][1] : at[v][0];
    if (next < 0) throw std::invalid_argument("not a path");
    p.edge_order.push_back(next);
    v = other_endpoint(g, next, v);
    prev_rank = next;
  }
  if (v != std::max(ends[0], ends[1])) {
    throw std::invalid_argument("not a path");
  }

  // Alternating classes are the even- and odd-position edges of the walk.
  Mask even = 0, odd = 0;
  for (std::size_t i = 0; i < p.edge_order.size(); ++i) {
    (i % 2 == 0 ? even : odd) |= Mask{1} << p.edge_order[i];
  }
  p.lowest_rank = std::countr_zero(edge_mask);
  const bool lowest_even = (even >> p.lowest_rank) & 1u;
  p.split_zero = lowest_even ? even : odd;
  p.split_one = lowest_even ? odd : even;

  auto [end_zero, end_one] = endpoint_labels(p, g);
  p.end_zero = end_zero;
  p.end_one = end_one;
  return p;
}

std::pair<Mask, Mask> canonical_split(const std::vector<int>& ranks,
                                      const BipartiteGraph& g) {
  const PathComponent p = make_path_component(ranks, g);
  return {p.split_zero, p.split_one};
}

std::pair<int, int> endpoint_labels(const PathComponent& path,
                                    const BipartiteGraph& g) {
  Mask covered_zero = 0;
  for (Mask bits = path.split_zero; bits != 0; bits &= bits - 1) {
    covered_zero |= g.edge_vertices(std::countr_zero(bits));
  }
  std::vector<int> degree(g.vertex_count(), 0);
  for (Mask bits = path.edge_mask; bits != 0; bits &= bits - 1) {
    const Edge& e = g.edge(std::countr_zero(bits));
    ++degree[e.s];
    ++degree[e.t];
  }
  int end_zero = -1, end_one = -1;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (degree[x] != 1) continue;
    const bool covered = (covered_zero >> x) & 1u;
    const bool in_s = g.side(x) == Side::S;
    if (covered != in_s) {
      if (end_zero >= 0) throw std::logic_error("ambiguous endpoint label");
      end_zero = x;
    } else {
      if (end_one >= 0) throw std::logic_error("ambiguous endpoint label");
      end_one = x;
    }
  }
  if (end_zero < 0 || end_one < 0) {
    throw std::logic_error("ambiguous endpoint label");
  }
  return {end_zero, end_one};
}

void finalize_cell(CellIndex& cell, const BipartiteGraph& g) {
  cell.endpoint_mask = 0;
  cell.one_endpoint_mask = 0;
  Mask path_vertices = 0;
  for (const PathComponent& p : cell.paths) {
    cell.endpoint_mask |= (Mask{1} << p.end_zero) | (Mask{1} << p.end_one);
    cell.one_endpoint_mask |= Mask{1} << p.end_one;
    path_vertices |= p.vertex_mask;
  }
  cell.base_boundary =
      (((cell.cycle_vertices | path_vertices) ^ g.s_mask()) &
       ~cell.endpoint_mask);
}

std::pair<CellIndex, Mask> decompose_pair(const Matching& c, const Matching& d,
                                          const BipartiteGraph& g) {
  // Re-validate inputs against this graph.
  for (const Matching* m : {&c, &d}) {
    if (matching_from_edges(g, m->edge_mask).covered != m->covered) {
      throw std::invalid_argument("invalid matching");
    }
  }

  const std::vector<int> c_at = incidence(g, c.edge_mask);
  const std::vector<int> d_at = incidence(g, d.edge_mask);

  CellIndex cell;
  Mask k_edges = 0, l_edges = 0;
  std::vector<std::vector<int>> raw_paths;

  std::vector<char> visited(g.vertex_count(), 0);

  // In the union multigraph a shared edge contributes one edge from each
  // side, so its endpoints have degree 2 and it forms a two-edge cycle.
  // Path components are found first, from their degree-1 endpoints.
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (visited[v]) continue;
    const bool has_c = c_at[v] >= 0;
    const bool has_d = d_at[v] >= 0;
    const bool shared = has_c && has_d && c_at[v] == d_at[v];
    const int deg = shared ? 2 : (has_c ? 1 : 0) + (has_d ? 1 : 0);
    if (deg != 1) continue;
    std::vector<int> ranks;
    int cur = v;
    bool use_c = has_c;
    while (true) {
      visited[cur] = 1;
      const int rank = use_c ? c_at[cur] : d_at[cur];
      if (rank < 0) break;
      ranks.push_back(rank);
      cur = other_endpoint(g, rank, cur);
      use_c = !use_c;
    }
    visited[cur] = 1;
    raw_paths.push_back(std::move(ranks));
  }

  // Every remaining covered vertex lies on an alternating cycle.
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (visited[v]) continue;
    const bool has_c = c_at[v] >= 0;
    const bool has_d = d_at[v] >= 0;
    if (!has_c && !has_d) continue;  // isolated: belongs to no component
    if (!has_c || !has_d) throw std::logic_error("degree-1 vertex in cycle scan");
    int cur = v;
    bool use_c = true;
    do {
      visited[cur] = 1;
      cell.cycle_vertices |= Mask{1} << cur;
      const int rank = use_c ? c_at[cur] : d_at[cur];
      (use_c ? k_edges : l_edges) |= Mask{1} << rank;
      cur = other_endpoint(g, rank, cur);
      use_c = !use_c;
    } while (!(cur == v && use_c));
  }

  cell.c_cycle_edges = Matching{k_edges, cell.cycle_vertices};
  cell.d_cycle_edges = Matching{l_edges, cell.cycle_vertices};

  // Canonicalize paths and read off the switch vector.
  Mask switch_bits = 0;
  for (std::vector<int>& ranks : raw_paths) {
    cell.paths.push_back(make_path_component(ranks, g));
  }
  std::sort(cell.paths.begin(), cell.paths.end(),
            [](const PathComponent& a, const PathComponent& b) {
              return a.lowest_rank < b.lowest_rank;
            });
  for (std::size_t j = 0; j < cell.paths.size(); ++j) {
    const PathComponent& p = cell.paths[j];
    const Mask c_part = c.edge_mask & p.edge_mask;
    if (c_part == p.split_zero) {
      // switch bit stays 0
    } else if (c_part == p.split_one) {
      switch_bits |= Mask{1} << j;
    } else {
      throw std::logic_error("path split does not match pair");
    }
  }

  finalize_cell(cell, g);
  return {std::move(cell), switch_bits};
}

namespace {

void validate_cell(const CellIndex& cell, const BipartiteGraph& g) {
  const auto fail = [] { throw std::invalid_argument("invalid cell"); };
  // Cycle part: both edge sets are matchings covering exactly the cycle
  // vertices.
  for (const Matching* m : {&cell.c_cycle_edges, &cell.d_cycle_edges}) {
    Matching checked;
    try {
      checked = matching_from_edges(g, m->edge_mask);
    } catch (const std::invalid_argument&) {
      fail();
    }
    if (checked.covered != cell.cycle_vertices || m->covered != checked.covered) {
      fail();
    }
  }
  Mask used = cell.cycle_vertices;
  int last_lowest = -1;
  for (const PathComponent& p : cell.paths) {
    PathComponent rebuilt;
    try {
      rebuilt = make_path_component(p.edge_order, g);
    } catch (const std::invalid_argument&) {
      fail();
    }
    if (rebuilt.edge_mask != p.edge_mask || rebuilt.split_zero != p.split_zero ||
        rebuilt.split_one != p.split_one || rebuilt.end_zero != p.end_zero ||
        rebuilt.end_one != p.end_one || rebuilt.vertex_mask != p.vertex_mask) {
      fail();
    }
    if (p.vertex_mask & used) fail();  // disjoint from cycles and other paths
    used |= p.vertex_mask;
    if (p.lowest_rank <= last_lowest) fail();  // sorted, distinct
    last_lowest = p.lowest_rank;
  }
}

}  // namespace

CellFamily build_cell(const CellIndex& cell, const BipartiteGraph& g) {
  validate_cell(cell, g);
  const int k = cell.path_count();
  CellFamily fam;
  fam.c_side.reserve(std::size_t{1} << k);
  fam.d_side.reserve(std::size_t{1} << k);
  for (Mask omega = 0; omega < (Mask{1} << k); ++omega) {
    Mask c_edges = cell.c_cycle_edges.edge_mask;
    Mask d_edges = cell.d_cycle_edges.edge_mask;
    Mask c_cov = cell.cycle_vertices;
    Mask d_cov = cell.cycle_vertices;
    for (int j = 0; j < k; ++j) {
      const PathComponent& p = cell.paths[j];
      const bool one = (omega >> j) & 1u;
      const Mask c_part = one ? p.split_one : p.split_zero;
      const Mask d_part = one ? p.split_zero : p.split_one;
      c_edges |= c_part;
      d_edges |= d_part;
      for (Mask bits = c_part; bits != 0; bits &= bits - 1) {
        c_cov |= g.edge_vertices(std::countr_zero(bits));
      }
      for (Mask bits = d_part; bits != 0; bits &= bits - 1) {
        d_cov |= g.edge_vertices(std::countr_zero(bits));
      }
    }
    fam.c_side.push_back(Matching{c_edges, c_cov});
    fam.d_side.push_back(Matching{d_edges, d_cov});
  }
  return fam;
}

Mask project_boundary(const CellIndex& cell, const Matching& m,
                      const BipartiteGraph& g) {
  return boundary(m, g) & cell.one_endpoint_mask;
}

GroundSet cell_ground(const CellIndex& cell, const BipartiteGraph& g) {
  std::vector<std::string> labels;
  for (Mask bits = cell.one_endpoint_mask; bits != 0; bits &= bits - 1) {
    labels.push_back(g.vertex_name(std::countr_zero(bits)));
  }
  return GroundSet(std::move(labels));
}

namespace {

template <typename EventT>
Event project_event_impl(const CellIndex& cell, const EventT& f,
                         const BipartiteGraph& g) {
  const CellFamily fam = build_cell(cell, g);
  std::vector<Mask> c_traces, d_traces;
  for (const Matching& m : fam.c_side) {
    if (f.contains(boundary(m, g))) {
      c_traces.push_back(
          project_mask(project_boundary(cell, m, g), cell.one_endpoint_mask));
    }
  }
  for (const Matching& m : fam.d_side) {
    if (f.contains(boundary(m, g))) {
      d_traces.push_back(
          project_mask(project_boundary(cell, m, g), cell.one_endpoint_mask));
    }
  }
  std::sort(c_traces.begin(), c_traces.end());
  std::sort(d_traces.begin(), d_traces.end());
  c_traces.erase(std::unique(c_traces.begin(), c_traces.end()), c_traces.end());
  d_traces.erase(std::unique(d_traces.begin(), d_traces.end()), d_traces.end());
  if (c_traces != d_traces) {
    throw std::logic_error("projection sides disagree");
  }
  return Event(cell_ground(cell, g), std::move(c_traces));
}

}  // namespace

Event project_event(const CellIndex& cell, const Event& f,
                    const BipartiteGraph& g) {
  return project_event_impl(cell, f, g);
}

Event project_event(const CellIndex& cell, const IncreasingEvent& f,
                    const BipartiteGraph& g) {
  return project_event_impl(cell, f, g);
}

std::vector<Mask> cell_key(const CellIndex& cell) {
  std::vector<Mask> key{cell.cycle_vertices, cell.c_cycle_edges.edge_mask,
                        cell.d_cycle_edges.edge_mask};
  for (const PathComponent& p : cell.paths) key.push_back(p.edge_mask);
  return key;
}

}  // namespace bkmatch
