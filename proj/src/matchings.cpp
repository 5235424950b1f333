#include "bkmatch/matchings.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkmatch {

Matching matching_from_edges(const BipartiteGraph& g, Mask edge_mask) {
  if (!is_subset(edge_mask, low_bits(g.edge_count()))) {
    throw std::invalid_argument("invalid matching");
  }
  Mask covered = 0;
  for (Mask bits = edge_mask; bits != 0; bits &= bits - 1) {
    const int rank = std::countr_zero(bits);
    const Mask ends = g.edge_vertices(rank);
    if (covered & ends) throw std::invalid_argument("invalid matching");
    covered |= ends;
  }
  return Matching{edge_mask, covered};
}

namespace {

void extend(const BipartiteGraph& g, int first_rank, Matching current,
            std::vector<Matching>& out) {
  out.push_back(current);
  for (int rank = first_rank; rank < g.edge_count(); ++rank) {
    const Mask ends = g.edge_vertices(rank);
    if (current.covered & ends) continue;
    extend(g, rank + 1,
           Matching{current.edge_mask | (Mask{1} << rank),
                    current.covered | ends},
           out);
  }
}

}  // namespace

std::vector<Matching> enumerate_all_matchings(const BipartiteGraph& g) {
  std::vector<Matching> out;
  extend(g, 0, Matching{}, out);
  return out;
}

std::vector<Matching> enumerate_maximum_matchings(const BipartiteGraph& g) {
  std::vector<Matching> all = enumerate_all_matchings(g);
  int best = 0;
  for (const Matching& m : all) best = std::max(best, m.size());
  std::vector<Matching> out;
  for (const Matching& m : all) {
    if (m.size() == best) out.push_back(m);
  }
  return out;
}

Mask boundary(const Matching& m, const BipartiteGraph& g) {
  return m.covered ^ g.s_mask();
}

Rat matching_weight(const Matching& m, const BipartiteGraph& g) {
  Rat w(1);
  for (Mask bits = m.edge_mask; bits != 0; bits &= bits - 1) {
    w *= g.edge(std::countr_zero(bits)).weight;
  }
  return w;
}

std::vector<Matching> matchings_in_event(const BipartiteGraph& g,
                                         const Event& f) {
  if (!(f.ground() == graph_ground(g))) {
    throw std::invalid_argument("ground mismatch");
  }
  std::vector<Matching> out;
  for (const Matching& m : enumerate_all_matchings(g)) {
    if (f.contains(boundary(m, g))) out.push_back(m);
  }
  return out;
}

GroundSet graph_ground(const BipartiteGraph& g) {
  std::vector<std::string> labels;
  labels.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.vertex_name(v));
  return GroundSet(std::move(labels));
}

}  // namespace bkmatch
