#include "bkmatch/distribution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bkmatch {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kUniform: return "uniform";
    case Provenance::kWeighted: return "weighted";
    case Provenance::kWeightedT: return "weighted-t";
    case Provenance::kConditioned: return "conditioned";
    case Provenance::kMaximum: return "maximum";
  }
  return "?";
}

const Rat* BoundaryDistribution::find(Mask subset) const {
  auto it = std::lower_bound(
      pmf.begin(), pmf.end(), subset,
      [](const std::pair<Mask, Rat>& entry, Mask key) { return entry.first < key; });
  if (it == pmf.end() || it->first != subset) return nullptr;
  return &it->second;
}

namespace {

BoundaryDistribution normalize(GroundSet ground,
                               const std::map<Mask, Rat>& mass,
                               Provenance provenance) {
  Rat total(0);
  for (const auto& [mask, w] : mass) total += w;
  if (total == 0) throw std::invalid_argument("empty conditioned space");
  BoundaryDistribution d;
  d.ground = std::move(ground);
  d.provenance = provenance;
  d.pmf.reserve(mass.size());
  for (const auto& [mask, w] : mass) {
    if (w == 0) continue;
    d.pmf.emplace_back(mask, w / total);
  }
  return d;
}

BoundaryDistribution weighted_impl(const BipartiteGraph& g, const Rat& scale,
                                   Provenance provenance) {
  for (const Edge& e : g.edges()) {
    if (e.weight <= 0) throw std::invalid_argument("invalid weight");
  }
  std::map<Mask, Rat> mass;
  for (const Matching& m : enumerate_all_matchings(g)) {
    Rat w = matching_weight(m, g);
    if (scale != 1) {
      for (int i = 0; i < m.size(); ++i) w *= scale;
    }
    mass[boundary(m, g)] += w;
  }
  return normalize(graph_ground(g), mass, provenance);
}

}  // namespace

BoundaryDistribution boundary_distribution(const BipartiteGraph& g) {
  std::map<Mask, Rat> mass;
  for (const Matching& m : enumerate_all_matchings(g)) {
    mass[boundary(m, g)] += 1;
  }
  return normalize(graph_ground(g), mass, Provenance::kUniform);
}

BoundaryDistribution weighted_boundary_distribution(const BipartiteGraph& g) {
  return weighted_impl(g, Rat(1), Provenance::kWeighted);
}

BoundaryDistribution scaled_distribution(const BipartiteGraph& g, const Rat& t) {
  Rat scale = t;
  scale.canonicalize();
  if (scale <= 0) throw std::invalid_argument("invalid scale");
  return weighted_impl(g, scale, Provenance::kWeightedT);
}

GroundSet conditioned_ground(const BipartiteGraph& g, Mask v_plus,
                             Mask v_minus) {
  std::vector<std::string> labels;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (((v_plus | v_minus) >> v) & 1u) continue;
    labels.push_back(g.vertex_name(v));
  }
  return GroundSet(std::move(labels));
}

BoundaryDistribution conditioned_distribution(const BipartiteGraph& g,
                                              Mask v_plus, Mask v_minus) {
  if (v_plus & v_minus) throw std::invalid_argument("invalid condition");
  const Mask removed = v_plus | v_minus;
  const Mask kept = g.vertex_mask() & ~removed;
  std::map<Mask, Rat> mass;
  for (const Matching& m : enumerate_all_matchings(g)) {
    const Mask b = boundary(m, g);
    if (!is_subset(v_plus, b) || (v_minus & b)) continue;
    mass[project_mask(b, kept)] += matching_weight(m, g);
  }
  BoundaryDistribution d = normalize(conditioned_ground(g, v_plus, v_minus),
                                     mass, Provenance::kConditioned);
  return d;
}

BoundaryDistribution max_matching_distribution(const BipartiteGraph& g) {
  std::map<Mask, Rat> mass;
  for (const Matching& m : enumerate_maximum_matchings(g)) {
    mass[boundary(m, g)] += 1;
  }
  return normalize(graph_ground(g), mass, Provenance::kMaximum);
}

Rat event_probability(const BoundaryDistribution& d, const Event& e) {
  if (!(d.ground == e.ground())) throw std::invalid_argument("ground mismatch");
  Rat p(0);
  for (const auto& [mask, prob] : d.pmf) {
    if (e.contains(mask)) p += prob;
  }
  return p;
}

Rat event_probability(const BoundaryDistribution& d, const IncreasingEvent& e) {
  if (!(d.ground == e.ground())) throw std::invalid_argument("ground mismatch");
  Rat p(0);
  for (const auto& [mask, prob] : d.pmf) {
    if (e.contains(mask)) p += prob;
  }
  return p;
}

Rat total_variation(const BoundaryDistribution& a,
                    const BoundaryDistribution& b) {
  if (!(a.ground == b.ground)) throw std::invalid_argument("ground mismatch");
  Rat sum(0);
  auto ia = a.pmf.begin();
  auto ib = b.pmf.begin();
  while (ia != a.pmf.end() || ib != b.pmf.end()) {
    if (ib == b.pmf.end() || (ia != a.pmf.end() && ia->first < ib->first)) {
      sum += ia->second;
      ++ia;
    } else if (ia == a.pmf.end() || ib->first < ia->first) {
      sum += ib->second;
      ++ib;
    } else {
      sum += abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return sum / 2;
}

}  // namespace bkmatch
