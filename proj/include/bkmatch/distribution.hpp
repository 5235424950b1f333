#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bkmatch/matchings.hpp"

namespace bkmatch {

enum class Provenance { kUniform, kWeighted, kWeightedT, kConditioned, kMaximum };

std::string provenance_name(Provenance p);

// Exact law of the boundary set under one of the matching measures. The pmf
// holds only the support, sorted by subset mask; probabilities are positive
// rationals summing to exactly 1.
struct BoundaryDistribution {
  GroundSet ground;
  std::vector<std::pair<Mask, Rat>> pmf;
  Provenance provenance = Provenance::kUniform;

  // nullptr when the subset carries no mass.
  const Rat* find(Mask subset) const;
};

// Law of B(M) for M uniform over all matchings.
BoundaryDistribution boundary_distribution(const BipartiteGraph& g);

// Monomer-dimer measure: P(M) proportional to the product of edge weights.
BoundaryDistribution weighted_boundary_distribution(const BipartiteGraph& g);

// Same with every edge weight scaled by t (> 0); on a unit-weight graph this
// is the measure with all weights equal to t.
BoundaryDistribution scaled_distribution(const BipartiteGraph& g, const Rat& t);

// Weighted measure conditioned on v_plus inside B(M) and v_minus disjoint
// from B(M), projected onto the remaining ground V' = V minus both.
// Throws "invalid condition" on overlapping inputs and
// "empty conditioned space" when no matching satisfies the condition.
BoundaryDistribution conditioned_distribution(const BipartiteGraph& g,
                                              Mask v_plus, Mask v_minus);

// Uniform over the maximum-cardinality matchings.
BoundaryDistribution max_matching_distribution(const BipartiteGraph& g);

Rat event_probability(const BoundaryDistribution& d, const Event& e);
Rat event_probability(const BoundaryDistribution& d, const IncreasingEvent& e);

// Half the L1 distance between the two pmfs (same ground required).
Rat total_variation(const BoundaryDistribution& a,
                    const BoundaryDistribution& b);

// Ground set left after conditioning, with the graph's vertex names.
GroundSet conditioned_ground(const BipartiteGraph& g, Mask v_plus, Mask v_minus);

}  // namespace bkmatch
