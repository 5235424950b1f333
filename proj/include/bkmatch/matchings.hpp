#pragma once

#include <vector>

#include "bkmatch/events.hpp"
#include "bkmatch/graph.hpp"

namespace bkmatch {

// A matching is identified by its set of edge ranks; covered is the union of
// the endpoints. The empty matching is a matching of every graph.
struct Matching {
  Mask edge_mask = 0;
  Mask covered = 0;

  int size() const { return popcount(edge_mask); }
  bool operator==(const Matching& o) const { return edge_mask == o.edge_mask; }
  bool operator<(const Matching& o) const { return edge_mask < o.edge_mask; }
};

// Validates disjointness; throws std::invalid_argument("invalid matching").
Matching matching_from_edges(const BipartiteGraph& g, Mask edge_mask);

// Every matching of g exactly once, the empty matching first, in
// lexicographic order of the sorted edge-rank sequences.
std::vector<Matching> enumerate_all_matchings(const BipartiteGraph& g);

// The matchings of maximum cardinality, in the same order.
std::vector<Matching> enumerate_maximum_matchings(const BipartiteGraph& g);

// B(M) = V(M) symmetric-difference S. Always has exactly s_count elements.
Mask boundary(const Matching& m, const BipartiteGraph& g);

// Product of edge weights; 1 for the empty matching.
Rat matching_weight(const Matching& m, const BipartiteGraph& g);

// The matchings whose boundary lies in f, in enumeration order.
// f must live on the graph's ground set.
std::vector<Matching> matchings_in_event(const BipartiteGraph& g,
                                         const Event& f);

// Ground set of the boundary carrier: all vertex names in id order.
GroundSet graph_ground(const BipartiteGraph& g);

}  // namespace bkmatch
