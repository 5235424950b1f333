#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bkmatch/cells.hpp"
#include "bkmatch/distribution.hpp"

namespace bkmatch {

// Outcome of one exact check. lhs and rhs are the two sides of the check's
// comparison (direction depends on the check); holds is computed on exact
// rationals, never on approximations.
struct CheckReport {
  std::string name;
  std::string instance;
  Rat lhs{0};
  Rat rhs{0};
  bool holds = false;
  std::string witness;  // empty when the check holds
};

// Everything derivable from one graph that the checkers share: the matching
// list, boundaries, weights, the full cell decomposition of all ordered
// matching pairs, and the event-independent structural verdicts.
struct CellRecord {
  CellIndex index;
  int path_count = 0;
  std::vector<int> c_index, d_index;  // matching index per switch vector
  std::vector<Mask> trace_c, trace_d; // compact boundary traces per switch
};

struct GraphContext {
  const BipartiteGraph* graph = nullptr;
  std::vector<Matching> matchings;
  std::vector<Mask> boundaries;
  std::vector<Rat> weights;
  std::vector<CellRecord> cells;      // deduped, in first-encounter order
  std::vector<int> pair_cell;         // pair (i,j) -> cell id, row-major
  std::vector<Mask> pair_switch;      // pair (i,j) -> switch vector
  BoundaryDistribution uniform_dist;
  BoundaryDistribution weighted_dist;
  BoundaryDistribution maximum_dist;

  // Event-independent verdicts, computed once:
  bool structure_holds = false;       // boundary/trace identities, bijectivity
  std::string structure_witness;
  bool weight_product_constant = false;  // w(C)w(D) constant on every cell
  std::string weight_witness;

  int matching_count() const { return static_cast<int>(matchings.size()); }
  int cell_of(int ci, int di) const {
    return pair_cell[ci * matchings.size() + di];
  }
};

GraphContext build_context(const BipartiteGraph& g);
// The context keeps a pointer to the graph, so a temporary cannot back it.
GraphContext build_context(BipartiteGraph&&) = delete;

// BK comparison P(A box B) <= P(A) P(B) under an arbitrary distribution.
CheckReport check_bk_core(const BoundaryDistribution& d,
                          const IncreasingEvent& a, const IncreasingEvent& b,
                          std::string name, std::string instance);

// The four matching-measure variants.
CheckReport check_bk(const BipartiteGraph& g, const IncreasingEvent& a,
                     const IncreasingEvent& b);
// Also verifies that w(C) w(D) is constant on every cell of the pair
// decomposition (the observation the weighted proof rests on).
CheckReport check_bk_weighted(const GraphContext& ctx, const IncreasingEvent& a,
                              const IncreasingEvent& b);
CheckReport check_bk_weighted(const BipartiteGraph& g, const IncreasingEvent& a,
                              const IncreasingEvent& b);
CheckReport check_bk_conditioned(const BipartiteGraph& g, Mask v_plus,
                                 Mask v_minus, const IncreasingEvent& a,
                                 const IncreasingEvent& b);
CheckReport check_bk_maximum(const GraphContext& ctx, const IncreasingEvent& a,
                             const IncreasingEvent& b);
CheckReport check_bk_maximum(const BipartiteGraph& g, const IncreasingEvent& a,
                             const IncreasingEvent& b);

// Explicit-event entry point; rejects non-increasing inputs with
// "event not increasing".
CheckReport check_bk(const BipartiteGraph& g, const Event& a, const Event& b);

// Negative association under the weighted measure: events depending on
// disjoint coordinate sets, each increasing or decreasing. Same-direction
// pairs must be negatively correlated, mixed pairs positively.
CheckReport check_na(const BipartiteGraph& g, const Event& a, const Event& b,
                     Mask v0_a, Mask v0_b);

// P(X in B) P(Y in B) >= P(X cap Y in B) P(X cup Y in B) under the weighted
// measure, where "in" is containment of the fixed set in the boundary.
CheckReport check_submodularity(const BipartiteGraph& g, Mask x, Mask y);

// Every ordered matching pair lies in exactly one cell; total cell coverage
// is the square of the matching count; switchings point back to their pair.
CheckReport verify_partition(const GraphContext& ctx);
CheckReport verify_partition(const BipartiteGraph& g);

// The conditioned variant: cells realized by conditioned pairs satisfy the
// conditioned index constraints, and their switchings stay conditioned.
CheckReport verify_partition_conditioned(const GraphContext& ctx, Mask v_plus,
                                         Mask v_minus);
CheckReport verify_partition_conditioned(const BipartiteGraph& g, Mask v_plus,
                                         Mask v_minus);

// The per-cell counting chain behind the BK inequality: projection
// identities on every cell, the projected-box containment, the Reimer step
// on the cell ground, the per-cell count inequality, and the aggregation to
// the global count inequality.
CheckReport verify_cell_chain(const GraphContext& ctx, const IncreasingEvent& a,
                              const IncreasingEvent& b);
CheckReport verify_cell_chain(const BipartiteGraph& g, const IncreasingEvent& a,
                              const IncreasingEvent& b);

enum class ReimerMode { kExhaustive, kSampled };

// |X box Y| <= |X cap reflect(Y)| over all (exhaustive, universe <= 3) or
// seeded random (sampled) event pairs on a universe of the given size.
CheckReport verify_reimer(int universe_size, ReimerMode mode,
                          std::uint64_t seed = 0, long samples = 100000);

// Runs the BK comparison on a hand-built positively associated two-point
// distribution; the returned report must say holds == false (lhs 1/2,
// rhs 1/4), proving the checker can fail.
CheckReport sensitivity_probe();

// Short human-readable labels used in report instances.
std::string describe_graph(const BipartiteGraph& g);
std::string describe_event(const IncreasingEvent& e);

}  // namespace bkmatch
