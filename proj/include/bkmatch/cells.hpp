#pragma once

#include <utility>
#include <vector>

#include "bkmatch/matchings.hpp"

namespace bkmatch {

// One path of the non-cycle part of a matching-pair union, together with its
// canonical decomposition into the two alternating edge classes. split_zero
// is the class holding the lowest-ranked edge of the path. end_zero is the
// endpoint that enters the boundary when the path contributes split_zero to
// the first matching of the pair; end_one is the other endpoint.
struct PathComponent {
  std::vector<int> edge_order;  // ranks along the path
  Mask edge_mask = 0;
  Mask split_zero = 0;
  Mask split_one = 0;
  Mask vertex_mask = 0;
  int end_zero = -1;
  int end_one = -1;
  int lowest_rank = 0;

  bool operator==(const PathComponent& o) const {
    return edge_mask == o.edge_mask;
  }
};

// Index of one cell of the partition of ordered matching pairs: the vertices
// covered by the cycles of the pair union, the two perfect matchings the pair
// induces there, and the path components outside, sorted by lowest edge rank.
struct CellIndex {
  Mask cycle_vertices = 0;       // W
  Matching c_cycle_edges;        // first coordinate's cycle edges
  Matching d_cycle_edges;        // second coordinate's cycle edges
  std::vector<PathComponent> paths;

  // Derived, filled by finalize_cell:
  Mask endpoint_mask = 0;        // all path endpoints
  Mask one_endpoint_mask = 0;    // the end_one of each path; projection ground
  Mask base_boundary = 0;        // boundary part shared by every switching

  int path_count() const { return static_cast<int>(paths.size()); }
};

// All 2^k switchings of a cell, indexed by the switch vector omega read as a
// binary number (bit j = choice on path j).
struct CellFamily {
  std::vector<Matching> c_side;  // C_omega
  std::vector<Matching> d_side;  // D_omega
};

// Orders, validates and splits a set of edge ranks that must form a simple
// path (at least one edge). Throws "not a path" otherwise.
PathComponent make_path_component(const std::vector<int>& ranks,
                                  const BipartiteGraph& g);

// The alternating split of a path's edges; first component holds the
// lowest-ranked edge. Throws "not a path".
std::pair<Mask, Mask> canonical_split(const std::vector<int>& ranks,
                                      const BipartiteGraph& g);

// The labeled endpoints (end_zero, end_one) of a path with the given
// split_zero class: end_zero is the unique endpoint x with
// (x covered by split_zero) xor (x in S).
std::pair<int, int> endpoint_labels(const PathComponent& path,
                                    const BipartiteGraph& g);

// Fills endpoint_mask, one_endpoint_mask and base_boundary.
void finalize_cell(CellIndex& cell, const BipartiteGraph& g);

// Decomposes an ordered pair of matchings into its unique cell and switch
// vector: cycles of the pair union go to the cycle part (a shared edge is a
// two-edge cycle), paths to the path list. Throws "invalid matching" when an
// input is not a matching of g.
std::pair<CellIndex, Mask> decompose_pair(const Matching& c, const Matching& d,
                                          const BipartiteGraph& g);

// Materializes every switching of a cell. Validates the cell invariants
// (perfect cycle matchings on the cycle vertices, disjoint paths avoiding
// them, canonical splits and labels); throws "invalid cell".
CellFamily build_cell(const CellIndex& cell, const BipartiteGraph& g);

// B(m) restricted to the cell's projection ground, as a vertex mask.
Mask project_boundary(const CellIndex& cell, const Matching& m,
                      const BipartiteGraph& g);

// Vertices of one_endpoint_mask in increasing id order; element i of the
// projection ground is the i-th lowest such vertex.
GroundSet cell_ground(const CellIndex& cell, const BipartiteGraph& g);

// The projection of an event to the cell: the traces of the boundaries of
// the C-side switchings that land in f, over cell_ground. Computes the
// D-side variant as well and verifies both agree.
Event project_event(const CellIndex& cell, const Event& f,
                    const BipartiteGraph& g);
Event project_event(const CellIndex& cell, const IncreasingEvent& f,
                    const BipartiteGraph& g);

// Canonical dedup key: cycle vertices, both cycle edge sets, path edge sets.
std::vector<Mask> cell_key(const CellIndex& cell);

}  // namespace bkmatch
