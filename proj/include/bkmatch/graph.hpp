#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bkmatch/bits.hpp"
#include "bkmatch/rational.hpp"

namespace bkmatch {

// Vertices are numbered 0..|S|-1 (side S) then |S|..|S|+|T|-1 (side T), so a
// vertex mask is portable across every module that works on the same graph.
enum class Side { S, T };

struct Edge {
  int s;       // vertex id on side S
  int t;       // vertex id on side T
  Rat weight;  // > 0
  int rank;    // position in the canonical edge order
};

class BipartiteGraph {
 public:
  BipartiteGraph(std::vector<std::string> s_names,
                 std::vector<std::string> t_names);

  // Appends an edge; the call order defines the canonical linear edge order.
  // Throws: "malformed edge" (unknown name / same side), "duplicate edge",
  // "invalid weight" (weight <= 0).
  void add_edge(std::string_view s_name, std::string_view t_name,
                Rat weight = Rat(1));
  void add_edge_ids(int s_vertex, int t_vertex, Rat weight = Rat(1));

  int s_count() const { return s_count_; }
  int t_count() const { return static_cast<int>(names_.size()) - s_count_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int rank) const { return edges_[rank]; }

  Side side(int v) const { return v < s_count_ ? Side::S : Side::T; }
  const std::string& vertex_name(int v) const { return names_[v]; }
  // -1 when no vertex has this name.
  int vertex_by_name(std::string_view name) const;

  Mask s_mask() const { return low_bits(s_count_); }
  Mask vertex_mask() const { return low_bits(vertex_count()); }
  // The two endpoints of an edge as a vertex mask.
  Mask edge_vertices(int rank) const {
    return (Mask{1} << edges_[rank].s) | (Mask{1} << edges_[rank].t);
  }
  bool has_unit_weights() const;

  // Set of vertex names for mask-building convenience; throws
  // std::invalid_argument("unknown vertex") on a bad name.
  Mask mask_of_names(const std::vector<std::string>& names) const;
  std::string mask_to_names(Mask m) const;

 private:
  int s_count_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

// Graph document: one JSON object with fields
//   "s": [names...], "t": [names...],
//   "edges": [[s_name, t_name] or [s_name, t_name, "p/q"], ...]
// Edge list order is the canonical edge order; omitted weights default to 1.
BipartiteGraph parse_graph(const std::string& text);
std::string serialize_graph(const BipartiteGraph& g);

// The graph on the fixed bipartition whose potential edge (i,j) (s-index i,
// t-index j, lexicographic rank i*t_count+j) is present iff bit i*t_count+j
// of edge_bits is set. Unit weights. Vertex names s1..sN / t1..tM.
BipartiteGraph graph_from_edge_bits(int s_count, int t_count, Mask edge_bits);

// All 2^(s_count*t_count) labeled graphs, in increasing edge_bits order.
// Throws "sweep too large" when s_count*t_count exceeds cap.
std::vector<BipartiteGraph> enumerate_graphs(int s_count, int t_count,
                                             int cap = 16);

// Each potential edge kept independently with probability edge_probability.
BipartiteGraph random_graph(int s_count, int t_count,
                            const Rat& edge_probability, std::uint64_t seed);

}  // namespace bkmatch
