#pragma once

// Independent oracles used to freeze expected values. Everything here is
// deliberately brute force and shares no code with the library paths it
// checks.

#include <vector>

#include "bkmatch/events.hpp"
#include "bkmatch/graph.hpp"
#include "bkmatch/matchings.hpp"

namespace bkmatch::oracle {

// All matchings as edge masks: filter every edge subset by pairwise vertex
// disjointness.
inline std::vector<Mask> matchings_bruteforce(const BipartiteGraph& g) {
  std::vector<Mask> out;
  const int m = g.edge_count();
  for (Mask subset = 0; subset < (Mask{1} << m); ++subset) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!((subset >> i) & 1u)) continue;
      for (int j = i + 1; j < m && ok; ++j) {
        if (!((subset >> j) & 1u)) continue;
        if (g.edge_vertices(i) & g.edge_vertices(j)) ok = false;
      }
    }
    if (ok) out.push_back(subset);
  }
  return out;
}

// Disjoint occurrence for increasing events straight from the definition:
// all member pairs, keep disjoint unions.
inline Event box_increasing_bruteforce(const Event& a, const Event& b) {
  std::vector<Mask> members;
  for (Mask x : a.members()) {
    for (Mask y : b.members()) {
      if ((x & y) == 0) members.push_back(x | y);
    }
  }
  return Event(a.ground(), std::move(members));
}

// Disjoint occurrence for arbitrary events straight from the witness
// definition, with a naive cylinder scan over the whole powerset.
inline Event box_general_bruteforce(const Event& a, const Event& b) {
  const int n = a.ground().size();
  const Mask full = low_bits(n);
  const auto cylinder_inside = [&](Mask c, Mask witness, const Event& e) {
    for (Mask d = 0;; ++d) {
      if ((d & witness) == (c & witness) && !e.contains(d)) return false;
      if (d == full) break;
    }
    return true;
  };
  std::vector<Mask> members;
  for (Mask c = 0;; ++c) {
    bool in = false;
    for (Mask va = 0; va <= full && !in; ++va) {
      if (!cylinder_inside(c, va, a)) continue;
      for (Mask vb = 0; vb <= full && !in; ++vb) {
        if (va & vb) continue;
        if (cylinder_inside(c, vb, b)) in = true;
      }
    }
    if (in) members.push_back(c);
    if (c == full) break;
  }
  return Event(a.ground(), std::move(members));
}

}  // namespace bkmatch::oracle
