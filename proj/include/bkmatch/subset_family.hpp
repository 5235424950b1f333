#pragma once

#include <cstdint>
#include <vector>

#include "bkmatch/bits.hpp"

namespace bkmatch {

// A family of subsets of {0..n-1}, stored one bit per subset index. This is
// the workhorse behind the disjoint-occurrence operator for arbitrary events:
// on a ground of size n the family occupies 2^n bits, and cylinder
// containment can be folded one coordinate at a time.
class SubsetFamily {
 public:
  explicit SubsetFamily(int ground_size);

  int ground_size() const { return n_; }
  std::size_t universe() const { return std::size_t{1} << n_; }

  bool test(Mask subset) const {
    return (words_[subset >> 6] >> (subset & 63)) & 1u;
  }
  void set(Mask subset) { words_[subset >> 6] |= std::uint64_t{1} << (subset & 63); }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<Mask> members() const;

  bool operator==(const SubsetFamily& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool is_subset_of(const SubsetFamily& o) const;

  SubsetFamily intersect(const SubsetFamily& o) const;
  SubsetFamily unite(const SubsetFamily& o) const;
  // Member-wise complement within the ground set: J -> U \ J. An involution.
  SubsetFamily reflect() const;

  // good(W) bit C == 1  iff  every D with D cap W == C cap W lies in this
  // family (the cylinder through C with coordinate set W). Index: vector over
  // all W in [0, 2^n), each entry a family-sized bitset.
  std::vector<SubsetFamily> cylinder_table() const;

  static SubsetFamily full(int ground_size);

 private:
  int n_;
  std::vector<std::uint64_t> words_;

  // Bit C of the result is bit (C xor (1<<coord)) of v.
  SubsetFamily toggled(int coord) const;
};

// The disjoint-occurrence family for arbitrary events: C is a member iff
// there are disjoint witness sets V_A, V_B with the cylinder through C on
// V_A inside a and the cylinder on V_B inside b. Search is exhaustive over
// the 3^n ordered disjoint witness pairs, with cylinder containment
// memoized in the tables above.
SubsetFamily box_general_family(const SubsetFamily& a, const SubsetFamily& b);

// Single-word variants for grounds of size <= 6 (the family fits one
// uint64). Same semantics as the SubsetFamily versions; used in the per-cell
// hot loops and the exhaustive Reimer runs.
std::uint64_t box_general_u64(int n, std::uint64_t a, std::uint64_t b);
std::uint64_t reflect_u64(int n, std::uint64_t fam);

inline std::uint64_t family_universe_u64(int n) {
  const std::size_t bits = std::size_t{1} << n;
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace bkmatch
