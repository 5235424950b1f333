#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkmatch/bits.hpp"
#include "bkmatch/subset_family.hpp"

namespace bkmatch {

// Labeled finite ground set. Element i corresponds to mask bit i.
struct GroundSet {
  std::vector<std::string> labels;

  explicit GroundSet(std::vector<std::string> labels_in);
  GroundSet() = default;

  int size() const { return static_cast<int>(labels.size()); }
  Mask full() const { return low_bits(size()); }
  bool operator==(const GroundSet& o) const { return labels == o.labels; }
  std::string mask_to_names(Mask m) const;
};

// An arbitrary event: an explicit family of subsets of the ground set,
// kept as a sorted duplicate-free mask list.
class Event {
 public:
  Event(GroundSet ground, std::vector<Mask> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask subset) const;
  bool operator==(const Event& o) const {
    return ground_ == o.ground_ && members_ == o.members_;
  }

  SubsetFamily family() const;

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
};

// An increasing (upward closed) event, stored as its canonical antichain of
// minimal generators. The denoted event is { X : some generator is a subset
// of X }; membership costs one pass over the generators.
class IncreasingEvent {
 public:
  IncreasingEvent(GroundSet ground, std::vector<Mask> generators);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& generators() const { return generators_; }
  bool contains(Mask subset) const {
    for (Mask g : generators_) {
      if (is_subset(g, subset)) return true;
    }
    return false;
  }
  bool is_empty_event() const { return generators_.empty(); }
  bool operator==(const IncreasingEvent& o) const {
    return ground_ == o.ground_ && generators_ == o.generators_;
  }

  // Explicit expansion over the whole powerset.
  Event expand() const;

 private:
  GroundSet ground_;
  std::vector<Mask> generators_;  // canonical: sorted, pairwise incomparable
};

// Canonical antichain of the union of up-sets of the given generators.
IncreasingEvent upward_closure(const GroundSet& ground,
                               std::vector<Mask> generators);

Event event_from_family(GroundSet ground, const SubsetFamily& family);

bool is_increasing(const Event& e);
bool is_decreasing(const Event& e);

// Disjoint occurrence of increasing events:
// { A u B : A in a, B in b, A and B disjoint }. Increasing again; equals the
// upward closure of the disjoint generator-pair unions.
IncreasingEvent box_increasing(const IncreasingEvent& a,
                               const IncreasingEvent& b);

// Disjoint occurrence for arbitrary events via disjoint witness coordinate
// sets. Coincides with box_increasing on increasing inputs. Throws
// "general box too large" above the cap, "ground mismatch" on different
// grounds.
Event box_general(const Event& a, const Event& b, int cap = 10);

// A concrete witness pair for a member of box_general(a, b): disjoint
// coordinate sets whose cylinders through the member lie inside a and b
// respectively. Returns the first pair in (V_A, V_B) scan order, or nothing
// when the subset is not a member.
struct BoxWitness {
  Mask coords_a;
  Mask coords_b;
};
std::optional<BoxWitness> box_general_witness(const Event& a, const Event& b,
                                              Mask member, int cap = 10);

// Re-derives the cylinder containments of a claimed witness from scratch.
bool check_box_witness(const Event& a, const Event& b, Mask member,
                       const BoxWitness& witness);

// Member-wise complement within the ground set; an involution.
Event reflect(const Event& e);

// All subsets of the ground that are not members.
Event complement_event(const Event& e);

// True iff membership never changes when an element outside v0 is toggled.
bool depends_only_on(const Event& e, Mask v0);

// Seeded, reproducible: the upward closure of generator_count uniform random
// subsets of the ground.
IncreasingEvent random_increasing_event(const GroundSet& ground,
                                        std::uint64_t seed,
                                        int generator_count);

// Every increasing event on the ground, in increasing family-bitmask order.
// Counts follow the Dedekind numbers: 2, 3, 6, 20, 168 for sizes 0..4.
// Grounds above size 4 are rejected ("ground too large").
std::vector<IncreasingEvent> all_increasing_events(const GroundSet& ground);

}  // namespace bkmatch
