#include "bkmatch/events.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkmatch {

GroundSet::GroundSet(std::vector<std::string> labels_in)
    : labels(std::move(labels_in)) {
  if (labels.size() > 16) throw std::invalid_argument("ground too large");
}

std::string GroundSet::mask_to_names(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if ((m >> i) & 1u) {
      if (!first) out += ",";
      out += labels[i];
      first = false;
    }
  }
  return out + "}";
}

Event::Event(GroundSet ground, std::vector<Mask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (Mask m : members_) {
    if (!is_subset(m, ground_.full())) {
      throw std::invalid_argument("member outside ground");
    }
  }
}

Event event_from_family(GroundSet ground, const SubsetFamily& family) {
  if (family.ground_size() != ground.size()) {
    throw std::invalid_argument("ground mismatch");
  }
  return Event(std::move(ground), family.members());
}

bool Event::contains(Mask subset) const {
  return std::binary_search(members_.begin(), members_.end(), subset);
}

SubsetFamily Event::family() const {
  SubsetFamily f(ground_.size());
  for (Mask m : members_) f.set(m);
  return f;
}

namespace {

std::vector<Mask> minimal_antichain(std::vector<Mask> generators) {
  // A proper submask is numerically smaller, so ascending order guarantees
  // every potential dominator is seen before the sets it dominates.
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  std::vector<Mask> minimal;
  for (Mask g : generators) {
    bool dominated = false;
    for (Mask m : minimal) {
      if (is_subset(m, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(g);
  }
  return minimal;
}

}  // namespace

IncreasingEvent::IncreasingEvent(GroundSet ground, std::vector<Mask> generators)
    : ground_(std::move(ground)),
      generators_(minimal_antichain(std::move(generators))) {
  for (Mask g : generators_) {
    if (!is_subset(g, ground_.full())) {
      throw std::invalid_argument("member outside ground");
    }
  }
}

Event IncreasingEvent::expand() const {
  std::vector<Mask> members;
  const Mask full = ground_.full();
  for (Mask x = 0;; ++x) {
    if (contains(x)) members.push_back(x);
    if (x == full) break;
  }
  return Event(ground_, std::move(members));
}

IncreasingEvent upward_closure(const GroundSet& ground,
                               std::vector<Mask> generators) {
  return IncreasingEvent(ground, std::move(generators));
}

bool is_increasing(const Event& e) {
  const int n = e.ground().size();
  for (Mask m : e.members()) {
    for (int i = 0; i < n; ++i) {
      if (!e.contains(m | (Mask{1} << i))) return false;
    }
  }
  return true;
}

bool is_decreasing(const Event& e) {
  for (Mask m : e.members()) {
    Mask bits = m;
    while (bits != 0) {
      const Mask bit = bits & (Mask{0} - bits);
      if (!e.contains(m ^ bit)) return false;
      bits ^= bit;
    }
  }
  return true;
}

IncreasingEvent box_increasing(const IncreasingEvent& a,
                               const IncreasingEvent& b) {
  if (!(a.ground() == b.ground())) {
    throw std::invalid_argument("ground mismatch");
  }
  std::vector<Mask> generators;
  for (Mask ga : a.generators()) {
    for (Mask gb : b.generators()) {
      if ((ga & gb) == 0) generators.push_back(ga | gb);
    }
  }
  return IncreasingEvent(a.ground(), std::move(generators));
}

Event box_general(const Event& a, const Event& b, int cap) {
  if (!(a.ground() == b.ground())) {
    throw std::invalid_argument("ground mismatch");
  }
  if (a.ground().size() > cap) {
    throw std::invalid_argument("general box too large");
  }
  return event_from_family(a.ground(), box_general_family(a.family(), b.family()));
}

std::optional<BoxWitness> box_general_witness(const Event& a, const Event& b,
                                              Mask member, int cap) {
  if (!(a.ground() == b.ground())) {
    throw std::invalid_argument("ground mismatch");
  }
  if (a.ground().size() > cap) {
    throw std::invalid_argument("general box too large");
  }
  const Mask full = a.ground().full();
  const std::vector<SubsetFamily> good_a = a.family().cylinder_table();
  const std::vector<SubsetFamily> good_b = b.family().cylinder_table();
  for (Mask va = 0;; ++va) {
    if (good_a[va].test(member)) {
      const Mask comp = full & ~va;
      for (Mask vb = comp;; vb = (vb - 1) & comp) {
        if (good_b[vb].test(member)) return BoxWitness{va, vb};
        if (vb == 0) break;
      }
    }
    if (va == full) break;
  }
  return std::nullopt;
}

bool check_box_witness(const Event& a, const Event& b, Mask member,
                       const BoxWitness& witness) {
  if (witness.coords_a & witness.coords_b) return false;
  const Mask full = a.ground().full();
  const auto cylinder_inside = [&](Mask coords, const Event& e) {
    for (Mask d = 0;; ++d) {
      if ((d & coords) == (member & coords) && !e.contains(d)) return false;
      if (d == full) break;
    }
    return true;
  };
  return cylinder_inside(witness.coords_a, a) &&
         cylinder_inside(witness.coords_b, b);
}

Event reflect(const Event& e) {
  const Mask full = e.ground().full();
  std::vector<Mask> members;
  members.reserve(e.size());
  for (Mask m : e.members()) members.push_back(full ^ m);
  return Event(e.ground(), std::move(members));
}

Event complement_event(const Event& e) {
  std::vector<Mask> members;
  const Mask full = e.ground().full();
  for (Mask x = 0;; ++x) {
    if (!e.contains(x)) members.push_back(x);
    if (x == full) break;
  }
  return Event(e.ground(), std::move(members));
}

bool depends_only_on(const Event& e, Mask v0) {
  const int n = e.ground().size();
  for (Mask m : e.members()) {
    for (int i = 0; i < n; ++i) {
      if ((v0 >> i) & 1u) continue;
      if (!e.contains(m ^ (Mask{1} << i))) return false;
    }
  }
  return true;
}

std::vector<IncreasingEvent> all_increasing_events(const GroundSet& ground) {
  const int n = ground.size();
  if (n > 4) throw std::invalid_argument("ground too large");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<IncreasingEvent> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    bool monotone = true;
    std::vector<Mask> members;
    for (Mask c = 0; c < subsets && monotone; ++c) {
      if (!((fam >> c) & 1u)) continue;
      members.push_back(c);
      for (int i = 0; i < n; ++i) {
        if (!((fam >> (c | (Mask{1} << i))) & 1u)) {
          monotone = false;
          break;
        }
      }
    }
    if (monotone) out.emplace_back(ground, std::move(members));
  }
  return out;
}

IncreasingEvent random_increasing_event(const GroundSet& ground,
                                        std::uint64_t seed,
                                        int generator_count) {
  if (generator_count < 0) {
    throw std::invalid_argument("invalid generator count");
  }
  Rng rng(seed);
  std::vector<Mask> generators;
  generators.reserve(generator_count);
  for (int i = 0; i < generator_count; ++i) {
    generators.push_back(rng.subset(ground.size()));
  }
  return upward_closure(ground, std::move(generators));
}

}  // namespace bkmatch
