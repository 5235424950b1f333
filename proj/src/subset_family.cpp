#include "bkmatch/subset_family.hpp"

#include <bit>
#include <stdexcept>

namespace bkmatch {

namespace {

// Bit pattern with ones at the 64-bit positions whose index has bit `coord`
// clear; used for the in-word pair swap.
std::uint64_t even_pattern(int coord) {
  static const std::uint64_t kPatterns[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  return kPatterns[coord];
}

}  // namespace

SubsetFamily::SubsetFamily(int ground_size) : n_(ground_size) {
  if (ground_size < 0 || ground_size > 16) {
    throw std::invalid_argument("ground too large");
  }
  words_.assign((universe() + 63) / 64, 0);
}

std::size_t SubsetFamily::count() const {
  std::size_t total = 0;
  const std::uint64_t live = universe() >= 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << universe()) - 1;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    if (words_.size() == 1) w &= live;
    total += std::popcount(w);
  }
  return total;
}

std::vector<Mask> SubsetFamily::members() const {
  std::vector<Mask> out;
  for (Mask c = 0; c < universe(); ++c) {
    if (test(c)) out.push_back(c);
  }
  return out;
}

bool SubsetFamily::is_subset_of(const SubsetFamily& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

SubsetFamily SubsetFamily::intersect(const SubsetFamily& o) const {
  SubsetFamily r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i] = words_[i] & o.words_[i];
  }
  return r;
}

SubsetFamily SubsetFamily::unite(const SubsetFamily& o) const {
  SubsetFamily r(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r.words_[i] = words_[i] | o.words_[i];
  }
  return r;
}

SubsetFamily SubsetFamily::reflect() const {
  // Complementing a subset maps index C to full - C, so the whole bit vector
  // is reversed.
  SubsetFamily r(n_);
  const Mask full = low_bits(n_);
  for (Mask c = 0; c < universe(); ++c) {
    if (test(c)) r.set(full ^ c);
  }
  return r;
}

SubsetFamily SubsetFamily::toggled(int coord) const {
  SubsetFamily r(n_);
  if (coord < 6) {
    const std::uint64_t lo = even_pattern(coord);
    const int d = 1 << coord;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t v = words_[i];
      r.words_[i] = ((v >> d) & lo) | ((v & lo) << d);
    }
  } else {
    const std::size_t stride = std::size_t{1} << (coord - 6);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      r.words_[i] = words_[i ^ stride];
    }
  }
  return r;
}

std::vector<SubsetFamily> SubsetFamily::cylinder_table() const {
  const Mask full = low_bits(n_);
  std::vector<SubsetFamily> good(universe(), SubsetFamily(n_));
  good[full] = *this;
  // Shrinking W one coordinate at a time: the cylinder on W through C is the
  // disjoint union of the cylinders on W+x through C and through C^x, so the
  // containment bit is the AND of the two finer bits. Descending index order
  // guarantees W | (1<<x) is already final.
  for (Mask w = full; w-- > 0;) {
    if (n_ == 0) break;
    const int x = std::countr_zero(~w);
    const SubsetFamily& g = good[w | (Mask{1} << x)];
    SubsetFamily t = g.toggled(x);
    SubsetFamily& dst = good[w];
    for (std::size_t i = 0; i < g.words_.size(); ++i) {
      dst.words_[i] = g.words_[i] & t.words_[i];
    }
  }
  return good;
}

SubsetFamily SubsetFamily::full(int ground_size) {
  SubsetFamily r(ground_size);
  for (Mask c = 0; c < r.universe(); ++c) r.set(c);
  return r;
}

std::uint64_t box_general_u64(int n, std::uint64_t a, std::uint64_t b) {
  if (n < 0 || n > 6) throw std::invalid_argument("ground too large");
  const Mask full = low_bits(n);
  const std::uint64_t live = family_universe_u64(n);
  a &= live;
  b &= live;
  std::uint64_t good_a[64], good_b[64];
  good_a[full] = a;
  good_b[full] = b;
  for (Mask w = full; w-- > 0;) {
    const int x = std::countr_zero(~w);
    const int d = 1 << x;
    const std::uint64_t lo = even_pattern(x) & live;
    const std::uint64_t ga = good_a[w | (Mask{1} << x)];
    const std::uint64_t gb = good_b[w | (Mask{1} << x)];
    good_a[w] = ga & (((ga >> d) & lo) | ((ga & lo) << d));
    good_b[w] = gb & (((gb >> d) & lo) | ((gb & lo) << d));
  }
  std::uint64_t result = 0;
  for (Mask va = 0;; ++va) {
    const Mask comp = full & ~va;
    std::uint64_t any_b = 0;
    for (Mask vb = comp;; vb = (vb - 1) & comp) {
      any_b |= good_b[vb];
      if (vb == 0) break;
    }
    result |= good_a[va] & any_b;
    if (va == full) break;
  }
  return result;
}

std::uint64_t reflect_u64(int n, std::uint64_t fam) {
  const Mask full = low_bits(n);
  std::uint64_t out = 0;
  while (fam != 0) {
    const int c = std::countr_zero(fam);
    out |= std::uint64_t{1} << (full ^ static_cast<Mask>(c));
    fam &= fam - 1;
  }
  return out;
}

SubsetFamily box_general_family(const SubsetFamily& a, const SubsetFamily& b) {
  if (a.ground_size() != b.ground_size()) {
    throw std::invalid_argument("ground mismatch");
  }
  const int n = a.ground_size();
  const Mask full = low_bits(n);
  const std::vector<SubsetFamily> good_a = a.cylinder_table();
  const std::vector<SubsetFamily> good_b = b.cylinder_table();
  SubsetFamily result(n);
  for (Mask va = 0;; ++va) {
    const Mask comp = full & ~va;
    // Accumulate all witness sets V_B disjoint from V_A.
    SubsetFamily any_b(n);
    for (Mask vb = comp;; vb = (vb - 1) & comp) {
      any_b = any_b.unite(good_b[vb]);
      if (vb == 0) break;
    }
    result = result.unite(good_a[va].intersect(any_b));
    if (va == full) break;
  }
  return result;
}

}  // namespace bkmatch
