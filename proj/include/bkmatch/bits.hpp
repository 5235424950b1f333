#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace bkmatch {

// Vertex sets, edge sets and subset indices are all bit masks. Ground sets
// are capped well below 32 elements, so one word covers every carrier.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask low_bits(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Compacts the bits of m that lie inside keep: the i-th lowest bit of keep
// becomes bit i of the result.
inline Mask project_mask(Mask m, Mask keep) {
  Mask out = 0;
  int j = 0;
  while (keep != 0) {
    int i = std::countr_zero(keep);
    if ((m >> i) & 1u) out |= Mask{1} << j;
    keep &= keep - 1;
    ++j;
  }
  return out;
}

// Inverse of project_mask: bit i of m is placed at the i-th lowest bit of keep.
inline Mask expand_mask(Mask m, Mask keep) {
  Mask out = 0;
  int j = 0;
  while (keep != 0) {
    int i = std::countr_zero(keep);
    if ((m >> j) & 1u) out |= Mask{1} << i;
    keep &= keep - 1;
    ++j;
  }
  return out;
}

// Deterministic seeded generator. mt19937_64 has a standard-fixed output
// sequence; sampling avoids std::uniform_int_distribution, whose mapping is
// implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), rejection sampled. n must be >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform random subset of an n-element ground set.
  Mask subset(int n) { return static_cast<Mask>(next()) & low_bits(n); }

 private:
  std::mt19937_64 eng_;
};

// Stream splitter: derives independent sub-seeds from a master seed and an
// index, so parallel schedules see the same per-instance randomness.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b = 0) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (a + 1) +
                    0xbf58476d1ce4e5b9ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace bkmatch
