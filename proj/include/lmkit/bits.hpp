#pragma once

#include <bit>
#include <cstdint>

namespace lmkit {

/// Subsets of an indexed carrier (at most 64 elements) as bit masks.
using Mask = std::uint64_t;

constexpr int kMaxElements = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool has_bit(Mask m, int i) { return (m >> i) & Mask{1}; }

/// a ⊆ b
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr Mask full_mask(int m) {
  return m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace lmkit
