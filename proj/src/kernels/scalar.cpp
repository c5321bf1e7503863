#include <bit>

#include "supermod/kernels/bits.hpp"

namespace supermod::kernels::scalar {

std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask) {
  std::uint32_t out = 0;
  std::uint32_t bit = 1;
  while (mask != 0) {
    const std::uint32_t low = mask & (~mask + 1);
    if ((value & low) != 0) out |= bit;
    bit <<= 1;
    mask &= mask - 1;
  }
  return out;
}

std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask) {
  std::uint32_t out = 0;
  std::uint32_t bit = 1;
  while (mask != 0) {
    const std::uint32_t low = mask & (~mask + 1);
    if ((value & bit) != 0) out |= low;
    bit <<= 1;
    mask &= mask - 1;
  }
  return out;
}

bool any_superset(std::span<const std::uint64_t> sets, std::size_t words,
                  std::span<const std::uint64_t> query, std::size_t skip_a, std::size_t skip_b) {
  const std::size_t count = sets.size() / words;
  for (std::size_t r = 0; r < count; ++r) {
    if (r == skip_a || r == skip_b) continue;
    const std::uint64_t* set = sets.data() + r * words;
    bool contains = true;
    for (std::size_t w = 0; w < words; ++w) {
      if ((query[w] & ~set[w]) != 0) {
        contains = false;
        break;
      }
    }
    if (contains) return true;
  }
  return false;
}

std::size_t intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                      std::span<std::uint64_t> out) {
  std::size_t count = 0;
  for (std::size_t w = 0; w < out.size(); ++w) {
    out[w] = a[w] & b[w];
    count += static_cast<std::size_t>(std::popcount(out[w]));
  }
  return count;
}

}  // namespace supermod::kernels::scalar
