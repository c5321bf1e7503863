#include "supermod/kernels/bits.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define SUPERMOD_HAVE_X86 1
#define SUPERMOD_TARGET __attribute__((target("avx2,bmi2,popcnt")))
#else
#define SUPERMOD_HAVE_X86 0
#endif

namespace supermod::kernels::avx2 {

#if SUPERMOD_HAVE_X86

SUPERMOD_TARGET std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask) {
  return _pext_u32(value, mask);
}

SUPERMOD_TARGET std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask) {
  return _pdep_u32(value, mask);
}

namespace {

SUPERMOD_TARGET bool contains(const std::uint64_t* set, const std::uint64_t* query,
                              std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(set + w));
    const __m256i q = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(query + w));
    // testc sets CF when (~s & q) == 0, i.e. q is a subset of s.
    if (!_mm256_testc_si256(s, q)) return false;
  }
  for (; w < words; ++w) {
    if ((query[w] & ~set[w]) != 0) return false;
  }
  return true;
}

}  // namespace

SUPERMOD_TARGET bool any_superset(std::span<const std::uint64_t> sets, std::size_t words,
                                  std::span<const std::uint64_t> query, std::size_t skip_a,
                                  std::size_t skip_b) {
  const std::size_t count = sets.size() / words;
  if (words == 1) {
    // Four single-word sets per register.
    const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query[0]));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t r = 0;
    for (; r + 4 <= count; r += 4) {
      const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets.data() + r));
      const __m256i missing = _mm256_andnot_si256(s, q);
      int hits = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(missing, zero)));
      if (skip_a >= r && skip_a < r + 4) hits &= ~(1 << (skip_a - r));
      if (skip_b >= r && skip_b < r + 4) hits &= ~(1 << (skip_b - r));
      if (hits != 0) return true;
    }
    for (; r < count; ++r) {
      if (r == skip_a || r == skip_b) continue;
      if ((query[0] & ~sets[r]) == 0) return true;
    }
    return false;
  }
  for (std::size_t r = 0; r < count; ++r) {
    if (r == skip_a || r == skip_b) continue;
    if (contains(sets.data() + r * words, query.data(), words)) return true;
  }
  return false;
}

SUPERMOD_TARGET std::size_t intersect(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b,
                                      std::span<std::uint64_t> out) {
  const std::size_t words = out.size();
  std::size_t w = 0;
  std::size_t count = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + w));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + w), _mm256_and_si256(x, y));
    for (std::size_t k = 0; k < 4; ++k) {
      count += static_cast<std::size_t>(_mm_popcnt_u64(out[w + k]));
    }
  }
  for (; w < words; ++w) {
    out[w] = a[w] & b[w];
    count += static_cast<std::size_t>(_mm_popcnt_u64(out[w]));
  }
  return count;
}

#else

// Non-x86 builds: isa_supported(Isa::Avx2) is false, so these are never
// dispatched to; they forward to the reference kernels to keep the symbols defined.
std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask) {
  return scalar::extract_bits(value, mask);
}
std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask) {
  return scalar::deposit_bits(value, mask);
}
bool any_superset(std::span<const std::uint64_t> sets, std::size_t words,
                  std::span<const std::uint64_t> query, std::size_t skip_a, std::size_t skip_b) {
  return scalar::any_superset(sets, words, query, skip_a, skip_b);
}
std::size_t intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                      std::span<std::uint64_t> out) {
  return scalar::intersect(a, b, out);
}

#endif

}  // namespace supermod::kernels::avx2
