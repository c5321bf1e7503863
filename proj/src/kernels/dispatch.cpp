#include <atomic>

#include "supermod/kernels/bits.hpp"

namespace supermod::kernels {

namespace {

Isa probe() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi2") &&
      __builtin_cpu_supports("popcnt")) {
    return Isa::Avx2;
  }
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

bool isa_supported(Isa isa) { return isa == Isa::Scalar || detected_isa() == Isa::Avx2; }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  current().store(isa_supported(isa) ? isa : Isa::Scalar, std::memory_order_relaxed);
}

std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask) {
  return active_isa() == Isa::Avx2 ? avx2::extract_bits(value, mask)
                                   : scalar::extract_bits(value, mask);
}

std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask) {
  return active_isa() == Isa::Avx2 ? avx2::deposit_bits(value, mask)
                                   : scalar::deposit_bits(value, mask);
}

bool any_superset(std::span<const std::uint64_t> sets, std::size_t words,
                  std::span<const std::uint64_t> query, std::size_t skip_a, std::size_t skip_b) {
  return active_isa() == Isa::Avx2 ? avx2::any_superset(sets, words, query, skip_a, skip_b)
                                   : scalar::any_superset(sets, words, query, skip_a, skip_b);
}

std::size_t intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                      std::span<std::uint64_t> out) {
  return active_isa() == Isa::Avx2 ? avx2::intersect(a, b, out) : scalar::intersect(a, b, out);
}

}  // namespace supermod::kernels
