#pragma once

// Bit-level kernels used on hot paths: subset re-encoding between variable
// sets (bit extract/deposit) and incidence-set scans in the double
// description enumerator.
//
// Each kernel has a portable scalar reference in kernels::scalar and an
// AVX2/BMI2 variant in kernels::avx2. The unqualified entry points dispatch
// at runtime to the best variant the CPU supports; the two families must be
// bit-identical and are equivalence-tested.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace supermod::kernels {

enum class Isa { Scalar, Avx2 };

[[nodiscard]] std::string_view isa_name(Isa isa);
[[nodiscard]] bool isa_supported(Isa isa);
[[nodiscard]] Isa detected_isa();
[[nodiscard]] Isa active_isa();

/// Overrides dispatch (tests and benchmarks). An unsupported request falls
/// back to Scalar. Not thread-safe with concurrent kernel calls.
void force_isa(Isa isa);

// Gathers the bits of `value` selected by `mask` into the low bits (PEXT).
[[nodiscard]] std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask);
// Scatters the low bits of `value` to the positions set in `mask` (PDEP).
[[nodiscard]] std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask);

// Incidence sets are fixed-width arrays of 64-bit words stored back to back
// (`words` words per set, `sets.size() / words` sets).

/// True iff some set other than those at positions skip_a/skip_b contains `query`.
[[nodiscard]] bool any_superset(std::span<const std::uint64_t> sets, std::size_t words,
                                std::span<const std::uint64_t> query, std::size_t skip_a,
                                std::size_t skip_b);

/// Writes a & b into out and returns its population count.
std::size_t intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                      std::span<std::uint64_t> out);

namespace scalar {
std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask);
std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask);
bool any_superset(std::span<const std::uint64_t> sets, std::size_t words,
                  std::span<const std::uint64_t> query, std::size_t skip_a, std::size_t skip_b);
std::size_t intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                      std::span<std::uint64_t> out);
}  // namespace scalar

namespace avx2 {
// Callers must check isa_supported(Isa::Avx2) first.
std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask);
std::uint32_t deposit_bits(std::uint32_t value, std::uint32_t mask);
bool any_superset(std::span<const std::uint64_t> sets, std::size_t words,
                  std::span<const std::uint64_t> query, std::size_t skip_a, std::size_t skip_b);
std::size_t intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                      std::span<std::uint64_t> out);
}  // namespace avx2

}  // namespace supermod::kernels
