#include "doctest.h"
#include "supermod/kernels/bits.hpp"

#include <random>
#include <vector>

namespace k = supermod::kernels;

namespace {

std::uint32_t naive_extract(std::uint32_t v, std::uint32_t mask) {
  std::uint32_t out = 0;
  int j = 0;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1u) out |= ((v >> i) & 1u) << j++;
  }
  return out;
}

std::uint32_t naive_deposit(std::uint32_t v, std::uint32_t mask) {
  std::uint32_t out = 0;
  int j = 0;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1u) out |= ((v >> j++) & 1u) << i;
  }
  return out;
}

bool naive_any_superset(const std::vector<std::uint64_t>& sets, std::size_t words,
                        const std::vector<std::uint64_t>& q, std::size_t sa, std::size_t sb) {
  for (std::size_t s = 0; s * words < sets.size(); ++s) {
    if (s == sa || s == sb) continue;
    bool all = true;
    for (std::size_t w = 0; w < words; ++w) all = all && (sets[s * words + w] & q[w]) == q[w];
    if (all) return true;
  }
  return false;
}

// Sparse-ish random words so that superset hits actually happen.
std::uint64_t dense_word(std::mt19937_64& rng) { return rng() | rng(); }
std::uint64_t sparse_word(std::mt19937_64& rng) { return rng() & rng() & rng(); }

}  // namespace

TEST_CASE("scalar bit kernels match the definition") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20000; ++i) {
    const auto v = static_cast<std::uint32_t>(rng());
    const auto m = static_cast<std::uint32_t>(rng());
    CHECK(k::scalar::extract_bits(v, m) == naive_extract(v, m));
    CHECK(k::scalar::deposit_bits(v, m) == naive_deposit(v, m));
  }
  CHECK(k::scalar::extract_bits(0b1011u, 0u) == 0u);
  CHECK(k::scalar::deposit_bits(0b11u, 0b1010u) == 0b1010u);
}

TEST_CASE("SIMD kernels are bit-identical to the scalar reference") {
  if (!k::isa_supported(k::Isa::Avx2)) {
    MESSAGE("AVX2/BMI2 not available; only the scalar path is exercised");
    return;
  }
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20000; ++i) {
    const auto v = static_cast<std::uint32_t>(rng());
    const auto m = static_cast<std::uint32_t>(rng());
    REQUIRE(k::avx2::extract_bits(v, m) == k::scalar::extract_bits(v, m));
    REQUIRE(k::avx2::deposit_bits(v, m) == k::scalar::deposit_bits(v, m));
  }
  for (std::size_t words : {1u, 2u, 3u, 4u, 5u, 9u}) {
    for (std::size_t count : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 64u}) {
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::uint64_t> sets(words * count);
        for (auto& w : sets) w = dense_word(rng);
        std::vector<std::uint64_t> q(words);
        for (auto& w : q) w = sparse_word(rng);
        const std::size_t sa = count ? rng() % (count + 1) : 0;
        const std::size_t sb = count ? rng() % (count + 1) : 0;
        CAPTURE(words);
        CAPTURE(count);
        REQUIRE(k::avx2::any_superset(sets, words, q, sa, sb) == k::scalar::any_superset(sets, words, q, sa, sb));
        REQUIRE(k::scalar::any_superset(sets, words, q, sa, sb) == naive_any_superset(sets, words, q, sa, sb));
      }
    }
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::uint64_t> a(words), b(words), o1(words), o2(words);
      for (auto& w : a) w = rng();
      for (auto& w : b) w = rng();
      REQUIRE(k::avx2::intersect(a, b, o1) == k::scalar::intersect(a, b, o2));
      REQUIRE(o1 == o2);
    }
  }
}

TEST_CASE("skip positions exclude exactly those sets") {
  const std::vector<std::uint64_t> sets{0b111, 0b011, 0b110, 0b100};
  const std::vector<std::uint64_t> q{0b011};
  for (auto isa : {k::Isa::Scalar, k::Isa::Avx2}) {
    k::force_isa(isa);
    CHECK(k::any_superset(sets, 1, q, 9, 9));
    CHECK(k::any_superset(sets, 1, q, 0, 9));
    CHECK_FALSE(k::any_superset(sets, 1, q, 0, 1));
    CHECK(k::any_superset(sets, 1, std::vector<std::uint64_t>{0}, 0, 1));
  }
  k::force_isa(k::detected_isa());
}

TEST_CASE("intersect returns the popcount") {
  const std::vector<std::uint64_t> a{~0ULL, 0b1010};
  const std::vector<std::uint64_t> b{0xF0ULL, 0b0110};
  std::vector<std::uint64_t> out(2);
  CHECK(k::intersect(a, b, out) == 5);
  CHECK(out[0] == 0xF0ULL);
  CHECK(out[1] == 0b0010);
}

TEST_CASE("dispatch reports and honours the selected instruction set") {
  CHECK(k::isa_supported(k::Isa::Scalar));
  CHECK(k::isa_name(k::Isa::Scalar) == "scalar");
  k::force_isa(k::Isa::Scalar);
  CHECK(k::active_isa() == k::Isa::Scalar);
  CHECK(k::extract_bits(0b110110u, 0b101010u) == naive_extract(0b110110u, 0b101010u));
  k::force_isa(k::Isa::Avx2);
  CHECK(k::active_isa() == (k::isa_supported(k::Isa::Avx2) ? k::Isa::Avx2 : k::Isa::Scalar));
  CHECK(k::deposit_bits(0b101u, 0b111000u) == 0b101000u);
  k::force_isa(k::detected_isa());
}
