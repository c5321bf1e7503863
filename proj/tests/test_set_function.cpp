#include "doctest.h"
#include "support.hpp"

#include <random>
#include <set>
#include <stdexcept>

using namespace supermod;
using namespace testing;

namespace {

// Direct definition: m(A∪B) + m(A∩B) >= m(A) + m(B) on all pairs, written independently.
bool pairs_supermodular(const SetFunction& m) {
  const std::uint32_t size = static_cast<std::uint32_t>(m.size());
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = a + 1; b < size; ++b) {
      if (m.values()[a | b] + m.values()[a & b] < m.values()[a] + m.values()[b]) return false;
    }
  }
  return true;
}

SetFunction random_integer_function(const VariableSet& v, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < v.power_size(); ++i) values.emplace_back(d(rng));
  return SetFunction(v, values);
}

}  // namespace

TEST_CASE("variable sets sort labels and reject bad input") {
  const VariableSet v({"c", "a", "b"});
  CHECK(v.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(v.index_of("c") == 2);
  CHECK(v.parse_mask("c,a") == SubsetMask(0b101));
  CHECK(v.parse_mask("") == SubsetMask(0));
  CHECK(v.key(SubsetMask(0b110)) == "b,c");
  CHECK(v.pretty(SubsetMask(0)) == "∅");
  CHECK(v.pretty(SubsetMask(0b011)) == "ab");
  CHECK(VariableSet({"x1", "x2"}).pretty(SubsetMask(0b11)) == "{x1,x2}");
  CHECK_THROWS_AS(VariableSet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(VariableSet(std::vector<std::string>{}), std::invalid_argument);
  CHECK_THROWS_AS(VariableSet({"a", ""}), std::invalid_argument);
  CHECK_THROWS_AS(VariableSet({"a,b"}), std::invalid_argument);
  CHECK_THROWS_AS((void)v.parse_mask("a,d"), std::invalid_argument);
  CHECK_THROWS_AS((void)v.parse_mask("a,a"), std::invalid_argument);
  CHECK_THROWS_AS((void)v.parse_compact("aa"), std::invalid_argument);
}

TEST_CASE("embedding a subset into a larger variable set") {
  const VariableSet small({"b", "d"});
  const VariableSet big({"a", "b", "c", "d"});
  CHECK(small.is_subset_of(big));
  CHECK_FALSE(big.is_subset_of(small));
  CHECK(small.embed(SubsetMask(0b11), big) == big.parse_compact("bd"));
  CHECK(small.embed(SubsetMask(0b10), big) == big.parse_compact("d"));
  CHECK(subsets_of(SubsetMask(0b101)) ==
        std::vector<SubsetMask>{SubsetMask(0), SubsetMask(1), SubsetMask(4), SubsetMask(5)});
}

TEST_CASE("point and superset indicators") {
  const auto v = vars(3);
  const auto d = delta(v, S(v, "ab"));
  CHECK(d[S(v, "ab")] == Rational(1));
  CHECK(d[S(v, "abc")].is_zero());
  const auto u = up(v, "ab");
  CHECK(u[S(v, "ab")] == Rational(1));
  CHECK(u[S(v, "abc")] == Rational(1));
  CHECK(u[S(v, "a")].is_zero());
  CHECK(u == delta(v, S(v, "ab")) + delta(v, S(v, "abc")));
  CHECK(up(v, "") == constant(v, 1));
  CHECK(m0().to_delta_string() == "2·δ_abc + δ_bc + δ_ac + δ_ab");
  CHECK(SetFunction(v).to_delta_string() == "0");
  CHECK((-delta(v, S(v, "c")) * Rational(1, 2)).to_delta_string() == "-1/2·δ_c");
  CHECK_THROWS_AS(SetFunction(v, std::vector<Rational>(7)), std::invalid_argument);
  CHECK_THROWS_AS((void)d.at(SubsetMask(8)), std::domain_error);
  CHECK_THROWS_AS(d + delta(vars(2), SubsetMask(0)), std::domain_error);
}

TEST_CASE("elementary imsets and their canonical indexing") {
  for (int n = 2; n <= 8; ++n) {
    const auto ts = triplets(n);
    CHECK(ts.size() == triplet_count(n));
    std::set<std::tuple<int, int, std::uint32_t>> seen;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      REQUIRE(triplet_index(n, ts[i]) == i);
      const auto back = triplet_at(n, i);
      REQUIRE((back.a == ts[i].a && back.b == ts[i].b && back.c == ts[i].c));
      seen.insert({ts[i].a, ts[i].b, ts[i].c.bits});
    }
    CHECK(seen.size() == ts.size());
  }
  CHECK(triplet_count(3) == 6);
  CHECK(triplet_count(4) == 24);
  CHECK(triplet_count(1) == 0);

  const auto v = vars(3);
  const auto u = elementary_imset(v, make_triplet(3, 1, 0, S(v, "c")));
  CHECK(u == fn(v, {{"abc", 1}, {"c", 1}, {"ac", -1}, {"bc", -1}}));
  CHECK_THROWS_AS(make_triplet(3, 0, 0, SubsetMask(0)), std::domain_error);
  CHECK_THROWS_AS(make_triplet(3, 0, 1, S(v, "a")), std::domain_error);
}

TEST_CASE("semi-elementary imsets") {
  const auto v = vars(4);
  const auto u = semi_elementary_imset(v, S(v, "ab"), S(v, "c"), S(v, ""));
  CHECK(u == fn(v, {{"abc", 1}, {"", 1}, {"ab", -1}, {"c", -1}}));
  CHECK_THROWS_AS(semi_elementary_imset(v, S(v, "ab"), S(v, "bc"), S(v, "")), std::domain_error);
  // Reduces to the elementary imset for singletons.
  const auto t = make_triplet(4, 0, 3, S(v, "bc"));
  CHECK(semi_elementary_imset(v, S(v, "a"), S(v, "d"), S(v, "bc")) == elementary_imset(v, t));

  // <m, u> >= 0 for every disjoint A, B non-empty, C and every supermodular m at n = 3.
  const auto v3 = vars(3);
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_integer_function(v3, rng, 4);
    if (!is_supermodular(m)) continue;
    for (std::uint32_t a = 1; a < 8; ++a) {
      for (std::uint32_t b = 1; b < 8; ++b) {
        if (a & b) continue;
        for (std::uint32_t c = 0; c < 8; ++c) {
          if ((a | b) & c) continue;
          const auto uu = semi_elementary_imset(v3, SubsetMask(a), SubsetMask(b), SubsetMask(c));
          REQUIRE(inner_product(m, uu).sign() >= 0);
          CHECK(semi_elementary_product(m, SubsetMask(a), SubsetMask(b), SubsetMask(c)) == inner_product(m, uu));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("inner products") {
  const auto v = vars(3);
  const auto u_ab = elementary_imset(v, make_triplet(3, 0, 1, SubsetMask(0)));
  const auto u_ab_c = elementary_imset(v, make_triplet(3, 0, 1, S(v, "c")));
  CHECK(inner_product(m0(), u_ab) == Rational(1));
  CHECK(inner_product(m0(), u_ab_c).is_zero());
  CHECK(inner_product(up(v, "ab"), u_ab) == Rational(1));
  CHECK(inner_product(up(v, "ab"), u_ab_c) == Rational(1));
  CHECK(triplet_product(m0(), make_triplet(3, 0, 1, SubsetMask(0))) == Rational(1));
}

TEST_CASE("supermodularity test") {
  const auto v = vars(3);
  CHECK(is_supermodular(m0()));
  CHECK_FALSE(is_supermodular(-delta(v, v.full())));
  CHECK(is_submodular(-delta(v, v.full())));
  const auto mod = modular_function(v, Rational(2), {Rational(1), Rational(-3), Rational(1, 2)});
  CHECK(is_modular(mod));
  CHECK(is_supermodular(mod));
  CHECK(is_submodular(mod));
  CHECK(is_supermodular(m_star()));
  CHECK(is_supermodular(r_star()));
  CHECK_FALSE(is_modular(m0()));
  CHECK(m0().is_nondecreasing());
  CHECK_FALSE(m0().is_nonincreasing());
  CHECK_THROWS_AS(modular_function(v, Rational(0), {Rational(1)}), std::invalid_argument);
}

TEST_CASE("supermodularity agrees with the pairwise definition") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    const auto v = vars(n);
    int positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
      auto m = random_integer_function(v, rng, 3);
      // Push half the samples toward the cone so both verdicts are exercised.
      if (trial % 2 == 0) {
        for (std::uint32_t s = 0; s < v.power_size(); ++s) {
          m[SubsetMask(s)] += Rational(6 * static_cast<int>(SubsetMask(s).size() * SubsetMask(s).size()));
        }
      }
      const bool expected = pairs_supermodular(m);
      positives += expected;
      REQUIRE(is_supermodular(m) == expected);
      REQUIRE(is_supermodular_bruteforce(m) == expected);
    }
    if (n >= 2) CHECK(positives > 0);
  }
}
