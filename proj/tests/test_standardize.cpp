#include "doctest.h"
#include "support.hpp"

#include <random>

#include "supermod/standardize.hpp"
#include "supermod/transforms.hpp"

using namespace supermod;
using namespace testing;

namespace {

constexpr StandardizationKind kAllKinds[] = {StandardizationKind::Lower, StandardizationKind::Upper,
                                             StandardizationKind::Orthogonal,
                                             StandardizationKind::Polymatroidal,
                                             StandardizationKind::Weird};

SetFunction random_rational_function(const VariableSet& v, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < v.power_size(); ++i) values.emplace_back(num(rng), den(rng));
  return SetFunction(v, values);
}

}  // namespace

TEST_CASE("kind names round-trip") {
  for (auto k : kAllKinds) CHECK(parse_kind(kind_name(k)) == k);
  CHECK(parse_kind("l") == StandardizationKind::Lower);
  CHECK(parse_kind("w") == StandardizationKind::Weird);
  CHECK_THROWS_AS((void)parse_kind("x"), std::invalid_argument);
}

TEST_CASE("closed-form examples") {
  CHECK(standardize(m0(), StandardizationKind::Lower) == m0());
  CHECK(is_standardized(m0(), StandardizationKind::Lower));

  const auto v2 = vars(2);
  CHECK(standardize(delta(v2, v2.full()), StandardizationKind::Weird) ==
        fn(v2, {{"ab", Rational(1, 3)}, {"a", Rational(-1, 3)}, {"b", Rational(-1, 3)}}));

  const auto v3 = vars(3);
  CHECK(standardize(up(v3, "ab"), StandardizationKind::Weird) ==
        fn(v3, {{"abc", Rational(1, 4)},
                {"ab", Rational(1, 2)},
                {"ac", Rational(-1, 2)},
                {"bc", Rational(-1, 2)},
                {"a", Rational(-1, 4)},
                {"b", Rational(-1, 4)},
                {"c", Rational(-1, 4)}}));

  const auto m = upper_modular_extension(delta(v2, v2.full()), v3);
  CHECK(standardize(m, StandardizationKind::Lower) == m0());
}

TEST_CASE("standardization invariants on random rational functions") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 5; ++n) {
    const auto v = vars(n);
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_rational_function(v, rng);
      for (auto k : kAllKinds) {
        CAPTURE(kind_name(k));
        const auto r = standardize(m, k);
        REQUIRE(is_standardized(r, k));
        REQUIRE(standardize(r, k) == r);
        REQUIRE(is_modular(m - r));
        REQUIRE(standardize_generic(m, k) == r);
        for (const auto& w : standardization_constraints(v, k)) REQUIRE(inner_product(r, w).is_zero());
        for (auto k2 : kAllKinds) REQUIRE(standardize(r, k2) == standardize(m, k2));
      }
    }
  }
}

TEST_CASE("lower and upper forms of supermodular functions") {
  std::mt19937_64 rng(5);
  const auto v = vars(4);
  for (int trial = 0; trial < 50; ++trial) {
    SetFunction m = modular_function(v, Rational(trial - 25), {Rational(1), Rational(-2), Rational(3, 2), Rational(0)});
    std::uniform_int_distribution<int> coef(0, 3);
    for (std::uint32_t s = 0; s < v.power_size(); ++s) {
      if (SubsetMask(s).size() >= 2) m += Rational(coef(rng)) * superset_indicator(v, SubsetMask(s));
    }
    REQUIRE(is_supermodular(m));
    const auto l = standardize(m, StandardizationKind::Lower);
    const auto u = standardize(m, StandardizationKind::Upper);
    CHECK(l.is_nondecreasing());
    CHECK(l.is_nonnegative());
    CHECK(u.is_nonincreasing());
    CHECK(u.is_nonnegative());
    CHECK(support(m) == carrier(l));
    CHECK(support(m) == carrier(u));
    CHECK(support(m) == carrier(standardize(m, StandardizationKind::Orthogonal)));
    // Reflection swaps the lower and upper forms.
    CHECK(reflect(l) == standardize(reflect(m), StandardizationKind::Upper));
  }
}

TEST_CASE("carrier and support") {
  const auto v = vars(3);
  CHECK(carrier(constant(v, 5)).empty());
  CHECK(carrier(up(v, "ab")) == S(v, "ab"));
  CHECK(carrier(up(v, "ab") + up(v, "c")) == v.full());
  CHECK(support(up(v, "ab") + up(v, "c")) == S(v, "ab"));
  CHECK(support(modular_function(v, Rational(1), {Rational(2), Rational(0), Rational(-1)})).empty());
  CHECK(support(m0()) == v.full());
  CHECK_THROWS_AS(support(-delta(v, v.full())), std::domain_error);
}

TEST_CASE("lifting commutes with l, u and o but not with the weird form") {
  const auto v2 = vars(2);
  const auto v3 = vars(3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = random_rational_function(v2, rng);
    for (auto k : {StandardizationKind::Lower, StandardizationKind::Upper, StandardizationKind::Orthogonal}) {
      CHECK(lift(standardize(r, k), v3) == standardize(lift(r, v3), k));
    }
  }
  const auto r = delta(v2, v2.full());
  CHECK(lift(r, v3) == up(v3, "ab"));
  CHECK(lift(standardize(r, StandardizationKind::Weird), v3) !=
        standardize(lift(r, v3), StandardizationKind::Weird));
}
