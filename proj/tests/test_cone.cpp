#include "doctest.h"
#include "support.hpp"

#include <random>

#include "supermod/cone.hpp"
#include "supermod/enumerate.hpp"
#include "supermod/linalg.hpp"
#include "supermod/standardize.hpp"

using namespace supermod;
using namespace testing;

namespace {

// Plain Gauss-Jordan over rationals, independent of the library's Bareiss code.
std::size_t naive_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool proportional(const SetFunction& x, const SetFunction& y) {
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& a = x.values()[i];
    const auto& b = y.values()[i];
    if (a.is_zero() != b.is_zero()) return false;
    if (a.is_zero()) continue;
    const Rational q = a / b;
    if (q.sign() <= 0 || (ratio && *ratio != q)) return false;
    ratio = q;
  }
  return ratio.has_value();
}

std::vector<bool> tight_set(const SetFunction& m) {
  std::vector<bool> out;
  for (const auto& t : triplets(m.n())) out.push_back(triplet_product(m, t).is_zero());
  return out;
}

// A generator g lies on the minimal face of m iff every triplet tight at m is tight at g.
// m (non-zero, in K_ℓ) is extreme iff every catalogue generator on its face is proportional to m.
bool ray_oracle_extreme(const SetFunction& m, const std::vector<SetFunction>& generators) {
  const auto tm = tight_set(m);
  for (const auto& g : generators) {
    const auto tg = tight_set(g);
    bool on_face = true;
    for (std::size_t i = 0; i < tm.size(); ++i) on_face = on_face && (!tm[i] || tg[i]);
    if (on_face && !proportional(m, g)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("scalar tables") {
  const auto v = vars(3);
  const auto table = scalar_table(m0());
  for (const auto& t : triplets(3)) {
    CHECK(table.at(t) == (t.c.empty() ? Rational(1) : Rational(0)));
    CHECK(table.at(t) == inner_product(m0(), elementary_imset(v, t)));
  }
  const auto dn = scalar_table(delta(v, v.full()));
  for (const auto& t : triplets(3)) CHECK(dn.at(t) == (t.c.size() == 1 ? Rational(1) : Rational(0)));
  for (const auto& e : scalar_table(modular_function(v, Rational(3), {Rational(1), Rational(1, 2), Rational(-4)})).entries) {
    CHECK(e.is_zero());
  }
}

TEST_CASE("independency models") {
  const auto v = vars(3);
  const auto model = independency_model(m0());
  CHECK(model.size() == 3);
  for (const auto& t : model.independencies()) CHECK(t.c.size() == 1);
  CHECK(format_triplet(v, make_triplet(3, 0, 1, S(v, "c"))) == "a ⫫ b | c");
  CHECK(format_triplet(v, make_triplet(3, 0, 1, SubsetMask(0))) == "a ⫫ b | ");

  const auto m = independency_model(up(v, "ab"));
  CHECK_FALSE(m.contains(make_triplet(3, 0, 1, SubsetMask(0))));
  CHECK(m.contains(make_triplet(3, 0, 2, SubsetMask(0))));
  CHECK(m.contains(make_triplet(3, 0, 2, S(v, "b"))));

  CHECK(independency_model(constant(v, 2)) == IndependencyModel::full(v));
  CHECK(IndependencyModel::full(v).includes(model));
  CHECK_FALSE(model.includes(IndependencyModel::full(v)));
  CHECK(model.dependency_count() == 3);
}

TEST_CASE("equivalences") {
  const auto v = vars(3);
  const auto m1 = m0() - Rational(1, 2) * up(v, "a") - Rational(1, 2) * up(v, "b");
  CHECK(quantitatively_equivalent(m0(), m0()));
  CHECK(quantitatively_equivalent(m0(), m1));
  CHECK_FALSE(quantitatively_equivalent(delta(v, v.full()), Rational(2) * delta(v, v.full())));
  CHECK(qualitatively_equivalent(m0(), Rational(3) * m0()));
  CHECK(qualitatively_equivalent(m0(), m1));
  CHECK_FALSE(qualitatively_equivalent(m0(), up(v, "ab")));
  CHECK_THROWS_AS(qualitatively_equivalent(m0(), -delta(v, v.full())), std::domain_error);
  CHECK_THROWS_AS(quantitatively_equivalent(m0(), m_star()), std::domain_error);
}

TEST_CASE("faces") {
  const auto v = vars(3);
  // |S|^2 is strictly supermodular.
  SetFunction positive(v);
  for (std::uint32_t s = 0; s < 8; ++s) {
    positive[SubsetMask(s)] = Rational(static_cast<int>(SubsetMask(s).size() * SubsetMask(s).size()));
  }
  auto face = face_of(positive);
  CHECK(face.tight.empty());
  CHECK(face.dimension == 8);

  face = face_of(modular_function(v, Rational(1), {Rational(0), Rational(2), Rational(1)}));
  CHECK(face.tight.size() == 6);
  CHECK(face.dimension == 4);

  face = face_of(m0());
  CHECK(face.tight.size() == 3);
  CHECK(face.rank == 3);
  CHECK(face.dimension == 5);
  CHECK_THROWS_AS(face_of(-delta(v, v.full())), std::domain_error);
}

TEST_CASE("imset rank matches a naive elimination") {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 4; ++n) {
    const auto v = vars(n);
    const auto all = triplets(n);
    CHECK(imset_rank(v, all) == v.power_size() - static_cast<std::size_t>(n) - 1);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<ElementaryTriplet> pick;
      std::vector<std::vector<Rational>> rows;
      for (const auto& t : all) {
        if (rng() % 3 == 0) {
          pick.push_back(t);
          rows.push_back(elementary_imset(v, t).values());
        }
      }
      REQUIRE(imset_rank(v, pick) == naive_rank(rows));
    }
  }
}

TEST_CASE("extremality examples") {
  const auto v = vars(3);
  CHECK(is_extreme(m0()).extreme);
  CHECK_FALSE(is_extreme(fn(v, {{"abc", 1}, {"ac", Rational(1, 2)}, {"bc", Rational(1, 2)}})).extreme);
  CHECK(is_extreme(r_star()).extreme);
  CHECK_FALSE(is_extreme(fn(v, {{"abc", 4}, {"ab", 1}, {"ac", 1}, {"bc", 1}})).extreme);
  CHECK(is_extreme(m_star()).extreme);

  const auto bad = is_extreme(-delta(v, v.full()));
  CHECK_FALSE(bad.supermodular);
  CHECK_FALSE(bad.extreme);
  const auto mod = is_extreme(constant(v, 1));
  CHECK(mod.modular);
  CHECK_FALSE(mod.extreme);

  // Verdict depends only on the ≈-class.
  std::mt19937_64 rng(8);
  const auto& gens = enumerate_extreme_rays(3).generators;
  for (int trial = 0; trial < 40; ++trial) {
    const auto& g = gens[rng() % gens.size()];
    const auto shift = modular_function(v, Rational(static_cast<int>(rng() % 7) - 3),
                                        {Rational(1, 2), Rational(-2), Rational(static_cast<int>(rng() % 5))});
    CHECK(is_extreme(g + shift).extreme);
    const auto& h = gens[rng() % gens.size()];
    if (!(h == g)) CHECK_FALSE(is_extreme(g + h + shift).extreme);
  }
}

TEST_CASE("extremality agrees with a decomposition oracle at n = 3") {
  const auto v = vars(3);
  const auto& gens = enumerate_extreme_rays(3).generators;
  std::vector<SetFunction> inputs = gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      inputs.push_back(gens[i] + Rational(2) * gens[j]);
      for (std::size_t k = j; k < gens.size(); ++k) inputs.push_back(gens[i] + gens[j] + gens[k]);
    }
  }
  int extreme_count = 0;
  for (const auto& m : inputs) {
    const bool oracle = ray_oracle_extreme(m, gens);
    REQUIRE(is_extreme(m).extreme == oracle);
    extreme_count += oracle;
  }
  CHECK(extreme_count >= static_cast<int>(gens.size()));
}

TEST_CASE("integral representatives") {
  const auto v = vars(3);
  CHECK(integral_representative(Rational(1, 2) * m0()) == m0());
  CHECK(integral_representative(m0() + up(v, "c")) == m0());
  CHECK(integral_representative(fn(v, {{"abc", 1}, {"ac", Rational(1, 2)}, {"bc", Rational(1, 2)}})) ==
        fn(v, {{"abc", 2}, {"ac", 1}, {"bc", 1}}));
  CHECK(integral_representative(constant(v, 3)).is_zero());
  CHECK_THROWS_AS(integral_representative(-delta(v, v.full())), std::domain_error);
}

TEST_CASE("exact linear algebra helpers") {
  using linalg::RatMatrix;
  const RatMatrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  const auto x = linalg::solve(a, {Rational(3), Rational(5)});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  const auto inv = linalg::inverse(a);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rational(3, 5));
  CHECK((*inv)[0][1] == Rational(-1, 5));
  CHECK_FALSE(linalg::solve(RatMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {Rational(1), Rational(1)}));
  CHECK(linalg::rank(RatMatrix{{Rational(1, 2), Rational(1)}, {Rational(1), Rational(2)}}) == 1);
  CHECK(linalg::rank(RatMatrix{}) == 0);
  const auto p = linalg::primitive_integer({Rational(1, 2), Rational(0), Rational(3, 4)});
  CHECK(p == std::vector<mpz_class>{2, 0, 3});
}
