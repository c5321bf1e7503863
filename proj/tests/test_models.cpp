#include "doctest.h"
#include "support.hpp"

#include "supermod/enumerate.hpp"
#include "supermod/model_prediction.hpp"

using namespace supermod;
using namespace testing;

namespace {

std::vector<TransformSpec> specs_for(const VariableSet& v) {
  const int n = v.size();
  std::vector<std::string> bigger = v.labels();
  bigger.push_back("x");
  const VariableSet up1(bigger);
  bigger.push_back("y");
  const VariableSet up2(bigger);
  std::vector<TransformSpec> out{op::Reflect{}, op::Lift{up1}, op::Lift{up2}, op::LowerModular{up1},
                                 op::UpperModular{up1}};
  for (const auto& pi : all_permutations(n)) out.push_back(op::Permute{pi});
  for (std::uint32_t keep = 1; keep < v.power_size(); ++keep) {
    out.push_back(op::MeanMinor{SubsetMask(keep)});
    const SubsetMask dropped = v.full() - SubsetMask(keep);
    for (auto e : subsets_of(dropped)) out.push_back(op::Minor{dropped - e, e});
  }
  for (int z = 0; z < n && n >= 2; ++z) {
    std::vector<std::string> target;
    for (int i = 0; i < n; ++i) {
      if (i != z) target.push_back(v.label(i));
    }
    target.push_back("x");
    target.push_back("y");
    out.push_back(op::LowerReplication{v.label(z), VariableSet(target)});
    out.push_back(op::UpperReplication{v.label(z), VariableSet(target)});
  }
  // Merge the first two variables.
  if (n >= 2) {
    std::vector<int> sigma{0};
    for (int i = 1; i < n; ++i) sigma.push_back(i - 1);
    std::vector<std::string> labels(v.labels().begin() + 1, v.labels().end());
    out.push_back(op::Coarsen{Coarsening(v, VariableSet(labels), sigma)});
  }
  return out;
}

}  // namespace

TEST_CASE("simple predictions") {
  const auto v = vars(3);
  CHECK(predict_model(op::Permute{Permutation::identity(3)}, m0()) == independency_model(m0()));
  const auto reflected = predict_model(op::Reflect{}, m0());
  CHECK(reflected.size() == 3);
  for (const auto& t : reflected.independencies()) CHECK(t.c.empty());
  CHECK(reflected == independency_model(reflect(m0())));

  const auto v4 = vars(4);
  const auto lifted = predict_model(op::Lift{v4}, m0());
  for (const auto& t : triplets(4)) {
    if (t.b == 3) CHECK(lifted.contains(t));
  }
  CHECK(lifted == independency_model(lift(m0(), v4)));
}

TEST_CASE("predictions agree with transformed models on the catalogue") {
  for (int n = 2; n <= 3; ++n) {
    const auto v = vars(n);
    const auto specs = specs_for(v);
    const auto& gens = enumerate_extreme_rays(n).generators;
    for (const auto& g : gens) {
      const auto shifted = g + modular_function(v, Rational(1), std::vector<Rational>(n, Rational(-1, 2)));
      for (const auto& base : {g, shifted, g + gens.front()}) {
        for (const auto& spec : specs) {
          CAPTURE(transform_name(spec));
          REQUIRE(has_model_formula(spec));
          REQUIRE(predict_model(spec, base) == independency_model(apply_transform(base, spec)));
        }
      }
    }
  }
}

TEST_CASE("unsupported predictions are errors") {
  const auto v = vars(3);
  CHECK_FALSE(has_model_formula(op::MaxSub{}));
  CHECK_FALSE(has_model_formula(op::MaxMinor{S(v, "ab")}));
  CHECK_THROWS_AS(predict_model(op::MaxSub{}, m0()), std::domain_error);
  CHECK_THROWS_AS(predict_model(op::Reflect{}, -delta(v, v.full())), std::domain_error);
  CHECK_THROWS_AS(predict_model(op::LowerModular{vars(5)}, m0()), std::domain_error);
  CHECK_THROWS_AS(predict_model(op::LowerReplication{"c", vars({"a", "b", "p", "q", "s"})}, m0()),
                  std::domain_error);
  CHECK(transform_name(op::Reflect{}) == "reflect");
}
