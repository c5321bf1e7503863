// Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic, wall-clock limits.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "supermod/cone.hpp"
#include "supermod/enumerate.hpp"
#include "supermod/standardize.hpp"
#include "supermod/transforms.hpp"
#include "supermod/verify.hpp"

using namespace supermod;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

SetFunction fn(const VariableSet& v, const std::vector<std::pair<std::string, Rational>>& terms) {
  return from_deltas(v, terms);
}

SetFunction up(const VariableSet& v, const std::string& s) { return superset_indicator(v, v.parse_compact(s)); }

class Golden {
 public:
  void expect(const std::string& what, bool cond) {
    ++count_;
    if (!cond) failures_.push_back(what);
  }
  void equal(const std::string& what, const SetFunction& got, const SetFunction& want) {
    ++count_;
    if (!(got == want)) failures_.push_back(what + ": got " + got.to_delta_string());
  }
  [[nodiscard]] Outcome outcome() const {
    Outcome o;
    o.ok = failures_.empty();
    std::ostringstream os;
    os << count_ << " examples";
    for (const auto& f : failures_) os << "; " << f;
    o.detail = os.str();
    return o;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

Outcome golden() {
  Golden g;
  const auto v2 = VariableSet::letters(2);
  const auto v3 = VariableSet::letters(3);
  const auto v4 = VariableSet::letters(4);
  const auto m0 = fn(v3, {{"abc", 2}, {"ab", 1}, {"ac", 1}, {"bc", 1}});
  const auto m_star = fn(v4, {{"abcd", 2}, {"abc", 1}, {"abd", 1}, {"acd", 1}});
  const auto r_star =
      fn(v4, {{"abcd", 3}, {"abc", 2}, {"abd", 2}, {"acd", 2}, {"bcd", 1}, {"ab", 1}, {"ac", 1}, {"ad", 1}});

  g.expect("m0 extreme", is_extreme(m0).extreme);
  g.expect("m_* extreme", is_extreme(m_star).extreme);
  g.expect("r_* extreme", is_extreme(r_star).extreme);

  const auto m1 = monotonize_max_sub(m0 - Rational(1, 2) * (up(v3, "a") + up(v3, "b")));
  g.equal("m1 max-sub", m1, fn(v3, {{"abc", 1}, {"ac", Rational(1, 2)}, {"bc", Rational(1, 2)}}));
  g.expect("m1 max-sub not extreme", !is_extreme(m1).extreme);
  const auto m2 = monotonize_max_sub(m0 - up(v3, "c"));
  g.equal("m2 max-sub", m2, fn(v3, {{"abc", 1}, {"ab", 1}}));
  g.expect("m2 max-sub extreme", is_extreme(m2).extreme);
  g.expect("m3 max-sub zero",
           monotonize_max_sub(m0 - Rational(2, 3) * (up(v3, "a") + up(v3, "b") + up(v3, "c"))).is_zero());

  const auto hat = fn(v3, {{"abc", 4}, {"ab", 1}, {"ac", 1}, {"bc", 1}});
  g.equal("m0 * m0", pointwise_multiply(m0, m0), hat);
  g.equal("product composer", outer_compose(m0, m0, OuterComposer::product()).value, hat);
  g.equal("square composer", outer_compose(m0, m0, OuterComposer::power(2)).value, hat);
  g.expect("m0 hat not extreme", !is_extreme(hat).extreme);

  const auto r = delta(v2, v2.full());
  const auto rw = standardize(r, StandardizationKind::Weird);
  g.equal("weird form of delta_ab", rw, fn(v2, {{"ab", Rational(1, 3)}, {"a", Rational(-1, 3)}, {"b", Rational(-1, 3)}}));
  g.equal("lift(delta_ab)", lift(r, v3), up(v3, "ab"));
  const auto lifted_w = standardize(lift(r, v3), StandardizationKind::Weird);
  g.equal("weird form of the lift", lifted_w,
          fn(v3, {{"abc", Rational(1, 4)},
                  {"ab", Rational(1, 2)},
                  {"ac", Rational(-1, 2)},
                  {"bc", Rational(-1, 2)},
                  {"a", Rational(-1, 4)},
                  {"b", Rational(-1, 4)},
                  {"c", Rational(-1, 4)}}));
  g.expect("weird form does not commute with lifting", !(lift(rw, v3) == lifted_w));

  const auto minor_expected = fn(v3, {{"abc", 2}, {"ab", 1}, {"ac", 1}});
  g.equal("extraction of d from m_*", extraction(m_star, v4.parse_compact("d")), minor_expected);
  g.equal("deletion of d from r_*", deletion(r_star, v4.parse_compact("d")), minor_expected);
  g.expect("minor not extreme", !is_extreme(minor_expected).extreme);
  g.equal("max-minor of m_*", max_minor(m_star, v4.parse_compact("abc")), minor_expected);
  g.equal("max-minor of m0", max_minor(m0, v3.parse_compact("ab")), fn(v2, {{"ab", 2}, {"a", 1}, {"b", 1}}));
  g.equal("max-minor of m0 - m^c", max_minor(m0 - up(v3, "c"), v3.parse_compact("ab")), fn(v2, {{"ab", 1}}));
  g.equal("mean-minor of m_*", mean_minor(m_star, v4.parse_compact("abc")),
          fn(v3, {{"abc", Rational(3, 2)}, {"ab", Rational(1, 2)}, {"ac", Rational(1, 2)}}));

  const auto contracted = contract(m_star, v4.parse_compact("cd"), "c");
  g.equal("contraction of cd", contracted, fn(v3, {{"abc", 2}, {"ac", 1}}));
  g.expect("contraction not extreme", !is_extreme(contracted).extreme);

  const auto lm = lower_modular_extension(delta(v3, v3.full()), v4);
  g.equal("lowmod(delta_abc)", lm, delta(v4, v4.full()));
  g.expect("lowmod(delta_abc) extreme", is_extreme(lm).extreme);
  const auto um = upper_modular_extension(r, v3);
  g.equal("uppmod(delta_ab)", um, fn(v3, {{"ab", 1}, {"abc", 1}, {"c", -1}}));
  g.equal("l-form of uppmod(delta_ab)", standardize(um, StandardizationKind::Lower), m0);

  const auto cd = VariableSet({"c", "d"});
  const auto p = product_compose(r, delta(cd, cd.full()));
  g.equal("product delta_ab * delta_cd", p, delta(v4, v4.full()));

  const auto lr = lower_replication(m0, "c", v4);
  g.equal("lowrepl(m0)", lr, fn(v4, {{"abcd", 2}, {"abc", 1}, {"abd", 1}, {"acd", 1}, {"bcd", 1}, {"ab", 1}}));
  g.expect("lowrepl(m0) extreme", is_extreme(lr).extreme);
  const auto bcd = VariableSet({"b", "c", "d"});
  const auto ur = upper_replication(fn(bcd, {{"d", 1}, {"", 1}}), "b", v4);
  g.equal("upprepl(r_u)", ur, fn(v4, {{"d", 1}, {"", 1}}));
  g.expect("upprepl(r_u) extreme", is_extreme(ur).extreme);
  g.equal("l-form of upprepl(r_u)", standardize(ur, StandardizationKind::Lower),
          fn(v4, {{"abcd", 2}, {"abc", 2}, {"abd", 1}, {"acd", 1}, {"bcd", 1}, {"ab", 1}, {"ac", 1}, {"bc", 1}}));
  return g.outcome();
}

Outcome oracle_equivalence() {
  std::size_t cases = 0, mismatches = 0, positives = 0;
  const auto v3 = VariableSet::letters(3);
  std::vector<Rational> values(8);
  for (int code = 0; code < 6561; ++code) {
    int c = code;
    for (auto& x : values) {
      x = Rational(c % 3 - 1);
      c /= 3;
    }
    const SetFunction m(v3, values);
    const bool a = is_supermodular(m);
    positives += a;
    mismatches += a != is_supermodular_bruteforce(m);
    ++cases;
  }
  const auto v4 = VariableSet::letters(4);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> v16(16);
  for (int trial = 0; trial < 10000; ++trial) {
    for (std::size_t i = 0; i < 16; ++i) {
      // Bias by |S|^2 on half the samples so both verdicts occur.
      const int size = __builtin_popcount(static_cast<unsigned>(i));
      v16[i] = Rational(d(rng) + (trial % 2 ? 0 : 2 * size * size));
    }
    const SetFunction m(v4, v16);
    const bool a = is_supermodular(m);
    positives += a;
    mismatches += a != is_supermodular_bruteforce(m);
    ++cases;
  }
  std::ostringstream os;
  os << cases << " functions, " << positives << " supermodular, " << mismatches << " mismatches";
  return {mismatches == 0, os.str()};
}

std::set<std::vector<Rational>> ray_set(const RayCatalogue& c) {
  std::set<std::vector<Rational>> out;
  for (const auto& g : c.generators) out.insert(g.values());
  return out;
}

Outcome enumeration_crosscheck() {
  Outcome o;
  std::ostringstream os;
  for (int n = 2; n <= 4; ++n) {
    const auto dd = enumerate_extreme_rays(n);
    const auto bf = enumerate_bruteforce(n);
    const bool same = ray_set(dd) == ray_set(bf) && dd.generators.size() == bf.generators.size();
    std::size_t bad = 0;
    for (const auto& g : dd.generators) {
      if (!is_extreme(g).extreme || g[g.vars().full()].sign() <= 0) ++bad;
    }
    o.ok = o.ok && same && bad == 0;
    os << "n=" << n << ": " << dd.generators.size() << " rays" << (same ? "" : " (oracle disagrees)");
    if (bad) os << ", " << bad << " bad generators";
    if (n < 4) os << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome suite(const std::string& name, std::size_t random_count) {
  verify::Options opts;
  opts.n = 3;
  opts.random_count = random_count;
  const auto report = verify::run_suite(name, opts);
  std::size_t cases = 0, failures = 0;
  std::string failed;
  for (const auto& c : report.checks) {
    cases += c.cases;
    failures += c.failures;
    if (!c.passed()) failed += " " + c.name;
  }
  std::ostringstream os;
  os << report.checks.size() << " checks, " << cases << " cases, " << failures << " failures";
  if (!failed.empty()) os << ";" << failed;
  return {report.passed(), os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked examples", 1, golden},
      {2, "supermodularity oracle equivalence", 10, oracle_equivalence},
      {3, "enumeration cross-check n=2..4", 60, enumeration_crosscheck},
      {4, "preservation suite", 120, [] { return suite("preservation", 200); }},
      {5, "model-prediction coherence", 60, [] { return suite("models", 1000); }},
      {6, "equivalence theory", 30, [] { return suite("equivalence", 200); }},
      {7, "standardization suite", 10, [] { return suite("standardization", 200); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.ok && in_time;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " (" << std::fixed
              << std::setprecision(2) << secs << "s, limit " << std::setprecision(0) << c.limit_seconds
              << "s): " << out.detail << (in_time ? "" : "; over time limit") << std::endl;
  }
  return all ? 0 : 1;
}
