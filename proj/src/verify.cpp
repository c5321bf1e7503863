#include "supermod/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "supermod/cone.hpp"
#include "supermod/model_prediction.hpp"
#include "supermod/standardize.hpp"
#include "supermod/transforms.hpp"

namespace supermod::verify {

namespace {

constexpr std::size_t kMaxExamples = 5;

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  // body() says whether the case holds; describe() runs only on failure.
  template <class Body, class Describe>
  void test(Body&& body, Describe&& describe) {
    ++result_.cases;
    bool ok = false;
    std::string error;
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = std::string(" [threw: ") + e.what() + "]";
    }
    if (ok) return;
    ++result_.failures;
    if (result_.counterexamples.size() < kMaxExamples) result_.counterexamples.push_back(describe() + error);
  }

  void merge(const CheckResult& other) {
    result_.cases += other.cases;
    result_.failures += other.failures;
    for (const auto& c : other.counterexamples) {
      if (result_.counterexamples.size() < kMaxExamples) result_.counterexamples.push_back(c);
    }
  }

  [[nodiscard]] const CheckResult& result() const { return result_; }

 private:
  CheckResult result_;
};

std::string show(const SetFunction& m) {
  std::string labels;
  for (const auto& l : m.vars().labels()) labels += (labels.empty() ? "" : ",") + l;
  return "[" + labels + "] " + m.to_delta_string();
}

// Runs fn(i, checks) for i in [0, count) on worker threads; per-thread results
// are merged in index order so the report does not depend on scheduling.
template <class Fn>
std::vector<CheckResult> fan_out(const std::vector<std::string>& names, std::size_t count, Fn&& fn) {
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::size_t>(default_thread_count(), count));
  std::vector<std::vector<Check>> locals(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    for (const auto& n : names) locals[t].emplace_back(n);
    pool.emplace_back([&, t] {
      const std::size_t begin = count * t / threads;
      const std::size_t end = count * (t + 1) / threads;
      for (std::size_t i = begin; i < end; ++i) fn(i, locals[t]);
    });
  }
  for (auto& th : pool) th.join();
  std::vector<CheckResult> out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    Check merged(names[k]);
    for (const auto& local : locals) merged.merge(local[k].result());
    out.push_back(merged.result());
  }
  return out;
}

std::vector<std::string> fresh_labels(const VariableSet& vars, int k) {
  std::vector<std::string> out;
  for (char c = 'a'; c <= 'z' && static_cast<int>(out.size()) < k; ++c) {
    const std::string l(1, c);
    if (!vars.find(l)) out.push_back(l);
  }
  for (int i = 0; static_cast<int>(out.size()) < k; ++i) {
    const std::string l = "v" + std::to_string(i);
    if (!vars.find(l)) out.push_back(l);
  }
  return out;
}

VariableSet extend(const VariableSet& vars, const std::vector<std::string>& extra) {
  auto labels = vars.labels();
  labels.insert(labels.end(), extra.begin(), extra.end());
  return VariableSet(std::move(labels));
}

VariableSet extend(const VariableSet& vars, int k) { return extend(vars, fresh_labels(vars, k)); }

// Every surjection onto a set partition, each block named by its least label.
std::vector<Coarsening> all_coarsenings(const VariableSet& vars) {
  const int n = vars.size();
  std::vector<Coarsening> out;
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      std::map<std::string, std::string> mapping;
      std::vector<int> first(static_cast<std::size_t>(used), -1);
      for (int j = 0; j < n; ++j) {
        auto& f = first[static_cast<std::size_t>(block[static_cast<std::size_t>(j)])];
        if (f < 0) f = j;
        mapping[vars.label(j)] = vars.label(f);
      }
      out.push_back(Coarsening::from_labels(vars, mapping));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

// (deleted, extracted) pairs leaving at least one variable.
std::vector<std::pair<SubsetMask, SubsetMask>> all_minor_pairs(int n) {
  std::vector<std::pair<SubsetMask, SubsetMask>> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    SubsetMask d;
    SubsetMask e;
    int c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 1) d = d.with(i);
      if (c % 3 == 2) e = e.with(i);
    }
    if ((d | e).size() < n) out.emplace_back(d, e);
  }
  return out;
}

std::vector<SubsetMask> nonempty_subsets(int n) {
  std::vector<SubsetMask> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) out.emplace_back(s);
  return out;
}

// Renames letters a, b, ... of a catalogue function to the labels of `vars`.
SetFunction onto(const SetFunction& g, const VariableSet& vars) {
  std::map<std::string, std::string> mapping;
  for (int i = 0; i < g.n(); ++i) mapping[g.vars().label(i)] = "\x01" + vars.label(i);
  SetFunction tmp = relabel(g, mapping);
  mapping.clear();
  for (int i = 0; i < g.n(); ++i) mapping["\x01" + vars.label(i)] = vars.label(i);
  return relabel(tmp, mapping);
}

bool extreme(const SetFunction& m) { return is_extreme(m).extreme; }

Rational random_positive(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 4);
  std::uniform_int_distribution<int> den(1, 2);
  return Rational(num(rng), den(rng));
}

// Supermodular test input over arbitrary variables: catalogue combinations
// where a catalogue is available, positive combinations of superset
// indicators m^{A⊆} (|A| ≥ 2) otherwise.
SetFunction random_supermodular_over(const VariableSet& vars, Rng& rng) {
  if (vars.size() >= 2 && vars.size() <= 4) {
    return onto(random_supermodular(catalogue(vars.size()), rng), vars);
  }
  SetFunction m = random_modular(vars, rng);
  if (vars.size() < 2) return m;
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(vars.power_size() - 1));
  std::uniform_int_distribution<int> terms(1, 4);
  for (int k = terms(rng); k > 0;) {
    const SubsetMask a(pick(rng));
    if (a.size() < 2) continue;
    m += superset_indicator(vars, a) * random_positive(rng);
    --k;
  }
  return m;
}

IndependencyModel as_model(const SetFunction& m) { return independency_model(m); }

std::string model_diff(const IndependencyModel& want, const IndependencyModel& got) {
  if (!(want.vars() == got.vars())) return "variable sets differ";
  std::ostringstream os;
  int shown = 0;
  for (const auto& t : triplets(want.vars().size())) {
    if (want.contains(t) == got.contains(t)) continue;
    if (shown++ == 3) {
      os << " ...";
      break;
    }
    os << (shown > 1 ? "; " : "") << format_triplet(want.vars(), t)
       << (want.contains(t) ? " predicted, absent" : " present, not predicted");
  }
  return os.str();
}

struct Pool {
  VariableSet small;
  VariableSet big;
  std::vector<SetFunction> catalogue;       // C_n
  std::vector<SetFunction> extended;        // images of C_n over big
  std::vector<SetFunction> random_small;    // supermodular
  std::vector<SetFunction> random_big;      // supermodular
  std::vector<SetFunction> arbitrary_small;
  std::vector<SetFunction> arbitrary_big;
};

Pool make_pool(const Options& opts) {
  if (opts.n < 2 || opts.n > 4) throw std::invalid_argument("verify: n must be between 2 and 4");
  Rng rng(opts.seed);
  Pool p{VariableSet::letters(opts.n), VariableSet::letters(opts.n + 1), {}, {}, {}, {}, {}, {}};
  p.catalogue = catalogue(opts.n).generators;
  for (const auto& g : p.catalogue) {
    p.extended.push_back(lift(g, p.big));
    p.extended.push_back(lower_modular_extension(g, p.big));
    p.extended.push_back(upper_modular_extension(g, p.big));
    const SetFunction gu = standardize(g, StandardizationKind::Upper);
    for (const auto& z : p.small.labels()) {
      p.extended.push_back(lower_replication(g, z, p.big));
      p.extended.push_back(upper_replication(gu, z, p.big));
    }
  }
  const std::size_t rc = std::max<std::size_t>(opts.random_count, 8);
  for (std::size_t i = 0; i < rc / 4; ++i) p.random_small.push_back(random_supermodular(catalogue(opts.n), rng));
  for (std::size_t i = 0; i < rc; ++i) p.random_big.push_back(random_supermodular_over(p.big, rng));
  for (std::size_t i = 0; i < rc / 8; ++i) p.arbitrary_small.push_back(random_function(p.small, rng));
  for (std::size_t i = 0; i < rc / 8; ++i) p.arbitrary_big.push_back(random_function(p.big, rng));
  return p;
}

template <class... Vs>
std::vector<SetFunction> concat(const Vs&... vs) {
  std::vector<SetFunction> out;
  (out.insert(out.end(), vs.begin(), vs.end()), ...);
  return out;
}

void add(SuiteReport& report, const Check& c) { report.checks.push_back(c.result()); }
void add(SuiteReport& report, std::vector<CheckResult> cs) {
  for (auto& c : cs) report.checks.push_back(std::move(c));
}

// ---------------------------------------------------------------- preservation

void check_self_maps(const Pool& p, SuiteReport& report) {
  const auto inputs = concat(p.catalogue, p.extended, p.random_small, p.random_big, p.arbitrary_small,
                             p.arbitrary_big);
  add(report, fan_out({"P1 permutation preserves verdicts", "P1 reflection preserves verdicts",
                       "P1 reflection is an involution"},
                      inputs.size(), [&](std::size_t i, std::vector<Check>& c) {
    const SetFunction& m = inputs[i];
    const bool sup = is_supermodular(m);
    const bool ext = extreme(m);
    for (const auto& pi : all_permutations(m.n())) {
      c[0].test([&] {
        const SetFunction t = permute(m, pi);
        return is_supermodular(t) == sup && extreme(t) == ext;
      }, [&] { return show(m); });
    }
    c[1].test([&] {
      const SetFunction t = reflect(m);
      return is_supermodular(t) == sup && extreme(t) == ext;
    }, [&] { return show(m); });
    c[2].test([&] { return reflect(reflect(m)) == m; }, [&] { return show(m); });
  }));
}

void check_lifting(const Pool& p, SuiteReport& report) {
  const auto small = concat(p.catalogue, p.random_small, p.arbitrary_small);
  std::vector<SetFunction> big = concat(p.extended, p.arbitrary_big);
  big.insert(big.end(), p.random_big.begin(),
             p.random_big.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(p.random_big.size(), 40)));
  const auto inputs = concat(small, big);
  add(report, fan_out({"P2 lifting preserves verdicts both ways", "P2 deletion undoes lifting"}, inputs.size(),
                      [&](std::size_t i, std::vector<Check>& c) {
    const SetFunction& r = inputs[i];
    const bool sup = is_supermodular(r);
    const bool ext = extreme(r);
    for (int k = 1; k <= (r.n() == p.small.size() ? 2 : 1); ++k) {
      const VariableSet target = extend(r.vars(), k);
      const SetFunction m = lift(r, target);
      c[0].test([&] { return is_supermodular(m) == sup && extreme(m) == ext; },
                [&] { return show(r) + " lifted by " + std::to_string(k); });
      c[1].test([&] { return deletion(m, target.full() - r.vars().image_in(target)) == r; },
                [&] { return show(r); });
    }
  }));
}

void check_projections(const Pool& p, SuiteReport& report) {
  const auto inputs = concat(p.catalogue, p.extended, p.random_small, p.random_big);
  add(report, fan_out({"P3 minors preserve supermodularity", "P3 mean-minors preserve supermodularity",
                       "P3 coarsenings preserve supermodularity", "P3 max-minors preserve supermodularity",
                       "P3 deletion keeps ℓ-standardization", "P3 extraction keeps u-standardization",
                       "P3 mean-minor keeps o-standardization"},
                      inputs.size(), [&](std::size_t i, std::vector<Check>& c) {
    const SetFunction& m = inputs[i];
    if (!is_supermodular(m)) return;
    const int n = m.n();
    const SetFunction ml = standardize(m, StandardizationKind::Lower);
    const SetFunction mu = standardize(m, StandardizationKind::Upper);
    const SetFunction mo = standardize(m, StandardizationKind::Orthogonal);
    for (const auto& [d, e] : all_minor_pairs(n)) {
      c[0].test([&] { return is_supermodular(minor(m, d, e)); },
                [&] { return show(m) + " minor D=" + m.vars().key(d) + " E=" + m.vars().key(e); });
    }
    for (const auto& keep : nonempty_subsets(n)) {
      const auto where = [&] { return show(m) + " keep " + m.vars().key(keep); };
      c[1].test([&] { return is_supermodular(mean_minor(m, keep)); }, where);
      c[3].test([&] { return is_supermodular(max_minor(m, keep)); }, where);
      c[4].test([&] { return is_standardized(deletion(ml, m.vars().full() - keep), StandardizationKind::Lower); },
                where);
      c[5].test([&] { return is_standardized(extraction(mu, m.vars().full() - keep), StandardizationKind::Upper); },
                where);
      c[6].test([&] { return is_standardized(mean_minor(mo, keep), StandardizationKind::Orthogonal); }, where);
    }
    for (const auto& sigma : all_coarsenings(m.vars())) {
      c[2].test([&] { return is_supermodular(coarsen(m, sigma)); },
                [&] { return show(m) + " coarsened onto " + std::to_string(sigma.target().size()) + " variables"; });
    }
  }));

  // Preservation of extremality fails for these projections.
  const VariableSet abc = VariableSet::letters(3);
  const VariableSet abcd = VariableSet::letters(4);
  const SetFunction m_star = from_deltas(abcd, {{"abcd", 2}, {"abc", 1}, {"abd", 1}, {"acd", 1}});
  const SetFunction r_star =
      from_deltas(abcd, {{"abcd", 3}, {"abc", 2}, {"abd", 2}, {"acd", 2}, {"bcd", 1}, {"ab", 1}, {"ac", 1}, {"ad", 1}});
  const SetFunction minor_image = from_deltas(abc, {{"abc", 2}, {"ab", 1}, {"ac", 1}});
  const SubsetMask only_d = abcd.parse_compact("d");
  Check c("P3 extremality counterexamples reproduce");
  c.test([&] { return extreme(m_star) && extreme(r_star); }, [] { return std::string("m_*, r_* extreme"); });
  c.test([&] {
    const SetFunction t = extraction(m_star, only_d);
    return t == minor_image && !extreme(t);
  }, [&] { return "extraction of d from m_*: " + show(extraction(m_star, only_d)); });
  c.test([&] {
    const SetFunction t = deletion(r_star, only_d);
    return t == minor_image && !extreme(t);
  }, [&] { return "deletion of d from r_*: " + show(deletion(r_star, only_d)); });
  c.test([&] {
    const SetFunction t = contract(m_star, abcd.parse_compact("cd"), "c");
    return t == from_deltas(abc, {{"abc", 2}, {"ac", 1}}) && !extreme(t);
  }, [&] { return "contraction of cd in m_*: " + show(contract(m_star, abcd.parse_compact("cd"), "c")); });
  c.test([&] {
    const SetFunction t = max_minor(m_star, abcd.parse_compact("abc"));
    return t == minor_image && !extreme(t);
  }, [&] { return "max-minor of m_*: " + show(max_minor(m_star, abcd.parse_compact("abc"))); });
  add(report, c);
}

void check_monotonization(const Pool& p, SuiteReport& report) {
  Check mono("monotonizations are supermodular and monotone");
  for (const auto& m : concat(p.catalogue, p.random_small, p.random_big)) {
    mono.test([&] {
      const SetFunction up = monotonize_max_sub(m);
      const SetFunction down = monotonize_max_sup(m);
      return is_supermodular(up) && up.is_nondecreasing() && is_supermodular(down) && down.is_nonincreasing();
    }, [&] { return show(m); });
  }
  add(report, mono);

  const VariableSet abc = VariableSet::letters(3);
  const SetFunction m0 = from_deltas(abc, {{"abc", 2}, {"ab", 1}, {"ac", 1}, {"bc", 1}});
  const auto up = [&](const char* x) { return superset_indicator(abc, abc.parse_compact(x)); };
  const SetFunction m1 = m0 - (up("a") + up("b")) * Rational(1, 2);
  const SetFunction m2 = m0 - up("c");
  const SetFunction m3 = m0 - (up("a") + up("b") + up("c")) * Rational(2, 3);
  Check c("monotonization and multiplication counterexamples reproduce");
  c.test([&] {
    const SetFunction t = monotonize_max_sub(m1);
    return quantitatively_equivalent(m0, m1) && extreme(m1) &&
           t == from_deltas(abc, {{"abc", 1}, {"ac", Rational(1, 2)}, {"bc", Rational(1, 2)}}) && !extreme(t);
  }, [&] { return "max-sub monotonization of m_1: " + show(monotonize_max_sub(m1)); });
  c.test([&] {
    const SetFunction t = monotonize_max_sub(m2);
    return t == from_deltas(abc, {{"abc", 1}, {"ab", 1}}) && extreme(t);
  }, [&] { return "max-sub monotonization of m_2: " + show(monotonize_max_sub(m2)); });
  c.test([&] { return monotonize_max_sub(m3).is_zero(); },
         [&] { return "max-sub monotonization of m_3: " + show(monotonize_max_sub(m3)); });
  c.test([&] {
    const SetFunction sq = pointwise_multiply(m0, m0);
    return extreme(m0) && sq == from_deltas(abc, {{"abc", 4}, {"ab", 1}, {"ac", 1}, {"bc", 1}}) && !extreme(sq);
  }, [&] { return "m_0·m_0: " + show(pointwise_multiply(m0, m0)); });
  add(report, c);
}

void check_modular_extensions(const Pool& p, SuiteReport& report) {
  std::vector<SetFunction> inputs = concat(p.catalogue, p.random_small, p.arbitrary_small, p.arbitrary_big);
  inputs.insert(inputs.end(), p.random_big.begin(),
                p.random_big.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(p.random_big.size(), 40)));
  add(report, fan_out({"P4 lower modular extension preserves verdicts both ways",
                       "P4 upper modular extension preserves verdicts both ways",
                       "P4 extraction undoes lower modular extension",
                       "P4 deletion undoes upper modular extension", "P4 reflection duality"},
                      inputs.size(), [&](std::size_t i, std::vector<Check>& c) {
    const SetFunction& r = inputs[i];
    const bool sup = is_supermodular(r);
    const bool ext = extreme(r);
    for (int k = 1; k <= (r.n() == p.small.size() ? 2 : 1); ++k) {
      const VariableSet target = extend(r.vars(), k);
      const SubsetMask fresh = target.full() - r.vars().image_in(target);
      const SetFunction lo = lower_modular_extension(r, target);
      const SetFunction up = upper_modular_extension(r, target);
      const auto where = [&] { return show(r) + " into " + std::to_string(target.size()) + " variables"; };
      c[0].test([&] { return is_supermodular(lo) == sup && extreme(lo) == ext; }, where);
      c[1].test([&] { return is_supermodular(up) == sup && extreme(up) == ext; }, where);
      c[2].test([&] { return extraction(lo, fresh) == r; }, where);
      c[3].test([&] { return deletion(up, fresh) == r; }, where);
      c[4].test([&] { return reflect(up) == lower_modular_extension(reflect(r), target); }, where);
    }
  }));
}

struct ReplicaTarget {
  std::string z;
  VariableSet target;
  bool two_replicas;
};

std::vector<ReplicaTarget> replica_targets(const VariableSet& vars) {
  std::vector<ReplicaTarget> out;
  for (int zi = 0; zi < vars.size(); ++zi) {
    const std::string& z = vars.label(zi);
    const VariableSet rest = vars.size() > 1 ? vars.subset(vars.full().without(zi)) : vars;
    auto fresh = fresh_labels(vars, 2);
    out.push_back({z, extend(vars, {fresh[0]}), true});
    if (vars.size() > 1) {
      out.push_back({z, extend(rest, fresh), true});
      out.push_back({z, extend(vars, fresh), false});
    }
  }
  return out;
}

void check_replications(const Pool& p, Rng& rng, SuiteReport& report) {
  std::vector<SetFunction> lower_inputs = p.catalogue;
  for (const auto& m : p.random_small) lower_inputs.push_back(standardize(m, StandardizationKind::Lower));
  for (std::size_t i = 0; i < p.random_small.size(); ++i) {
    lower_inputs.push_back(random_lower_supermodular(catalogue(p.small.size()), rng));
  }

  // Extreme r with a modular part; half the time the relevant slice is made flat.
  std::vector<std::pair<SetFunction, std::string>> shifted_extreme_inputs;
  for (const auto& g : p.catalogue) {
    for (const auto& z : p.small.labels()) {
      for (int variant = 0; variant < 4; ++variant) {
        SetFunction r = g * random_positive(rng) + random_modular(p.small, rng);
        const SubsetMask zm = p.small.parse_mask(z);
        if (variant % 2 == 0) r -= superset_indicator(p.small, zm) * (r[zm] - r[SubsetMask{}]);
        shifted_extreme_inputs.emplace_back(std::move(r), z);
      }
    }
  }
  std::vector<SetFunction> criterion_inputs = concat(p.random_small, p.arbitrary_small);
  for (const auto& [r, z] : shifted_extreme_inputs) criterion_inputs.push_back(r);
  for (std::size_t i = 0; i < p.random_small.size() / 4 + 1; ++i) criterion_inputs.push_back(random_modular(p.small, rng));

  add(report, fan_out({"P5 lower replication of ℓ-standardized r preserves extremality both ways",
                       "P5 upper replication of u-standardized r preserves extremality both ways",
                       "P5 replications stay in K_ℓ / K_u"},
                      lower_inputs.size(), [&](std::size_t i, std::vector<Check>& c) {
    const SetFunction& r = lower_inputs[i];
    const SetFunction ru = standardize(r, StandardizationKind::Upper);
    const bool ext = extreme(r);
    for (const auto& rt : replica_targets(r.vars())) {
      const auto where = [&] { return show(r) + " z=" + rt.z + " into " + std::to_string(rt.target.size()); };
      const SetFunction lo = lower_replication(r, rt.z, rt.target);
      const SetFunction up = upper_replication(ru, rt.z, rt.target);
      c[0].test([&] { return extreme(lo) == ext; }, where);
      c[1].test([&] { return extreme(up) == ext; }, where);
      c[2].test([&] {
        return is_supermodular(lo) && is_standardized(lo, StandardizationKind::Lower) && is_supermodular(up) &&
               is_standardized(up, StandardizationKind::Upper);
      }, where);
    }
  }));

  add(report, fan_out({"P5 lower replication supermodularity criterion", "P5 upper replication supermodularity criterion",
                       "P5 replication reflection duality", "P5 lower replication extremality characterization",
                       "P5 upper replication extremality characterization"},
                      criterion_inputs.size(), [&](std::size_t i, std::vector<Check>& c) {
    const SetFunction& r = criterion_inputs[i];
    const bool sup = is_supermodular(r);
    const bool ext = extreme(r);
    const bool mod = is_modular(r);
    for (const auto& rt : replica_targets(r.vars())) {
      if (!rt.two_replicas) continue;
      const SubsetMask zm = r.vars().parse_mask(rt.z);
      const SubsetMask lm = r.vars().full() - zm;
      const Rational lower_gap = r[zm] - r[SubsetMask{}];
      const Rational upper_gap = r[lm] - r[r.vars().full()];
      const SetFunction lo = lower_replication(r, rt.z, rt.target);
      const SetFunction up = upper_replication(r, rt.z, rt.target);
      const auto where = [&] { return show(r) + " z=" + rt.z + " into " + std::to_string(rt.target.size()); };
      c[0].test([&] { return is_supermodular(lo) == (sup && lower_gap.sign() >= 0); }, where);
      c[1].test([&] { return is_supermodular(up) == (sup && upper_gap.sign() >= 0); }, where);
      c[2].test([&] { return reflect(up) == lower_replication(reflect(r), rt.z, rt.target); }, where);
      if (sup && lower_gap.sign() >= 0) {
        c[3].test([&] {
          return extreme(lo) == ((ext && lower_gap.is_zero()) || (mod && lower_gap.sign() > 0));
        }, where);
      }
      if (sup && upper_gap.sign() >= 0) {
        c[4].test([&] {
          return extreme(up) == ((ext && upper_gap.is_zero()) || (mod && upper_gap.sign() > 0));
        }, where);
      }
    }
  }));

  Check cor("P5 lower replication of extreme r is extreme iff r(z) = r(∅)");
  for (const auto& [r, z] : shifted_extreme_inputs) {
    const SubsetMask zm = r.vars().parse_mask(z);
    const VariableSet target = extend(r.vars(), 1);
    cor.test([&] { return extreme(lower_replication(r, z, target)) == (r[zm] == r[SubsetMask{}]); },
             [&] { return show(r) + " z=" + z; });
  }
  add(report, cor);
}

void check_products(const Pool& p, Rng& rng, SuiteReport& report) {
  // Splits of the big variable set into two non-empty blocks R | L.
  const VariableSet& big = p.big;
  const int n = big.size();
  Check ext("P6 product of ℓ-standardized factors is extreme iff both factors are");
  Check kup("P6 products stay non-negative, non-decreasing and supermodular");
  Check lifted("P6 product with the constant one is lifting");
  for (std::uint32_t rbits = 1; rbits + 1 < (1u << n); ++rbits) {
    const SubsetMask rm(rbits);
    const VariableSet rv = big.subset(rm);
    const VariableSet lv = big.subset(big.full() - rm);
    // Factor candidates with their extremality in K↑: K_ℓ generators and
    // combinations, or m^{x⊆} for a single variable.
    const auto factors = [&](const VariableSet& v) {
      std::vector<std::pair<SetFunction, bool>> out;
      if (v.size() == 1) {
        out.emplace_back(superset_indicator(v, v.full()), true);
      } else if (v.size() <= 4) {
        for (const auto& g : catalogue(v.size()).generators) out.emplace_back(onto(g, v), true);
        for (int k = 0; k < 4; ++k) {
          SetFunction m = onto(random_lower_supermodular(catalogue(v.size()), rng, 3), v);
          out.emplace_back(m, extreme(m));
        }
      }
      return out;
    };
    const auto fr = factors(rv);
    const auto fl = factors(lv);
    for (const auto& [r, r_ext] : fr) {
      for (const auto& [l, l_ext] : fl) {
        const auto where = [&] { return show(r) + " × " + show(l); };
        const SetFunction prod = product_compose(r, l);
        ext.test([&] { return extreme(prod) == (r_ext && l_ext); }, where);
        kup.test([&] { return is_supermodular(prod) && prod.is_nonnegative() && prod.is_nondecreasing(); }, where);
      }
      lifted.test([&] { return product_compose(r, constant(lv, 1)) == lift(r, big); }, [&] { return show(r); });
    }
  }
  // Non-negative non-decreasing supermodular factors with modular parts.
  for (std::size_t i = 0; i < p.random_small.size(); ++i) {
    const VariableSet rv = p.small;
    const VariableSet lv = VariableSet(fresh_labels(rv, 1));
    SetFunction r = random_lower_supermodular(catalogue(rv.size()), rng);
    r += modular_function(rv, random_positive(rng),
                          std::vector<Rational>(static_cast<std::size_t>(rv.size()), Rational(1, 2)));
    SetFunction l = modular_function(lv, Rational(1), {random_positive(rng)});
    kup.test([&] {
      const SetFunction prod = product_compose(r, l);
      return is_supermodular(prod) && prod.is_nonnegative() && prod.is_nondecreasing();
    }, [&] { return show(r) + " × " + show(l); });
  }
  add(report, ext);
  add(report, kup);
  add(report, lifted);
}

void check_approx_compatibility(const Pool& p, Rng& rng, SuiteReport& report) {
  Check lin("linear transforms respect ≈");
  const auto inputs = concat(p.catalogue, p.random_small, p.arbitrary_small);
  for (const auto& m : inputs) {
    const SetFunction r = m + random_modular(m.vars(), rng);
    const VariableSet target = extend(m.vars(), 1);
    const SetFunction pairs[][2] = {
        {permute(m, all_permutations(m.n()).back()), permute(r, all_permutations(m.n()).back())},
        {reflect(m), reflect(r)},
        {lift(m, target), lift(r, target)},
        {minor(m, singleton(0), singleton(1)), minor(r, singleton(0), singleton(1))},
        {mean_minor(m, m.vars().full().without(0)), mean_minor(r, m.vars().full().without(0))},
        {contract(m, SubsetMask(3), m.vars().label(0)), contract(r, SubsetMask(3), m.vars().label(0))},
        {lower_modular_extension(m, target), lower_modular_extension(r, target)},
        {upper_modular_extension(m, target), upper_modular_extension(r, target)},
    };
    for (const auto& pr : pairs) {
      lin.test([&] { return quantitatively_equivalent(pr[0], pr[1]); }, [&] { return show(m); });
    }
  }
  add(report, lin);

  const VariableSet abc = VariableSet::letters(3);
  const SetFunction m0 = from_deltas(abc, {{"abc", 2}, {"ab", 1}, {"ac", 1}, {"bc", 1}});
  const SetFunction shifted = m0 - superset_indicator(abc, abc.parse_compact("c"));
  const SubsetMask ab = abc.parse_compact("ab");
  Check c("max-minor and monotonization break ≈");
  c.test([&] {
    return quantitatively_equivalent(m0, shifted) &&
           max_minor(m0, ab) == from_deltas(abc.subset(ab), {{"ab", 2}, {"a", 1}, {"b", 1}}) &&
           max_minor(shifted, ab) == from_deltas(abc.subset(ab), {{"ab", 1}}) &&
           !quantitatively_equivalent(max_minor(m0, ab), max_minor(shifted, ab));
  }, [&] { return "max-minor of m_0 and m_0 - m^{c⊆}"; });
  c.test([&] {
    const SetFunction m1 = m0 - (superset_indicator(abc, abc.parse_compact("a")) +
                                 superset_indicator(abc, abc.parse_compact("b"))) * Rational(1, 2);
    return !quantitatively_equivalent(monotonize_max_sub(m0), monotonize_max_sub(m1));
  }, [&] { return "max-sub monotonizations of m_0 and m_1"; });
  add(report, c);
}

// ---------------------------------------------------------------- models

std::vector<TransformSpec> model_specs(const VariableSet& vars) {
  std::vector<TransformSpec> out;
  const int n = vars.size();
  for (const auto& pi : all_permutations(n)) out.emplace_back(op::Permute{pi});
  out.emplace_back(op::Reflect{});
  const VariableSet one_more = extend(vars, 1);
  out.emplace_back(op::Lift{one_more});
  out.emplace_back(op::Lift{extend(vars, 2)});
  for (const auto& [d, e] : all_minor_pairs(n)) out.emplace_back(op::Minor{d, e});
  for (const auto& keep : nonempty_subsets(n)) out.emplace_back(op::MeanMinor{keep});
  for (const auto& sigma : all_coarsenings(vars)) out.emplace_back(op::Coarsen{sigma});
  out.emplace_back(op::LowerModular{one_more});
  out.emplace_back(op::UpperModular{one_more});
  for (const auto& rt : replica_targets(vars)) {
    if (!rt.two_replicas) continue;
    out.emplace_back(op::LowerReplication{rt.z, rt.target});
    out.emplace_back(op::UpperReplication{rt.z, rt.target});
  }
  return out;
}

// ---------------------------------------------------------------- equivalence

// Face inclusion F(m1) ⊆ F(m2) decided geometrically: m1 lies in the smallest
// face of m2 iff m2 + ε(m2 − m1) stays in the cone for some ε > 0. ε is read
// off the facet products and the candidate is confirmed by brute force.
bool face_includes(const SetFunction& m2, const SetFunction& m1) {
  const ScalarTable s1 = scalar_table(m1);
  const ScalarTable s2 = scalar_table(m2);
  Rational eps(1);
  for (std::size_t i = 0; i < s1.entries.size(); ++i) {
    const Rational& a = s1.entries[i];
    const Rational& b = s2.entries[i];
    if (b.is_zero() && !a.is_zero()) return false;
    if (a > b && b.sign() > 0) eps = std::min(eps, b / ((a - b) * Rational(2)));
  }
  return is_supermodular_bruteforce(m2 + (m2 - m1) * eps);
}

bool proportional_positive(const SetFunction& a, const SetFunction& b) {
  std::optional<Rational> alpha;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& x = a.values()[i];
    const Rational& y = b.values()[i];
    if (x.is_zero() != y.is_zero()) return false;
    if (x.is_zero()) continue;
    const Rational q = y / x;
    if (!alpha) alpha = q;
    if (q != *alpha) return false;
  }
  return alpha && alpha->sign() > 0;
}

struct Profiled {
  SetFunction m;
  std::set<std::size_t> tight;  // canonical triplet indices
  SubsetMask support;
  SetFunction lower;
  bool extreme = false;
};

}  // namespace

// ---------------------------------------------------------------- public API

bool SuiteReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed();
    e["cases"] = c.cases;
    e["failures"] = c.failures;
    e["counterexamples"] = c.counterexamples;
    doc["checks"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
    if (c.failures > 0) os << ", " << c.failures << " failures";
    os << ")\n";
    for (const auto& ex : c.counterexamples) os << "    " << ex << '\n';
  }
  os << suite << ": " << (passed() ? "all checks passed" : "FAILED") << '\n';
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"preservation", "models", "oracle", "equivalence", "standardization"};
  return names;
}

SuiteReport run_suite(const std::string& name, const Options& options) {
  if (name == "preservation") return preservation_suite(options);
  if (name == "models") return models_suite(options);
  if (name == "oracle") return oracle_suite(options);
  if (name == "equivalence") return equivalence_suite(options);
  if (name == "standardization") return standardization_suite(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

Rational random_rational(Rng& rng, int max_abs_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den(1, std::max(1, max_den));
  return Rational(num(rng), den(rng));
}

SetFunction random_function(const VariableSet& vars, Rng& rng, int range) {
  SetFunction m(vars);
  for (std::uint32_t s = 0; s < vars.power_size(); ++s) m[SubsetMask(s)] = random_rational(rng, range, 2);
  return m;
}

SetFunction random_modular(const VariableSet& vars, Rng& rng) {
  std::vector<Rational> rho;
  for (int i = 0; i < vars.size(); ++i) rho.push_back(random_rational(rng, 3, 2));
  return modular_function(vars, random_rational(rng, 3, 2), rho);
}

SetFunction random_lower_supermodular(const RayCatalogue& cat, Rng& rng, int max_terms) {
  if (cat.generators.empty()) throw std::invalid_argument("random_lower_supermodular: empty catalogue");
  std::uniform_int_distribution<int> terms(1, std::max(1, max_terms));
  std::uniform_int_distribution<std::size_t> pick(0, cat.generators.size() - 1);
  std::uniform_int_distribution<int> num(1, 4);
  std::uniform_int_distribution<int> den(1, 2);
  SetFunction m(cat.generators.front().vars());
  for (int k = terms(rng); k > 0; --k) m += cat.generators[pick(rng)] * Rational(num(rng), den(rng));
  return m;
}

SetFunction random_supermodular(const RayCatalogue& cat, Rng& rng, int max_terms) {
  SetFunction m = random_lower_supermodular(cat, rng, max_terms);
  return m + random_modular(m.vars(), rng);
}

const RayCatalogue& catalogue(int n) {
  static std::mutex mu;
  static std::map<int, RayCatalogue> memo;
  const std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, enumerate_extreme_rays(n)).first;
  return it->second;
}

SuiteReport preservation_suite(const Options& options) {
  SuiteReport report{"preservation", {}};
  const Pool pool = make_pool(options);
  Rng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  check_self_maps(pool, report);
  check_lifting(pool, report);
  check_projections(pool, report);
  check_monotonization(pool, report);
  check_modular_extensions(pool, report);
  check_replications(pool, rng, report);
  check_products(pool, rng, report);
  check_approx_compatibility(pool, rng, report);
  return report;
}

SuiteReport models_suite(const Options& options) {
  if (options.n < 2 || options.n > 4) throw std::invalid_argument("verify: n must be between 2 and 4");
  SuiteReport report{"models", {}};
  Rng rng(options.seed);
  const VariableSet small = VariableSet::letters(options.n);
  const VariableSet big = VariableSet::letters(options.n + 1);

  struct Case {
    SetFunction m;
    const std::vector<TransformSpec>* specs;
  };
  const auto small_specs = model_specs(small);
  const auto big_specs = model_specs(big);
  std::vector<Case> cases;
  for (const auto& g : catalogue(options.n).generators) cases.push_back({g, &small_specs});
  for (std::size_t i = 0; i < options.random_count; ++i) cases.push_back({random_supermodular_over(big, rng), &big_specs});

  add(report, fan_out({"predicted model equals induced model", "formulas reject non-supermodular bases"},
                      cases.size(), [&](std::size_t i, std::vector<Check>& c) {
    const Case& cs = cases[i];
    for (const auto& spec : *cs.specs) {
      c[0].test([&] { return predict_model(spec, cs.m) == as_model(apply_transform(cs.m, spec)); },
                [&] {
                  return transform_name(spec) + " of " + show(cs.m) + ": " +
                         model_diff(predict_model(spec, cs.m), as_model(apply_transform(cs.m, spec)));
                });
    }
    // A non-supermodular base is rejected rather than mispredicted.
    const SetFunction bad = cs.m - delta(cs.m.vars(), cs.m.vars().full()) * Rational(1000);
    c[1].test([&] {
      try {
        (void)predict_model(op::Reflect{}, bad);
      } catch (const std::domain_error&) {
        return true;
      }
      return false;
    }, [&] { return show(bad); });
  }));
  return report;
}

SuiteReport oracle_suite(const Options& options) {
  if (options.n < 2 || options.n > 4) throw std::invalid_argument("verify: n must be between 2 and 4");
  SuiteReport report{"oracle", {}};
  Check agree("double description equals brute force");
  for (int k = 2; k <= options.n; ++k) {
    agree.test([&] {
      const RayCatalogue dd = enumerate_extreme_rays(k);
      const RayCatalogue bf = enumerate_bruteforce(k);
      return dd.generators == bf.generators;
    }, [&] {
      return "n=" + std::to_string(k) + ": " + std::to_string(enumerate_extreme_rays(k).generators.size()) +
             " vs " + std::to_string(enumerate_bruteforce(k).generators.size()) + " generators";
    });
  }
  add(report, agree);

  RayCatalogue cat = catalogue(options.n);
  if (options.inject_corruption) {
    // A sum of two generators is a minimal integral non-extreme element.
    SetFunction planted = cat.generators.front() + cat.generators.back();
    cat.generators.push_back(integral_representative(planted));
    std::sort(cat.generators.begin(), cat.generators.end(),
              [](const SetFunction& a, const SetFunction& b) { return a.compare_values(b) < 0; });
    cat = classify_orbits(std::move(cat));
  }
  const CatalogueReport verdict = verify_catalogue(cat);
  for (const auto& c : verdict.checks) {
    CheckResult r;
    r.name = "catalogue n=" + std::to_string(cat.n) + ": " + c.name;
    r.cases = cat.generators.size();
    r.failures = c.failures.size();
    if (!c.passed && r.failures == 0) r.failures = 1;
    for (std::size_t i = 0; i < c.failures.size() && i < kMaxExamples; ++i) r.counterexamples.push_back(c.failures[i]);
    report.checks.push_back(std::move(r));
  }

  Check orbit("orbits partition the catalogue");
  orbit.test([&] {
    std::vector<std::size_t> all;
    for (const auto& o : cat.orbits) all.insert(all.end(), o.members.begin(), o.members.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] != i) return false;
    }
    return all.size() == cat.generators.size();
  }, [] { return std::string("orbit members do not cover the generators exactly once"); });
  add(report, orbit);
  return report;
}

SuiteReport equivalence_suite(const Options& options) {
  if (options.n < 2 || options.n > 4) throw std::invalid_argument("verify: n must be between 2 and 4");
  SuiteReport report{"equivalence", {}};
  Rng rng(options.seed);
  const RayCatalogue& cat = catalogue(options.n);
  const VariableSet vars = VariableSet::letters(options.n);

  std::vector<SetFunction> inputs = cat.generators;
  std::vector<std::pair<SetFunction, SetFunction>> twins;  // same generators, other weights
  const std::size_t combos = std::max<std::size_t>(options.random_count / 4, 4);
  std::uniform_int_distribution<std::size_t> pick(0, cat.generators.size() - 1);
  for (std::size_t i = 0; i < combos; ++i) {
    const SetFunction c = random_lower_supermodular(cat, rng);
    inputs.push_back(c);
    inputs.push_back(c * Rational(2, 3) + random_modular(vars, rng));
    if (cat.generators.size() >= 2) {
      const std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      if (a == b) b = (a + 1) % cat.generators.size();
      const SetFunction x = cat.generators[a] + cat.generators[b];
      const SetFunction y = cat.generators[a] + cat.generators[b] * Rational(2) + random_modular(vars, rng);
      inputs.push_back(x);
      inputs.push_back(y);
      twins.emplace_back(x, y);
    }
  }
  inputs.push_back(random_modular(vars, rng));

  std::vector<Profiled> prof;
  for (const auto& m : inputs) {
    Profiled p{m, {}, support(m), standardize(m, StandardizationKind::Lower), extreme(m)};
    for (const auto& t : face_of(m).tight) p.tight.insert(triplet_index(vars.size(), t));
    prof.push_back(std::move(p));
  }

  Check obs1("face inclusion iff reverse model inclusion");
  Check cor1("qualitative equivalence iff equal tight sets");
  Check geo("qualitative equivalence iff equal faces");
  Check supp("qualitatively equivalent functions share their support");
  Check quant("quantitative equivalence implies qualitative equivalence");
  Check cryptic("extreme m: m ∼ r iff r_ℓ is a positive multiple of m_ℓ");
  Check dim("adding a supermodular function never lowers the face dimension");
  for (const auto& p1 : prof) {
    for (const auto& p2 : prof) {
      const auto where = [&] { return show(p1.m) + " vs " + show(p2.m); };
      const bool models_rev = independency_model(p1.m).includes(independency_model(p2.m));
      obs1.test([&] { return face_includes(p2.m, p1.m) == models_rev; }, where);
      const bool q = qualitatively_equivalent(p1.m, p2.m);
      cor1.test([&] { return q == (p1.tight == p2.tight); }, where);
      geo.test([&] { return q == (face_includes(p1.m, p2.m) && face_includes(p2.m, p1.m)); }, where);
      if (q) supp.test([&] { return p1.support == p2.support; }, where);
      if (quantitatively_equivalent(p1.m, p2.m)) quant.test([&] { return q; }, where);
      if (p1.extreme) cryptic.test([&] { return q == proportional_positive(p1.lower, p2.lower); }, where);
      dim.test([&] {
        return face_of(p1.m + p2.m).dimension >= std::max(face_of(p1.m).dimension, face_of(p2.m).dimension);
      }, where);
    }
  }
  // Non-extreme side: a different positive combination of the same two
  // generators is qualitatively equivalent without being proportional.
  for (const auto& [x, y] : twins) {
    cryptic.test([&] {
      return !extreme(x) && qualitatively_equivalent(x, y) &&
             !proportional_positive(standardize(x, StandardizationKind::Lower),
                                    standardize(y, StandardizationKind::Lower));
    }, [&] { return show(x) + " vs " + show(y); });
  }
  for (auto* c : {&obs1, &cor1, &geo, &supp, &quant, &cryptic, &dim}) add(report, *c);

  std::set<std::vector<Rational>> rays;
  for (const auto& g : cat.generators) rays.insert(g.values());
  Check ray("extremality iff the minimal integral representative is a catalogue ray");
  for (const auto& p : prof) {
    if (is_modular(p.m)) continue;
    ray.test([&] { return p.extreme == (rays.count(integral_representative(p.m).values()) == 1); },
             [&] { return show(p.m); });
  }
  add(report, ray);
  return report;
}

SuiteReport standardization_suite(const Options& options) {
  if (options.n < 2 || options.n > 4) throw std::invalid_argument("verify: n must be between 2 and 4");
  SuiteReport report{"standardization", {}};
  Rng rng(options.seed);
  using K = StandardizationKind;
  constexpr K kinds[] = {K::Lower, K::Upper, K::Orthogonal, K::Polymatroidal, K::Weird};
  const VariableSet small = VariableSet::letters(options.n);
  const VariableSet big = VariableSet::letters(options.n + 1);

  std::vector<SetFunction> arbitrary;
  std::vector<SetFunction> supermodular;
  const std::size_t count = std::max<std::size_t>(options.random_count / 2, 4);
  for (std::size_t i = 0; i < count; ++i) {
    arbitrary.push_back(random_function(i % 2 ? big : small, rng));
    supermodular.push_back(random_supermodular_over(i % 2 ? big : small, rng));
  }
  const auto everything = concat(arbitrary, supermodular, catalogue(options.n).generators);

  Check idem("standardization is idempotent");
  Check sat("standardization satisfies its defining constraints");
  Check cls("standardization stays in the ≈-class");
  Check inv("standardization is constant on ≈-classes");
  Check gen("closed forms agree with the generic solver");
  Check mixed("standardizing a representative of another kind");
  Check refl("reflection swaps ℓ and u");
  Check lifts("lifting commutes with ℓ, u and o");
  Check orth("o-standardization is orthogonal to the modular space");
  for (const auto& m : everything) {
    const auto where = [&] { return show(m); };
    const SetFunction shifted = m + random_modular(m.vars(), rng);
    for (const K k : kinds) {
      const SetFunction s = standardize(m, k);
      const auto kwhere = [&] { return std::string(kind_name(k)) + " of " + show(m); };
      idem.test([&] { return standardize(s, k) == s; }, kwhere);
      sat.test([&] { return is_standardized(s, k); }, kwhere);
      cls.test([&] { return is_modular(m - s) && quantitatively_equivalent(m, s); }, kwhere);
      inv.test([&] { return standardize(shifted, k) == s; }, kwhere);
      gen.test([&] { return standardize_generic(m, k) == s; }, kwhere);
      for (const K k2 : kinds) mixed.test([&] { return standardize(s, k2) == standardize(m, k2); }, kwhere);
    }
    refl.test([&] {
      return standardize(reflect(m), K::Upper) == reflect(standardize(m, K::Lower)) &&
             standardize(reflect(m), K::Lower) == reflect(standardize(m, K::Upper));
    }, where);
    const VariableSet target = extend(m.vars(), 1);
    for (const K k : {K::Lower, K::Upper, K::Orthogonal}) {
      lifts.test([&] { return standardize(lift(m, target), k) == lift(standardize(m, k), target); },
                 [&] { return std::string(kind_name(k)) + " of " + show(m); });
    }
    orth.test([&] {
      const SetFunction o = standardize(m, K::Orthogonal);
      if (!inner_product(o, constant(m.vars(), 1)).is_zero()) return false;
      for (int i = 0; i < m.n(); ++i) {
        if (!inner_product(o, superset_indicator(m.vars(), singleton(i))).is_zero()) return false;
      }
      return true;
    }, where);
  }
  for (auto* c : {&idem, &sat, &cls, &inv, &gen, &mixed, &refl, &lifts, &orth}) add(report, *c);

  Check mono("ℓ is non-decreasing, u non-increasing, both non-negative on supermodular inputs");
  Check carr("ℓ, u and o representatives share their carrier");
  for (const auto& m : concat(supermodular, catalogue(options.n).generators)) {
    mono.test([&] {
      const SetFunction l = standardize(m, K::Lower);
      const SetFunction u = standardize(m, K::Upper);
      return l.is_nondecreasing() && l.is_nonnegative() && u.is_nonincreasing() && u.is_nonnegative();
    }, [&] { return show(m); });
    carr.test([&] {
      const SubsetMask c = carrier(standardize(m, K::Lower));
      return carrier(standardize(m, K::Upper)) == c && carrier(standardize(m, K::Orthogonal)) == c &&
             support(m) == c;
    }, [&] { return show(m); });
  }
  add(report, mono);
  add(report, carr);

  Check integral("ℓ-integral catalogue rays have integral u-forms");
  for (const auto& g : catalogue(options.n).generators) {
    integral.test([&] { return g.is_integral() && standardize(g, K::Upper).is_integral(); }, [&] { return show(g); });
  }
  add(report, integral);

  const VariableSet abc = VariableSet::letters(3);
  const VariableSet ab = VariableSet::letters(2);
  Check weird("weird standardization does not commute with lifting");
  weird.test([&] {
    const SetFunction rw = standardize(from_deltas(ab, {{"ab", 1}}), K::Weird);
    const SetFunction lifted_w = standardize(lift(from_deltas(ab, {{"ab", 1}}), abc), K::Weird);
    const SetFunction want_rw =
        from_deltas(ab, {{"ab", Rational(1, 3)}, {"a", Rational(-1, 3)}, {"b", Rational(-1, 3)}});
    const SetFunction want_lifted =
        from_deltas(abc, {{"abc", Rational(1, 4)}, {"ab", Rational(1, 2)}, {"ac", Rational(-1, 2)},
                          {"bc", Rational(-1, 2)}, {"a", Rational(-1, 4)}, {"b", Rational(-1, 4)},
                          {"c", Rational(-1, 4)}});
    return rw == want_rw && lifted_w == want_lifted && !(lift(rw, abc) == lifted_w);
  }, [&] {
    return "got " + show(standardize(from_deltas(ab, {{"ab", 1}}), K::Weird)) + " and " +
           show(standardize(lift(from_deltas(ab, {{"ab", 1}}), abc), K::Weird));
  });
  add(report, weird);
  return report;
}

}  // namespace supermod::verify
