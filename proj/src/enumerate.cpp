#include "supermod/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "supermod/cone.hpp"
#include "supermod/kernels/bits.hpp"
#include "supermod/linalg.hpp"
#include "supermod/standardize.hpp"
#include "supermod/transforms.hpp"

namespace supermod {

unsigned default_thread_count() {
  if (const char* env = std::getenv("SMK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<SubsetMask> lower_coordinates(int n) {
  std::vector<SubsetMask> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) >= 2) out.emplace_back(s);
  }
  return out;
}

namespace {

void check_range(int n, bool allow_large, int cap) {
  if (n < 2 || n > (allow_large ? 5 : cap)) {
    throw std::domain_error("enumeration supports 2 <= n <= " + std::to_string(allow_large ? 5 : cap) +
                            ", got " + std::to_string(n));
  }
}

// Facet normals in S_ℓ coordinates, one row per canonical triplet.
std::vector<std::vector<int>> facet_matrix(int n) {
  const auto coords = lower_coordinates(n);
  std::vector<int> pos(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < coords.size(); ++i) pos[coords[i].bits] = static_cast<int>(i);
  std::vector<std::vector<int>> rows;
  for (const auto& t : triplets(n)) {
    std::vector<int> row(coords.size(), 0);
    const SubsetMask ac = t.c.with(t.a);
    const SubsetMask bc = t.c.with(t.b);
    const auto add = [&](SubsetMask s, int v) {
      if (pos[s.bits] >= 0) row[static_cast<std::size_t>(pos[s.bits])] += v;
    };
    add(t.c, 1);
    add(ac | bc, 1);
    add(ac, -1);
    add(bc, -1);
    rows.push_back(std::move(row));
  }
  return rows;
}

SetFunction ray_to_function(int n, const std::vector<mpz_class>& ray) {
  const auto coords = lower_coordinates(n);
  SetFunction f(VariableSet::letters(n));
  for (std::size_t i = 0; i < coords.size(); ++i) f[coords[i]] = Rational(ray[i]);
  return f;
}

RayCatalogue finish(int n, std::vector<SetFunction> generators) {
  std::sort(generators.begin(), generators.end(),
            [](const SetFunction& a, const SetFunction& b) { return a.compare_values(b) < 0; });
  RayCatalogue cat;
  cat.n = n;
  cat.generators = std::move(generators);
  return classify_orbits(std::move(cat));
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// ---- Double description --------------------------------------------------------

struct RaySet {
  std::size_t words = 0;
  std::vector<std::vector<mpz_class>> rays;
  std::vector<std::uint64_t> incidence;  // rays.size() * words

  [[nodiscard]] std::span<const std::uint64_t> zeros(std::size_t r) const {
    return {incidence.data() + r * words, words};
  }
  void push(std::vector<mpz_class> ray, std::span<const std::uint64_t> z) {
    rays.push_back(std::move(ray));
    incidence.insert(incidence.end(), z.begin(), z.end());
  }
};

mpz_class dot(const std::vector<int>& a, const std::vector<mpz_class>& x) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 1) {
      s += x[i];
    } else if (a[i] == -1) {
      s -= x[i];
    } else if (a[i] != 0) {
      s += a[i] * x[i];
    }
  }
  return s;
}

}  // namespace

RayCatalogue enumerate_extreme_rays(int n, const EnumerationOptions& options) {
  check_range(n, options.allow_large, 4);
  const unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;
  const auto facets = facet_matrix(n);
  const std::size_t d = facets.front().size();
  const std::size_t f_count = facets.size();
  const std::size_t words = (f_count + 63) / 64;

  // Initial simplicial cone from the first d independent facets (canonical order).
  std::vector<std::size_t> chosen;
  linalg::IntMatrix basis;
  for (std::size_t i = 0; i < f_count && chosen.size() < d; ++i) {
    linalg::IntMatrix trial = basis;
    trial.emplace_back(facets[i].begin(), facets[i].end());
    if (linalg::rank(trial) > basis.size()) {
      basis = std::move(trial);
      chosen.push_back(i);
    }
  }
  if (chosen.size() != d) throw std::logic_error("facet normals do not span the coordinate space");
  linalg::RatMatrix b;
  for (std::size_t i : chosen) {
    std::vector<Rational> row;
    for (int v : facets[i]) row.emplace_back(v);
    b.push_back(std::move(row));
  }
  const auto inv = linalg::inverse(b);
  if (!inv) throw std::logic_error("initial facet matrix is singular");

  std::vector<bool> processed(f_count, false);
  for (std::size_t i : chosen) processed[i] = true;

  RaySet current;
  current.words = words;
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> col;
    for (std::size_t i = 0; i < d; ++i) col.push_back((*inv)[i][j]);
    std::vector<std::uint64_t> z(words, 0);
    for (std::size_t k = 0; k < d; ++k) {
      if (k != j) z[chosen[k] / 64] |= std::uint64_t{1} << (chosen[k] % 64);
    }
    current.push(linalg::primitive_integer(col), z);
  }

  for (std::size_t h = 0; h < f_count; ++h) {
    if (processed[h]) continue;
    processed[h] = true;
    const std::size_t count = current.rays.size();
    std::vector<mpz_class> value(count);
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t r = 0; r < count; ++r) {
      value[r] = dot(facets[h], current.rays[r]);
      const int s = sgn(value[r]);
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
    }

    // New rays from adjacent (+,-) pairs, collected per positive ray for determinism.
    std::vector<RaySet> fresh(pos.size());
    parallel_for(pos.size(), threads, [&](std::size_t pi) {
      const std::size_t p = pos[pi];
      RaySet& out = fresh[pi];
      out.words = words;
      std::vector<std::uint64_t> common(words);
      for (std::size_t q : neg) {
        const std::size_t shared = kernels::intersect(current.zeros(p), current.zeros(q), common);
        if (shared + 2 < d) continue;
        if (kernels::any_superset(current.incidence, words, common, p, q)) continue;
        std::vector<mpz_class> ray(d);
        for (std::size_t i = 0; i < d; ++i) {
          ray[i] = value[p] * current.rays[q][i] - value[q] * current.rays[p][i];
        }
        linalg::make_primitive(ray);
        common[h / 64] |= std::uint64_t{1} << (h % 64);
        out.push(std::move(ray), common);
        common[h / 64] &= ~(std::uint64_t{1} << (h % 64));
      }
    });

    RaySet next;
    next.words = words;
    for (std::size_t r = 0; r < count; ++r) {
      const int s = sgn(value[r]);
      if (s < 0) continue;
      std::vector<std::uint64_t> z(current.zeros(r).begin(), current.zeros(r).end());
      if (s == 0) z[h / 64] |= std::uint64_t{1} << (h % 64);
      next.push(std::move(current.rays[r]), z);
    }
    for (auto& part : fresh) {
      for (std::size_t r = 0; r < part.rays.size(); ++r) next.push(std::move(part.rays[r]), part.zeros(r));
    }
    current = std::move(next);
  }

  std::vector<SetFunction> generators;
  generators.reserve(current.rays.size());
  for (const auto& ray : current.rays) generators.push_back(ray_to_function(n, ray));
  return finish(n, std::move(generators));
}

// ---- Brute-force oracle ------------------------------------------------------------

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("brute-force oracle: int64 overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("brute-force oracle: int64 overflow");
  return r;
}

void normalize(std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Reduced row echelon basis over the integers: row i is zero in every other
// row's pivot column.
struct Echelon {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::size_t> pivots;

  // Returns false (and leaves the basis unchanged) if v is dependent.
  bool add(std::vector<std::int64_t> v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::int64_t c = v[pivots[i]];
      if (c == 0) continue;
      const std::int64_t p = rows[i][pivots[i]];
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = checked_sub(checked_mul(p, v[j]), checked_mul(c, rows[i][j]));
      }
      normalize(v);
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::int64_t c = rows[i][pivot];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        rows[i][j] = checked_sub(checked_mul(v[pivot], rows[i][j]), checked_mul(c, v[j]));
      }
      normalize(rows[i]);
    }
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
    return true;
  }

  // Generator of the one-dimensional kernel (rank must be width-1).
  [[nodiscard]] std::vector<std::int64_t> kernel(std::size_t width) const {
    std::vector<bool> is_pivot(width, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t free = 0;
    while (is_pivot[free]) ++free;
    std::int64_t l = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::int64_t p = rows[i][pivots[i]] < 0 ? -rows[i][pivots[i]] : rows[i][pivots[i]];
      l = checked_mul(l / std::gcd(l, p), p);
    }
    std::vector<std::int64_t> x(width, 0);
    x[free] = l;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      x[pivots[i]] = -checked_mul(rows[i][free], l / rows[i][pivots[i]]);
    }
    normalize(x);
    return x;
  }
};

struct BruteForce {
  std::vector<std::vector<std::int64_t>> facets;
  std::size_t d = 0;
  std::set<std::vector<std::int64_t>> found;

  void leaf(const Echelon& e) {
    std::vector<std::int64_t> x = e.kernel(d);
    bool nonneg = true;
    bool nonpos = true;
    for (const auto& f : facets) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < d; ++i) s += f[i] * x[i];
      nonneg = nonneg && s >= 0;
      nonpos = nonpos && s <= 0;
    }
    if (nonpos && !nonneg) {
      for (auto& v : x) v = -v;
    } else if (!nonneg) {
      return;
    }
    found.insert(std::move(x));
  }

  void search(const Echelon& e, std::size_t start) {
    if (e.rows.size() + 1 == d) {
      leaf(e);
      return;
    }
    const std::size_t need = d - 1 - e.rows.size();
    for (std::size_t j = start; j + need <= facets.size(); ++j) {
      Echelon next = e;
      if (next.add(facets[j])) search(next, j + 1);
    }
  }
};

}  // namespace

RayCatalogue enumerate_bruteforce(int n, const EnumerationOptions& options) {
  check_range(n, false, 4);
  const unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;
  const auto rows = facet_matrix(n);
  std::vector<std::vector<std::int64_t>> facets;
  for (const auto& r : rows) facets.emplace_back(r.begin(), r.end());
  const std::size_t d = facets.front().size();

  std::set<std::vector<std::int64_t>> found;
  if (d == 1) {
    // Rank 0: the kernel is the whole line.
    BruteForce bf{facets, d, {}};
    bf.leaf(Echelon{});
    found = std::move(bf.found);
  } else {
    // Fan out over the first chosen facet.
    std::vector<BruteForce> parts(facets.size(), BruteForce{facets, d, {}});
    parallel_for(facets.size(), threads, [&](std::size_t j) {
      Echelon e;
      if (e.add(facets[j])) parts[j].search(e, j + 1);
    });
    for (auto& p : parts) found.merge(p.found);
  }

  std::vector<SetFunction> generators;
  for (const auto& x : found) {
    std::vector<mpz_class> ray;
    for (auto v : x) ray.emplace_back(static_cast<long>(v));
    generators.push_back(ray_to_function(n, ray));
  }
  return finish(n, std::move(generators));
}

// ---- Orbits and verification --------------------------------------------------------

RayCatalogue classify_orbits(RayCatalogue catalogue) {
  catalogue.orbits.clear();
  const auto& gens = catalogue.generators;
  if (gens.empty()) return catalogue;
  const auto perms = all_permutations(catalogue.n);
  std::vector<bool> assigned(gens.size(), false);
  const auto find_index = [&](const SetFunction& f) -> std::size_t {
    auto it = std::lower_bound(gens.begin(), gens.end(), f,
                               [](const SetFunction& a, const SetFunction& b) { return a.compare_values(b) < 0; });
    if (it == gens.end() || !(*it == f)) throw std::domain_error("catalogue is not closed under permutations");
    return static_cast<std::size_t>(it - gens.begin());
  };
  // Generators are sorted, so the first unassigned one is its orbit's minimum.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (assigned[i]) continue;
    Orbit orbit{i, {}};
    std::set<std::size_t> members;
    for (const auto& pi : perms) members.insert(find_index(permute(gens[i], pi)));
    for (std::size_t m : members) assigned[m] = true;
    orbit.members.assign(members.begin(), members.end());
    catalogue.orbits.push_back(std::move(orbit));
  }
  return catalogue;
}

bool CatalogueReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CatalogueCheck& c) { return c.passed; });
}

namespace {

std::string fresh_label(const VariableSet& vars, int k = 0) {
  for (char c = 'a'; c <= 'z'; ++c) {
    std::string l(1, c);
    if (!vars.find(l)) {
      if (k == 0) return l;
      --k;
    }
  }
  throw std::logic_error("no fresh single-letter label");
}

VariableSet with_labels(const VariableSet& vars, const std::vector<std::string>& extra) {
  std::vector<std::string> labels = vars.labels();
  labels.insert(labels.end(), extra.begin(), extra.end());
  return VariableSet(std::move(labels));
}

void expect(CatalogueCheck& check, bool ok, const SetFunction& g, const std::string& detail) {
  if (ok) return;
  check.passed = false;
  check.failures.push_back(g.to_delta_string() + ": " + detail);
}

}  // namespace

CatalogueReport verify_catalogue(const RayCatalogue& catalogue) {
  CatalogueReport report;
  std::set<std::vector<std::string>> keys;
  const auto key_of = [](const SetFunction& f) {
    std::vector<std::string> k;
    for (const auto& v : f.values()) k.push_back(v.to_string());
    return k;
  };
  for (const auto& g : catalogue.generators) keys.insert(key_of(g));

  CatalogueCheck generator{"generator", true, {}};
  CatalogueCheck distinct{"distinct", true, {}};
  CatalogueCheck reflection{"reflection-closure", true, {}};
  CatalogueCheck permutation{"permutation-closure", true, {}};
  CatalogueCheck lifting{"lift-extreme", true, {}};
  CatalogueCheck modular{"modular-extension-extreme", true, {}};
  CatalogueCheck replication{"replication-extreme", true, {}};

  if (keys.size() != catalogue.generators.size()) {
    distinct.passed = false;
    distinct.failures.push_back("catalogue contains repeated generators");
  }
  const auto perms = all_permutations(catalogue.n);
  const auto in_catalogue = [&](const SetFunction& f) {
    return is_supermodular(f) && keys.count(key_of(integral_representative(f))) == 1;
  };

  for (const auto& g : catalogue.generators) {
    const auto rep = is_extreme(g);
    expect(generator, rep.extreme, g, "not extreme (face dimension " + std::to_string(rep.face.dimension) + ")");
    expect(generator, is_supermodular_bruteforce(g), g, "not supermodular (brute force)");
    expect(generator, is_standardized(g, StandardizationKind::Lower), g, "not ℓ-standardized");
    expect(generator, g.is_integral(), g, "not integral");
    expect(generator, g[g.vars().full()].sign() > 0, g, "m(N) is not positive");
    if (!rep.supermodular) continue;
    expect(generator, integral_representative(g) == g, g, "not the minimal integral representative");

    expect(reflection, in_catalogue(reflect(g)), g, "reflection leaves the catalogue");
    for (const auto& pi : perms) {
      if (!in_catalogue(permute(g, pi))) {
        expect(permutation, false, g, "a permutation image leaves the catalogue");
        break;
      }
    }

    const VariableSet& vars = g.vars();
    const VariableSet bigger = with_labels(vars, {fresh_label(vars)});
    expect(lifting, is_extreme(lift(g, bigger)).extreme, g, "lift is not extreme");
    expect(modular, is_extreme(lower_modular_extension(g, bigger)).extreme, g, "lower modular extension is not extreme");
    expect(modular, is_extreme(upper_modular_extension(g, bigger)).extreme, g, "upper modular extension is not extreme");

    const SetFunction gu = standardize(g, StandardizationKind::Upper);
    for (const auto& z : vars.labels()) {
      // Replicate z into itself plus one new variable.
      const VariableSet target = with_labels(vars, {fresh_label(vars)});
      expect(replication, is_extreme(lower_replication(g, z, target)).extreme, g,
             "lower replication at " + z + " is not extreme");
      expect(replication, is_extreme(upper_replication(gu, z, target)).extreme, g,
             "upper replication of the u-form at " + z + " is not extreme");
    }
  }
  report.checks = {generator, distinct, reflection, permutation, lifting, modular, replication};
  return report;
}

}  // namespace supermod
