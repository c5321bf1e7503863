#include "supermod/set_function.hpp"

#include <sstream>
#include <stdexcept>

#include "supermod/kernels/bits.hpp"

namespace supermod {

SetFunction::SetFunction(VariableSet vars) : vars_(std::move(vars)), values_(vars_.power_size()) {}

SetFunction::SetFunction(VariableSet vars, std::vector<Rational> values)
    : vars_(std::move(vars)), values_(std::move(values)) {
  if (values_.size() != vars_.power_size()) {
    throw std::invalid_argument("set function needs " + std::to_string(vars_.power_size()) +
                                " values, got " + std::to_string(values_.size()));
  }
}

const Rational& SetFunction::at(SubsetMask s) const {
  if (!vars_.valid(s)) throw std::domain_error("subset mask out of range");
  return values_[s.bits];
}

void require_same_vars(const SetFunction& a, const SetFunction& b, const char* what) {
  if (!(a.vars() == b.vars())) {
    throw std::domain_error(std::string(what) + ": set functions over different variable sets");
  }
}

SetFunction& SetFunction::operator+=(const SetFunction& rhs) {
  require_same_vars(*this, rhs, "addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

SetFunction& SetFunction::operator-=(const SetFunction& rhs) {
  require_same_vars(*this, rhs, "subtraction");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
  return *this;
}

SetFunction& SetFunction::operator*=(const Rational& k) {
  for (auto& v : values_) v *= k;
  return *this;
}

bool SetFunction::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool SetFunction::is_integral() const {
  for (const auto& v : values_) {
    if (!v.is_integer()) return false;
  }
  return true;
}

bool SetFunction::is_nonnegative() const {
  for (const auto& v : values_) {
    if (v.sign() < 0) return false;
  }
  return true;
}

bool SetFunction::is_nondecreasing() const {
  // Enough to compare along single-element extensions.
  for (std::uint32_t s = 0; s < values_.size(); ++s) {
    for (int i = 0; i < n(); ++i) {
      if ((s >> i) & 1u) continue;
      if (values_[s | (1u << i)] < values_[s]) return false;
    }
  }
  return true;
}

bool SetFunction::is_nonincreasing() const {
  for (std::uint32_t s = 0; s < values_.size(); ++s) {
    for (int i = 0; i < n(); ++i) {
      if ((s >> i) & 1u) continue;
      if (values_[s | (1u << i)] > values_[s]) return false;
    }
  }
  return true;
}

std::strong_ordering SetFunction::compare_values(const SetFunction& other) const {
  require_same_vars(*this, other, "compare_values");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto c = values_[i] <=> other.values_[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string SetFunction::to_delta_string() const {
  std::ostringstream os;
  bool first = true;
  // Largest sets first, matching how the functions are usually written down.
  for (std::size_t i = values_.size(); i-- > 0;) {
    const Rational& v = values_[i];
    if (v.is_zero()) continue;
    const bool neg = v.sign() < 0;
    const Rational mag = abs(v);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mag != Rational(1)) os << mag << "·";
    os << "δ_" << vars_.pretty(SubsetMask(static_cast<std::uint32_t>(i)));
    first = false;
  }
  if (first) return "0";
  return os.str();
}

SetFunction delta(const VariableSet& vars, SubsetMask a) {
  if (!vars.valid(a)) throw std::domain_error("delta: subset mask out of range");
  SetFunction m(vars);
  m[a] = Rational(1);
  return m;
}

SetFunction superset_indicator(const VariableSet& vars, SubsetMask a) {
  if (!vars.valid(a)) throw std::domain_error("superset_indicator: subset mask out of range");
  SetFunction m(vars);
  for (std::uint32_t s = 0; s < vars.power_size(); ++s) {
    if ((s & a.bits) == a.bits) m[SubsetMask(s)] = Rational(1);
  }
  return m;
}

SetFunction constant(const VariableSet& vars, const Rational& value) {
  return SetFunction(vars, std::vector<Rational>(vars.power_size(), value));
}

std::size_t triplet_count(int n) {
  if (n < 2) return 0;
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 *
         (std::size_t{1} << (n - 2));
}

namespace {

std::size_t pair_index(int n, int a, int b) {
  // Pairs (a,b), a<b, in lexicographic order.
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(2 * n - a - 1) / 2 +
         static_cast<std::size_t>(b - a - 1);
}

std::uint32_t rest_mask(int n, int a, int b) {
  return ((1u << n) - 1) & ~((1u << a) | (1u << b));
}

}  // namespace

void validate_triplet(int n, const ElementaryTriplet& t) {
  if (t.a < 0 || t.b >= n || t.a >= t.b || t.c.bits >= (1u << n) || t.c.contains(t.a) ||
      t.c.contains(t.b)) {
    throw std::domain_error("invalid elementary triplet");
  }
}

ElementaryTriplet make_triplet(int n, int a, int b, SubsetMask c) {
  if (a > b) std::swap(a, b);
  ElementaryTriplet t{a, b, c};
  validate_triplet(n, t);
  return t;
}

std::size_t triplet_index(int n, const ElementaryTriplet& t) {
  const std::uint32_t compressed = kernels::extract_bits(t.c.bits, rest_mask(n, t.a, t.b));
  return pair_index(n, t.a, t.b) * (std::size_t{1} << (n - 2)) + compressed;
}

ElementaryTriplet triplet_at(int n, std::size_t index) {
  const std::size_t per_pair = std::size_t{1} << (n - 2);
  std::size_t p = index / per_pair;
  const auto compressed = static_cast<std::uint32_t>(index % per_pair);
  int a = 0;
  while (p >= static_cast<std::size_t>(n - 1 - a)) {
    p -= static_cast<std::size_t>(n - 1 - a);
    ++a;
  }
  const int b = a + 1 + static_cast<int>(p);
  return ElementaryTriplet{a, b, SubsetMask(kernels::deposit_bits(compressed, rest_mask(n, a, b)))};
}

std::vector<ElementaryTriplet> triplets(int n) {
  std::vector<ElementaryTriplet> out;
  out.reserve(triplet_count(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const std::uint32_t rest = rest_mask(n, a, b);
      const std::uint32_t count = 1u << (n - 2);
      for (std::uint32_t k = 0; k < count; ++k) {
        out.push_back(ElementaryTriplet{a, b, SubsetMask(kernels::deposit_bits(k, rest))});
      }
    }
  }
  return out;
}

SetFunction elementary_imset(const VariableSet& vars, const ElementaryTriplet& t) {
  validate_triplet(vars.size(), t);
  return semi_elementary_imset(vars, singleton(t.a), singleton(t.b), t.c);
}

SetFunction semi_elementary_imset(const VariableSet& vars, SubsetMask a, SubsetMask b,
                                  SubsetMask c) {
  if (!vars.valid(a) || !vars.valid(b) || !vars.valid(c)) {
    throw std::domain_error("semi_elementary_imset: mask out of range");
  }
  if (!(a & b).empty() || !(a & c).empty() || !(b & c).empty()) {
    throw std::domain_error("semi_elementary_imset: masks must be pairwise disjoint");
  }
  SetFunction u(vars);
  u[a | b | c] += Rational(1);
  u[c] += Rational(1);
  u[a | c] -= Rational(1);
  u[b | c] -= Rational(1);
  return u;
}

Rational inner_product(const SetFunction& m, const SetFunction& u) {
  require_same_vars(m, u, "inner_product");
  Rational out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!u.values()[i].is_zero()) out += m.values()[i] * u.values()[i];
  }
  return out;
}

Rational triplet_product(const SetFunction& m, const ElementaryTriplet& t) {
  const SubsetMask ac = t.c.with(t.a);
  const SubsetMask bc = t.c.with(t.b);
  return m[t.c] + m[ac | bc] - m[ac] - m[bc];
}

Rational semi_elementary_product(const SetFunction& m, SubsetMask a, SubsetMask b, SubsetMask c) {
  return m[a | b | c] + m[c] - m[a | c] - m[b | c];
}

bool is_supermodular(const SetFunction& m) {
  const int n = m.n();
  for (const auto& t : triplets(n)) {
    if (triplet_product(m, t).sign() < 0) return false;
  }
  return true;
}

bool is_supermodular_bruteforce(const SetFunction& m) {
  const std::uint32_t count = static_cast<std::uint32_t>(m.size());
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = 0; b < count; ++b) {
      if (m[SubsetMask(a)] + m[SubsetMask(b)] > m[SubsetMask(a | b)] + m[SubsetMask(a & b)]) {
        return false;
      }
    }
  }
  return true;
}

bool is_modular(const SetFunction& m) {
  for (const auto& t : triplets(m.n())) {
    if (!triplet_product(m, t).is_zero()) return false;
  }
  return true;
}

bool is_submodular(const SetFunction& m) {
  for (const auto& t : triplets(m.n())) {
    if (triplet_product(m, t).sign() > 0) return false;
  }
  return true;
}

SetFunction from_deltas(const VariableSet& vars,
                        const std::vector<std::pair<std::string, Rational>>& terms) {
  SetFunction m(vars);
  for (const auto& [key, coef] : terms) m[vars.parse_compact(key)] += coef;
  return m;
}

SetFunction modular_function(const VariableSet& vars, const Rational& k,
                             const std::vector<Rational>& rho) {
  if (rho.size() != static_cast<std::size_t>(vars.size())) {
    throw std::invalid_argument("modular_function: need one coefficient per variable");
  }
  SetFunction m(vars);
  for (std::uint32_t s = 0; s < vars.power_size(); ++s) {
    Rational v = k;
    for (int i = 0; i < vars.size(); ++i) {
      if ((s >> i) & 1u) v += rho[static_cast<std::size_t>(i)];
    }
    m[SubsetMask(s)] = v;
  }
  return m;
}

}  // namespace supermod
