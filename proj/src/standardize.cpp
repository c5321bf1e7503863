#include "supermod/standardize.hpp"

#include <stdexcept>

#include "supermod/linalg.hpp"

namespace supermod {

std::string_view kind_name(StandardizationKind kind) {
  switch (kind) {
    case StandardizationKind::Lower: return "lower";
    case StandardizationKind::Upper: return "upper";
    case StandardizationKind::Orthogonal: return "orthogonal";
    case StandardizationKind::Polymatroidal: return "polymatroidal";
    case StandardizationKind::Weird: return "weird";
  }
  return "?";
}

StandardizationKind parse_kind(std::string_view text) {
  if (text == "l" || text == "lower") return StandardizationKind::Lower;
  if (text == "u" || text == "upper") return StandardizationKind::Upper;
  if (text == "o" || text == "orthogonal") return StandardizationKind::Orthogonal;
  if (text == "p" || text == "polymatroidal") return StandardizationKind::Polymatroidal;
  if (text == "w" || text == "weird") return StandardizationKind::Weird;
  throw std::invalid_argument("unknown standardization kind '" + std::string(text) + "'");
}

std::vector<SetFunction> standardization_constraints(const VariableSet& vars,
                                                     StandardizationKind kind) {
  const int n = vars.size();
  const SubsetMask top = vars.full();
  std::vector<SetFunction> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  switch (kind) {
    case StandardizationKind::Lower:
      out.push_back(delta(vars, SubsetMask{}));
      for (int i = 0; i < n; ++i) out.push_back(delta(vars, singleton(i)));
      break;
    case StandardizationKind::Upper:
      out.push_back(delta(vars, top));
      for (int i = 0; i < n; ++i) out.push_back(delta(vars, top.without(i)));
      break;
    case StandardizationKind::Orthogonal:
      out.push_back(superset_indicator(vars, SubsetMask{}));
      for (int i = 0; i < n; ++i) out.push_back(superset_indicator(vars, singleton(i)));
      break;
    case StandardizationKind::Polymatroidal:
      // r(∅) = 0 and r(N∖i) = r(N).
      out.push_back(delta(vars, SubsetMask{}));
      for (int i = 0; i < n; ++i) out.push_back(delta(vars, top.without(i)) - delta(vars, top));
      break;
    case StandardizationKind::Weird:
      // r(∅) = 0 and r(i) = -r(N).
      out.push_back(delta(vars, SubsetMask{}));
      for (int i = 0; i < n; ++i) out.push_back(delta(vars, singleton(i)) + delta(vars, top));
      break;
  }
  return out;
}

namespace {

SetFunction apply_shift(const SetFunction& m, const ModularShift& s) {
  return m + modular_function(m.vars(), s.k, s.rho);
}

}  // namespace

ModularShift standardization_shift_generic(const SetFunction& m, StandardizationKind kind) {
  const VariableSet& vars = m.vars();
  const int n = vars.size();
  const auto constraints = standardization_constraints(vars, kind);
  std::vector<SetFunction> basis;
  basis.push_back(superset_indicator(vars, SubsetMask{}));
  for (int i = 0; i < n; ++i) basis.push_back(superset_indicator(vars, singleton(i)));

  // Row j: <w_j, m> + Σ_c coef_c <w_j, basis_c> = 0.
  linalg::RatMatrix a;
  std::vector<Rational> b;
  for (const auto& w : constraints) {
    std::vector<Rational> row;
    for (const auto& e : basis) row.push_back(inner_product(w, e));
    a.push_back(std::move(row));
    b.push_back(-inner_product(w, m));
  }
  auto x = linalg::solve(a, b);
  if (!x) throw std::logic_error("standardization system is singular");
  ModularShift s;
  s.k = (*x)[0];
  s.rho.assign(x->begin() + 1, x->end());
  return s;
}

ModularShift standardization_shift(const SetFunction& m, StandardizationKind kind) {
  const int n = m.n();
  const SubsetMask top = m.vars().full();
  ModularShift s;
  s.rho.resize(static_cast<std::size_t>(n));
  switch (kind) {
    case StandardizationKind::Lower:
      s.k = -m[SubsetMask{}];
      for (int i = 0; i < n; ++i) s.rho[static_cast<std::size_t>(i)] = m[SubsetMask{}] - m[singleton(i)];
      return s;
    case StandardizationKind::Upper: {
      Rational sum;
      for (int j = 0; j < n; ++j) sum += m[top.without(j)];
      s.k = Rational(n - 1) * m[top] - sum;
      for (int i = 0; i < n; ++i) s.rho[static_cast<std::size_t>(i)] = m[top.without(i)] - m[top];
      return s;
    }
    case StandardizationKind::Orthogonal: {
      Rational total;
      Rational weighted;
      std::vector<Rational> containing(static_cast<std::size_t>(n));
      for (std::uint32_t bits = 0; bits < m.size(); ++bits) {
        const SubsetMask sm(bits);
        const Rational& v = m[sm];
        total += v;
        weighted += Rational(sm.size()) * v;
        for (int i = 0; i < n; ++i) {
          if (sm.contains(i)) containing[static_cast<std::size_t>(i)] += v;
        }
      }
      const Rational half_scale(mpz_class(1), mpz_class(1) << (n - 1));
      const Rational full_scale(mpz_class(n + 1), mpz_class(1) << n);
      s.k = half_scale * weighted - full_scale * total;
      for (int i = 0; i < n; ++i) {
        s.rho[static_cast<std::size_t>(i)] =
            half_scale * (total - Rational(2) * containing[static_cast<std::size_t>(i)]);
      }
      return s;
    }
    case StandardizationKind::Polymatroidal:
    case StandardizationKind::Weird:
      return standardization_shift_generic(m, kind);
  }
  throw std::logic_error("unreachable standardization kind");
}

SetFunction standardize(const SetFunction& m, StandardizationKind kind) {
  return apply_shift(m, standardization_shift(m, kind));
}

SetFunction standardize_generic(const SetFunction& m, StandardizationKind kind) {
  return apply_shift(m, standardization_shift_generic(m, kind));
}

bool is_standardized(const SetFunction& m, StandardizationKind kind) {
  for (const auto& w : standardization_constraints(m.vars(), kind)) {
    if (!inner_product(w, m).is_zero()) return false;
  }
  return true;
}

SubsetMask carrier(const SetFunction& m) {
  SubsetMask out;
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t s = 0; s < m.size(); ++s) {
      if ((s & bit) != 0) continue;
      if (m[SubsetMask(s | bit)] != m[SubsetMask(s)]) {
        out = out.with(i);
        break;
      }
    }
  }
  return out;
}

SubsetMask support(const SetFunction& m) {
  if (!is_supermodular(m)) throw std::domain_error("support: input is not supermodular");
  return carrier(standardize(m, StandardizationKind::Lower));
}

}  // namespace supermod
