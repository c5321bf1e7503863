#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "supermod/rational.hpp"
#include "supermod/variable_set.hpp"

namespace supermod {

/// Real-valued function on the power set of a VariableSet, stored densely
/// (index = subset bitmask) with exact rational values.
class SetFunction {
 public:
  explicit SetFunction(VariableSet vars);
  /// Throws std::invalid_argument unless values.size() == 2^n.
  SetFunction(VariableSet vars, std::vector<Rational> values);

  [[nodiscard]] const VariableSet& vars() const { return vars_; }
  [[nodiscard]] int n() const { return vars_.size(); }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

  [[nodiscard]] const Rational& operator[](SubsetMask s) const { return values_[s.bits]; }
  [[nodiscard]] Rational& operator[](SubsetMask s) { return values_[s.bits]; }
  /// Bounds-checked access; throws std::domain_error for an out-of-range mask.
  [[nodiscard]] const Rational& at(SubsetMask s) const;

  SetFunction& operator+=(const SetFunction& rhs);
  SetFunction& operator-=(const SetFunction& rhs);
  SetFunction& operator*=(const Rational& k);

  friend SetFunction operator+(SetFunction a, const SetFunction& b) { return a += b; }
  friend SetFunction operator-(SetFunction a, const SetFunction& b) { return a -= b; }
  friend SetFunction operator*(SetFunction a, const Rational& k) { return a *= k; }
  friend SetFunction operator*(const Rational& k, SetFunction a) { return a *= k; }
  friend SetFunction operator-(SetFunction a) { return a *= Rational(-1); }

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.vars_ == b.vars_ && a.values_ == b.values_;
  }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_integral() const;
  [[nodiscard]] bool is_nonnegative() const;
  [[nodiscard]] bool is_nondecreasing() const;
  [[nodiscard]] bool is_nonincreasing() const;

  /// Lexicographic comparison of value vectors (mask order). Requires equal vars.
  [[nodiscard]] std::strong_ordering compare_values(const SetFunction& other) const;

  /// "2·δ_abc + δ_ab - δ_c" style rendering; "0" for the zero function.
  [[nodiscard]] std::string to_delta_string() const;

 private:
  VariableSet vars_;
  std::vector<Rational> values_;
};

/// Throws std::domain_error if the variable sets differ.
void require_same_vars(const SetFunction& a, const SetFunction& b, const char* what);

SetFunction delta(const VariableSet& vars, SubsetMask a);
SetFunction superset_indicator(const VariableSet& vars, SubsetMask a);
SetFunction constant(const VariableSet& vars, const Rational& value);

/// Elementary triplet <a,b|C>: a < b, C disjoint from {a,b}.
struct ElementaryTriplet {
  int a = 0;
  int b = 1;
  SubsetMask c;

  friend bool operator==(const ElementaryTriplet&, const ElementaryTriplet&) = default;
};

/// Number of elementary triplets, n(n-1)2^(n-3).
std::size_t triplet_count(int n);
/// Canonical order: pairs (a,b) lexicographically, then C by its bits over N∖{a,b}.
std::size_t triplet_index(int n, const ElementaryTriplet& t);
ElementaryTriplet triplet_at(int n, std::size_t index);
/// All triplets in canonical order.
std::vector<ElementaryTriplet> triplets(int n);
/// Throws std::domain_error unless t is a valid triplet for n variables.
void validate_triplet(int n, const ElementaryTriplet& t);
/// Canonicalizes an unordered triplet (swaps a,b if needed) and validates it.
ElementaryTriplet make_triplet(int n, int a, int b, SubsetMask c);

SetFunction elementary_imset(const VariableSet& vars, const ElementaryTriplet& t);
/// δ_ABC + δ_C − δ_AC − δ_BC; masks must be pairwise disjoint.
SetFunction semi_elementary_imset(const VariableSet& vars, SubsetMask a, SubsetMask b,
                                  SubsetMask c);

Rational inner_product(const SetFunction& m, const SetFunction& u);
/// <m, u_t> evaluated directly from four values.
Rational triplet_product(const SetFunction& m, const ElementaryTriplet& t);
/// <m, u_<A,B|C>> for pairwise disjoint A, B, C.
Rational semi_elementary_product(const SetFunction& m, SubsetMask a, SubsetMask b, SubsetMask c);

bool is_supermodular(const SetFunction& m);
/// Checks m(A)+m(B) <= m(A∪B)+m(A∩B) over all 4^n pairs.
bool is_supermodular_bruteforce(const SetFunction& m);
bool is_modular(const SetFunction& m);
bool is_submodular(const SetFunction& m);

/// Σ coefficient·δ_S with S written compactly ("abc", "" for ∅).
SetFunction from_deltas(const VariableSet& vars,
                        const std::vector<std::pair<std::string, Rational>>& terms);

/// k·m^{∅⊆} + Σ rho[i]·m^{i⊆}.
SetFunction modular_function(const VariableSet& vars, const Rational& k,
                             const std::vector<Rational>& rho);

}  // namespace supermod
