#pragma once

// Transformations between set functions: self-maps, extensions to larger
// variable sets, projections to smaller ones, and compositions.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "supermod/set_function.hpp"

namespace supermod {

/// Bijection of variable indices; image[i] = π(i).
class Permutation {
 public:
  /// Throws std::domain_error unless image is a bijection on 0..n-1.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  /// Builds π from label pairs "from -> to"; unmapped labels are fixed.
  static Permutation from_labels(const VariableSet& vars,
                                 const std::map<std::string, std::string>& mapping);

  [[nodiscard]] int size() const { return static_cast<int>(image_.size()); }
  [[nodiscard]] int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] SubsetMask apply(SubsetMask s) const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

/// All n! permutations of 0..n-1 in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Surjection σ from source variables onto target variables.
class Coarsening {
 public:
  /// Throws std::domain_error unless sigma maps every source index onto the target indices.
  Coarsening(VariableSet source, VariableSet target, std::vector<int> sigma);
  /// sigma given by labels; every source label must be mapped.
  static Coarsening from_labels(const VariableSet& source,
                                const std::map<std::string, std::string>& mapping);

  [[nodiscard]] const VariableSet& source() const { return source_; }
  [[nodiscard]] const VariableSet& target() const { return target_; }
  [[nodiscard]] int operator()(int i) const { return sigma_[static_cast<std::size_t>(i)]; }
  /// σ⁻¹(T) as a subset of the source variables.
  [[nodiscard]] SubsetMask preimage(SubsetMask t) const;

 private:
  VariableSet source_;
  VariableSet target_;
  std::vector<int> sigma_;
};

/// g(x, y) evaluated on non-negative rationals.
struct OuterComposer {
  std::string name;
  std::function<Rational(const Rational&, const Rational&)> g;

  static OuterComposer product();
  /// g(x, y) = x^k.
  static OuterComposer power(int k);
  /// g(x, y) = x.
  static OuterComposer first();
  /// Accepts "product", "first", "square", "power:K".
  static OuterComposer parse(const std::string& id);
};

struct OuterComposition {
  SetFunction value;
  /// Hypothesis violations found on the grid of evaluated arguments.
  std::vector<std::string> violations;
};

SetFunction permute(const SetFunction& m, const Permutation& pi);
SetFunction reflect(const SetFunction& m);
/// S ↦ max{m(T) : T ⊆ S}.
SetFunction monotonize_max_sub(const SetFunction& m);
/// S ↦ max{m(T) : T ⊇ S}.
SetFunction monotonize_max_sup(const SetFunction& m);

/// S ↦ g(m(S), r(S)) for m, r in K_ℓ. Throws std::domain_error otherwise.
OuterComposition outer_compose(const SetFunction& m, const SetFunction& r, const OuterComposer& g);
/// Componentwise product of two functions both in K_ℓ or both in K_u.
SetFunction pointwise_multiply(const SetFunction& m1, const SetFunction& m2);

/// S ↦ r(S∩M), r over M ⊆ target.
SetFunction lift(const SetFunction& r, const VariableSet& target);
/// S ↦ m(S∪E) over N∖(D∪E).
SetFunction minor(const SetFunction& m, SubsetMask deleted, SubsetMask extracted);
SetFunction deletion(const SetFunction& m, SubsetMask deleted);
SetFunction extraction(const SetFunction& m, SubsetMask extracted);
/// S ↦ 2^{|M|-|N|} Σ_{L⊆N∖M} m(S∪L) over M.
SetFunction mean_minor(const SetFunction& m, SubsetMask keep);
/// T ↦ m(σ⁻¹(T)).
SetFunction coarsen(const SetFunction& m, const Coarsening& sigma);
/// Merges the variables in `group` into one variable named `into`.
SetFunction contract(const SetFunction& m, SubsetMask group, const std::string& into);
/// S ↦ max{m(S∪L) : L ⊆ N∖M} over M.
SetFunction max_minor(const SetFunction& m, SubsetMask keep);

/// S ↦ r(S∩R)·l(S∩L) over R∪L. Both factors must be non-negative,
/// non-decreasing and supermodular, over disjoint variable sets.
SetFunction product_compose(const SetFunction& r, const SetFunction& l);

/// r over M ⊂ N: r(S∩M) if N∖M ⊆ S, else r(S∩M) − r_ℓ(S∩M).
SetFunction lower_modular_extension(const SetFunction& r, const VariableSet& target);
/// r over M ⊂ N: r(S) if S ⊆ M, else r(S∩M) − r_u(S∩M).
SetFunction upper_modular_extension(const SetFunction& r, const VariableSet& target);

/// r over M = L∪{z}, target N ⊇ L with |N∖L| ≥ 2:
/// r(z∪(S∩L)) if N∖L ⊆ S, else r(S∩L).
SetFunction lower_replication(const SetFunction& r, const std::string& z, const VariableSet& target);
/// As lower_replication: r(z∪(S∩L)) if S∖L ≠ ∅, else r(S).
SetFunction upper_replication(const SetFunction& r, const std::string& z, const VariableSet& target);

/// Renames variables (unmapped labels are kept); the result is re-indexed
/// to the sorted new labels.
SetFunction relabel(const SetFunction& m, const std::map<std::string, std::string>& mapping);

}  // namespace supermod
