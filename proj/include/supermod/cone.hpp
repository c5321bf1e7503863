#pragma once

// Independency models, equivalences and faces of the supermodular cone.

#include <cstddef>
#include <vector>

#include "supermod/set_function.hpp"

namespace supermod {

/// <m, u_t> for every canonical triplet t, indexed by triplet_index.
struct ScalarTable {
  VariableSet vars;
  std::vector<Rational> entries;

  [[nodiscard]] const Rational& at(const ElementaryTriplet& t) const {
    return entries[triplet_index(vars.size(), t)];
  }
};

/// The zero set I(m) of a scalar table; its complement is the dependency model.
class IndependencyModel {
 public:
  explicit IndependencyModel(VariableSet vars);
  IndependencyModel(VariableSet vars, std::vector<bool> independent);

  /// Every triplet independent.
  static IndependencyModel full(VariableSet vars);

  [[nodiscard]] const VariableSet& vars() const { return vars_; }
  [[nodiscard]] bool contains(const ElementaryTriplet& t) const {
    return independent_[triplet_index(vars_.size(), t)];
  }
  void insert(const ElementaryTriplet& t) { independent_[triplet_index(vars_.size(), t)] = true; }
  void erase(const ElementaryTriplet& t) { independent_[triplet_index(vars_.size(), t)] = false; }

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::size_t dependency_count() const { return independent_.size() - size(); }
  [[nodiscard]] std::vector<ElementaryTriplet> independencies() const;
  [[nodiscard]] const std::vector<bool>& flags() const { return independent_; }
  /// True iff every independency of `other` is one of ours.
  [[nodiscard]] bool includes(const IndependencyModel& other) const;

  friend bool operator==(const IndependencyModel& a, const IndependencyModel& b) {
    return a.vars_ == b.vars_ && a.independent_ == b.independent_;
  }

 private:
  VariableSet vars_;
  std::vector<bool> independent_;
};

struct FaceDescriptor {
  std::vector<ElementaryTriplet> tight;
  std::size_t rank = 0;
  std::size_t dimension = 0;
};

struct ExtremalityReport {
  bool supermodular = false;
  bool modular = false;
  FaceDescriptor face;
  bool extreme = false;
};

ScalarTable scalar_table(const SetFunction& m);
IndependencyModel independency_model(const SetFunction& m);
/// "a ⫫ b | C" with C as comma-joined labels (empty for ∅).
std::string format_triplet(const VariableSet& vars, const ElementaryTriplet& t);

bool quantitatively_equivalent(const SetFunction& m1, const SetFunction& m2);
/// Throws std::domain_error unless both inputs are supermodular.
bool qualitatively_equivalent(const SetFunction& m1, const SetFunction& m2);

/// Exact rank of the given elementary imsets in the 2^n-dimensional ambient space.
std::size_t imset_rank(const VariableSet& vars, const std::vector<ElementaryTriplet>& ts);

/// Throws std::domain_error unless m is supermodular.
FaceDescriptor face_of(const SetFunction& m);
ExtremalityReport is_extreme(const SetFunction& m);

/// Minimal integral non-negative generator of m's ray in K_ℓ. Throws
/// std::domain_error unless m is supermodular; zero ℓ-part gives zero.
SetFunction integral_representative(const SetFunction& m);

}  // namespace supermod
