#pragma once

#include <string_view>
#include <vector>

#include "supermod/set_function.hpp"

namespace supermod {

enum class StandardizationKind { Lower, Upper, Orthogonal, Polymatroidal, Weird };

[[nodiscard]] std::string_view kind_name(StandardizationKind kind);
/// Accepts l/u/o/p/w and the full lowercase names. Throws std::invalid_argument.
[[nodiscard]] StandardizationKind parse_kind(std::string_view text);

/// Modular shift (k, rho) with r = m + k·m^{∅⊆} + Σ rho(i)·m^{i⊆} in the
/// complementary space of the kind.
struct ModularShift {
  Rational k;
  std::vector<Rational> rho;
};

/// Closed forms for Lower/Upper/Orthogonal, linear solve for the others.
ModularShift standardization_shift(const SetFunction& m, StandardizationKind kind);
/// Always solves the (n+1)x(n+1) system from the kind's defining constraints.
ModularShift standardization_shift_generic(const SetFunction& m, StandardizationKind kind);

/// The representative of m's ≈-class in the kind's complementary space.
SetFunction standardize(const SetFunction& m, StandardizationKind kind);
SetFunction standardize_generic(const SetFunction& m, StandardizationKind kind);

/// True iff m already satisfies the kind's n+1 defining constraints.
bool is_standardized(const SetFunction& m, StandardizationKind kind);

/// The n+1 linear functionals (as weight vectors) whose common zero set is
/// the kind's complementary space.
std::vector<SetFunction> standardization_constraints(const VariableSet& vars,
                                                     StandardizationKind kind);

/// Least M with m(S) = m(S∩M) for all S.
SubsetMask carrier(const SetFunction& m);
/// carrier of the ℓ-representative. Throws std::domain_error unless m is supermodular.
SubsetMask support(const SetFunction& m);

}  // namespace supermod
