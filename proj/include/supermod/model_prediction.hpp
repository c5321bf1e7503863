#pragma once

// Induced independency models of transformed functions, predicted from the
// source function without applying the transformation.

#include <string>
#include <variant>

#include "supermod/cone.hpp"
#include "supermod/transforms.hpp"

namespace supermod {

namespace op {
struct Permute { Permutation pi; };
struct Reflect {};
struct MaxSub {};
struct MaxSup {};
struct OuterCompose { SetFunction other; OuterComposer g; };
struct Multiply { SetFunction other; };
struct Lift { VariableSet target; };
struct Minor { SubsetMask deleted; SubsetMask extracted; };
struct MeanMinor { SubsetMask keep; };
struct Coarsen { Coarsening sigma; };
struct MaxMinor { SubsetMask keep; };
/// The source is the left factor r over R; `other` is l over L.
struct Product { SetFunction other; };
struct LowerModular { VariableSet target; };
struct UpperModular { VariableSet target; };
struct LowerReplication { std::string z; VariableSet target; };
struct UpperReplication { std::string z; VariableSet target; };
}  // namespace op

using TransformSpec =
    std::variant<op::Permute, op::Reflect, op::MaxSub, op::MaxSup, op::OuterCompose, op::Multiply,
                 op::Lift, op::Minor, op::MeanMinor, op::Coarsen, op::MaxMinor, op::Product,
                 op::LowerModular, op::UpperModular, op::LowerReplication, op::UpperReplication>;

[[nodiscard]] std::string transform_name(const TransformSpec& spec);

SetFunction apply_transform(const SetFunction& m, const TransformSpec& spec);

/// True iff predict_model supports the transform.
bool has_model_formula(const TransformSpec& spec);

/// Model of apply_transform(base, spec) computed from the base function's
/// scalar table (and, for modular extensions and replications, a few of its
/// values). Throws std::domain_error for transforms without a formula, for
/// modular extensions adding more than one variable, for replications with
/// more than two replicas, and for non-supermodular bases.
IndependencyModel predict_model(const TransformSpec& spec, const SetFunction& base);

}  // namespace supermod
