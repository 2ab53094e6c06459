#pragma once

// Essential-variable projection. Variables whose values on P are affine
// combinations of smaller variables never occur in B, so BM can run on the
// projection of P to the remaining variables and the result is lifted back.

#include <cstddef>
#include <span>
#include <vector>

#include "vanishing/bm.hpp"

namespace vanishing {

/// x_var = constant + sum coeff_j * x_j on P, every x_j smaller than x_var.
struct LinearRelation {
  std::size_t var = 0;
  FieldElement constant;
  std::vector<std::pair<std::size_t, FieldElement>> terms;
};

struct EssentialSet {
  /// Essential variables, sorted descending under the order.
  std::vector<std::size_t> ess;
  /// One relation per non-essential variable, in the order they were found
  /// (smallest variable first).
  std::vector<LinearRelation> relations;
};

/// Scans the variables from smallest to largest and keeps x_k iff x_k(P) is
/// outside span{1(P), x_j(P) : x_j kept so far}.
EssentialSet essential_variables(const PointSet& points, const OrderSpec& order);

/// Same scan over arbitrary value vectors: `one` plays 1(P) and
/// `var_values[k]` plays x_k(P).
EssentialSet essential_variables_from_values(const FieldSpec& field, std::span<const FieldElement> one,
                                             const std::vector<FieldVector>& var_values, const OrderSpec& order);

/// pi(P): the coordinates of `es.ess`, in that order. Throws InternalInvariant
/// if two projected points coincide.
PointSet project(const PointSet& points, const EssentialSet& es);

/// x^a in the projected ring -> the same monomial over all n variables.
Monomial embed_monomial(const Monomial& sub, std::span<const std::size_t> ess, std::size_t arity);

/// Lifts a run on pi(P) under restrict_order(order, es.ess) to I(P). Tails of
/// the new elements x_k - ... come from expressing x_k(P) in B(P).
GroebnerResult lift(const GroebnerResult& sub, const EssentialSet& es, const PointSet& points,
                    const OrderSpec& order);

/// Generic lift: `basis_values` must hold B'-values in the sub-run order and
/// `var_values[k]` the value vector of x_k.
GroebnerResult lift_with(const GroebnerResult& sub, const EssentialSet& es, std::size_t arity,
                         const OrderSpec& order, EchelonAccumulator basis_values,
                         const std::vector<FieldVector>& var_values);

/// essential_variables -> project -> restrict -> bm(mmm) -> lift.
GroebnerResult bm_projected(const PointSet& points, const OrderSpec& order);

enum class ProjectMode { Auto, On, Off };

/// Front end used by the CLI. Auto projects when some variable is inessential.
GroebnerResult compute_basis(const PointSet& points, const OrderSpec& order, Variant variant, ProjectMode mode);

}  // namespace vanishing
