#pragma once

// BM driven by an abstract functional system: point evaluation gives the
// vanishing ideal, multiplication matrices give FGLM-style order change.

#include <cstddef>
#include <vector>

#include "vanishing/bm.hpp"
#include "vanishing/functional_system.hpp"
#include "vanishing/projection.hpp"

namespace vanishing {

using FieldMatrix = std::vector<FieldVector>;  // row-major, rows[r][c]

/// psi(1) = point of the quotient space, psi(x_i t) = M_i * psi(t).
class MatrixActionSystem final : public FunctionalSystem {
 public:
  /// Throws ArityMismatch on shape errors, FieldMismatch on foreign entries and
  /// InconsistentSystem when two matrices do not commute.
  MatrixActionSystem(FieldSpec field, FieldVector psi_one, std::vector<FieldMatrix> matrices);

  const FieldSpec& field() const override { return field_; }
  std::size_t width() const override { return psi_one_.size(); }
  std::size_t arity() const override { return matrices_.size(); }
  FieldVector psi_one() const override { return psi_one_; }
  FieldVector step(const FieldVector& psi_t, std::size_t var) const override;

  const std::vector<FieldMatrix>& matrices() const noexcept { return matrices_; }

 private:
  FieldSpec field_;
  FieldVector psi_one_;
  std::vector<FieldMatrix> matrices_;
};

/// Point evaluation as a standalone system.
class PointEvaluationSystem final : public FunctionalSystem {
 public:
  explicit PointEvaluationSystem(const PointSet& points) : impl_(points) {}

  const FieldSpec& field() const override { return impl_.field(); }
  std::size_t width() const override { return impl_.width(); }
  std::size_t arity() const override { return impl_.arity(); }
  FieldVector psi_one() const override { return impl_.psi_one(); }
  FieldVector step(const FieldVector& psi_t, std::size_t var) const override { return impl_.step(psi_t, var); }

 private:
  detail::PointEvaluation impl_;
};

/// The multiplication matrices of k[x]/I(P) in the basis `result.B`, with psi(1)
/// the coordinates of 1. Feeding them to algorithm1 under another order
/// converts `result` to that order.
MatrixActionSystem multiplication_system(const PointSet& points, const GroebnerResult& result);

/// Checks psi(x_i x_j) == psi(x_j x_i) for every pair; throws InconsistentSystem.
void check_consistency(const FunctionalSystem& sys);

/// C1, C2', F3, C4, C5' over `sys`. When the values of psi do not span k^m the
/// run stops once L is empty and |B| is the achieved rank.
GroebnerResult algorithm1(const FunctionalSystem& sys, const OrderSpec& order);

/// essential_variables with psi(x_i) in place of x_i(P).
EssentialSet essential_variables_functional(const FunctionalSystem& sys, const OrderSpec& order);

/// algorithm1 on the essential variables, lifted back.
GroebnerResult algorithm1_projected(const FunctionalSystem& sys, const OrderSpec& order);

}  // namespace vanishing
