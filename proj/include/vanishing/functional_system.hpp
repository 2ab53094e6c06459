#pragma once

#include <cstddef>
#include <vector>

#include "vanishing/field.hpp"

namespace vanishing {

using FieldVector = std::vector<FieldElement>;

/// m linear functionals psi = (L_1, ..., L_m) on k[x_1..x_n] that can be
/// evaluated incrementally: psi(x_i * t) from a cached psi(t).
class FunctionalSystem {
 public:
  virtual ~FunctionalSystem() = default;

  virtual const FieldSpec& field() const = 0;
  /// Number of functionals m.
  virtual std::size_t width() const = 0;
  /// Number of variables n.
  virtual std::size_t arity() const = 0;

  virtual FieldVector psi_one() const = 0;
  virtual FieldVector step(const FieldVector& psi_t, std::size_t var) const = 0;
};

}  // namespace vanishing
