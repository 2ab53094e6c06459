#pragma once

// Incremental reduced row echelon form over a FieldSpec. Every row remembers how
// it is built from the vectors originally inserted, so a reduction directly
// yields the coefficients of v - residual over those originals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vanishing/field.hpp"

namespace vanishing {

using FieldVector = std::vector<FieldElement>;

struct Reduction {
  FieldVector residual;
  /// coeffs[k] multiplies the k-th inserted vector; v = residual + sum coeffs[k] * orig_k.
  FieldVector coeffs;

  bool is_zero() const;
};

class EchelonAccumulator {
 public:
  EchelonAccumulator(FieldSpec field, std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const FieldSpec& field() const noexcept { return field_; }

  Reduction reduce(std::span<const FieldElement> v);

  /// Adds the vector that produced `red` as a new original; `red` must come from
  /// reduce() on this accumulator in its current state. Throws InsertZero.
  /// Returns the index of the new original.
  std::size_t insert(const Reduction& red, std::size_t tag);

  /// reduce + insert when independent; returns the new original index or nullopt.
  std::optional<std::size_t> add_if_independent(std::span<const FieldElement> v, std::size_t tag);

  bool in_span(std::span<const FieldElement> v);

  std::size_t tag(std::size_t original) const { return tags_[original]; }
  const std::vector<FieldVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }

  /// Every row has a leading 1 at its pivot column and every other row is zero
  /// there. Rows stay in insertion order, not sorted by pivot.
  bool is_reduced_echelon() const;

  /// Field multiplications and additions performed so far.
  std::uint64_t field_ops() const noexcept { return field_ops_; }

 private:
  FieldSpec field_;
  std::size_t width_;
  std::vector<FieldVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<FieldVector> history_;  // rows_[r] = sum history_[r][k] * orig_k
  std::vector<std::size_t> tags_;
  std::uint64_t field_ops_ = 0;
};

}  // namespace vanishing
