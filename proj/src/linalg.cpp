#include "vanishing/linalg.hpp"

#include <algorithm>

namespace vanishing {

bool Reduction::is_zero() const {
  return std::all_of(residual.begin(), residual.end(), [](const FieldElement& e) { return e.is_zero(); });
}

EchelonAccumulator::EchelonAccumulator(FieldSpec field, std::size_t width) : field_(field), width_(width) {}

Reduction EchelonAccumulator::reduce(std::span<const FieldElement> v) {
  if (v.size() != width_) throw Error(ErrorCode::ArityMismatch, "vector length differs from accumulator width");
  Reduction red;
  red.residual.assign(v.begin(), v.end());
  red.coeffs.assign(tags_.size(), field_.zero());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    // Other rows vanish on this pivot column, so the factor is read off v.
    const FieldElement f = red.residual[pivots_[r]];
    if (f.is_zero()) continue;
    const auto& row = rows_[r];
    for (std::size_t c = 0; c < width_; ++c) {
      if (row[c].is_zero()) continue;
      red.residual[c] -= f * row[c];
      field_ops_ += 2;
    }
    const auto& h = history_[r];
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k].is_zero()) continue;
      red.coeffs[k] += f * h[k];
      field_ops_ += 2;
    }
  }
  return red;
}

std::size_t EchelonAccumulator::insert(const Reduction& red, std::size_t tag) {
  if (red.residual.size() != width_) throw Error(ErrorCode::ArityMismatch, "residual length");
  auto nz = std::find_if(red.residual.begin(), red.residual.end(), [](const FieldElement& e) { return !e.is_zero(); });
  if (nz == red.residual.end()) throw Error(ErrorCode::InsertZero, "residual is zero");
  if (red.coeffs.size() != tags_.size()) throw Error(ErrorCode::InternalInvariant, "stale reduction");

  const std::size_t p = static_cast<std::size_t>(nz - red.residual.begin());
  const FieldElement inv = red.residual[p].inverse();
  const std::size_t idx = tags_.size();

  // new row = (orig_new - sum coeffs * orig) / pivot
  FieldVector row(width_, field_.zero());
  for (std::size_t c = 0; c < width_; ++c) {
    if (red.residual[c].is_zero()) continue;
    row[c] = red.residual[c] * inv;
    ++field_ops_;
  }
  FieldVector hist(idx + 1, field_.zero());
  for (std::size_t k = 0; k < idx; ++k) {
    if (red.coeffs[k].is_zero()) continue;
    hist[k] = -(red.coeffs[k] * inv);
    ++field_ops_;
  }
  hist[idx] = inv;

  for (std::size_t r = 0; r < rows_.size(); ++r) {
    history_[r].push_back(field_.zero());
    const FieldElement f = rows_[r][p];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < width_; ++c) {
      if (row[c].is_zero()) continue;
      rows_[r][c] -= f * row[c];
      field_ops_ += 2;
    }
    for (std::size_t k = 0; k <= idx; ++k) {
      if (hist[k].is_zero()) continue;
      history_[r][k] -= f * hist[k];
      field_ops_ += 2;
    }
  }

  rows_.push_back(std::move(row));
  pivots_.push_back(p);
  history_.push_back(std::move(hist));
  tags_.push_back(tag);
  return idx;
}

std::optional<std::size_t> EchelonAccumulator::add_if_independent(std::span<const FieldElement> v, std::size_t tag) {
  Reduction red = reduce(v);
  if (red.is_zero()) return std::nullopt;
  return insert(red, tag);
}

bool EchelonAccumulator::in_span(std::span<const FieldElement> v) { return reduce(v).is_zero(); }

bool EchelonAccumulator::is_reduced_echelon() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (!rows_[r][p].is_one()) return false;
    for (std::size_t c = 0; c < p; ++c) {
      if (!rows_[r][c].is_zero()) return false;
    }
    for (std::size_t q = 0; q < rows_.size(); ++q) {
      if (q != r && !rows_[q][p].is_zero()) return false;
    }
  }
  return true;
}

}  // namespace vanishing
