#pragma once

// Vanishing ideals of finite point sets: reduced Groebner basis G and the
// monomial basis B of the quotient ring, computed by the Buchberger-Moeller
// algorithm. Two candidate-list strategies are provided:
//
//   abbott  - C2 pops the minimum; C5 inserts x_i*t only if it is not a
//             multiple of an element of L or of ini(G) (linear scans).
//   mmm     - C2' pops the whole run of equal minima and skips t when
//             |supp(t)| > Occ(t); C5' merges {x_1 t, ..., x_n t} into L with
//             the delta merge.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vanishing/delta_merge.hpp"
#include "vanishing/field.hpp"
#include "vanishing/functional_system.hpp"
#include "vanishing/linalg.hpp"
#include "vanishing/orders.hpp"
#include "vanishing/polynomial.hpp"

namespace vanishing {

/// m >= 1 pairwise distinct points of k^n.
class PointSet {
 public:
  /// Throws EmptyPointSet, ArityMismatch (naming the row), FieldMismatch or
  /// DuplicatePoints.
  PointSet(FieldSpec field, std::size_t arity, std::vector<FieldVector> points);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return points_.size(); }
  const FieldVector& point(std::size_t k) const { return points_[k]; }
  const std::vector<FieldVector>& points() const noexcept { return points_; }

  /// x_var(P) = (p_1[var], ..., p_m[var]).
  FieldVector coordinate_vector(std::size_t var) const;
  /// f(P) by direct evaluation.
  FieldVector evaluation_vector(const Polynomial& f) const;
  FieldVector evaluation_vector(const Monomial& t) const;

 private:
  FieldSpec field_;
  std::size_t arity_;
  std::vector<FieldVector> points_;
};

enum class Variant { Abbott, Mmm };

struct RunStats {
  std::uint64_t element_cmps = 0;
  std::uint64_t delta_cmps = 0;
  std::uint64_t field_ops = 0;
  std::uint64_t functional_calls = 0;
  std::uint64_t l_max = 0;
  std::uint64_t reduced_arity = 0;  // variables the candidate list worked in
  std::uint64_t relations = 0;      // linear relations found by projection
  double wall_time_ms = 0.0;
};

struct GroebnerResult {
  std::size_t arity = 0;
  OrderSpec order;
  /// Reduced Groebner basis, monic, ascending by leading monomial.
  std::vector<Polynomial> G;
  /// Quotient basis, ascending.
  std::vector<Monomial> B;
  RunStats stats;
};

/// One C2/C2' decision, reported to an optional observer.
struct CandidateEvent {
  const Monomial& t;
  std::size_t occ;   // copies of t popped together (always 1 for abbott)
  bool skipped;      // t recognised as a multiple of ini(G)
  std::span<const Monomial> ini_g;
  std::span<const Monomial> remaining;  // L after popping t
};

using CandidateObserver = std::function<void(const CandidateEvent&)>;

/// Both variants return identical G and B. Throws ArityMismatch when the order
/// and the points disagree on n.
GroebnerResult bm(const PointSet& points, const OrderSpec& order, Variant variant = Variant::Mmm,
                  const CandidateObserver& observer = {});

/// True iff the minimal candidate t, present Occ(t) times in L, is a multiple
/// of an element of ini(G): |supp(t)| > Occ(t).
inline bool occ_skip(const Monomial& t, std::size_t occ) { return t.support_size() > occ; }

/// Expresses evaluation vectors in the coordinates of B(P).
class QuotientBasis {
 public:
  QuotientBasis(const PointSet& points, std::vector<Monomial> basis, OrderSpec order);
  /// Adopts an accumulator whose originals are the B(P) rows in basis order.
  QuotientBasis(std::vector<Monomial> basis, OrderSpec order, EchelonAccumulator echelon);

  const std::vector<Monomial>& basis() const noexcept { return basis_; }

  /// Coefficients c with v = sum c_k B_k(P); throws InternalInvariant if v is
  /// outside the span.
  FieldVector coordinates(std::span<const FieldElement> v);
  /// sum c_k B_k as a polynomial sorted under the order.
  Polynomial combination(std::span<const FieldElement> coeffs) const;

  std::uint64_t field_ops() const noexcept { return echelon_.field_ops(); }

 private:
  std::vector<Monomial> basis_;
  OrderSpec order_;
  EchelonAccumulator echelon_;
};

/// The B-supported representative of f modulo I(P).
Polynomial normal_form(const Polynomial& f, const GroebnerResult& result, const PointSet& points);

namespace detail {

struct EngineRun {
  GroebnerResult result;
  EchelonAccumulator echelon;  // rows span B-values; originals are B in order
};

/// psi(1) = (1, ..., 1), psi(x_i t) = psi(t) * x_i(P) coordinate-wise.
class PointEvaluation final : public FunctionalSystem {
 public:
  explicit PointEvaluation(const PointSet& points);
  const FieldSpec& field() const override { return field_; }
  std::size_t width() const override { return width_; }
  std::size_t arity() const override { return coords_.size(); }
  FieldVector psi_one() const override;
  FieldVector step(const FieldVector& psi_t, std::size_t var) const override;

 private:
  FieldSpec field_;
  std::size_t width_;
  std::vector<FieldVector> coords_;  // coords_[var] = x_var(P)
};

EngineRun run_mmm(const FunctionalSystem& sys, const OrderSpec& order, const CandidateObserver& observer);
EngineRun run_abbott(const FunctionalSystem& sys, const OrderSpec& order, const CandidateObserver& observer);

}  // namespace detail

}  // namespace vanishing
