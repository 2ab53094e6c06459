#pragma once

#include <span>
#include <string>
#include <vector>

#include "vanishing/field.hpp"
#include "vanishing/orders.hpp"

namespace vanishing {

struct Term {
  FieldElement coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with terms strictly descending under the order it was
/// built with and no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  /// Combines like terms, drops zeros and sorts descending under `order`.
  static Polynomial from_terms(const OrderSpec& order, std::vector<Term> terms);
  /// Trusts the caller: terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  /// Sum of the two polynomials, re-sorted under `order`.
  static Polynomial add(const OrderSpec& order, const Polynomial& a, const Polynomial& b);

  /// "x5^4 - 2*x5^3 - x5^2 + 2*x5".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// Direct evaluation x^a(p) by repeated multiplication.
FieldElement evaluate(const Monomial& m, std::span<const FieldElement> point, const FieldSpec& field);
FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point, const FieldSpec& field);

}  // namespace vanishing
