#pragma once

// Exact coefficient arithmetic over Q and Z/p.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "vanishing/error.hpp"

namespace vanishing {

using Integer = mpz_class;
using Rational = mpq_class;

enum class FieldKind { Rational, Prime };

/// Residue class modulo a prime below 2^63, value kept in [0, modulus).
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// An element of Q (fully reduced, positive denominator) or of Z/p. Operations
/// between elements of different fields throw FieldMismatch.
class FieldElement {
 public:
  FieldElement() : value_(Rational(0)) {}
  explicit FieldElement(Rational q);
  explicit FieldElement(Residue r) : value_(r) {}

  bool is_rational() const noexcept { return std::holds_alternative<Rational>(value_); }
  bool is_zero() const;
  bool is_one() const;

  const Rational& rational() const { return std::get<Rational>(value_); }
  const Residue& residue() const { return std::get<Residue>(value_); }

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// "a/b" or "a" for rationals, the residue in decimal for prime fields.
  std::string to_string() const;

  /// Hash of the canonical representation.
  std::size_t hash() const;

 private:
  std::variant<Rational, Residue> value_;
};

inline FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement field_neg(const FieldElement& a) { return -a; }
inline FieldElement field_inv(const FieldElement& a) { return a.inverse(); }

class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec(); }
  /// Throws InvalidModulus unless `p` is a prime below 2^63.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  FieldElement zero() const { return from_integer(0); }
  FieldElement one() const { return from_integer(1); }
  FieldElement from_integer(const Integer& v) const;

  /// Parses "a/b" or "a" for Q, a decimal integer (reduced mod p) for Z/p.
  /// Throws ParseError on malformed text and DivisionByZero on "a/0".
  FieldElement parse(std::string_view text) const;

  bool contains(const FieldElement& e) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t modulus_ = 0;
};

}  // namespace vanishing
