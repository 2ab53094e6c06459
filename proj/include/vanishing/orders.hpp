#pragma once

// Monomials, term orders given by standard kinds or integer matrices, and the
// order vectors that turn monomial comparison into lexicographic comparison.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vanishing/field.hpp"

namespace vanishing {

/// Exponent vector x^a = x_1^a_1 ... x_n^a_n. Variables are 0-based internally;
/// text output uses x_1..x_n.
class Monomial {
 public:
  static constexpr std::uint64_t kMaxDegree = (std::uint64_t{1} << 31) - 1;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial one(std::size_t arity) { return Monomial(arity); }
  static Monomial variable(std::size_t arity, std::size_t i);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  std::size_t support_size() const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }

  /// x_i * this; throws DegreeOverflow past kMaxDegree.
  Monomial times_variable(std::size_t i) const;
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

using IntMatrix = std::vector<std::vector<Integer>>;
using OrderVector = std::vector<Integer>;

enum class OrderKind { Lex, DegLex, DegRevLex, Matrix };

enum class Ordering { Less, Equal, Greater };

/// A term order. For standard kinds `var_perm` lists (i_1, ..., i_n) with
/// x_{i_1} > ... > x_{i_n}; for Matrix kind `matrix` is the n x n integer
/// matrix and `var_perm` is derived from its columns.
class OrderSpec {
 public:
  static OrderSpec standard(OrderKind kind, std::size_t arity);
  /// `perm` is 0-based and must be a permutation; throws InvalidOrder otherwise.
  static OrderSpec standard(OrderKind kind, std::vector<std::size_t> perm);
  /// Validates the matrix (see validate_order).
  static OrderSpec matrix(IntMatrix a);

  OrderKind kind() const noexcept { return kind_; }
  bool is_standard() const noexcept { return kind_ != OrderKind::Matrix; }
  std::size_t arity() const noexcept { return perm_.size(); }
  const std::vector<std::size_t>& var_perm() const noexcept { return perm_; }
  /// rank_of(i) = position of x_i in var_perm (0 = largest variable).
  std::size_t rank_of(std::size_t var) const { return rank_[var]; }
  const IntMatrix& matrix_entries() const noexcept { return matrix_; }
  /// Length of the order vectors this spec produces.
  std::size_t vector_length() const noexcept { return perm_.size(); }

  /// "lex", "deglex:2,1,3", "matrix" (matrix entries are not inlined).
  std::string to_string() const;

 private:
  OrderKind kind_ = OrderKind::Lex;
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> rank_;
  IntMatrix matrix_;
};

/// Checks a Matrix spec: exact rank n over Q (SingularMatrix) and first nonzero
/// entry of every column positive (NonAdmissibleColumn). Standard specs pass.
const OrderSpec& validate_order(const OrderSpec& spec);
void validate_order_matrix(const IntMatrix& a);

OrderVector order_vector(const OrderSpec& spec, const Monomial& m);

/// order_vector(spec, x_i * m) from ov = order_vector(spec, m). Standard kinds
/// touch at most two entries; Matrix kind adds column i.
OrderVector order_vector_step(const OrderSpec& spec, const OrderVector& ov, std::size_t var);
void order_vector_step_inplace(const OrderSpec& spec, OrderVector& ov, std::size_t var);

/// Counts integer comparisons: one per entry pair inspected.
struct CompareCounter {
  std::uint64_t element_cmps = 0;
};

struct CompareResult {
  Ordering ordering;
  /// 1-based index of the first differing entry, length + 1 when equal.
  std::size_t delta;

  friend bool operator==(const CompareResult&, const CompareResult&) = default;
};

/// Lexicographic comparison of two order vectors of equal length.
CompareResult compare(std::span<const Integer> a, std::span<const Integer> b,
                      CompareCounter* counter = nullptr);

/// Compares monomials under `spec` by building both order vectors.
Ordering compare_monomials(const OrderSpec& spec, const Monomial& a, const Monomial& b,
                           CompareCounter* counter = nullptr);

/// (i_1, ..., i_n) with x_{i_1} > ... > x_{i_n}. Standard kinds return their
/// permutation; Matrix kind sorts columns descending lexicographically.
std::vector<std::size_t> varord(const OrderSpec& spec);

/// The order induced on the variables `ess`, given sorted descending under
/// `spec`. Variable k of the result stands for x_{ess[k]}.
OrderSpec restrict_order(const OrderSpec& spec, std::span<const std::size_t> ess);

/// Bits needed to write `a` with a sign bit: 2 for zero, floor(log2|a|) + 2 otherwise.
std::uint64_t numbits(const Integer& a);

/// Parses `lex[:i1,...]`, `deglex[:...]`, `degrevlex[:...]` (1-based indices)
/// or `matrix:<path>` where the file holds n rows of n integers.
OrderSpec parse_order(std::string_view text, std::size_t arity);

/// Reads an integer grid: one row per line, entries separated by whitespace.
IntMatrix parse_int_matrix(std::string_view text);

}  // namespace vanishing
