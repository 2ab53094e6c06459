#pragma once

// Slow, obviously-correct reference implementations and seeded generators for
// tests and `selftest`. Nothing here calls into the optimized merge or the
// candidate-list code.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vanishing/bm.hpp"
#include "vanishing/functional_system.hpp"

namespace vanishing::oracles {

using Tuple = std::vector<Integer>;

struct NaiveMerge {
  std::vector<Tuple> items;
  std::vector<std::size_t> deltas;  // recomputed from scratch, not counted
  std::uint64_t element_cmps = 0;
};

/// Two-finger merge of ascending lists comparing tuples entry by entry. Equal
/// tuples: the one from `b` goes first.
NaiveMerge naive_merge(const std::vector<Tuple>& a, const std::vector<Tuple>& b);

/// True iff some element of `list` or of `ini_g` divides t.
bool naive_divisibility_filter(const Monomial& t, const std::vector<Monomial>& list,
                               const std::vector<Monomial>& ini_g);

/// m distinct points of k^n with small coordinates (fractions over Q).
PointSet random_point_set(std::uint64_t seed, const FieldSpec& field, std::size_t n, std::size_t m);

/// Random admissible n x n integer matrix with entries in [-max_entry, max_entry].
OrderSpec random_matrix_order(std::uint64_t seed, std::size_t n, int max_entry);

bool membership_by_evaluation(const Polynomial& f, const PointSet& points);

/// Empty string when every invariant holds, else a description of the first
/// failure: |B| = m, B ascending order ideal, G ascending, monic with lead
/// outside B and tail inside B, leads pairwise indivisible, the border of B
/// covered by the leads, and every g vanishing on P.
std::string check_result(const GroebnerResult& result, const PointSet& points);

/// As check_result with psi(g) = 0 in place of vanishing, psi evaluated by
/// stepping along each exponent vector. |B| must equal `expected_rank`.
std::string check_functional_result(const GroebnerResult& result, const FunctionalSystem& sys,
                                    std::size_t expected_rank);

/// Rank of a list of vectors by plain Gaussian elimination.
std::size_t dense_rank(std::vector<FieldVector> rows, const FieldSpec& field);

/// The merge of Example 2 in the S-polynomial setting: n = 2s, a = {x_2^2 x_s}
/// and b = x_3 * (terms of x_1x_2 + ... + x_{n-1}x_n except x_1x_2), both as
/// ascending lists of negated degrevlex order vectors.
struct SpolyBench {
  std::size_t s = 0;
  std::size_t n = 0;
  std::size_t b_length = 0;
  std::uint64_t delta_element_cmps = 0;
  std::uint64_t delta_delta_cmps = 0;
  std::uint64_t naive_element_cmps = 0;
  bool outputs_agree = false;

  std::uint64_t delta_total() const { return delta_element_cmps + delta_delta_cmps; }
};

SpolyBench bench_spoly(std::size_t s);

}  // namespace vanishing::oracles
