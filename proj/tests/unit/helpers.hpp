#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "vanishing/bm.hpp"

namespace testing {

using namespace vanishing;

inline FieldVector row(const FieldSpec& f, std::initializer_list<long> v) {
  FieldVector p;
  for (long x : v) p.push_back(f.from_integer(x));
  return p;
}

inline Polynomial poly(const OrderSpec& order, const FieldSpec& f,
                       std::initializer_list<std::pair<long, std::vector<std::uint32_t>>> terms) {
  std::vector<Term> t;
  for (const auto& [c, e] : terms) {
    auto ex = e;
    ex.resize(order.arity(), 0);
    t.push_back({f.from_integer(c), Monomial(ex)});
  }
  return Polynomial::from_terms(order, std::move(t));
}

// The four points in five variables used throughout the tests.
inline PointSet example_points() {
  const FieldSpec q = FieldSpec::rational();
  return PointSet(q, 5,
                  {row(q, {1, 1, 0, 1, 0}), row(q, {2, 2, 1, 1, 1}), row(q, {2, 0, 1, 1, -1}), row(q, {5, 3, 4, 1, 2})});
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::uint32_t max_exp) {
  std::vector<std::uint32_t> e(n);
  for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (max_exp + 1));
  return Monomial(std::move(e));
}

inline FieldElement random_element(std::mt19937_64& rng, const FieldSpec& f) {
  FieldElement x = f.from_integer(static_cast<long>(rng() % 41) - 20);
  if (f.kind() == FieldKind::Rational) x /= f.from_integer(static_cast<long>(rng() % 7) + 1);
  return x;
}

}  // namespace testing
