#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "vanishing/linalg.hpp"
#include "vanishing/oracles/oracles.hpp"

using namespace vanishing;

TEST_CASE("reduce, insert and coefficients") {
  const FieldSpec q = FieldSpec::rational();
  EchelonAccumulator acc(q, 3);
  CHECK(acc.add_if_independent(testing::row(q, {1, 1, 1}), 10) == std::optional<std::size_t>(0));
  CHECK(acc.add_if_independent(testing::row(q, {0, 1, 2}), 20) == std::optional<std::size_t>(1));
  CHECK_FALSE(acc.add_if_independent(testing::row(q, {2, 3, 4}), 30).has_value());
  CHECK(acc.rank() == 2);
  CHECK(acc.tag(1) == 20);
  CHECK(acc.is_reduced_echelon());

  const Reduction r = acc.reduce(testing::row(q, {2, 3, 4}));
  CHECK(r.is_zero());
  CHECK(r.coeffs == testing::row(q, {2, 1}));
  CHECK(acc.in_span(testing::row(q, {1, 0, -1})));
  CHECK_FALSE(acc.in_span(testing::row(q, {0, 0, 1})));

  try {
    acc.insert(r, 0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsertZero);
  }
  CHECK_THROWS_AS(acc.reduce(testing::row(q, {1, 2})), Error);
  CHECK(acc.field_ops() > 0);
}

TEST_CASE("property: v = residual + sum coeffs * originals, rank matches elimination") {
  for (const FieldSpec f : {FieldSpec::rational(), FieldSpec::prime(32003), FieldSpec::prime(3)}) {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 40; ++round) {
      const std::size_t width = 1 + rng() % 8;
      EchelonAccumulator acc(f, width);
      std::vector<FieldVector> originals, all;
      for (int k = 0; k < 12; ++k) {
        FieldVector v(width);
        if (!originals.empty() && rng() % 3 == 0) {
          // a combination of earlier vectors
          for (auto& x : v) x = f.zero();
          for (const auto& o : originals) {
            const FieldElement c = testing::random_element(rng, f);
            for (std::size_t j = 0; j < width; ++j) v[j] += c * o[j];
          }
        } else {
          for (auto& x : v) x = rng() % 3 == 0 ? f.zero() : testing::random_element(rng, f);
        }
        all.push_back(v);
        const Reduction r = acc.reduce(v);
        FieldVector back = r.residual;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
          for (std::size_t j = 0; j < width; ++j) back[j] += r.coeffs[i] * originals[i][j];
        }
        CHECK(back == v);
        if (!r.is_zero()) {
          acc.insert(r, k);
          originals.push_back(v);
        }
        CHECK(acc.is_reduced_echelon());
      }
      CHECK(acc.rank() == oracles::dense_rank(all, f));
    }
  }
}
