#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "vanishing/functionals.hpp"
#include "vanishing/oracles/oracles.hpp"

using namespace vanishing;
using testing::row;

namespace {

FieldMatrix zero_matrix(const FieldSpec& f, std::size_t m) { return FieldMatrix(m, FieldVector(m, f.zero())); }

FieldMatrix mul(const FieldMatrix& a, const FieldMatrix& b, const FieldSpec& f) {
  FieldMatrix c = zero_matrix(f, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// n commuting matrices: polynomials of degree <= 2 in one random matrix.
MatrixActionSystem random_commuting_system(std::mt19937_64& rng, const FieldSpec& f, std::size_t n, std::size_t m) {
  FieldMatrix a = zero_matrix(f, m);
  for (auto& r : a)
    for (auto& x : r) x = rng() % 3 ? f.zero() : testing::random_element(rng, f);
  const FieldMatrix a2 = mul(a, a, f);
  std::vector<FieldMatrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement c0 = testing::random_element(rng, f), c1 = testing::random_element(rng, f),
                       c2 = rng() % 2 ? f.zero() : testing::random_element(rng, f);
    FieldMatrix mi = zero_matrix(f, m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) mi[r][c] = c1 * a[r][c] + c2 * a2[r][c] + (r == c ? c0 : f.zero());
    }
    mats.push_back(std::move(mi));
  }
  FieldVector one(m);
  for (auto& x : one) x = testing::random_element(rng, f);
  return MatrixActionSystem(f, std::move(one), std::move(mats));
}

}  // namespace

TEST_CASE("point evaluation reproduces bm") {
  const PointSet p = testing::example_points();
  const OrderSpec lex = OrderSpec::standard(OrderKind::Lex, 5);
  const PointEvaluationSystem sys(p);
  const GroebnerResult a = algorithm1(sys, lex);
  const GroebnerResult b = bm(p, lex);
  CHECK(a.B == b.B);
  CHECK(a.G == b.G);
  CHECK(essential_variables_functional(sys, lex).ess == essential_variables(p, lex).ess);
  const GroebnerResult c = algorithm1_projected(sys, lex);
  CHECK(c.G == b.G);
}

TEST_CASE("every variable annihilated") {
  const FieldSpec q = FieldSpec::rational();
  const MatrixActionSystem sys(q, row(q, {1}), {zero_matrix(q, 1), zero_matrix(q, 1), zero_matrix(q, 1)});
  const OrderSpec o = OrderSpec::standard(OrderKind::DegLex, 3);
  const GroebnerResult r = algorithm1(sys, o);
  CHECK(r.B == std::vector<Monomial>{Monomial::one(3)});
  REQUIRE(r.G.size() == 3);
  for (const auto& g : r.G) CHECK(g.size() == 1);
  CHECK(essential_variables_functional(sys, o).ess.empty());
  CHECK(algorithm1_projected(sys, o).G == r.G);
}

TEST_CASE("order change through multiplication matrices") {
  const PointSet p = testing::example_points();
  const GroebnerResult lex = bm(p, OrderSpec::standard(OrderKind::Lex, 5));
  const MatrixActionSystem sys = multiplication_system(p, lex);
  CHECK(sys.width() == 4);
  const OrderSpec deglex = OrderSpec::standard(OrderKind::DegLex, 5);
  const GroebnerResult converted = algorithm1(sys, deglex);
  const GroebnerResult direct = bm(p, deglex);
  CHECK(converted.B.size() == 4);
  CHECK(converted.B == direct.B);
  CHECK(converted.G == direct.G);
  CHECK(oracles::check_result(converted, p).empty());
  CHECK(oracles::check_functional_result(converted, sys, 4).empty());
}

TEST_CASE("non-commuting matrices are rejected") {
  const FieldSpec q = FieldSpec::rational();
  const FieldMatrix a{row(q, {0, 1}), row(q, {0, 0})};
  const FieldMatrix b{row(q, {0, 0}), row(q, {1, 0})};
  try {
    MatrixActionSystem(q, row(q, {1, 0}), {a, b});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentSystem);
  }
  CHECK_THROWS_AS(MatrixActionSystem(q, row(q, {1, 0}), {FieldMatrix{row(q, {1})}}), Error);
}

TEST_CASE("values that do not span report their rank") {
  const FieldSpec q = FieldSpec::rational();
  // psi(1) = e1 and x1 kills it: only a one-dimensional span is reachable
  const MatrixActionSystem sys(q, row(q, {1, 0}), {zero_matrix(q, 2)});
  const GroebnerResult r = algorithm1(sys, OrderSpec::standard(OrderKind::Lex, 1));
  CHECK(r.B.size() == 1);
  CHECK(r.G.size() == 1);
  CHECK(oracles::check_functional_result(r, sys, 1).empty());
}

TEST_CASE("property: random commuting systems") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    const FieldSpec f = seed % 2 ? FieldSpec::prime(32003) : FieldSpec::rational();
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 6;
    const MatrixActionSystem sys = random_commuting_system(rng, f, n, m);
    const OrderSpec o = OrderSpec::standard(static_cast<OrderKind>(seed % 3), n);
    INFO("seed " << seed);

    // reachable span: Krylov closure of psi(1) under the matrices
    std::vector<FieldVector> span{sys.psi_one()};
    for (std::size_t round = 0; round < m; ++round) {
      const std::size_t size = span.size();
      for (std::size_t k = 0; k < size; ++k)
        for (std::size_t i = 0; i < n; ++i) span.push_back(sys.step(span[k], i));
    }
    const std::size_t rank = oracles::dense_rank(span, f);

    const GroebnerResult r = algorithm1(sys, o);
    CHECK(r.B.size() == rank);
    CHECK(oracles::check_functional_result(r, sys, rank) == "");
    CHECK(r.stats.functional_calls <= r.G.size() + m);

    const EssentialSet es = essential_variables_functional(sys, o);
    std::vector<FieldVector> lin{sys.psi_one()};
    for (std::size_t i = 0; i < n; ++i) lin.push_back(sys.step(sys.psi_one(), i));
    const std::size_t lin_rank = oracles::dense_rank(lin, f);
    if (!sys.psi_one().empty() && oracles::dense_rank({sys.psi_one()}, f) == 1) {
      CHECK(es.ess.size() == lin_rank - 1);
      const GroebnerResult pr = algorithm1_projected(sys, o);
      CHECK(pr.B == r.B);
      CHECK(pr.G == r.G);
    }
  }
}
