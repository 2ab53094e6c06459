#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "vanishing/oracles/oracles.hpp"

using namespace vanishing;
using testing::poly;
using testing::row;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_CASE("four points in five variables under lex") {
  const PointSet p = testing::example_points();
  const FieldSpec q = p.field();
  const OrderSpec lex = OrderSpec::standard(OrderKind::Lex, 5);
  for (Variant v : {Variant::Mmm, Variant::Abbott}) {
    const GroebnerResult r = bm(p, lex, v);
    CHECK(r.B == std::vector<Monomial>{Monomial({0, 0, 0, 0, 0}), Monomial({0, 0, 0, 0, 1}), Monomial({0, 0, 0, 0, 2}),
                                       Monomial({0, 0, 0, 0, 3})});
    REQUIRE(r.G.size() == 5);
    CHECK(r.G[0] == poly(lex, q, {{1, {0, 0, 0, 0, 4}}, {-2, {0, 0, 0, 0, 3}}, {-1, {0, 0, 0, 0, 2}}, {2, {0, 0, 0, 0, 1}}}));
    CHECK(r.G[1] == poly(lex, q, {{1, {0, 0, 0, 1}}, {-1, {}}}));
    CHECK(r.G[2] == poly(lex, q, {{1, {0, 0, 1}}, {-1, {0, 0, 0, 0, 2}}}));
    CHECK(r.G[3] == poly(lex, q, {{1, {0, 1}}, {-1, {0, 0, 0, 0, 1}}, {-1, {}}}));
    CHECK(r.G[4] == poly(lex, q, {{1, {1}}, {-1, {0, 0, 0, 0, 2}}, {-1, {}}}));
    CHECK(r.G[0].to_string() == "x5^4 - 2*x5^3 - x5^2 + 2*x5");
    CHECK(oracles::check_result(r, p).empty());
  }
}

TEST_CASE("single point") {
  const FieldSpec q = FieldSpec::rational();
  const PointSet p(q, 3, {row(q, {4, -1, 7})});
  const OrderSpec o = OrderSpec::standard(OrderKind::DegRevLex, 3);
  const GroebnerResult r = bm(p, o);
  CHECK(r.B == std::vector<Monomial>{Monomial::one(3)});
  REQUIRE(r.G.size() == 3);
  CHECK(r.G[0] == poly(o, q, {{1, {0, 0, 1}}, {-7, {}}}));
  CHECK(r.G[2] == poly(o, q, {{1, {1}}, {-4, {}}}));
}

TEST_CASE("points on a line need one variable") {
  const FieldSpec f = FieldSpec::prime(101);
  const PointSet p(f, 2, {row(f, {0, 0}), row(f, {1, 2}), row(f, {2, 4})});
  const OrderSpec lex = OrderSpec::standard(OrderKind::Lex, 2);
  const GroebnerResult r = bm(p, lex);
  CHECK(r.B == std::vector<Monomial>{Monomial({0, 0}), Monomial({0, 1}), Monomial({0, 2})});
  CHECK(oracles::check_result(r, p).empty());
  // x1 - x2/2 is in G
  bool found = false;
  for (const auto& g : r.G) found = found || (g.leading_monomial() == Monomial({1, 0}) && g.size() == 2);
  CHECK(found);
}

TEST_CASE("input validation") {
  const FieldSpec q = FieldSpec::rational();
  CHECK(code_of([&] { PointSet(q, 2, {}); }) == ErrorCode::EmptyPointSet);
  CHECK(code_of([&] { PointSet(q, 2, {row(q, {1, 2}), row(q, {1, 2, 3})}); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([&] { PointSet(q, 2, {row(q, {1, 2}), row(q, {3, 4}), row(q, {1, 2})}); }) ==
        ErrorCode::DuplicatePoints);
  const FieldSpec f = FieldSpec::prime(5);
  CHECK(code_of([&] { PointSet(q, 1, {row(f, {1})}); }) == ErrorCode::FieldMismatch);
  // 7 and 2 coincide mod 5
  CHECK(code_of([&] { PointSet(f, 1, {row(f, {7}), row(f, {2})}); }) == ErrorCode::DuplicatePoints);
  try {
    PointSet(q, 2, {row(q, {1, 2}), row(q, {1})});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
  const PointSet p(q, 2, {row(q, {1, 2})});
  CHECK(code_of([&] { bm(p, OrderSpec::standard(OrderKind::Lex, 3)); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("normal forms") {
  const PointSet p = testing::example_points();
  const OrderSpec lex = OrderSpec::standard(OrderKind::Lex, 5);
  const GroebnerResult r = bm(p, lex);
  const FieldSpec q = p.field();
  const Polynomial f = poly(lex, q, {{3, {2, 1, 0, 0, 0}}, {-1, {0, 0, 3, 0, 1}}, {5, {}}});
  const Polynomial nf = normal_form(f, r, p);
  CHECK(p.evaluation_vector(nf) == p.evaluation_vector(f));
  for (const auto& t : nf.terms()) CHECK(std::find(r.B.begin(), r.B.end(), t.mono) != r.B.end());
  for (const auto& g : r.G) CHECK(normal_form(g, r, p).is_zero());
  // x1 = x5^2 + 1 on P
  CHECK(normal_form(poly(lex, q, {{1, {1}}}), r, p) == poly(lex, q, {{1, {0, 0, 0, 0, 2}}, {1, {}}}));
}

TEST_CASE("property: both variants agree and satisfy the invariants") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    const FieldSpec f = seed % 2 ? FieldSpec::prime(32003) : FieldSpec::rational();
    const std::size_t n = 1 + rng() % 6, m = 1 + rng() % 15;
    const PointSet p = oracles::random_point_set(rng(), f, n, m);
    for (const OrderSpec& o : {OrderSpec::standard(OrderKind::DegRevLex, n), oracles::random_matrix_order(rng(), n, 3)}) {
      const GroebnerResult a = bm(p, o, Variant::Abbott);
      const GroebnerResult b = bm(p, o, Variant::Mmm);
      INFO("seed " << seed);
      CHECK(a.B == b.B);
      CHECK(a.G == b.G);
      CHECK(oracles::check_result(b, p) == "");
      for (const auto& g : b.G) CHECK(oracles::membership_by_evaluation(g, p));
      CHECK(b.stats.functional_calls == b.G.size() + m);
      CHECK(b.stats.l_max >= 1);
    }
  }
}

TEST_CASE("property: the Occ shortcut matches explicit divisibility") {
  std::size_t events = 0, skipped = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed + 1000);
    const FieldSpec f = FieldSpec::prime(32003);
    const std::size_t n = 1 + rng() % 5, m = 1 + rng() % 12;
    const PointSet p = oracles::random_point_set(rng(), f, n, m);
    const OrderSpec o = OrderSpec::standard(static_cast<OrderKind>(seed % 3), n);
    bm(p, o, Variant::Mmm, [&](const CandidateEvent& e) {
      ++events;
      skipped += e.skipped;
      const std::vector<Monomial> ini(e.ini_g.begin(), e.ini_g.end());
      CHECK(e.skipped == oracles::naive_divisibility_filter(e.t, {}, ini));
    });
  }
  CHECK(events > 0);
  CHECK(skipped > 0);
}

TEST_CASE("property: abbott never queues a multiple of a candidate or of ini(G)") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed + 2000);
    const FieldSpec f = FieldSpec::rational();
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 10;
    const PointSet p = oracles::random_point_set(rng(), f, n, m);
    bm(p, OrderSpec::standard(OrderKind::DegLex, n), Variant::Abbott, [&](const CandidateEvent& e) {
      const std::vector<Monomial> rest(e.remaining.begin(), e.remaining.end());
      const std::vector<Monomial> ini(e.ini_g.begin(), e.ini_g.end());
      CHECK_FALSE(oracles::naive_divisibility_filter(e.t, rest, ini));
    });
  }
}
