#include <algorithm>
#include <fstream>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "vanishing/oracles/oracles.hpp"

using namespace vanishing;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows) {
  IntMatrix a;
  for (auto& r : rows) a.emplace_back(r.begin(), r.end());
  return a;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

// Reference comparison straight from the definitions, no order vectors.
Ordering reference(OrderKind kind, const Monomial& a, const Monomial& b) {
  auto cmp = [](auto x, auto y) { return x < y ? Ordering::Less : y < x ? Ordering::Greater : Ordering::Equal; };
  const std::size_t n = a.arity();
  if (kind != OrderKind::Lex && a.degree() != b.degree()) return cmp(a.degree(), b.degree());
  if (kind == OrderKind::DegRevLex) {
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return cmp(b[i], a[i]);
    }
    return Ordering::Equal;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return cmp(a[i], b[i]);
  }
  return Ordering::Equal;
}

}  // namespace

TEST_CASE("monomials") {
  const Monomial m({2, 0, 1});
  CHECK(m.degree() == 3);
  CHECK(m.support_size() == 2);
  CHECK(m.to_string() == "x1^2*x3");
  CHECK(Monomial::one(3).to_string() == "1");
  CHECK(m.times_variable(1) == Monomial({2, 1, 1}));
  CHECK(Monomial({1, 0, 1}).divides(m));
  CHECK_FALSE(Monomial({0, 1, 0}).divides(m));
  CHECK(m * Monomial({0, 1, 0}) == Monomial({2, 1, 1}));
  CHECK(code_of([] { Monomial(std::vector<std::uint32_t>{0x7fffffffu}).times_variable(0); }) == ErrorCode::DegreeOverflow);
  CHECK(code_of([] { Monomial({0x7fffffffu, 1}); }) == ErrorCode::DegreeOverflow);
  CHECK(code_of([&] { (void)m.divides(Monomial(std::vector<std::uint32_t>{1})); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("order vectors of the standard kinds") {
  const Monomial m({1, 2, 3});
  CHECK(order_vector(OrderSpec::standard(OrderKind::Lex, 3), m) == OrderVector{1, 2, 3});
  CHECK(order_vector(OrderSpec::standard(OrderKind::DegLex, 3), m) == OrderVector{6, 1, 2});
  CHECK(order_vector(OrderSpec::standard(OrderKind::DegRevLex, 3), m) == OrderVector{6, -3, -2});
  CHECK(order_vector(OrderSpec::standard(OrderKind::Lex, std::vector<std::size_t>{2, 0, 1}), m) == OrderVector{3, 1, 2});
}

TEST_CASE("matrix versions of the standard orders") {
  const OrderSpec lex = OrderSpec::matrix(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const OrderSpec deglex = OrderSpec::matrix(mat({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}));
  const OrderSpec drl = OrderSpec::matrix(mat({{1, 1, 1}, {0, 0, -1}, {0, -1, 0}}));
  const Monomial m({4, 0, 5});
  CHECK(order_vector(lex, m) == OrderVector{4, 0, 5});
  CHECK(order_vector(deglex, m) == order_vector(OrderSpec::standard(OrderKind::DegLex, 3), m));
  CHECK(order_vector(drl, m) == order_vector(OrderSpec::standard(OrderKind::DegRevLex, 3), m));
  CHECK(varord(lex) == std::vector<std::size_t>{0, 1, 2});
  CHECK(varord(drl) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("matrix validation") {
  CHECK(code_of([] { OrderSpec::matrix(mat({{1, 1}, {2, 2}})); }) == ErrorCode::SingularMatrix);
  CHECK(code_of([] { OrderSpec::matrix(mat({{-1, 0}, {0, 1}})); }) == ErrorCode::NonAdmissibleColumn);
  CHECK(code_of([] { OrderSpec::matrix(mat({{0, 1}, {-1, 0}})); }) == ErrorCode::NonAdmissibleColumn);
  // singular is reported before admissibility
  CHECK(code_of([] { OrderSpec::matrix(mat({{-1, 1}, {-1, 1}})); }) == ErrorCode::SingularMatrix);
  CHECK(code_of([] { OrderSpec::matrix(mat({{1, 0}})); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { OrderSpec::standard(OrderKind::Lex, std::vector<std::size_t>{0, 0}); }) ==
        ErrorCode::InvalidOrder);
}

TEST_CASE("varord sorts matrix columns") {
  // columns (1,0) for x1, (1,1) for x2: x2 > x1
  const OrderSpec o = OrderSpec::matrix(mat({{1, 1}, {0, 1}}));
  CHECK(varord(o) == std::vector<std::size_t>{1, 0});
  CHECK(compare_monomials(o, Monomial({0, 1}), Monomial({1, 0})) == Ordering::Greater);
}

TEST_CASE("compare reports the first difference") {
  CompareCounter c;
  const OrderVector a{1, 2, 3}, b{1, 2, 4};
  CHECK(compare(a, b, &c) == CompareResult{Ordering::Less, 3});
  CHECK(c.element_cmps == 3);
  CHECK(compare(a, a) == CompareResult{Ordering::Equal, 4});
  CHECK(compare(b, a).ordering == Ordering::Greater);
}

TEST_CASE("numbits") {
  CHECK(numbits(0) == 2);
  CHECK(numbits(1) == 2);
  CHECK(numbits(-1) == 2);
  CHECK(numbits(2) == 3);
  CHECK(numbits(255) == 9);
  CHECK(numbits(-256) == 10);
}

TEST_CASE("parse_order") {
  CHECK(parse_order("lex", 3).to_string() == "lex");
  CHECK(parse_order("deglex:2,1,3", 3).var_perm() == std::vector<std::size_t>{1, 0, 2});
  CHECK(parse_order("degrevlex", 2).kind() == OrderKind::DegRevLex);
  CHECK(code_of([] { parse_order("grevlex", 3); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_order("lex:1,x,3", 3); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_order("lex:1,2", 3); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([] { parse_order("lex:1,1,2", 3); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { parse_order("matrix:/nonexistent/file", 3); }) == ErrorCode::ParseError);

  const std::string path = "orders_test_matrix.txt";
  std::ofstream(path) << "1 1 1\n0 0 -1\n0 -1 0\n";
  const OrderSpec o = parse_order("matrix:" + path, 3);
  CHECK(o.kind() == OrderKind::Matrix);
  CHECK(o.matrix_entries()[1][2] == -1);
  CHECK(code_of([&] { parse_order("matrix:" + path, 2); }) == ErrorCode::ArityMismatch);
  CHECK(code_of([] { parse_int_matrix("1 2\n3 z\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("property: standard orders match their definitions") {
  std::mt19937_64 rng(3);
  for (OrderKind kind : {OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex}) {
    const OrderSpec o = OrderSpec::standard(kind, 4);
    for (int k = 0; k < 2000; ++k) {
      const Monomial a = testing::random_monomial(rng, 4, 3);
      const Monomial b = testing::random_monomial(rng, 4, 3);
      CHECK(compare_monomials(o, a, b) == reference(kind, a, b));
    }
  }
}

TEST_CASE("property: incremental order vectors equal recomputed ones") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::vector<OrderSpec> orders{OrderSpec::standard(OrderKind::Lex, perm),
                                        OrderSpec::standard(OrderKind::DegLex, perm),
                                        OrderSpec::standard(OrderKind::DegRevLex, perm),
                                        oracles::random_matrix_order(rng(), n, 4)};
    for (const auto& o : orders) {
      const Monomial m = testing::random_monomial(rng, n, 4);
      const std::size_t var = rng() % n;
      OrderVector ov = order_vector(o, m);
      CHECK(order_vector_step(o, ov, var) == order_vector(o, m.times_variable(var)));
      order_vector_step_inplace(o, ov, var);
      CHECK(ov == order_vector(o, m.times_variable(var)));
    }
  }
}

TEST_CASE("property: orders are admissible") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 1 + rng() % 5;
    const OrderSpec o = oracles::random_matrix_order(rng(), n, 3);
    CHECK_NOTHROW(validate_order(o));
    for (int k = 0; k < 50; ++k) {
      const Monomial a = testing::random_monomial(rng, n, 3);
      const Monomial b = testing::random_monomial(rng, n, 3);
      const Monomial c = testing::random_monomial(rng, n, 3);
      CHECK(compare_monomials(o, a, b) == compare_monomials(o, a * c, b * c));
      if (!a.is_one()) CHECK(compare_monomials(o, Monomial::one(n), a) == Ordering::Less);
    }
    // varord is consistent with comparing the variables themselves
    const auto perm = varord(o);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      CHECK(compare_monomials(o, Monomial::variable(n, perm[k]), Monomial::variable(n, perm[k + 1])) ==
            Ordering::Greater);
    }
  }
}

TEST_CASE("property: restricted orders agree on the kept variables") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + rng() % 5;
    const OrderSpec o = round % 2 ? oracles::random_matrix_order(rng(), n, 3)
                                  : OrderSpec::standard(static_cast<OrderKind>(rng() % 3), n);
    const auto perm = varord(o);
    std::vector<std::size_t> ess;
    for (auto v : perm) {
      if (rng() % 2) ess.push_back(v);
    }
    const OrderSpec sub = restrict_order(o, ess);
    CHECK(sub.arity() == ess.size());
    for (int k = 0; k < 60 && !ess.empty(); ++k) {
      const Monomial a = testing::random_monomial(rng, ess.size(), 3);
      const Monomial b = testing::random_monomial(rng, ess.size(), 3);
      std::vector<std::uint32_t> ea(n, 0), eb(n, 0);
      for (std::size_t j = 0; j < ess.size(); ++j) {
        ea[ess[j]] = a[j];
        eb[ess[j]] = b[j];
      }
      CHECK(compare_monomials(sub, a, b) == compare_monomials(o, Monomial(ea), Monomial(eb)));
    }
    if (ess.size() >= 2) {
      std::vector<std::size_t> wrong(ess.rbegin(), ess.rend());
      CHECK(code_of([&] { restrict_order(o, wrong); }) == ErrorCode::InvalidOrder);
    }
  }
}
