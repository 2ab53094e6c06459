#include "vanishing/oracles/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "vanishing/delta_merge.hpp"
#include "vanishing/functionals.hpp"
#include "vanishing/oracles/oracles.hpp"
#include "vanishing/projection.hpp"

namespace vanishing::oracles {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void finish(CriterionResult& r, Clock::time_point start, bool ok) {
  r.seconds = seconds_since(start);
  r.pass = ok && r.seconds < r.limit_seconds;
  if (ok && !r.pass) r.detail += "; over the time limit";
}

Polynomial poly(const OrderSpec& order, const FieldSpec& field, std::size_t n,
                std::vector<std::pair<long, std::vector<std::uint32_t>>> terms) {
  std::vector<Term> t;
  for (auto& [c, e] : terms) {
    if (e.size() != n) e.resize(n, 0);
    t.push_back({field.from_integer(c), Monomial(e)});
  }
  return Polynomial::from_terms(order, std::move(t));
}

bool same(const GroebnerResult& x, const GroebnerResult& y) { return x.B == y.B && x.G == y.G; }

std::string describe(std::uint64_t seed, const std::string& what) {
  return what + " (seed " + std::to_string(seed) + ")";
}

struct CorpusCase {
  std::uint64_t seed;
  PointSet points;
  std::vector<OrderSpec> orders;
};

CorpusCase make_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FieldSpec field = (rng() % 2 == 0) ? FieldSpec::rational() : FieldSpec::prime(32003);
  const std::size_t n = 1 + rng() % 10;
  std::size_t m;
  if (n >= 2 && rng() % 2 == 0) {
    m = 1 + rng() % (n - 1);  // m < n
  } else {
    m = 1 + rng() % 30;
  }
  PointSet base = random_point_set(rng(), field, n, m);
  // Sometimes tie a coordinate to another one so relations appear even for m >= n.
  std::vector<FieldVector> pts = base.points();
  if (n >= 2 && rng() % 3 == 0) {
    const std::size_t dst = rng() % n;
    const std::size_t src = (dst + 1 + rng() % (n - 1)) % n;
    const FieldElement c = field.from_integer(static_cast<long>(rng() % 5) - 2);
    for (auto& p : pts) p[dst] = p[src] + c;
  }
  std::vector<OrderSpec> orders{OrderSpec::standard(OrderKind::Lex, n), OrderSpec::standard(OrderKind::DegLex, n),
                                OrderSpec::standard(OrderKind::DegRevLex, n), random_matrix_order(rng(), n, 3)};
  return CorpusCase{seed, PointSet(field, n, std::move(pts)), std::move(orders)};
}

// Tying coordinates can merge points; such draws are skipped.
std::vector<CorpusCase> make_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<CorpusCase> out;
  std::uint64_t s = seed;
  while (out.size() < count) {
    try {
      out.push_back(make_case(s));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DuplicatePoints) throw;
    }
    ++s;
  }
  return out;
}

std::vector<Tuple> random_sorted_tuples(std::mt19937_64& rng, std::size_t n, std::size_t len) {
  std::vector<Tuple> out(len, Tuple(n));
  for (auto& t : out) {
    for (auto& e : t) e = static_cast<long>(rng() % 3);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CriterionResult check_golden_example() {
  CriterionResult r{1, "golden example in 5 variables", false, {}, 0.0, 1.0};
  const auto start = Clock::now();
  const FieldSpec q = FieldSpec::rational();
  auto row = [&](std::vector<long> v) {
    FieldVector p;
    for (long x : v) p.push_back(q.from_integer(x));
    return p;
  };
  const PointSet points(q, 5, {row({1, 1, 0, 1, 0}), row({2, 2, 1, 1, 1}), row({2, 0, 1, 1, -1}), row({5, 3, 4, 1, 2})});
  const OrderSpec lex = OrderSpec::standard(OrderKind::Lex, 5);

  std::vector<Monomial> want_b;
  for (std::uint32_t k = 0; k < 4; ++k) want_b.push_back(Monomial({0, 0, 0, 0, k}));
  const std::vector<Polynomial> want_g{
      poly(lex, q, 5, {{1, {0, 0, 0, 0, 4}}, {-2, {0, 0, 0, 0, 3}}, {-1, {0, 0, 0, 0, 2}}, {2, {0, 0, 0, 0, 1}}}),
      poly(lex, q, 5, {{1, {0, 0, 0, 1, 0}}, {-1, {}}}),
      poly(lex, q, 5, {{1, {0, 0, 1, 0, 0}}, {-1, {0, 0, 0, 0, 2}}}),
      poly(lex, q, 5, {{1, {0, 1, 0, 0, 0}}, {-1, {0, 0, 0, 0, 1}}, {-1, {}}}),
      poly(lex, q, 5, {{1, {1, 0, 0, 0, 0}}, {-1, {0, 0, 0, 0, 2}}, {-1, {}}}),
  };

  std::ostringstream why;
  bool ok = true;
  for (ProjectMode mode : {ProjectMode::Off, ProjectMode::On}) {
    for (Variant v : {Variant::Mmm, Variant::Abbott}) {
      const GroebnerResult res = compute_basis(points, lex, v, mode);
      if (res.B != want_b || res.G != want_g) {
        ok = false;
        why << "basis mismatch (project " << (mode == ProjectMode::On ? "on" : "off") << "); ";
      }
    }
  }

  const EssentialSet es = essential_variables(points, lex);
  if (es.ess != std::vector<std::size_t>{2, 4}) {
    ok = false;
    why << "Ess differs; ";
  }
  const PointSet sub = project(points, es);
  const std::vector<FieldVector> want_pi{row({0, 0}), row({1, 1}), row({1, -1}), row({4, 2})};
  if (sub.points() != want_pi) {
    ok = false;
    why << "projected points differ; ";
  }
  const OrderSpec sub_order = restrict_order(lex, es.ess);
  const GroebnerResult sub_res = bm(sub, sub_order);
  const std::vector<Polynomial> want_sub{
      poly(sub_order, q, 2, {{1, {0, 4}}, {-2, {0, 3}}, {-1, {0, 2}}, {2, {0, 1}}}),
      poly(sub_order, q, 2, {{1, {1, 0}}, {-1, {0, 2}}}),
  };
  if (sub_res.G != want_sub) {
    ok = false;
    why << "projected basis differs; ";
  }
  r.detail = ok ? "B, G, Ess, pi(P) and G' match" : why.str();
  finish(r, start, ok);
  return r;
}

CriterionResult check_merge_example() {
  CriterionResult r{2, "merge example", false, {}, 0.0, 0.1};
  const auto start = Clock::now();
  auto tup = [](std::vector<long> v) {
    Tuple t;
    for (long x : v) t.push_back(x);
    return t;
  };
  const std::vector<Tuple> a{tup({1, 0, 2, 2, 0}), tup({1, 0, 3, 0, 0}), tup({2, 0, 0, 1, 0}),
                             tup({2, 1, 0, 0, 1}), tup({2, 1, 0, 2, 1}), tup({3, 0, 0, 0, 0})};
  const std::vector<Tuple> b{tup({1, 0, 0, 0, 0}), tup({1, 0, 2, 0, 0}), tup({2, 1, 0, 1, 1}), tup({2, 1, 0, 2, 1})};
  const std::vector<Tuple> want{b[0], b[1], a[0], a[1], a[2], a[3], b[2], b[3], a[4], a[5]};
  const std::vector<std::size_t> want_delta{3, 4, 3, 1, 2, 4, 4, 6, 1};

  auto merged = merge(DeltaList<Integer>::from_tuples(5, a), DeltaList<Integer>::from_tuples(5, b));
  const NaiveMerge naive = naive_merge(a, b);
  const bool ok = merged.keys() == want && merged.deltas() == want_delta && naive.items == want &&
                  naive.deltas == want_delta;
  std::ostringstream d;
  d << "deltas";
  for (auto x : merged.deltas()) d << ' ' << x;
  d << ", element_cmps " << merged.counters().element_cmps << ", delta_cmps " << merged.counters().delta_cmps;
  r.detail = d.str();
  finish(r, start, ok);
  return r;
}

CriterionResult check_spoly_counts() {
  CriterionResult r{3, "S-polynomial merge counters", false, {}, 0.0, 1.0};
  const auto start = Clock::now();
  const SpolyBench b10 = bench_spoly(10);
  const SpolyBench b50 = bench_spoly(50);
  const SpolyBench b100 = bench_spoly(100);

  const bool delta_ok = b10.delta_total() <= 29;
  const bool naive_ok = b10.naive_element_cmps == 96;
  const double delta_ratio = double(b100.delta_total()) / double(b50.delta_total());
  const double naive_ratio = double(b100.naive_element_cmps) / double(b50.naive_element_cmps);
  const bool growth_ok = delta_ratio < 2.5 && naive_ratio > 3.5;
  const bool agree = b10.outputs_agree && b50.outputs_agree && b100.outputs_agree;

  char buf[400];
  std::snprintf(buf, sizeof buf,
                "s=10: delta %llu+%llu=%llu (<=29 %s), naive %llu (==96 %s); ratio s=100/s=50: delta %.2f, naive %.2f "
                "(%s); outputs %s",
                (unsigned long long)b10.delta_element_cmps, (unsigned long long)b10.delta_delta_cmps,
                (unsigned long long)b10.delta_total(), delta_ok ? "ok" : "FAIL",
                (unsigned long long)b10.naive_element_cmps, naive_ok ? "ok" : "FAIL", delta_ratio, naive_ratio,
                growth_ok ? "ok" : "FAIL", agree ? "agree" : "DIFFER");
  r.detail = buf;
  finish(r, start, delta_ok && naive_ok && growth_ok && agree);
  return r;
}

CriterionResult check_merge_bound(std::uint64_t seed) {
  CriterionResult r{4, "merge comparison bound", false, {}, 0.0, 10.0};
  const auto start = Clock::now();
  constexpr std::size_t kInstances = 1000;
  std::string failure;
  std::uint64_t worst_slack = UINT64_MAX;
  for (std::size_t k = 0; k < kInstances && failure.empty(); ++k) {
    const std::uint64_t s = seed + k;
    std::mt19937_64 rng(s);
    const std::size_t n = 1 + rng() % 12;
    const std::vector<Tuple> a = random_sorted_tuples(rng, n, rng() % 61);
    const std::vector<Tuple> b = random_sorted_tuples(rng, n, rng() % 61);
    auto merged = merge(DeltaList<Integer>::from_tuples(n, a), DeltaList<Integer>::from_tuples(n, b));
    const NaiveMerge naive = naive_merge(a, b);
    const std::uint64_t bound = std::max(a.size(), b.size()) + std::min(a.size(), b.size()) * n;
    if (merged.counters().element_cmps > bound) failure = describe(s, "bound exceeded");
    if (merged.keys() != naive.items || merged.deltas() != naive.deltas) failure = describe(s, "differs from oracle");
    worst_slack = std::min<std::uint64_t>(worst_slack, bound - std::min(bound, merged.counters().element_cmps));
  }
  r.detail = failure.empty() ? std::to_string(kInstances) + " instances, minimum slack " + std::to_string(worst_slack)
                             : failure;
  finish(r, start, failure.empty());
  return r;
}

std::vector<CriterionResult> check_corpus(std::uint64_t seed) {
  CriterionResult c5{5, "abbott and mmm agree on random point sets", false, {}, 0.0, 60.0};
  CriterionResult c6{6, "projection agrees with direct runs for m < n", false, {}, 0.0, 60.0};
  CriterionResult c7{7, "|G| <= n + min(n, m-1)*m + 1", false, {}, 0.0, 60.0};
  constexpr std::size_t kSets = 200;

  auto t0 = Clock::now();
  const std::vector<CorpusCase> corpus = make_corpus(seed, kSets);
  const double setup = seconds_since(t0);

  std::string fail5, fail6, fail7;
  std::size_t runs5 = 0, runs6 = 0, runs7 = 0, rational = 0;
  double time5 = setup, time6 = 0.0;
  auto bound_check = [&](const CorpusCase& c, const GroebnerResult& res) {
    ++runs7;
    const std::size_t n = c.points.arity(), m = c.points.size();
    if (res.G.size() > n + std::min(n, m - 1) * m + 1 && fail7.empty()) {
      fail7 = describe(c.seed, "|G| = " + std::to_string(res.G.size()) + " with n = " + std::to_string(n) +
                                   ", m = " + std::to_string(m));
    }
  };

  for (const auto& c : corpus) {
    if (c.points.field().kind() == FieldKind::Rational) ++rational;
    const std::size_t n = c.points.arity(), m = c.points.size();
    for (const auto& order : c.orders) {
      auto t = Clock::now();
      const GroebnerResult mmm = bm(c.points, order, Variant::Mmm);
      const GroebnerResult abb = bm(c.points, order, Variant::Abbott);
      ++runs5;
      if (fail5.empty()) {
        if (!same(mmm, abb)) fail5 = describe(c.seed, "variants differ under " + order.to_string());
        std::string err = check_result(mmm, c.points);
        if (!err.empty()) fail5 = describe(c.seed, err);
      }
      time5 += seconds_since(t);
      bound_check(c, mmm);
      bound_check(c, abb);

      if (m >= n) continue;
      t = Clock::now();
      const GroebnerResult proj = bm_projected(c.points, order);
      const EssentialSet es = essential_variables(c.points, order);
      ++runs6;
      if (fail6.empty()) {
        if (!same(proj, mmm)) fail6 = describe(c.seed, "projected run differs under " + order.to_string());
        if (es.ess.size() > std::min(m - 1, n)) fail6 = describe(c.seed, "|Ess| too large");
        const std::set<std::size_t> ess(es.ess.begin(), es.ess.end());
        for (const auto& b : mmm.B) {
          for (std::size_t i = 0; i < n; ++i) {
            if (b[i] != 0 && !ess.count(i)) fail6 = describe(c.seed, "supp(B) not inside Ess");
          }
        }
      }
      time6 += seconds_since(t);
      bound_check(c, proj);
    }
  }

  c5.detail = fail5.empty() ? std::to_string(kSets) + " point sets (" + std::to_string(rational) +
                                  " over Q), " + std::to_string(runs5) + " order runs, invariants hold"
                            : fail5;
  c5.seconds = time5;
  c5.pass = fail5.empty() && time5 < c5.limit_seconds;
  c6.detail = fail6.empty() ? std::to_string(runs6) + " projected runs equal the direct ones" : fail6;
  c6.seconds = time6;
  c6.pass = fail6.empty() && runs6 > 0 && time6 < c6.limit_seconds;
  c7.detail = fail7.empty() ? std::to_string(runs7) + " runs within the bound" : fail7;
  c7.seconds = 0.0;
  c7.pass = fail7.empty();
  return {c5, c6, c7};
}

CriterionResult check_functional_engine(std::uint64_t seed) {
  CriterionResult r{8, "functional engine matches BM", false, {}, 0.0, 30.0};
  const auto start = Clock::now();
  constexpr std::size_t kInstances = 100;
  std::string failure;
  std::size_t done = 0;
  for (std::uint64_t s = seed; done < kInstances && failure.empty(); ++s) {
    std::mt19937_64 rng(s);
    const FieldSpec field = (rng() % 2 == 0) ? FieldSpec::rational() : FieldSpec::prime(32003);
    const std::size_t n = 1 + rng() % 8;
    const std::size_t m = 1 + rng() % 20;
    const PointSet points = random_point_set(rng(), field, n, m);
    const OrderSpec order = (done % 4 == 3) ? random_matrix_order(rng(), n, 3)
                                            : OrderSpec::standard(static_cast<OrderKind>(done % 4), n);
    const PointEvaluationSystem sys(points);
    const GroebnerResult via_psi = algorithm1(sys, order);
    const GroebnerResult direct = bm(points, order, Variant::Mmm);
    if (!same(via_psi, direct)) failure = describe(s, "algorithm1 differs from bm");
    if (via_psi.stats.functional_calls > via_psi.G.size() + m) failure = describe(s, "too many functional calls");
    ++done;
  }
  r.detail = failure.empty() ? std::to_string(done) + " instances agree, calls <= |G| + m" : failure;
  finish(r, start, failure.empty());
  return r;
}

CriterionResult check_matrix_orders() {
  CriterionResult r{9, "matrix orders reproduce lex, deglex, degrevlex", false, {}, 0.0, 10.0};
  const auto start = Clock::now();
  auto m = [](std::vector<std::vector<long>> rows) {
    IntMatrix a;
    for (auto& row : rows) a.emplace_back(row.begin(), row.end());
    return OrderSpec::matrix(std::move(a));
  };
  const std::vector<std::pair<OrderSpec, OrderSpec>> pairs{
      {m({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), OrderSpec::standard(OrderKind::Lex, 3)},
      {m({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}), OrderSpec::standard(OrderKind::DegLex, 3)},
      {m({{1, 1, 1}, {0, 0, -1}, {0, -1, 0}}), OrderSpec::standard(OrderKind::DegRevLex, 3)},
  };
  std::vector<Monomial> monos;
  for (std::uint32_t a = 0; a <= 10; ++a) {
    for (std::uint32_t b = 0; a + b <= 10; ++b) {
      for (std::uint32_t c = 0; a + b + c <= 10; ++c) monos.push_back(Monomial({a, b, c}));
    }
  }
  std::uint64_t checked = 0;
  std::string failure;
  for (const auto& [mat, std_order] : pairs) {
    std::vector<OrderVector> mv, sv;
    for (const auto& t : monos) {
      mv.push_back(order_vector(mat, t));
      sv.push_back(order_vector(std_order, t));
    }
    for (std::size_t i = 0; i < monos.size() && failure.empty(); ++i) {
      for (std::size_t j = 0; j < monos.size(); ++j) {
        ++checked;
        if (compare(mv[i], mv[j]).ordering != compare(sv[i], sv[j]).ordering) {
          failure = std_order.to_string() + " disagrees on " + monos[i].to_string() + " vs " + monos[j].to_string();
          break;
        }
      }
    }
  }
  r.detail = failure.empty() ? std::to_string(checked) + " ordered pairs agree" : failure;
  finish(r, start, failure.empty());
  return r;
}

std::vector<CriterionResult> run_all_checks(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(check_golden_example());
  out.push_back(check_merge_example());
  out.push_back(check_spoly_counts());
  out.push_back(check_merge_bound(seed));
  for (auto& c : check_corpus(seed)) out.push_back(std::move(c));
  out.push_back(check_functional_engine(seed));
  out.push_back(check_matrix_orders());
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " [%.3f s]", r.seconds);
  return "criterion " + std::to_string(r.id) + ": " + (r.pass ? "PASS " : "FAIL ") + r.title + " (" + r.detail + ")" +
         buf;
}

}  // namespace vanishing::oracles
