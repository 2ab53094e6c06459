#include "vanishing/oracles/oracles.hpp"

#include <algorithm>
#include <map>

#include "vanishing/delta_merge.hpp"

namespace vanishing::oracles {

namespace {

// -1, 0, 1 with one count per entry pair inspected.
int naive_compare(const Tuple& x, const Tuple& y, std::uint64_t& cmps) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    ++cmps;
    if (x[k] < y[k]) return -1;
    if (x[k] > y[k]) return 1;
  }
  return 0;
}

std::size_t first_difference(const Tuple& x, const Tuple& y) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] != y[k]) return k + 1;
  }
  return x.size() + 1;
}

bool divides(const Monomial& d, const Monomial& t) {
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (d[i] > t[i]) return false;
  }
  return true;
}

FieldElement power(const FieldElement& x, std::uint32_t e, const FieldSpec& field) {
  FieldElement r = field.one();
  for (std::uint32_t k = 0; k < e; ++k) r *= x;
  return r;
}

// x^a(p) for all p, cached per monomial.
class Evaluator {
 public:
  explicit Evaluator(const PointSet& points) : points_(points) {}

  const FieldVector& values(const Monomial& t) {
    auto it = cache_.find(t.exponents());
    if (it != cache_.end()) return it->second;
    FieldVector v;
    for (const auto& p : points_.points()) {
      FieldElement acc = points_.field().one();
      for (std::size_t i = 0; i < t.arity(); ++i) acc *= power(p[i], t[i], points_.field());
      v.push_back(acc);
    }
    return cache_.emplace(t.exponents(), std::move(v)).first->second;
  }

 private:
  const PointSet& points_;
  std::map<std::vector<std::uint32_t>, FieldVector> cache_;
};

// psi(x^a) by applying the steps variable by variable, cached per monomial.
class FunctionalEvaluator {
 public:
  explicit FunctionalEvaluator(const FunctionalSystem& sys) : sys_(sys) {}

  const FieldVector& values(const Monomial& t) {
    auto it = cache_.find(t.exponents());
    if (it != cache_.end()) return it->second;
    FieldVector v = sys_.psi_one();
    for (std::size_t i = 0; i < t.arity(); ++i) {
      for (std::uint32_t k = 0; k < t[i]; ++k) v = sys_.step(v, i);
    }
    return cache_.emplace(t.exponents(), std::move(v)).first->second;
  }

 private:
  const FunctionalSystem& sys_;
  std::map<std::vector<std::uint32_t>, FieldVector> cache_;
};

std::string monomial_text(const Monomial& t) { return t.to_string(); }

template <class ValuesOf>
std::string check_common(const GroebnerResult& r, std::size_t expected_b, const FieldSpec& field, ValuesOf&& values_of) {
  const std::size_t n = r.arity;
  if (r.B.size() != expected_b) {
    return "|B| = " + std::to_string(r.B.size()) + ", expected " + std::to_string(expected_b);
  }
  std::set<std::vector<std::uint32_t>> in_b;
  for (const auto& b : r.B) {
    if (b.arity() != n) return "B element of wrong arity";
    in_b.insert(b.exponents());
  }
  if (in_b.size() != r.B.size()) return "B has repeated monomials";
  for (std::size_t k = 1; k < r.B.size(); ++k) {
    if (compare_monomials(r.order, r.B[k - 1], r.B[k]) != Ordering::Less) return "B is not ascending";
  }
  // order ideal: dividing any element by one of its variables stays in B
  for (const auto& b : r.B) {
    for (std::size_t i = 0; i < n; ++i) {
      if (b[i] == 0) continue;
      auto e = b.exponents();
      --e[i];
      if (!in_b.count(e)) return "B is not an order ideal at " + monomial_text(b);
    }
  }

  std::vector<Monomial> leads;
  for (std::size_t k = 0; k < r.G.size(); ++k) {
    const Polynomial& g = r.G[k];
    if (g.is_zero()) return "zero polynomial in G";
    if (!g.leading().coeff.is_one()) return "G element " + std::to_string(k) + " is not monic";
    if (in_b.count(g.leading_monomial().exponents())) return "leading monomial of G inside B";
    for (std::size_t j = 1; j < g.size(); ++j) {
      if (compare_monomials(r.order, g.terms()[j].mono, g.terms()[j - 1].mono) != Ordering::Less) {
        return "terms of G element " + std::to_string(k) + " not descending";
      }
      if (!in_b.count(g.terms()[j].mono.exponents())) return "tail of G element " + std::to_string(k) + " leaves B";
    }
    if (k > 0 && compare_monomials(r.order, r.G[k - 1].leading_monomial(), g.leading_monomial()) != Ordering::Less) {
      return "G is not ascending by leading monomial";
    }
    leads.push_back(g.leading_monomial());
  }
  for (std::size_t i = 0; i < leads.size(); ++i) {
    for (std::size_t j = 0; j < leads.size(); ++j) {
      if (i != j && divides(leads[i], leads[j])) return "leading monomials not pairwise indivisible";
    }
  }
  // every minimal monomial outside B (x_i * b not in B) must be a multiple of a lead
  std::vector<Monomial> border_like = r.B;
  if (r.B.empty()) border_like.push_back(Monomial::one(n));
  for (const auto& b : border_like) {
    for (std::size_t i = 0; i < n; ++i) {
      Monomial u = r.B.empty() ? b : b.times_variable(i);
      if (in_b.count(u.exponents())) continue;
      if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return divides(l, u); })) {
        return "monomial " + monomial_text(u) + " outside B is not in the initial ideal";
      }
    }
  }
  for (std::size_t k = 0; k < r.G.size(); ++k) {
    FieldVector acc;
    for (const auto& t : r.G[k].terms()) {
      const FieldVector& v = values_of(t.mono);
      if (acc.empty()) acc.assign(v.size(), field.zero());
      for (std::size_t j = 0; j < v.size(); ++j) acc[j] += t.coeff * v[j];
    }
    if (std::any_of(acc.begin(), acc.end(), [](const FieldElement& e) { return !e.is_zero(); })) {
      return "G element " + std::to_string(k) + " does not vanish";
    }
  }
  return {};
}

}  // namespace

NaiveMerge naive_merge(const std::vector<Tuple>& a, const std::vector<Tuple>& b) {
  NaiveMerge out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (naive_compare(b[j], a[i], out.element_cmps) <= 0) {
      out.items.push_back(b[j++]);
    } else {
      out.items.push_back(a[i++]);
    }
  }
  while (i < a.size()) out.items.push_back(a[i++]);
  while (j < b.size()) out.items.push_back(b[j++]);
  for (std::size_t k = 1; k < out.items.size(); ++k) {
    out.deltas.push_back(first_difference(out.items[k - 1], out.items[k]));
  }
  return out;
}

bool naive_divisibility_filter(const Monomial& t, const std::vector<Monomial>& list,
                               const std::vector<Monomial>& ini_g) {
  for (const auto& d : list) {
    if (divides(d, t)) return true;
  }
  for (const auto& d : ini_g) {
    if (divides(d, t)) return true;
  }
  return false;
}

PointSet random_point_set(std::uint64_t seed, const FieldSpec& field, std::size_t n, std::size_t m) {
  std::mt19937_64 rng(seed);
  const long range = static_cast<long>(std::max<std::size_t>(3, m));
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  std::set<std::vector<std::string>> seen;
  std::vector<FieldVector> points;
  while (points.size() < m) {
    FieldVector p;
    std::vector<std::string> key;
    for (std::size_t i = 0; i < n; ++i) {
      FieldElement c = field.from_integer(num(rng));
      if (field.kind() == FieldKind::Rational) c /= field.from_integer(den(rng));
      key.push_back(c.to_string());
      p.push_back(std::move(c));
    }
    if (seen.insert(key).second) points.push_back(std::move(p));
  }
  return PointSet(field, n, std::move(points));
}

OrderSpec random_matrix_order(std::uint64_t seed, std::size_t n, int max_entry) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  for (;;) {
    IntMatrix a(n, std::vector<Integer>(n));
    for (auto& row : a) {
      for (auto& e : row) e = entry(rng);
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t r = 0;
      while (r < n && a[r][c] == 0) ++r;
      if (r == n) {
        a[0][c] = 1;
      } else if (a[r][c] < 0) {
        for (std::size_t k = 0; k < n; ++k) a[k][c] = -a[k][c];
      }
    }
    try {
      return OrderSpec::matrix(std::move(a));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularMatrix) throw;
    }
  }
}

bool membership_by_evaluation(const Polynomial& f, const PointSet& points) {
  for (const auto& p : points.points()) {
    FieldElement acc = points.field().zero();
    for (const auto& t : f.terms()) {
      FieldElement v = t.coeff;
      for (std::size_t i = 0; i < p.size(); ++i) v *= power(p[i], t.mono[i], points.field());
      acc += v;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::string check_result(const GroebnerResult& result, const PointSet& points) {
  if (result.arity != points.arity()) return "arity differs from the points";
  Evaluator ev(points);
  std::string err = check_common(result, points.size(), points.field(),
                                 [&](const Monomial& t) -> const FieldVector& { return ev.values(t); });
  if (!err.empty()) return err;
  std::vector<FieldVector> rows;
  for (const auto& b : result.B) rows.push_back(ev.values(b));
  if (dense_rank(std::move(rows), points.field()) != points.size()) return "B(P) is not a basis";
  return {};
}

std::string check_functional_result(const GroebnerResult& result, const FunctionalSystem& sys,
                                    std::size_t expected_rank) {
  FunctionalEvaluator ev(sys);
  return check_common(result, expected_rank, sys.field(),
                      [&](const Monomial& t) -> const FieldVector& { return ev.values(t); });
}

std::size_t dense_rank(std::vector<FieldVector> rows, const FieldSpec& field) {
  (void)field;
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const FieldElement inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const FieldElement f = rows[r][col] * inv;
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

SpolyBench bench_spoly(std::size_t s) {
  if (s < 3) throw Error(ErrorCode::InvalidOrder, "bench-spoly needs s >= 3");
  SpolyBench out;
  out.s = s;
  out.n = 2 * s;
  const std::size_t n = out.n;
  const OrderSpec order = OrderSpec::standard(OrderKind::DegRevLex, n);

  auto negated = [&](const Monomial& t) {
    OrderVector ov = order_vector(order, t);
    for (auto& e : ov) e = -e;
    return ov;
  };
  auto mono = [&](std::initializer_list<std::size_t> vars) {
    Monomial t(n);
    for (auto v : vars) t = t.times_variable(v - 1);
    return t;
  };

  std::vector<Tuple> a{negated(mono({2, 2, s}))};
  std::vector<Tuple> b;
  for (std::size_t k = 2; k + 1 <= n; ++k) b.push_back(negated(mono({3, k, k + 1})));
  // terms of a polynomial come descending, so negated vectors come ascending
  out.b_length = b.size();

  auto da = DeltaList<Integer>::from_tuples(n, a);
  auto db = DeltaList<Integer>::from_tuples(n, b);
  auto merged = merge(std::move(da), std::move(db));
  out.delta_element_cmps = merged.counters().element_cmps;
  out.delta_delta_cmps = merged.counters().delta_cmps;

  const NaiveMerge naive = naive_merge(a, b);
  out.naive_element_cmps = naive.element_cmps;
  out.outputs_agree = merged.keys() == naive.items && merged.deltas() == naive.deltas;
  return out;
}

}  // namespace vanishing::oracles
