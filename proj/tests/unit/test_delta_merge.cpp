#include <algorithm>
#include <random>

#include "doctest.h"
#include "vanishing/delta_merge.hpp"
#include "vanishing/oracles/oracles.hpp"

using namespace vanishing;
using oracles::Tuple;

namespace {

Tuple tup(std::initializer_list<long> v) {
  Tuple t;
  for (long x : v) t.push_back(x);
  return t;
}

using List = DeltaList<Integer>;

std::vector<Tuple> random_sorted(std::mt19937_64& rng, std::size_t n, std::size_t len, long range) {
  std::vector<Tuple> out(len, Tuple(n));
  for (auto& t : out) {
    for (auto& e : t) e = static_cast<long>(rng() % range);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Tuple> kA{tup({1, 0, 2, 2, 0}), tup({1, 0, 3, 0, 0}), tup({2, 0, 0, 1, 0}),
                            tup({2, 1, 0, 0, 1}), tup({2, 1, 0, 2, 1}), tup({3, 0, 0, 0, 0})};
const std::vector<Tuple> kB{tup({1, 0, 0, 0, 0}), tup({1, 0, 2, 0, 0}), tup({2, 1, 0, 1, 1}),
                            tup({2, 1, 0, 2, 1})};

}  // namespace

TEST_CASE("delta of tuples") {
  CHECK(delta(tup({1, 2, 3}), tup({1, 2, 4})) == 3);
  CHECK(delta(tup({0, 2, 3}), tup({1, 2, 3})) == 1);
  CHECK(delta(tup({1, 2, 3}), tup({1, 2, 3})) == 4);
  CHECK_THROWS_AS(delta(tup({1}), tup({1, 2})), Error);
}

TEST_CASE("lists keep their delta sequence") {
  const List a = List::from_tuples(5, kA);
  CHECK(a.deltas() == std::vector<std::size_t>{3, 1, 2, 4, 1});
  try {
    List::from_tuples(2, {tup({2, 0}), tup({1, 0})});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsortedList);
  }
}

TEST_CASE("worked merge example") {
  const List m = merge(List::from_tuples(5, kA), List::from_tuples(5, kB));
  const std::vector<Tuple> want{kB[0], kB[1], kA[0], kA[1], kA[2], kA[3], kB[2], kB[3], kA[4], kA[5]};
  CHECK(m.keys() == want);
  // third entry is delta(a1, a2) = 3
  CHECK(m.deltas() == std::vector<std::size_t>{3, 4, 3, 1, 2, 4, 4, 6, 1});
  CHECK(m.counters().element_cmps <= 6 + 4 * 5);

  const auto naive = oracles::naive_merge(kA, kB);
  CHECK(naive.items == want);
  CHECK(naive.deltas == m.deltas());
}

TEST_CASE("degenerate merges") {
  SUBCASE("identical singletons") {
    const List m = merge(List::from_tuples(3, {tup({1, 2, 3})}), List::from_tuples(3, {tup({1, 2, 3})}));
    CHECK(m.size() == 2);
    CHECK(m.deltas() == std::vector<std::size_t>{4});
  }
  SUBCASE("empty second list") {
    const List m = merge(List::from_tuples(5, kA), List(5));
    CHECK(m.keys() == kA);
    CHECK(m.deltas() == std::vector<std::size_t>{3, 1, 2, 4, 1});
    CHECK(m.counters().total() == 0);
  }
  SUBCASE("empty first list") {
    const List m = merge(List(5), List::from_tuples(5, kB));
    CHECK(m.keys() == kB);
    CHECK(m.counters().total() == 0);
  }
  SUBCASE("both empty") { CHECK(merge(List(2), List(2)).empty()); }
  SUBCASE("arity clash") {
    CHECK_THROWS_AS(merge(List::from_tuples(1, {tup({1})}), List::from_tuples(2, {tup({1, 1})})), Error);
  }
}

TEST_CASE("ties put the second list first") {
  struct Tag {
    int from;
  };
  using TList = DeltaList<Integer, Tag>;
  auto make = [](int from, std::vector<Tuple> ts) {
    std::vector<TList::Item> items;
    for (auto& t : ts) items.push_back({t, Tag{from}});
    return TList::from_items(2, std::move(items));
  };
  for (int flip = 0; flip < 2; ++flip) {
    // both walk directions: |b| <= |a| and |b| > |a|
    std::vector<Tuple> as{tup({1, 1}), tup({2, 2})}, bs{tup({1, 1})};
    if (flip) std::swap(as, bs);
    const TList m = merge(make(0, as), make(1, bs));
    for (std::size_t k = 0; k + 1 < m.size(); ++k) {
      if (m.item(k).key == m.item(k + 1).key) {
        CHECK(m.item(k).payload.from == 1);
        CHECK(m.item(k + 1).payload.from == 0);
      }
    }
  }
}

TEST_CASE("locate") {
  const List a = List::from_tuples(5, kA);
  MergeCounters c;
  const LocateResult r = locate(a, std::span<const Integer>(kB[2]), std::nullopt, &c);
  CHECK(r.index == 4);
  CHECK(r.delta_left == 4);   // delta(a4, b3)
  CHECK(r.delta_right == 4);  // delta(b3, a5)
  CHECK(c.element_cmps <= 5 + 6);

  const LocateResult first = locate(a, std::span<const Integer>(kB[0]));
  CHECK(first.index == 0);
  CHECK_FALSE(first.delta_left.has_value());
  CHECK(first.delta_right == 3);

  const Tuple big = tup({9, 9, 9, 9, 9});
  const LocateResult last = locate(a, std::span<const Integer>(big));
  CHECK(last.index == 6);
  CHECK(last.delta_left == 1);
  CHECK_FALSE(last.delta_right.has_value());
}

TEST_CASE("pop_front and runs") {
  List a = List::from_tuples(2, {tup({0, 1}), tup({0, 1}), tup({0, 1}), tup({1, 0})});
  CHECK(a.front_run_length() == 3);
  const auto run = a.pop_front(3);
  CHECK(run.size() == 3);
  CHECK(a.size() == 1);
  CHECK(a.deltas().empty());
}

TEST_CASE("property: merge equals the naive oracle within the comparison bound") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + rng() % 12;
    const long range = 1 + static_cast<long>(rng() % 4);
    const auto a = random_sorted(rng, n, rng() % 40, range);
    const auto b = random_sorted(rng, n, rng() % 40, range);
    const List m = merge(List::from_tuples(n, a), List::from_tuples(n, b));
    const auto naive = oracles::naive_merge(a, b);
    INFO("seed " << seed);
    CHECK(m.keys() == naive.items);
    CHECK(m.deltas() == naive.deltas);
    CHECK(m.counters().element_cmps <= std::max(a.size(), b.size()) + std::min(a.size(), b.size()) * n);
  }
}

TEST_CASE("property: locate agrees with a linear scan and respects n + t") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + rng() % 8;
    const auto a = random_sorted(rng, n, rng() % 30, 3);
    const List l = List::from_tuples(n, a);
    Tuple b(n);
    for (auto& e : b) e = static_cast<long>(rng() % 3);
    MergeCounters c;
    const LocateResult r = locate(l, std::span<const Integer>(b), std::nullopt, &c);
    const std::size_t want = std::lower_bound(a.begin(), a.end(), b) - a.begin();
    INFO("seed " << seed);
    CHECK(r.index == want);
    CHECK(c.element_cmps <= n + a.size());
    if (want > 0) CHECK(r.delta_left == delta(a[want - 1], b));
    if (want < a.size()) CHECK(r.delta_right == delta(b, a[want]));
  }
}

TEST_CASE("S-polynomial benchmark") {
  const auto b3 = oracles::bench_spoly(3);
  CHECK(b3.outputs_agree);
  CHECK(b3.delta_element_cmps <= b3.n);
  const auto b10 = oracles::bench_spoly(10);
  CHECK(b10.outputs_agree);
  CHECK(b10.n == 20);
  CHECK(b10.delta_total() == 2 * 10 + 1);
  CHECK(b10.delta_total() <= 3 * 10 - 1);
  // every comparison of the naive merge before the insertion point costs s + 2
  // entries, the last one costs s + 3
  CHECK(b10.naive_element_cmps == 10 * 10 - 3);
}
