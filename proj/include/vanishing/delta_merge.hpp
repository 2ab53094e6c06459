#pragma once

// Sorted lists of integer tuples that carry the first-difference index of every
// pair of neighbours. Knowing those indices lets a merge skip most entry-wise
// comparisons: locating one tuple in a list of t tuples costs at most n + t
// entry comparisons, and merging lists of s <= t tuples costs at most
// t + s*n.
//
// Delta values are 1-based positions; equal tuples have delta n + 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vanishing/error.hpp"

namespace vanishing {

/// First 1-based index where `v` and `w` differ, or n + 1 when equal.
template <class T>
std::size_t delta(std::span<const T> v, std::span<const T> w) {
  if (v.size() != w.size()) throw Error(ErrorCode::ArityMismatch, "delta of tuples of different arity");
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!(v[k] == w[k])) return k + 1;
  }
  return v.size() + 1;
}

template <class T>
std::size_t delta(const std::vector<T>& v, const std::vector<T>& w) {
  return delta(std::span<const T>(v), std::span<const T>(w));
}

struct MergeCounters {
  std::uint64_t element_cmps = 0;  // entry-wise comparisons of tuple components
  std::uint64_t delta_cmps = 0;    // comparisons between delta values

  std::uint64_t total() const noexcept { return element_cmps + delta_cmps; }
};

struct NoPayload {
  friend bool operator==(const NoPayload&, const NoPayload&) = default;
};

/// Ascending list of tuples with deltas[k] = delta(items[k], items[k+1]).
/// Duplicates are kept. Counters describe the merge that produced the list.
template <class T, class Payload = NoPayload>
class DeltaList {
 public:
  struct Item {
    std::vector<T> key;
    Payload payload{};
  };

  DeltaList() = default;
  explicit DeltaList(std::size_t arity) : arity_(arity) {}

  /// Builds the delta sequence from scratch; throws UnsortedList or ArityMismatch.
  static DeltaList from_items(std::size_t arity, std::vector<Item> items) {
    DeltaList out(arity);
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (items[k].key.size() != arity) throw Error(ErrorCode::ArityMismatch, "tuple arity in list");
      if (k > 0) {
        const auto& prev = items[k - 1].key;
        const auto& cur = items[k].key;
        const std::size_t d = delta(prev, cur);
        if (d <= arity && cur[d - 1] < prev[d - 1]) {
          throw Error(ErrorCode::UnsortedList, "item " + std::to_string(k + 1) + " is smaller than its predecessor");
        }
        out.deltas_.push_back(d);
      }
    }
    out.items_ = std::move(items);
    return out;
  }

  static DeltaList from_tuples(std::size_t arity, const std::vector<std::vector<T>>& tuples) {
    std::vector<Item> items;
    items.reserve(tuples.size());
    for (const auto& t : tuples) items.push_back(Item{t, Payload{}});
    return from_items(arity, std::move(items));
  }

  /// Appends an item whose delta to the current last item is already known.
  void push_back(Item item, std::optional<std::size_t> delta_to_prev) {
    if (!items_.empty()) {
      if (!delta_to_prev) throw Error(ErrorCode::InternalInvariant, "missing delta for appended item");
      deltas_.push_back(*delta_to_prev);
    }
    items_.push_back(std::move(item));
  }

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Item& item(std::size_t k) const { return items_[k]; }
  Item& item(std::size_t k) { return items_[k]; }
  std::span<const T> key(std::size_t k) const { return items_[k].key; }
  const std::vector<Item>& items() const noexcept { return items_; }
  const std::vector<std::size_t>& deltas() const noexcept { return deltas_; }
  std::vector<std::vector<T>> keys() const {
    std::vector<std::vector<T>> out;
    out.reserve(items_.size());
    for (const auto& it : items_) out.push_back(it.key);
    return out;
  }

  const MergeCounters& counters() const noexcept { return counters_; }
  MergeCounters& counters() noexcept { return counters_; }

  /// Number of leading items equal to the first one (read off the deltas).
  std::size_t front_run_length() const {
    if (items_.empty()) return 0;
    std::size_t len = 1;
    while (len - 1 < deltas_.size() && deltas_[len - 1] == arity_ + 1) ++len;
    return len;
  }

  /// Removes and returns the first `count` items.
  std::vector<Item> pop_front(std::size_t count) {
    count = std::min(count, items_.size());
    std::vector<Item> out(std::make_move_iterator(items_.begin()),
                          std::make_move_iterator(items_.begin() + static_cast<std::ptrdiff_t>(count)));
    items_.erase(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(count));
    const std::size_t drop = std::min(count, deltas_.size());
    deltas_.erase(deltas_.begin(), deltas_.begin() + static_cast<std::ptrdiff_t>(drop));
    return out;
  }

 private:
  std::size_t arity_ = 0;
  std::vector<Item> items_;
  std::vector<std::size_t> deltas_;
  MergeCounters counters_;
};

/// Position of a tuple b in a list a: a_1 <= ... <= a_index < b <= a_{index+1}
/// (1-based list positions, so `index` counts the items placed before b).
struct LocateResult {
  std::size_t index = 0;
  std::optional<std::size_t> delta_left;   // delta(a_index, b) when index >= 1
  std::optional<std::size_t> delta_right;  // delta(b, a_{index+1}) when index < t

  friend bool operator==(const LocateResult&, const LocateResult&) = default;
};

namespace detail {

/// Which side of an equal run the located tuple lands on.
enum class Tie {
  BeforeEqual,  // stop at the first item >= b
  AfterEqual,   // stop at the first item > b
};

struct PartialCompare {
  int sign;           // sign of (x - b)
  std::size_t delta;  // 1-based, n + 1 when equal
};

// Compares x with b from 1-based position `from` on; earlier entries are known
// to agree.
template <class T>
PartialCompare compare_from(std::span<const T> x, std::span<const T> b, std::size_t from, MergeCounters& c) {
  for (std::size_t k = from; k <= b.size(); ++k) {
    ++c.element_cmps;
    const auto& xv = x[k - 1];
    const auto& bv = b[k - 1];
    if (xv < bv) return {-1, k};
    if (bv < xv) return {1, k};
  }
  return {0, b.size() + 1};
}

/// Staged search over items [first, last) of a list. `hint` is a known lower
/// bound (>= 1) on delta(a_first, b).
template <class T, class P>
LocateResult locate_range(const DeltaList<T, P>& a, std::size_t first, std::size_t last, std::span<const T> b,
                          std::size_t hint, Tie tie, MergeCounters& c) {
  const std::size_t n = b.size();
  if (first >= last) return {};

  // stage 0
  const PartialCompare s0 = compare_from(a.key(first), b, hint, c);
  const bool passes = s0.sign < 0 || (tie == Tie::AfterEqual && s0.sign == 0);
  if (!passes) return {0, std::nullopt, s0.delta};

  std::size_t i = first;  // a_i goes before b, d = delta(a_i, b)
  std::size_t d = s0.delta;
  while (i + 1 < last) {
    const std::size_t e = a.deltas()[i];
    ++c.delta_cmps;
    if (e == n + 1) {  // a_i == a_{i+1}
      ++i;
      continue;
    }
    if (d > e) return {i + 1 - first, d, e};  // a_i < b < a_{i+1}
    if (d < e) {                              // a_{i+1} < b with the same delta
      ++i;
      continue;
    }
    const PartialCompare s = compare_from(a.key(i + 1), b, d, c);
    if (s.sign > 0) return {i + 1 - first, d, s.delta};
    if (s.sign == 0 && tie == Tie::BeforeEqual) return {i + 1 - first, d, n + 1};
    d = s.delta;
    ++i;
  }
  return {last - first, d, std::nullopt};
}

// Merges `inserted` into `walked`, scanning `walked` once and locating every
// inserted tuple in the remaining suffix with the hint
// min(delta(x_{j-1}, w_next), delta(x_{j-1}, x_j)).
template <class T, class P>
DeltaList<T, P> merge_walk(DeltaList<T, P>&& walked, DeltaList<T, P>&& inserted, Tie tie) {
  const std::size_t n = walked.arity();
  MergeCounters c;
  DeltaList<T, P> out(n);

  const std::size_t t = walked.size();
  const std::size_t s = inserted.size();
  std::size_t pos = 0;
  std::optional<std::size_t> prev_right;  // delta(x_{j-1}, walked[pos])

  auto append_walked = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) {
      std::optional<std::size_t> d;
      if (!out.empty()) d = (k == from) ? prev_right : std::optional<std::size_t>(walked.deltas()[k - 1]);
      out.push_back(std::move(walked.item(k)), d);
    }
  };

  for (std::size_t j = 0; j < s; ++j) {
    std::size_t hint = 1;
    if (j > 0 && prev_right && pos < t) {
      ++c.delta_cmps;
      hint = std::min(*prev_right, inserted.deltas()[j - 1]);
    }
    const LocateResult r = locate_range(walked, pos, t, inserted.key(j), hint, tie, c);
    append_walked(pos, pos + r.index);

    std::optional<std::size_t> d_new;
    if (r.index > 0) {
      d_new = r.delta_left;
    } else if (j > 0) {
      d_new = inserted.deltas()[j - 1];
    }
    out.push_back(std::move(inserted.item(j)), d_new);

    pos += r.index;
    prev_right = r.delta_right;
  }
  append_walked(pos, t);
  out.counters() = c;
  return out;
}

}  // namespace detail

/// Locates b in a by the staged delta search. The optional hint is a lower bound
/// on delta(a_1, b); comparisons of entries before it are skipped.
template <class T, class P>
LocateResult locate(const DeltaList<T, P>& a, std::span<const T> b, std::optional<std::size_t> hint = std::nullopt,
                    MergeCounters* counters = nullptr) {
  if (b.size() != a.arity()) throw Error(ErrorCode::ArityMismatch, "locate: tuple arity");
  MergeCounters local;
  MergeCounters& c = counters ? *counters : local;
  return detail::locate_range(a, 0, a.size(), b, std::max<std::size_t>(hint.value_or(1), 1), detail::Tie::BeforeEqual,
                              c);
}

/// Merges two delta lists into one ascending list with a correct delta sequence.
/// Ties place the items of `b` before equal items of `a`. The shorter list is
/// the one located item by item, so the entry comparisons stay within
/// max(s, t) + min(s, t) * n. Counters of the result describe this merge only.
template <class T, class P>
DeltaList<T, P> merge(DeltaList<T, P> a, DeltaList<T, P> b) {
  if (a.arity() != b.arity() && !a.empty() && !b.empty()) {
    throw Error(ErrorCode::ArityMismatch, "merge of lists with different arity");
  }
  if (a.empty() && b.empty()) {
    DeltaList<T, P> out(std::max(a.arity(), b.arity()));
    return out;
  }
  if (b.size() <= a.size()) return detail::merge_walk(std::move(a), std::move(b), detail::Tie::BeforeEqual);
  return detail::merge_walk(std::move(b), std::move(a), detail::Tie::AfterEqual);
}

}  // namespace vanishing
