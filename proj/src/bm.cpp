#include "vanishing/bm.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_map>

namespace vanishing {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

struct Candidate {
  Monomial mono;
  std::size_t parent = kNoParent;  // index into B, kNoParent for the unit
  std::size_t var = 0;
};

using CandidateList = DeltaList<Integer, Candidate>;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Bookkeeping shared by both variants: B with cached values, G, the echelon form.
class BasisBuilder {
 public:
  BasisBuilder(const FunctionalSystem& sys, const OrderSpec& order)
      : sys_(sys), order_(order), echelon_(sys.field(), sys.width()) {}

  FieldVector value_of(std::size_t parent, std::size_t var) {
    ++functional_calls_;
    if (parent == kNoParent) return sys_.psi_one();
    return sys_.step(b_values_[parent], var);
  }

  /// Steps C3-C5 for candidate t. Returns true when t joined B.
  bool process(const Monomial& t, const OrderVector& ov, FieldVector value) {
    Reduction red = echelon_.reduce(value);
    if (red.is_zero()) {
      std::vector<Term> terms;
      terms.reserve(b_.size() + 1);
      terms.push_back({sys_.field().one(), t});
      for (std::size_t k = red.coeffs.size(); k-- > 0;) {
        if (red.coeffs[k].is_zero()) continue;
        terms.push_back({-red.coeffs[k], b_[echelon_.tag(k)]});
      }
      g_.push_back(Polynomial::from_sorted_terms(std::move(terms)));
      ini_g_.push_back(t);
      return false;
    }
    echelon_.insert(red, b_.size());
    b_.push_back(t);
    b_ov_.push_back(ov);
    b_values_.push_back(std::move(value));
    return true;
  }

  const std::vector<Monomial>& basis() const { return b_; }
  const OrderVector& basis_ov(std::size_t k) const { return b_ov_[k]; }
  const std::vector<Monomial>& ini_g() const { return ini_g_; }
  std::uint64_t functional_calls() const { return functional_calls_; }

  detail::EngineRun finish(RunStats stats) {
    stats.functional_calls = functional_calls_;
    stats.field_ops = echelon_.field_ops();
    detail::EngineRun run{GroebnerResult{}, std::move(echelon_)};
    run.result.arity = sys_.arity();
    run.result.order = order_;
    run.result.G = std::move(g_);
    run.result.B = std::move(b_);
    run.result.stats = stats;
    return run;
  }

 private:
  const FunctionalSystem& sys_;
  OrderSpec order_;
  EchelonAccumulator echelon_;
  std::vector<Monomial> b_;
  std::vector<OrderVector> b_ov_;
  std::vector<FieldVector> b_values_;
  std::vector<Polynomial> g_;
  std::vector<Monomial> ini_g_;
  std::uint64_t functional_calls_ = 0;
};

void check_inputs(const FunctionalSystem& sys, const OrderSpec& order) {
  if (order.arity() != sys.arity()) {
    throw Error(ErrorCode::ArityMismatch, "order has " + std::to_string(order.arity()) + " variables, input has " +
                                              std::to_string(sys.arity()));
  }
  validate_order(order);
}

}  // namespace

PointSet::PointSet(FieldSpec field, std::size_t arity, std::vector<FieldVector> points)
    : field_(field), arity_(arity), points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::EmptyPointSet, "at least one point is required");
  std::unordered_multimap<std::size_t, std::size_t> seen;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto& p = points_[k];
    if (p.size() != arity_) {
      throw Error(ErrorCode::ArityMismatch, "row " + std::to_string(k + 1) + " has " + std::to_string(p.size()) +
                                                " coordinates, expected " + std::to_string(arity_));
    }
    std::size_t h = 0;
    for (const auto& c : p) {
      if (!field_.contains(c)) throw Error(ErrorCode::FieldMismatch, "row " + std::to_string(k + 1));
      h = h * 1000003u ^ c.hash();
    }
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (points_[it->second] == p) {
        throw Error(ErrorCode::DuplicatePoints,
                    "rows " + std::to_string(it->second + 1) + " and " + std::to_string(k + 1) + " coincide");
      }
    }
    seen.emplace(h, k);
  }
}

FieldVector PointSet::coordinate_vector(std::size_t var) const {
  FieldVector v;
  v.reserve(points_.size());
  for (const auto& p : points_) v.push_back(p.at(var));
  return v;
}

FieldVector PointSet::evaluation_vector(const Polynomial& f) const {
  FieldVector v;
  v.reserve(points_.size());
  for (const auto& p : points_) v.push_back(evaluate(f, p, field_));
  return v;
}

FieldVector PointSet::evaluation_vector(const Monomial& t) const {
  FieldVector v;
  v.reserve(points_.size());
  for (const auto& p : points_) v.push_back(evaluate(t, p, field_));
  return v;
}

namespace detail {

PointEvaluation::PointEvaluation(const PointSet& points) : field_(points.field()), width_(points.size()) {
  for (std::size_t i = 0; i < points.arity(); ++i) coords_.push_back(points.coordinate_vector(i));
}

FieldVector PointEvaluation::psi_one() const {
  return FieldVector(width_, field_.one());
}

FieldVector PointEvaluation::step(const FieldVector& psi_t, std::size_t var) const {
  FieldVector out(psi_t);
  const auto& c = coords_.at(var);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] *= c[k];
  return out;
}

EngineRun run_mmm(const FunctionalSystem& sys, const OrderSpec& order, const CandidateObserver& observer) {
  check_inputs(sys, order);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = sys.arity();
  const std::vector<std::size_t> perm = varord(order);

  BasisBuilder builder(sys, order);
  RunStats stats;
  stats.reduced_arity = n;

  CandidateList list(n);
  list.push_back({order_vector(order, Monomial::one(n)), Candidate{Monomial::one(n), kNoParent, 0}}, std::nullopt);
  stats.l_max = 1;

  std::vector<Monomial> remaining;
  while (!list.empty()) {
    const std::size_t occ = list.front_run_length();
    auto run = list.pop_front(occ);
    auto& head = run.front();
    const Monomial& t = head.payload.mono;
    const bool skip = occ_skip(t, occ);
    if (observer) {
      remaining.clear();
      for (const auto& it : list.items()) remaining.push_back(it.payload.mono);
      observer(CandidateEvent{t, occ, skip, builder.ini_g(), remaining});
    }
    if (skip) continue;

    FieldVector value = builder.value_of(head.payload.parent, head.payload.var);
    if (!builder.process(t, head.key, std::move(value))) continue;

    // C5': the multiples x_i t come out ascending when the variables are taken
    // from smallest to largest.
    const std::size_t parent = builder.basis().size() - 1;
    CandidateList fresh(n);
    for (std::size_t k = n; k-- > 0;) {
      const std::size_t var = perm[k];
      CandidateList::Item item{order_vector_step(order, builder.basis_ov(parent), var),
                               Candidate{t.times_variable(var), parent, var}};
      std::optional<std::size_t> d;
      if (!fresh.empty()) {
        CompareCounter cc;
        d = compare(fresh.item(fresh.size() - 1).key, item.key, &cc).delta;
        stats.element_cmps += cc.element_cmps;
      }
      fresh.push_back(std::move(item), d);
    }
    list = merge(std::move(list), std::move(fresh));
    stats.element_cmps += list.counters().element_cmps;
    stats.delta_cmps += list.counters().delta_cmps;
    stats.l_max = std::max<std::uint64_t>(stats.l_max, list.size());
  }

  stats.wall_time_ms = elapsed_ms(start);
  return builder.finish(stats);
}

EngineRun run_abbott(const FunctionalSystem& sys, const OrderSpec& order, const CandidateObserver& observer) {
  check_inputs(sys, order);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = sys.arity();

  struct Entry {
    OrderVector ov;
    Candidate cand;
  };

  BasisBuilder builder(sys, order);
  RunStats stats;
  stats.reduced_arity = n;
  CompareCounter cc;

  std::vector<Entry> list;
  list.push_back({order_vector(order, Monomial::one(n)), Candidate{Monomial::one(n), kNoParent, 0}});
  stats.l_max = 1;

  std::vector<Monomial> remaining;
  while (!list.empty()) {
    Entry head = std::move(list.front());
    list.erase(list.begin());
    const Monomial& t = head.cand.mono;
    if (observer) {
      remaining.clear();
      for (const auto& e : list) remaining.push_back(e.cand.mono);
      observer(CandidateEvent{t, 1, false, builder.ini_g(), remaining});
    }

    FieldVector value = builder.value_of(head.cand.parent, head.cand.var);
    if (!builder.process(t, head.ov, std::move(value))) continue;

    const std::size_t parent = builder.basis().size() - 1;
    for (std::size_t var = 0; var < n; ++var) {
      Monomial u = t.times_variable(var);
      const auto divides_u = [&u](const Monomial& d) { return d.divides(u); };
      if (std::any_of(list.begin(), list.end(), [&](const Entry& e) { return divides_u(e.cand.mono); })) continue;
      if (std::any_of(builder.ini_g().begin(), builder.ini_g().end(), divides_u)) continue;
      Entry e{order_vector_step(order, builder.basis_ov(parent), var), Candidate{std::move(u), parent, var}};
      auto pos = std::lower_bound(list.begin(), list.end(), e, [&](const Entry& a, const Entry& b) {
        return compare(a.ov, b.ov, &cc).ordering == Ordering::Less;
      });
      list.insert(pos, std::move(e));
    }
    stats.l_max = std::max<std::uint64_t>(stats.l_max, list.size());
  }

  stats.element_cmps = cc.element_cmps;
  stats.wall_time_ms = elapsed_ms(start);
  return builder.finish(stats);
}

}  // namespace detail

GroebnerResult bm(const PointSet& points, const OrderSpec& order, Variant variant, const CandidateObserver& observer) {
  detail::PointEvaluation sys(points);
  if (variant == Variant::Abbott) return detail::run_abbott(sys, order, observer).result;
  return detail::run_mmm(sys, order, observer).result;
}

QuotientBasis::QuotientBasis(const PointSet& points, std::vector<Monomial> basis, OrderSpec order)
    : basis_(std::move(basis)), order_(std::move(order)), echelon_(points.field(), points.size()) {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (!echelon_.add_if_independent(points.evaluation_vector(basis_[k]), k)) {
      throw Error(ErrorCode::InternalInvariant, "basis values are linearly dependent");
    }
  }
}

QuotientBasis::QuotientBasis(std::vector<Monomial> basis, OrderSpec order, EchelonAccumulator echelon)
    : basis_(std::move(basis)), order_(std::move(order)), echelon_(std::move(echelon)) {
  if (echelon_.rank() != basis_.size()) throw Error(ErrorCode::InternalInvariant, "echelon rank differs from |B|");
}

FieldVector QuotientBasis::coordinates(std::span<const FieldElement> v) {
  Reduction red = echelon_.reduce(v);
  if (!red.is_zero()) throw Error(ErrorCode::InternalInvariant, "vector outside the span of B(P)");
  FieldVector out(basis_.size(), echelon_.field().zero());
  for (std::size_t k = 0; k < red.coeffs.size(); ++k) out[echelon_.tag(k)] = red.coeffs[k];
  return out;
}

Polynomial QuotientBasis::combination(std::span<const FieldElement> coeffs) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) terms.push_back({coeffs[k], basis_[k]});
  }
  return Polynomial::from_terms(order_, std::move(terms));
}

Polynomial normal_form(const Polynomial& f, const GroebnerResult& result, const PointSet& points) {
  QuotientBasis qb(points, result.B, result.order);
  const FieldVector c = qb.coordinates(points.evaluation_vector(f));
  return qb.combination(c);
}

}  // namespace vanishing
