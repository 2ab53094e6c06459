#include "vanishing/projection.hpp"

#include <algorithm>
#include <chrono>

namespace vanishing {

namespace {

struct Detection {
  EssentialSet es;
  std::uint64_t field_ops = 0;
};

Detection detect(const FieldSpec& field, std::span<const FieldElement> one, const std::vector<FieldVector>& var_values,
                 const OrderSpec& order) {
  const std::size_t n = order.arity();
  if (var_values.size() != n) throw Error(ErrorCode::ArityMismatch, "value vectors per variable");
  const std::vector<std::size_t> perm = varord(order);

  EchelonAccumulator acc(field, one.size());
  constexpr std::size_t kOneTag = static_cast<std::size_t>(-1);
  acc.add_if_independent(one, kOneTag);

  Detection out;
  std::vector<std::size_t> kept;  // ascending under the order
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t var = perm[k];
    Reduction red = acc.reduce(var_values[var]);
    if (!red.is_zero()) {
      acc.insert(red, var);
      kept.push_back(var);
      continue;
    }
    LinearRelation rel;
    rel.var = var;
    rel.constant = field.zero();
    for (std::size_t j = 0; j < red.coeffs.size(); ++j) {
      if (red.coeffs[j].is_zero()) continue;
      if (acc.tag(j) == kOneTag) {
        rel.constant = red.coeffs[j];
      } else {
        rel.terms.emplace_back(acc.tag(j), red.coeffs[j]);
      }
    }
    out.es.relations.push_back(std::move(rel));
  }
  out.es.ess.assign(kept.rbegin(), kept.rend());
  out.field_ops = acc.field_ops();
  return out;
}

std::vector<FieldVector> coordinate_vectors(const PointSet& points) {
  std::vector<FieldVector> v;
  v.reserve(points.arity());
  for (std::size_t i = 0; i < points.arity(); ++i) v.push_back(points.coordinate_vector(i));
  return v;
}

Polynomial embed_polynomial(const Polynomial& f, std::span<const std::size_t> ess, std::size_t arity,
                            const OrderSpec& order) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.coeff, embed_monomial(t.mono, ess, arity)});
  return Polynomial::from_terms(order, std::move(terms));
}

GroebnerResult projected_run(const PointSet& points, const OrderSpec& order, Variant variant) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<FieldVector> coords = coordinate_vectors(points);
  const FieldVector one(points.size(), points.field().one());
  Detection det = detect(points.field(), one, coords, order);

  const PointSet sub_points = project(points, det.es);
  const OrderSpec sub_order = restrict_order(order, det.es.ess);
  detail::PointEvaluation sys(sub_points);
  detail::EngineRun run = variant == Variant::Abbott ? detail::run_abbott(sys, sub_order, {})
                                                     : detail::run_mmm(sys, sub_order, {});

  GroebnerResult out = lift_with(run.result, det.es, points.arity(), order, std::move(run.echelon), coords);
  out.stats.field_ops += det.field_ops;
  out.stats.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

EssentialSet essential_variables_from_values(const FieldSpec& field, std::span<const FieldElement> one,
                                             const std::vector<FieldVector>& var_values, const OrderSpec& order) {
  return detect(field, one, var_values, order).es;
}

EssentialSet essential_variables(const PointSet& points, const OrderSpec& order) {
  if (order.arity() != points.arity()) throw Error(ErrorCode::ArityMismatch, "order and points");
  const FieldVector one(points.size(), points.field().one());
  return detect(points.field(), one, coordinate_vectors(points), order).es;
}

PointSet project(const PointSet& points, const EssentialSet& es) {
  std::vector<FieldVector> projected;
  projected.reserve(points.size());
  for (const auto& p : points.points()) {
    FieldVector q;
    q.reserve(es.ess.size());
    for (auto var : es.ess) q.push_back(p.at(var));
    projected.push_back(std::move(q));
  }
  try {
    return PointSet(points.field(), es.ess.size(), std::move(projected));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DuplicatePoints) {
      throw Error(ErrorCode::InternalInvariant, std::string("projection identified points: ") + e.what());
    }
    throw;
  }
}

Monomial embed_monomial(const Monomial& sub, std::span<const std::size_t> ess, std::size_t arity) {
  if (sub.arity() != ess.size()) throw Error(ErrorCode::ArityMismatch, "embedding a projected monomial");
  std::vector<std::uint32_t> e(arity, 0);
  for (std::size_t k = 0; k < ess.size(); ++k) e[ess[k]] = sub[k];
  return Monomial(std::move(e));
}

GroebnerResult lift_with(const GroebnerResult& sub, const EssentialSet& es, std::size_t arity, const OrderSpec& order,
                         EchelonAccumulator basis_values, const std::vector<FieldVector>& var_values) {
  GroebnerResult out;
  out.arity = arity;
  out.order = order;
  out.stats = sub.stats;
  out.stats.reduced_arity = es.ess.size();
  out.stats.relations = es.relations.size();

  out.B.reserve(sub.B.size());
  for (const auto& b : sub.B) out.B.push_back(embed_monomial(b, es.ess, arity));

  std::vector<Polynomial> g;
  g.reserve(sub.G.size() + es.relations.size());
  for (const auto& p : sub.G) g.push_back(embed_polynomial(p, es.ess, arity, order));

  const FieldElement one = basis_values.field().one();
  QuotientBasis qb(out.B, order, std::move(basis_values));
  for (const auto& rel : es.relations) {
    const FieldVector c = qb.coordinates(var_values.at(rel.var));
    std::vector<Term> terms;
    terms.push_back({one, Monomial::variable(arity, rel.var)});
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_zero()) terms.push_back({-c[k], out.B[k]});
    }
    g.push_back(Polynomial::from_terms(order, std::move(terms)));
  }
  out.stats.field_ops += qb.field_ops();

  // Ascending by leading monomial, as a direct run emits them.
  std::vector<std::pair<OrderVector, std::size_t>> keys;
  keys.reserve(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) keys.emplace_back(order_vector(order, g[k].leading_monomial()), k);
  std::sort(keys.begin(), keys.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first).ordering == Ordering::Less; });
  out.G.reserve(g.size());
  for (const auto& [ov, k] : keys) out.G.push_back(std::move(g[k]));
  return out;
}

GroebnerResult lift(const GroebnerResult& sub, const EssentialSet& es, const PointSet& points, const OrderSpec& order) {
  const PointSet sub_points = project(points, es);
  EchelonAccumulator acc(points.field(), points.size());
  for (std::size_t k = 0; k < sub.B.size(); ++k) {
    if (!acc.add_if_independent(sub_points.evaluation_vector(sub.B[k]), k)) {
      throw Error(ErrorCode::InternalInvariant, "sub-run basis values are dependent");
    }
  }
  return lift_with(sub, es, points.arity(), order, std::move(acc), coordinate_vectors(points));
}

GroebnerResult bm_projected(const PointSet& points, const OrderSpec& order) {
  if (order.arity() != points.arity()) throw Error(ErrorCode::ArityMismatch, "order and points");
  validate_order(order);
  return projected_run(points, order, Variant::Mmm);
}

GroebnerResult compute_basis(const PointSet& points, const OrderSpec& order, Variant variant, ProjectMode mode) {
  if (order.arity() != points.arity()) throw Error(ErrorCode::ArityMismatch, "order and points");
  validate_order(order);
  switch (mode) {
    case ProjectMode::Off:
      return bm(points, order, variant);
    case ProjectMode::On:
      return projected_run(points, order, variant);
    case ProjectMode::Auto:
      break;
  }
  if (essential_variables(points, order).ess.size() < points.arity()) return projected_run(points, order, variant);
  return bm(points, order, variant);
}

}  // namespace vanishing
