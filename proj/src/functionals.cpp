#include "vanishing/functionals.hpp"

#include <chrono>

namespace vanishing {

namespace {

FieldVector mat_vec(const FieldMatrix& a, const FieldVector& v, const FieldSpec& field) {
  FieldVector out(a.size(), field.zero());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!a[r][c].is_zero() && !v[c].is_zero()) out[r] += a[r][c] * v[c];
    }
  }
  return out;
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b, const FieldSpec& field) {
  const std::size_t m = a.size();
  FieldMatrix out(m, FieldVector(m, field.zero()));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < m; ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (!b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
      }
    }
  }
  return out;
}

// The same system seen through the variables `ess` only.
class RestrictedSystem final : public FunctionalSystem {
 public:
  RestrictedSystem(const FunctionalSystem& base, std::vector<std::size_t> vars) : base_(base), vars_(std::move(vars)) {}

  const FieldSpec& field() const override { return base_.field(); }
  std::size_t width() const override { return base_.width(); }
  std::size_t arity() const override { return vars_.size(); }
  FieldVector psi_one() const override { return base_.psi_one(); }
  FieldVector step(const FieldVector& psi_t, std::size_t var) const override {
    return base_.step(psi_t, vars_.at(var));
  }

 private:
  const FunctionalSystem& base_;
  std::vector<std::size_t> vars_;
};

std::vector<FieldVector> variable_values(const FunctionalSystem& sys) {
  const FieldVector one = sys.psi_one();
  std::vector<FieldVector> v;
  v.reserve(sys.arity());
  for (std::size_t i = 0; i < sys.arity(); ++i) v.push_back(sys.step(one, i));
  return v;
}

}  // namespace

MatrixActionSystem::MatrixActionSystem(FieldSpec field, FieldVector psi_one, std::vector<FieldMatrix> matrices)
    : field_(field), psi_one_(std::move(psi_one)), matrices_(std::move(matrices)) {
  const std::size_t m = psi_one_.size();
  if (m == 0) throw Error(ErrorCode::ArityMismatch, "psi(1) is empty");
  for (const auto& c : psi_one_) {
    if (!field_.contains(c)) throw Error(ErrorCode::FieldMismatch, "psi(1)");
  }
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const auto& a = matrices_[i];
    if (a.size() != m) throw Error(ErrorCode::ArityMismatch, "matrix " + std::to_string(i + 1) + " is not m x m");
    for (const auto& row : a) {
      if (row.size() != m) throw Error(ErrorCode::ArityMismatch, "matrix " + std::to_string(i + 1) + " is not m x m");
      for (const auto& c : row) {
        if (!field_.contains(c)) throw Error(ErrorCode::FieldMismatch, "matrix " + std::to_string(i + 1));
      }
    }
  }
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    for (std::size_t j = i + 1; j < matrices_.size(); ++j) {
      if (mat_mul(matrices_[i], matrices_[j], field_) != mat_mul(matrices_[j], matrices_[i], field_)) {
        throw Error(ErrorCode::InconsistentSystem,
                    "matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
      }
    }
  }
}

FieldVector MatrixActionSystem::step(const FieldVector& psi_t, std::size_t var) const {
  return mat_vec(matrices_.at(var), psi_t, field_);
}

MatrixActionSystem multiplication_system(const PointSet& points, const GroebnerResult& result) {
  QuotientBasis qb(points, result.B, result.order);
  const std::size_t m = result.B.size();
  const std::size_t n = points.arity();
  std::vector<FieldMatrix> mats(n, FieldMatrix(m, FieldVector(m, points.field().zero())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      const FieldVector c = qb.coordinates(points.evaluation_vector(result.B[k].times_variable(i)));
      for (std::size_t r = 0; r < m; ++r) mats[i][r][k] = c[r];
    }
  }
  FieldVector one = qb.coordinates(FieldVector(points.size(), points.field().one()));
  return MatrixActionSystem(points.field(), std::move(one), std::move(mats));
}

void check_consistency(const FunctionalSystem& sys) {
  const FieldVector one = sys.psi_one();
  if (one.size() != sys.width()) throw Error(ErrorCode::InconsistentSystem, "psi(1) has the wrong length");
  const std::vector<FieldVector> single = variable_values(sys);
  for (std::size_t i = 0; i < sys.arity(); ++i) {
    for (std::size_t j = i + 1; j < sys.arity(); ++j) {
      if (sys.step(single[i], j) != sys.step(single[j], i)) {
        throw Error(ErrorCode::InconsistentSystem, "psi(x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1) +
                                                       ") depends on the order of the steps");
      }
    }
  }
}

GroebnerResult algorithm1(const FunctionalSystem& sys, const OrderSpec& order) {
  check_consistency(sys);
  return detail::run_mmm(sys, order, {}).result;
}

EssentialSet essential_variables_functional(const FunctionalSystem& sys, const OrderSpec& order) {
  if (order.arity() != sys.arity()) throw Error(ErrorCode::ArityMismatch, "order and system");
  const FieldVector one = sys.psi_one();
  return essential_variables_from_values(sys.field(), one, variable_values(sys), order);
}

GroebnerResult algorithm1_projected(const FunctionalSystem& sys, const OrderSpec& order) {
  check_consistency(sys);
  validate_order(order);
  const auto start = std::chrono::steady_clock::now();
  const EssentialSet es = essential_variables_functional(sys, order);
  RestrictedSystem sub(sys, es.ess);
  detail::EngineRun run = detail::run_mmm(sub, restrict_order(order, es.ess), {});
  GroebnerResult out =
      lift_with(run.result, es, sys.arity(), order, std::move(run.echelon), variable_values(sys));
  out.stats.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace vanishing
