#include "vanishing/orders.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace vanishing {

namespace {

// Greedy row selection over Q: indices of rows independent of all earlier
// selected rows, in their original order.
std::vector<std::size_t> independent_rows(const IntMatrix& a) {
  std::vector<std::vector<Rational>> basis;  // echelon rows
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < a.size(); ++r) {
    std::vector<Rational> v(a[r].begin(), a[r].end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = v[pivots[b]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * basis[b][c];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (nz == v.end()) continue;
    const std::size_t p = static_cast<std::size_t>(nz - v.begin());
    const Rational lead = v[p];
    for (auto& q : v) q /= lead;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = basis[b][p];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c) basis[b][c] -= f * v[c];
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
    kept.push_back(r);
  }
  return kept;
}

std::vector<std::size_t> sort_columns_descending(const IntMatrix& a) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    for (const auto& row : a) {
      if (row[i] != row[j]) return row[i] > row[j];
    }
    return false;
  });
  return perm;
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> rank(perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= perm.size() || rank[perm[k]] != perm.size()) {
      throw Error(ErrorCode::InvalidOrder, "variable permutation is not a permutation of 1..n");
    }
    rank[perm[k]] = k;
  }
  return rank;
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
  if (degree_ > kMaxDegree) throw Error(ErrorCode::DegreeOverflow, "total degree above 2^31 - 1");
}

Monomial Monomial::variable(std::size_t arity, std::size_t i) {
  Monomial m(arity);
  m.exps_.at(i) = 1;
  m.degree_ = 1;
  return m;
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](auto e) { return e > 0; }));
}

Monomial Monomial::times_variable(std::size_t i) const {
  if (degree_ + 1 > kMaxDegree) throw Error(ErrorCode::DegreeOverflow, "total degree above 2^31 - 1");
  Monomial m = *this;
  ++m.exps_.at(i);
  ++m.degree_;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (arity() != o.arity()) throw Error(ErrorCode::ArityMismatch, "monomial product");
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (arity() != o.arity()) throw Error(ErrorCode::ArityMismatch, "divisibility test");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

OrderSpec OrderSpec::standard(OrderKind kind, std::size_t arity) {
  std::vector<std::size_t> perm(arity);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return standard(kind, std::move(perm));
}

OrderSpec OrderSpec::standard(OrderKind kind, std::vector<std::size_t> perm) {
  if (kind == OrderKind::Matrix) throw Error(ErrorCode::InvalidOrder, "matrix kind needs a matrix");
  OrderSpec s;
  s.kind_ = kind;
  s.rank_ = invert(perm);
  s.perm_ = std::move(perm);
  return s;
}

OrderSpec OrderSpec::matrix(IntMatrix a) {
  validate_order_matrix(a);
  OrderSpec s;
  s.kind_ = OrderKind::Matrix;
  s.perm_ = sort_columns_descending(a);
  s.rank_ = invert(s.perm_);
  s.matrix_ = std::move(a);
  return s;
}

std::string OrderSpec::to_string() const {
  std::string name;
  switch (kind_) {
    case OrderKind::Lex: name = "lex"; break;
    case OrderKind::DegLex: name = "deglex"; break;
    case OrderKind::DegRevLex: name = "degrevlex"; break;
    case OrderKind::Matrix: return "matrix";
  }
  bool identity = true;
  for (std::size_t k = 0; k < perm_.size(); ++k) identity = identity && perm_[k] == k;
  if (identity) return name;
  name += ':';
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (k) name += ',';
    name += std::to_string(perm_[k] + 1);
  }
  return name;
}

void validate_order_matrix(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorCode::InvalidOrder, "empty matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::InvalidOrder, "matrix is not square");
  }
  if (independent_rows(a).size() != n) throw Error(ErrorCode::SingularMatrix, "matrix has rank below n");
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      const int s = sgn(a[r][c]);
      if (s == 0) continue;
      if (s < 0) {
        throw Error(ErrorCode::NonAdmissibleColumn,
                    "first nonzero entry of column " + std::to_string(c + 1) + " is negative");
      }
      break;
    }
  }
}

const OrderSpec& validate_order(const OrderSpec& spec) {
  if (spec.kind() == OrderKind::Matrix) validate_order_matrix(spec.matrix_entries());
  return spec;
}

OrderVector order_vector(const OrderSpec& spec, const Monomial& m) {
  const std::size_t n = spec.arity();
  if (m.arity() != n) throw Error(ErrorCode::ArityMismatch, "order vector of monomial");
  const auto& perm = spec.var_perm();
  OrderVector ov(n);
  if (n == 0) return ov;
  switch (spec.kind()) {
    case OrderKind::Lex:
      for (std::size_t k = 0; k < n; ++k) ov[k] = m[perm[k]];
      break;
    case OrderKind::DegLex:
      ov[0] = static_cast<unsigned long>(m.degree());
      for (std::size_t k = 1; k < n; ++k) ov[k] = m[perm[k - 1]];
      break;
    case OrderKind::DegRevLex:
      ov[0] = static_cast<unsigned long>(m.degree());
      for (std::size_t k = 1; k < n; ++k) ov[k] = -Integer(m[perm[n - k]]);
      break;
    case OrderKind::Matrix: {
      const auto& a = spec.matrix_entries();
      for (std::size_t r = 0; r < n; ++r) {
        Integer acc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (m[c] != 0) acc += a[r][c] * m[c];
        }
        ov[r] = std::move(acc);
      }
      break;
    }
  }
  return ov;
}

void order_vector_step_inplace(const OrderSpec& spec, OrderVector& ov, std::size_t var) {
  const std::size_t n = spec.arity();
  if (ov.size() != n || var >= n) throw Error(ErrorCode::ArityMismatch, "order vector step");
  const std::size_t pos = spec.rank_of(var);
  switch (spec.kind()) {
    case OrderKind::Lex:
      ov[pos] += 1;
      break;
    case OrderKind::DegLex:
      ov[0] += 1;
      if (pos + 1 < n) ov[pos + 1] += 1;
      break;
    case OrderKind::DegRevLex:
      ov[0] += 1;
      if (pos >= 1) ov[n - pos] -= 1;
      break;
    case OrderKind::Matrix: {
      const auto& a = spec.matrix_entries();
      for (std::size_t r = 0; r < n; ++r) ov[r] += a[r][var];
      break;
    }
  }
}

OrderVector order_vector_step(const OrderSpec& spec, const OrderVector& ov, std::size_t var) {
  OrderVector out = ov;
  order_vector_step_inplace(spec, out, var);
  return out;
}

CompareResult compare(std::span<const Integer> a, std::span<const Integer> b, CompareCounter* counter) {
  if (a.size() != b.size()) throw Error(ErrorCode::ArityMismatch, "compare vectors of different length");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (counter) ++counter->element_cmps;
    const int c = cmp(a[k], b[k]);
    if (c != 0) return {c < 0 ? Ordering::Less : Ordering::Greater, k + 1};
  }
  return {Ordering::Equal, a.size() + 1};
}

Ordering compare_monomials(const OrderSpec& spec, const Monomial& a, const Monomial& b, CompareCounter* counter) {
  return compare(order_vector(spec, a), order_vector(spec, b), counter).ordering;
}

std::vector<std::size_t> varord(const OrderSpec& spec) { return spec.var_perm(); }

OrderSpec restrict_order(const OrderSpec& spec, std::span<const std::size_t> ess) {
  for (std::size_t k = 0; k < ess.size(); ++k) {
    if (ess[k] >= spec.arity()) throw Error(ErrorCode::ArityMismatch, "restriction variable out of range");
    if (k > 0 && spec.rank_of(ess[k - 1]) >= spec.rank_of(ess[k])) {
      throw Error(ErrorCode::InvalidOrder, "restriction variables must be sorted descending");
    }
  }
  if (spec.is_standard()) return OrderSpec::standard(spec.kind(), ess.size());
  if (ess.empty()) return OrderSpec::standard(OrderKind::Lex, 0);  // no variables left to order

  // Keep the chosen columns, then drop every row that depends on earlier rows:
  // vectors agreeing on the earlier rows agree on such a row as well.
  const auto& a = spec.matrix_entries();
  IntMatrix cols;
  cols.reserve(a.size());
  for (const auto& row : a) {
    std::vector<Integer> r;
    r.reserve(ess.size());
    for (auto j : ess) r.push_back(row[j]);
    cols.push_back(std::move(r));
  }
  IntMatrix reduced;
  for (auto r : independent_rows(cols)) reduced.push_back(cols[r]);
  if (reduced.size() != ess.size()) {
    throw Error(ErrorCode::InternalInvariant, "restricted matrix lost rank");
  }
  return OrderSpec::matrix(std::move(reduced));
}

std::uint64_t numbits(const Integer& a) {
  if (sgn(a) == 0) return 2;
  return mpz_sizeinbase(a.get_mpz_t(), 2) + 1;
}

IntMatrix parse_int_matrix(std::string_view text) {
  IntMatrix rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<Integer> row;
    std::string tok;
    while (ls >> tok) {
      Integer v;
      if (v.set_str(tok, 10) != 0) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
      }
      row.push_back(std::move(v));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

OrderSpec parse_order(std::string_view text, std::size_t arity) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (head == "matrix") {
    std::ifstream f{std::string(tail)};
    if (!f) throw Error(ErrorCode::ParseError, "cannot open matrix file '" + std::string(tail) + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    IntMatrix a = parse_int_matrix(buf.str());
    if (a.size() != arity) {
      throw Error(ErrorCode::ArityMismatch, "matrix has " + std::to_string(a.size()) + " rows, expected " +
                                                std::to_string(arity));
    }
    return OrderSpec::matrix(std::move(a));
  }

  OrderKind kind;
  if (head == "lex") {
    kind = OrderKind::Lex;
  } else if (head == "deglex") {
    kind = OrderKind::DegLex;
  } else if (head == "degrevlex") {
    kind = OrderKind::DegRevLex;
  } else {
    throw Error(ErrorCode::ParseError, "unknown order '" + std::string(text) + "'");
  }
  if (colon == std::string_view::npos) return OrderSpec::standard(kind, arity);

  std::vector<std::size_t> perm;
  std::string item;
  std::istringstream in{std::string(tail)};
  while (std::getline(in, item, ',')) {
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad variable index '" + item + "'");
    }
    if (idx == 0) throw Error(ErrorCode::InvalidOrder, "variable indices are 1-based");
    perm.push_back(idx - 1);
  }
  if (perm.size() != arity) {
    throw Error(ErrorCode::ArityMismatch, "permutation has " + std::to_string(perm.size()) + " entries, expected " +
                                              std::to_string(arity));
  }
  return OrderSpec::standard(kind, std::move(perm));
}

}  // namespace vanishing
