#include "vanishing/polynomial.hpp"

#include <algorithm>

namespace vanishing {

Polynomial Polynomial::from_terms(const OrderSpec& order, std::vector<Term> terms) {
  struct Keyed {
    OrderVector ov;
    Term term;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(terms.size());
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    keyed.push_back({order_vector(order, t.mono), std::move(t)});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const Keyed& a, const Keyed& b) { return compare(a.ov, b.ov).ordering == Ordering::Greater; });

  Polynomial p;
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    if (!p.terms_.empty() && p.terms_.back().mono == keyed[k].term.mono) {
      p.terms_.back().coeff += keyed[k].term.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      continue;
    }
    p.terms_.push_back(std::move(keyed[k].term));
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::add(const OrderSpec& order, const Polynomial& a, const Polynomial& b) {
  std::vector<Term> all(a.terms_);
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return from_terms(order, std::move(all));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += t.mono.to_string();
    }
  }
  return out;
}

FieldElement evaluate(const Monomial& m, std::span<const FieldElement> point, const FieldSpec& field) {
  if (m.arity() != point.size()) throw Error(ErrorCode::ArityMismatch, "evaluation point arity");
  FieldElement acc = field.one();
  for (std::size_t i = 0; i < point.size(); ++i) {
    for (std::uint32_t e = 0; e < m[i]; ++e) acc *= point[i];
  }
  return acc;
}

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point, const FieldSpec& field) {
  FieldElement acc = field.zero();
  for (const auto& t : f.terms()) acc += t.coeff * evaluate(t.mono, point, field);
  return acc;
}

}  // namespace vanishing
