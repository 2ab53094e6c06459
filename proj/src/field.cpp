#include "vanishing/field.hpp"

#include <charconv>
#include <functional>

namespace vanishing {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 63;

const Residue& same_field(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus) {
    throw Error(ErrorCode::FieldMismatch,
                "moduli " + std::to_string(a.modulus) + " and " + std::to_string(b.modulus));
  }
  return b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!valid_integer_literal(s)) {
    throw Error(ErrorCode::ParseError, "malformed number '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

FieldElement::FieldElement(Rational q) : value_(std::move(q)) {
  std::get<Rational>(value_).canonicalize();
}

bool FieldElement::is_zero() const {
  if (auto q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool FieldElement::is_one() const {
  if (auto q = std::get_if<Rational>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (is_rational() != o.is_rational()) throw Error(ErrorCode::FieldMismatch, "Q with Z/p");
  if (auto q = std::get_if<Rational>(&value_)) {
    *q += o.rational();
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = same_field(r, o.residue());
    std::uint64_t sum = r.value + s.value;  // both < 2^63, no overflow
    r.value = sum >= r.modulus ? sum - r.modulus : sum;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (is_rational() != o.is_rational()) throw Error(ErrorCode::FieldMismatch, "Q with Z/p");
  if (auto q = std::get_if<Rational>(&value_)) {
    *q -= o.rational();
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = same_field(r, o.residue());
    r.value = r.value >= s.value ? r.value - s.value : r.value + (r.modulus - s.value);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (is_rational() != o.is_rational()) throw Error(ErrorCode::FieldMismatch, "Q with Z/p");
  if (auto q = std::get_if<Rational>(&value_)) {
    *q *= o.rational();
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = same_field(r, o.residue());
    r.value = mul_mod(r.value, s.value, r.modulus);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::operator-() const {
  if (auto q = std::get_if<Rational>(&value_)) return FieldElement(Rational(-*q));
  Residue r = std::get<Residue>(value_);
  r.value = r.value == 0 ? 0 : r.modulus - r.value;
  return FieldElement(r);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (auto q = std::get_if<Rational>(&value_)) return FieldElement(Rational(1 / *q));
  Residue r = std::get<Residue>(value_);
  r.value = pow_mod(r.value, r.modulus - 2, r.modulus);
  return FieldElement(r);
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }

std::string FieldElement::to_string() const {
  if (auto q = std::get_if<Rational>(&value_)) return q->get_str(10);
  return std::to_string(std::get<Residue>(value_).value);
}

std::size_t FieldElement::hash() const {
  if (auto q = std::get_if<Rational>(&value_)) return std::hash<std::string>{}(q->get_str(16));
  return std::hash<std::uint64_t>{}(std::get<Residue>(value_).value);
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= kMaxModulus) {
    throw Error(ErrorCode::InvalidModulus, std::to_string(p) + " is outside [2, 2^63)");
  }
  Integer z(std::to_string(p), 10);
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw Error(ErrorCode::InvalidModulus, std::to_string(p) + " is not prime");
  }
  FieldSpec f;
  f.kind_ = FieldKind::Prime;
  f.modulus_ = p;
  return f;
}

FieldElement FieldSpec::from_integer(const Integer& v) const {
  if (kind_ == FieldKind::Rational) return FieldElement(Rational(v));
  Integer r = v % Integer(std::to_string(modulus_), 10);
  if (sgn(r) < 0) r += Integer(std::to_string(modulus_), 10);
  return FieldElement(Residue{std::stoull(r.get_str(10)), modulus_});
}

FieldElement FieldSpec::parse(std::string_view text) const {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return from_integer(parse_integer(s, text));
  Integer num = parse_integer(trim(s.substr(0, slash)), text);
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && den_text.front() == '-') {
    throw Error(ErrorCode::ParseError, "negative denominator in '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text, text);
  if (sgn(den) == 0) throw Error(ErrorCode::DivisionByZero, "denominator zero in '" + std::string(text) + "'");
  return from_integer(num) / from_integer(den);
}

bool FieldSpec::contains(const FieldElement& e) const {
  if (kind_ == FieldKind::Rational) return e.is_rational();
  return !e.is_rational() && e.residue().modulus == modulus_;
}

}  // namespace vanishing
