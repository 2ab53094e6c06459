#include "vanishing/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vanishing {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

std::uint64_t as_count(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) fail(where + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

FieldSpec parse_field(const json& j) {
  const json& type = member(j, "type", "field");
  if (type == "rational") return FieldSpec::rational();
  if (type == "prime") {
    const json& p = member(j, "p", "field");
    if (p.is_number_unsigned()) return FieldSpec::prime(p.get<std::uint64_t>());
    if (p.is_number_integer()) throw Error(ErrorCode::InvalidModulus, "negative modulus");
    fail("field: \"p\" must be an integer");
  }
  fail("field: unknown type");
}

json field_json(const FieldSpec& f) {
  if (f.kind() == FieldKind::Rational) return json{{"type", "rational"}};
  return json{{"type", "prime"}, {"p", f.modulus()}};
}

FieldElement parse_scalar(const FieldSpec& field, const json& v, const std::string& where) {
  try {
    if (v.is_string()) return field.parse(v.get<std::string>());
    if (v.is_number_integer()) return field.parse(v.dump());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) fail(where + ": " + e.what());
    throw;
  }
  fail(where + ": expected a number or a string");
}

json order_json(const OrderSpec& order) {
  if (order.kind() == OrderKind::Matrix) {
    json rows = json::array();
    for (const auto& row : order.matrix_entries()) {
      json r = json::array();
      for (const auto& e : row) r.push_back(e.get_str());
      rows.push_back(std::move(r));
    }
    return json{{"kind", "matrix"}, {"rows", std::move(rows)}};
  }
  json perm = json::array();
  for (auto v : order.var_perm()) perm.push_back(v + 1);
  const char* kind = order.kind() == OrderKind::Lex ? "lex" : order.kind() == OrderKind::DegLex ? "deglex" : "degrevlex";
  return json{{"kind", kind}, {"perm", std::move(perm)}};
}

OrderSpec parse_order_json(const json& j, std::size_t n) {
  const json& kind = member(j, "kind", "order");
  if (kind == "matrix") {
    const json& rows = member(j, "rows", "order");
    if (!rows.is_array()) fail("order: \"rows\" must be an array");
    IntMatrix a;
    for (const auto& row : rows) {
      if (!row.is_array()) fail("order: matrix row must be an array");
      std::vector<Integer> r;
      for (const auto& e : row) {
        if (!e.is_string()) fail("order: matrix entries are strings");
        Integer z;
        if (z.set_str(e.get<std::string>(), 10) != 0) fail("order: bad matrix entry");
        r.push_back(z);
      }
      a.push_back(std::move(r));
    }
    return OrderSpec::matrix(std::move(a));
  }
  OrderKind k;
  if (kind == "lex") {
    k = OrderKind::Lex;
  } else if (kind == "deglex") {
    k = OrderKind::DegLex;
  } else if (kind == "degrevlex") {
    k = OrderKind::DegRevLex;
  } else {
    fail("order: unknown kind");
  }
  std::vector<std::size_t> perm;
  for (const auto& v : member(j, "perm", "order")) {
    const auto i = as_count(v, "order perm");
    if (i == 0) fail("order perm: indices are 1-based");
    perm.push_back(i - 1);
  }
  if (perm.size() != n) throw Error(ErrorCode::ArityMismatch, "order permutation length");
  return OrderSpec::standard(k, std::move(perm));
}

json exps_json(const Monomial& m) { return json(m.exponents()); }

Monomial parse_exps(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an exponent vector");
  std::vector<std::uint32_t> e;
  for (const auto& v : j) {
    const auto x = as_count(v, where);
    if (x > Monomial::kMaxDegree) throw Error(ErrorCode::DegreeOverflow, where);
    e.push_back(static_cast<std::uint32_t>(x));
  }
  if (e.size() != n) throw Error(ErrorCode::ArityMismatch, where + ": exponent vector length");
  return Monomial(std::move(e));
}

json stats_json(const RunStats& s) {
  return json{{"element_cmps", s.element_cmps},     {"delta_cmps", s.delta_cmps},
              {"field_ops", s.field_ops},           {"functional_calls", s.functional_calls},
              {"l_max", s.l_max},                   {"reduced_arity", s.reduced_arity},
              {"relations", s.relations},           {"wall_time_ms", s.wall_time_ms}};
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

PointSet parse_points(std::string_view text) {
  const json j = parse_json(text);
  const FieldSpec field = parse_field(member(j, "field", "points file"));
  const std::size_t n = as_count(member(j, "n", "points file"), "n");
  const json& rows = member(j, "points", "points file");
  if (!rows.is_array()) fail("\"points\" must be an array");
  std::vector<FieldVector> points;
  points.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "row " + std::to_string(r + 1);
    if (!rows[r].is_array()) fail(where + ": expected an array");
    FieldVector p;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      p.push_back(parse_scalar(field, rows[r][c], where + ", coordinate " + std::to_string(c + 1)));
    }
    points.push_back(std::move(p));
  }
  return PointSet(field, n, std::move(points));
}

std::string write_points(const PointSet& points) {
  json rows = json::array();
  for (const auto& p : points.points()) {
    json r = json::array();
    for (const auto& c : p) r.push_back(c.to_string());
    rows.push_back(std::move(r));
  }
  json j{{"field", field_json(points.field())}, {"n", points.arity()}, {"points", std::move(rows)}};
  return j.dump(2) + "\n";
}

std::string write_stats(const RunStats& stats) { return stats_json(stats).dump(2) + "\n"; }

std::string write_result(const GroebnerResult& result, const FieldSpec& field, Variant variant, bool with_stats) {
  // One monomial or polynomial per line keeps golden files readable and diffable.
  std::ostringstream out;
  out << "{\n";
  out << "  \"n\": " << result.arity << ",\n";
  out << "  \"field\": " << field_json(field).dump() << ",\n";
  out << "  \"order\": " << order_json(result.order).dump() << ",\n";
  out << "  \"variant\": \"" << (variant == Variant::Abbott ? "abbott" : "mmm") << "\",\n";
  out << "  \"B\": [";
  for (std::size_t k = 0; k < result.B.size(); ++k) {
    out << (k ? ",\n    " : "\n    ") << exps_json(result.B[k]).dump();
  }
  out << (result.B.empty() ? "],\n" : "\n  ],\n");
  out << "  \"G\": [";
  for (std::size_t k = 0; k < result.G.size(); ++k) {
    json terms = json::array();
    for (const auto& t : result.G[k].terms()) terms.push_back(json::array({t.coeff.to_string(), exps_json(t.mono)}));
    out << (k ? ",\n    " : "\n    ") << terms.dump();
  }
  out << (result.G.empty() ? "]" : "\n  ]");
  if (with_stats) out << ",\n  \"stats\": " << stats_json(result.stats).dump();
  out << "\n}\n";
  return out.str();
}

ResultFile parse_result(std::string_view text) {
  const json j = parse_json(text);
  ResultFile out;
  out.field = parse_field(member(j, "field", "result"));
  const std::size_t n = as_count(member(j, "n", "result"), "n");
  out.result.arity = n;
  out.result.order = parse_order_json(member(j, "order", "result"), n);
  if (auto it = j.find("variant"); it != j.end()) {
    if (*it == "abbott") {
      out.variant = Variant::Abbott;
    } else if (*it != "mmm") {
      fail("result: unknown variant");
    }
  }
  for (const auto& e : member(j, "B", "result")) out.result.B.push_back(parse_exps(e, n, "B"));
  const json& g = member(j, "G", "result");
  for (std::size_t k = 0; k < g.size(); ++k) {
    const std::string where = "G[" + std::to_string(k) + "]";
    std::vector<Term> terms;
    for (const auto& t : g[k]) {
      if (!t.is_array() || t.size() != 2) fail(where + ": terms are [coefficient, exponents]");
      terms.push_back({parse_scalar(out.field, t[0], where), parse_exps(t[1], n, where)});
    }
    out.result.G.push_back(Polynomial::from_terms(out.result.order, std::move(terms)));
  }
  if (auto it = j.find("stats"); it != j.end()) {
    const json& s = *it;
    auto& st = out.result.stats;
    st.element_cmps = as_count(member(s, "element_cmps", "stats"), "stats");
    st.delta_cmps = as_count(member(s, "delta_cmps", "stats"), "stats");
    st.field_ops = as_count(member(s, "field_ops", "stats"), "stats");
    st.functional_calls = as_count(member(s, "functional_calls", "stats"), "stats");
    st.l_max = as_count(member(s, "l_max", "stats"), "stats");
    st.reduced_arity = as_count(member(s, "reduced_arity", "stats"), "stats");
    st.relations = as_count(member(s, "relations", "stats"), "stats");
    const json& w = member(s, "wall_time_ms", "stats");
    if (!w.is_number()) fail("stats: wall_time_ms must be a number");
    st.wall_time_ms = w.get<double>();
  }
  return out;
}

std::vector<std::vector<Integer>> parse_tuple_list(std::string_view text) {
  std::vector<std::vector<Integer>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    std::vector<Integer> tuple;
    std::size_t col = 0;
    while (col <= line.size()) {
      std::size_t comma = line.find(',', col);
      if (comma == std::string_view::npos) comma = line.size();
      std::string tok(line.substr(col, comma - col));
      const auto b = tok.find_first_not_of(" \t\r");
      const auto e = tok.find_last_not_of(" \t\r");
      Integer z;
      if (b == std::string::npos || z.set_str(tok.substr(b, e - b + 1), 10) != 0) {
        fail("line " + std::to_string(line_no) + ", column " + std::to_string(col + 1) + ": expected an integer");
      }
      tuple.push_back(z);
      col = comma + 1;
    }
    if (!out.empty() && out.front().size() != tuple.size()) {
      throw Error(ErrorCode::ArityMismatch, "line " + std::to_string(line_no) + " has " +
                                                std::to_string(tuple.size()) + " entries, expected " +
                                                std::to_string(out.front().size()));
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

MatrixActionSystem parse_matrix_system(std::string_view text) {
  const json j = parse_json(text);
  const FieldSpec field = parse_field(member(j, "field", "system"));
  const std::size_t n = as_count(member(j, "n", "system"), "n");
  const std::size_t m = as_count(member(j, "m", "system"), "m");
  FieldVector one;
  for (const auto& v : member(j, "psi_one", "system")) one.push_back(parse_scalar(field, v, "psi_one"));
  if (one.size() != m) throw Error(ErrorCode::ArityMismatch, "psi_one has " + std::to_string(one.size()) + " entries");
  const json& mats = member(j, "matrices", "system");
  if (!mats.is_array() || mats.size() != n) throw Error(ErrorCode::ArityMismatch, "expected n matrices");
  std::vector<FieldMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "matrix " + std::to_string(i + 1);
    if (!mats[i].is_array() || mats[i].size() != m * m) {
      throw Error(ErrorCode::ArityMismatch, where + ": expected m*m entries");
    }
    FieldMatrix a(m, FieldVector(m));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) a[r][c] = parse_scalar(field, mats[i][r * m + c], where);
    }
    out.push_back(std::move(a));
  }
  return MatrixActionSystem(field, std::move(one), std::move(out));
}

}  // namespace vanishing
