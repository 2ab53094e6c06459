// vanish: Groebner bases of vanishing ideals from the command line.
//
//   vanish basis points.json [--order lex] [--variant mmm] [--project auto] [--out r.json] [--stats s.json]
//   vanish merge a.txt b.txt
//   vanish bench-spoly --s 10
//   vanish fglm system.json --order deglex [--projected]
//   vanish selftest [--seed 1]

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vanishing/delta_merge.hpp"
#include "vanishing/functionals.hpp"
#include "vanishing/io.hpp"
#include "vanishing/oracles/checks.hpp"
#include "vanishing/oracles/oracles.hpp"
#include "vanishing/projection.hpp"

namespace {

using namespace vanishing;

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kParse = 2;
constexpr int kSelftestFailed = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

std::string tuple_text(const std::vector<Integer>& t) {
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ",";
    s += t[k].get_str();
  }
  return s;
}

struct BasisArgs {
  std::string points;
  std::string order = "lex";
  std::string variant = "mmm";
  std::string project = "auto";
  std::string out;
  std::string stats;
  std::string projection;
};

int cmd_basis(const BasisArgs& a) {
  const PointSet points = parse_points(read_file(a.points));
  const OrderSpec order = parse_order(a.order, points.arity());
  const Variant variant = a.variant == "abbott" ? Variant::Abbott : Variant::Mmm;
  const ProjectMode mode = a.project == "on" ? ProjectMode::On : a.project == "off" ? ProjectMode::Off : ProjectMode::Auto;

  const GroebnerResult res = compute_basis(points, order, variant, mode);
  emit(a.out, write_result(res, points.field(), variant, a.stats.empty()));
  if (!a.stats.empty()) write_file(a.stats, write_stats(res.stats));

  if (!a.projection.empty()) {
    // The intermediate run on the essential variables, for inspection.
    const EssentialSet es = essential_variables(points, order);
    const PointSet sub = project(points, es);
    const GroebnerResult sub_res = bm(sub, restrict_order(order, es.ess), variant);
    nlohmann::json ess = nlohmann::json::array();
    for (auto v : es.ess) ess.push_back(v + 1);
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : sub.points()) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& c : p) r.push_back(c.to_string());
      pts.push_back(std::move(r));
    }
    std::string nested = write_result(sub_res, sub.field(), variant, false);
    nested.pop_back();
    std::string indented;
    for (char c : nested) {
      indented += c;
      if (c == '\n') indented += "  ";
    }
    write_file(a.projection, "{\n  \"ess\": " + ess.dump() + ",\n  \"projected_points\": " + pts.dump() +
                                 ",\n  \"projected_result\": " + indented + "\n}\n");
  }
  return kOk;
}

int cmd_merge(const std::string& a_path, const std::string& b_path) {
  const auto a = parse_tuple_list(read_file(a_path));
  const auto b = parse_tuple_list(read_file(b_path));
  std::size_t n = !a.empty() ? a.front().size() : !b.empty() ? b.front().size() : 0;
  if (!a.empty() && !b.empty() && a.front().size() != b.front().size()) {
    throw Error(ErrorCode::ArityMismatch, "the lists hold tuples of different length");
  }
  auto merged = merge(DeltaList<Integer>::from_tuples(n, a), DeltaList<Integer>::from_tuples(n, b));
  for (const auto& k : merged.keys()) std::cout << tuple_text(k) << "\n";
  std::cout << "deltas:";
  for (auto d : merged.deltas()) std::cout << ' ' << d;
  std::cout << "\nelement_cmps: " << merged.counters().element_cmps << "\ndelta_cmps: " << merged.counters().delta_cmps
            << "\n";
  return kOk;
}

int cmd_bench_spoly(std::size_t s) {
  const oracles::SpolyBench b = oracles::bench_spoly(s);
  std::cout << "s: " << b.s << "\nn: " << b.n << "\nb_length: " << b.b_length
            << "\ndelta_element_cmps: " << b.delta_element_cmps << "\ndelta_delta_cmps: " << b.delta_delta_cmps
            << "\ndelta_total: " << b.delta_total() << "\nnaive_element_cmps: " << b.naive_element_cmps
            << "\noutputs_agree: " << (b.outputs_agree ? "yes" : "no") << "\n";
  return b.outputs_agree ? kOk : kValidation;
}

int cmd_fglm(const std::string& path, const std::string& order_text, const std::string& out, const std::string& stats,
             bool projected) {
  const MatrixActionSystem sys = parse_matrix_system(read_file(path));
  const OrderSpec order = parse_order(order_text, sys.arity());
  const GroebnerResult res = projected ? algorithm1_projected(sys, order) : algorithm1(sys, order);
  emit(out, write_result(res, sys.field(), Variant::Mmm, stats.empty()));
  if (!stats.empty()) write_file(stats, write_stats(res.stats));
  if (res.B.size() < sys.width()) {
    std::cerr << "note: psi spans a space of dimension " << res.B.size() << " < " << sys.width() << "\n";
  }
  return kOk;
}

int cmd_selftest(std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : oracles::run_all_checks(seed)) {
    std::cout << oracles::format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << " (seed " << seed << ")\n";
  return ok ? kOk : kSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases of vanishing ideals of points"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  BasisArgs basis;
  auto* c_basis = app.add_subcommand("basis", "Reduced Groebner basis and quotient basis of a point set");
  c_basis->add_option("points", basis.points, "Points file")->required();
  c_basis->add_option("--order", basis.order, "lex|deglex|degrevlex[:i1,...,in] or matrix:<file>")
      ->capture_default_str();
  c_basis->add_option("--variant", basis.variant)->check(CLI::IsMember({"abbott", "mmm"}))->capture_default_str();
  c_basis->add_option("--project", basis.project)->check(CLI::IsMember({"auto", "on", "off"}))->capture_default_str();
  c_basis->add_option("--out", basis.out, "Result file (default stdout)");
  c_basis->add_option("--stats", basis.stats, "Write run statistics here instead of into the result");
  c_basis->add_option("--projection", basis.projection, "Write Ess, pi(P) and the projected basis here");

  std::string a_path, b_path;
  auto* c_merge = app.add_subcommand("merge", "Delta merge of two sorted tuple lists");
  c_merge->add_option("a", a_path)->required();
  c_merge->add_option("b", b_path)->required();

  std::size_t s = 10;
  auto* c_bench = app.add_subcommand("bench-spoly", "Comparison counts for the S-polynomial merge");
  c_bench->add_option("--s", s)->check(CLI::Range(std::size_t{3}, std::size_t{100000}))->capture_default_str();

  std::string sys_path, fglm_order = "deglex", fglm_out, fglm_stats;
  bool fglm_projected = false;
  auto* c_fglm = app.add_subcommand("fglm", "Run the functional engine on multiplication matrices");
  c_fglm->add_option("system", sys_path)->required();
  c_fglm->add_option("--order", fglm_order)->capture_default_str();
  c_fglm->add_option("--out", fglm_out);
  c_fglm->add_option("--stats", fglm_stats);
  c_fglm->add_flag("--projected", fglm_projected, "Use the essential-variable projection");

  auto* c_self = app.add_subcommand("selftest", "Oracle equivalence suites and golden checks");
  c_self->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*c_basis) return cmd_basis(basis);
    if (*c_merge) return cmd_merge(a_path, b_path);
    if (*c_bench) return cmd_bench_spoly(s);
    if (*c_fglm) return cmd_fglm(sys_path, fglm_order, fglm_out, fglm_stats, fglm_projected);
    if (*c_self) return cmd_selftest(seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? kParse : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
