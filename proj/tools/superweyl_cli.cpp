// Command-line front end: normal forms, the p1/q1/p operators, the tensor
// model and the verifier.
//
// Exit codes: 0 success or pass, 1 a verification failed, 2 bad usage or input.

#include <superweyl/superweyl.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace sw = superweyl;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string algebra = "trunc:2";
  unsigned m = 1;
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<unsigned> max_size;
  std::uint32_t window = 2;
  bool no_timing = false;
  std::string profile = "quick";
  std::string expr;
  std::string phi;
  std::string chi;
  std::string xi;
  std::string check;
  std::string path;
};

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

void print_uelem(const sw::CoeffAlgebra& alg, const sw::UElem& u, bool json) {
  if (json)
    std::cout << sw::to_json(u).dump() << "\n";
  else
    std::cout << sw::format_uelem(alg, u) << "\n";
}

int cmd_nf(const Options& o) {
  sw::Workspace ws(sw::CoeffAlgebra::parse(o.algebra));
  std::vector<std::string> warnings;
  const sw::UElem u = sw::parse_uelem(o.expr, ws.ops, &warnings);
  print_warnings(warnings);
  print_uelem(ws.alg(), u, o.json);
  return kPass;
}

int cmd_operator(const std::string& which, const Options& o) {
  sw::Workspace ws(sw::CoeffAlgebra::parse(o.algebra));
  const auto& alg = ws.alg();
  sw::UElem u;
  if (which == "p1") {
    u = ws.ops.p1(sw::parse_multiset_literal(o.phi, alg), sw::parse_multiset_literal(o.chi, alg));
  } else if (which == "q1") {
    u = ws.ops.q1(sw::parse_multiset_literal(o.phi, alg), sw::parse_multiset_literal(o.chi, alg));
  } else {
    u = ws.ops.p(sw::parse_multiset_literal(o.phi, alg), sw::parse_multiset_literal(o.chi, alg),
                 sw::parse_tuple_literal(o.xi, alg));
  }
  print_uelem(alg, u, o.json);
  return kPass;
}

int cmd_p_act(const Options& o) {
  sw::Workspace ws(sw::CoeffAlgebra::parse(o.algebra));
  const auto& alg = ws.alg();
  std::vector<std::string> warnings;
  const sw::UElem u = sw::parse_uelem(o.expr, ws.ops, &warnings);
  print_warnings(warnings);
  const sw::Tensor image = ws.tm.act(u, sw::TensorModule::highest_weight_vector(o.m));
  const auto coords = ws.tm.express_in_ts_basis(image);
  if (o.json) {
    sw::json terms = sw::json::array();
    for (const auto& [idx, c] : coords) terms.push_back(sw::json{{"coeff", sw::to_string(c)}, {"index", sw::to_json(idx)}});
    std::cout << sw::json{{"m", o.m}, {"coords", std::move(terms)}}.dump() << "\n";
    return kPass;
  }
  if (coords.empty()) std::cout << "0\n";
  for (const auto& [idx, c] : coords) std::cout << sw::to_string(c) << " " << sw::format_index(alg, idx) << "\n";
  return kPass;
}

int cmd_basis(const Options& o) {
  sw::Workspace ws(sw::CoeffAlgebra::parse(o.algebra));
  const auto basis = ws.tm.ts_basis(o.m, ws.alg().window(o.window));
  if (o.json) {
    sw::json out = sw::json::array();
    for (const auto& idx : basis) out.push_back(sw::to_json(idx));
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& idx : basis) std::cout << sw::format_index(ws.alg(), idx) << "\n";
  }
  return kPass;
}

int cmd_dim(const Options& o) {
  const auto alg = sw::CoeffAlgebra::parse(o.algebra);
  sw::TensorModule tm(alg);
  const std::size_t n = tm.ts_basis(o.m, alg.window(o.window)).size();
  if (o.json)
    std::cout << sw::json{{"algebra", alg.name()}, {"m", o.m}, {"dim", n}}.dump() << "\n";
  else
    std::cout << n << "\n";
  return kPass;
}

int cmd_verify(const Options& o) {
  sw::VerifyPlan plan;
  if (o.profile == "quick") {
    plan.profile = sw::Profile::quick;
  } else if (o.profile == "full") {
    plan.profile = sw::Profile::full;
  } else {
    std::cerr << "error: --profile must be quick or full\n";
    return kUsage;
  }
  if (!o.algebra.empty()) plan.algebra = sw::CoeffAlgebra::parse(o.algebra);
  plan.seed = o.seed;
  plan.max_size = o.max_size;

  std::vector<sw::CheckReport> reports;
  if (o.check == "all") {
    reports = sw::verify_all(plan);
  } else {
    try {
      reports = sw::run_check(o.check, plan);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

  bool ok = true;
  sw::json out = sw::json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (o.json) {
      out.push_back(r.to_json(!o.no_timing));
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << " " << r.params.dump() << " instances=" << r.instances
              << " failures=" << r.failures.size();
    if (!o.no_timing) std::cout << " ms=" << r.ms;
    std::cout << "\n";
    std::size_t shown = 0;
    for (const auto& f : r.failures) {
      if (++shown > 5) {
        std::cout << "  ... " << r.failures.size() - 5 << " more\n";
        break;
      }
      std::cout << "  " << f.params.dump() << ": " << f.diagnostic << "\n";
    }
  }
  if (o.json) std::cout << out.dump() << "\n";
  return ok ? kPass : kFail;
}

int cmd_validate_table(const Options& o) {
  const auto alg = sw::CoeffAlgebra::load_table(o.path);
  const auto report = sw::validate_table(alg);
  if (o.json) {
    std::cout << sw::json{{"path", o.path}, {"valid", report.valid()}, {"violations", report.violations}}.dump()
              << "\n";
  } else if (report.valid()) {
    std::cout << "valid (dim " << *alg.dimension() << ")\n";
  } else {
    for (const auto& v : report.violations) std::cout << v << "\n";
  }
  return report.valid() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in U(sl(2,1) (x) A)"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::optional<std::string> algebra_flag;
  app.add_option("--algebra", algebra_flag, "poly | trunc:N | table:PATH (default trunc:2)");
  app.add_option("--m", o.m, "tensor degree")->check(CLI::Range(0u, 12u));
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--max-size", o.max_size, "size bound for verifier ranges");
  app.add_option("--window", o.window, "basis elements of poly to enumerate")->check(CLI::Range(1u, 16u));
  app.add_flag("--no-timing", o.no_timing, "omit timings from verify output");

  auto* nf = app.add_subcommand("nf", "PBW normal form of an expression");
  nf->add_option("expr", o.expr)->required();
  auto* p1 = app.add_subcommand("p1", "p1(phi, chi)");
  auto* q1 = app.add_subcommand("q1", "q1(phi, chi)");
  for (auto* s : {p1, q1}) {
    s->add_option("phi", o.phi, "multiset, e.g. {t:2}")->required();
    s->add_option("chi", o.chi, "multiset")->required();
  }
  auto* p = app.add_subcommand("p", "p(phi1, phi2, xi)");
  p->add_option("phi1", o.phi)->required();
  p->add_option("phi2", o.chi)->required();
  p->add_option("xi", o.xi, "tuple, e.g. (1, t)")->required();
  auto* p_act = app.add_subcommand("p-act", "apply an expression to v1^(x)m and print basis coordinates");
  p_act->add_option("expr", o.expr)->required();
  auto* basis = app.add_subcommand("basis", "list the basis indices of TS^m");
  auto* dim = app.add_subcommand("dim", "dimension of TS^m");
  auto* verify = app.add_subcommand("verify", "run a named check, or all of them");
  verify->add_option("check", o.check, "check id or 'all'")->required();
  verify->add_option("--profile", o.profile, "quick | full");
  auto* validate = app.add_subcommand("validate-table", "check the axioms of a product table file");
  validate->add_option("path", o.path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  // verify runs its own algebra list unless one is given
  if (algebra_flag) o.algebra = *algebra_flag;
  else if (verify->parsed()) o.algebra.clear();

  try {
    if (nf->parsed()) return cmd_nf(o);
    if (p1->parsed()) return cmd_operator("p1", o);
    if (q1->parsed()) return cmd_operator("q1", o);
    if (p->parsed()) return cmd_operator("p", o);
    if (p_act->parsed()) return cmd_p_act(o);
    if (basis->parsed()) return cmd_basis(o);
    if (dim->parsed()) return cmd_dim(o);
    if (verify->parsed()) return cmd_verify(o);
    if (validate->parsed()) return cmd_validate_table(o);
  } catch (const sw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const sw::TableParseError& e) {
    std::cerr << "table error: " << e.what() << "\n";
  } catch (const sw::AlgebraError& e) {
    std::cerr << "algebra error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
