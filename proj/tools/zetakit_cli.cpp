// Command-line front end: evaluate exported functions and constants at a
// chosen precision, run the verification corpus, and emit reports.
//
//   zetakit eval zeta 2 --digits 30
//   zetakit verify --category series-closed --digits 40 --report out.jsonl
//   zetakit list
//   zetakit bench --id bbp-pi

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include "zetakit/elementary.hpp"
#include "zetakit/identity_corpus.hpp"
#include "zetakit/polylog_suite.hpp"
#include "zetakit/special_functions.hpp"
#include "zetakit/zeta_suite.hpp"

namespace {

using namespace zk;

struct EvalFunction {
  int arity;
  std::string help;
  std::function<Approx(const std::vector<std::string>&, const PrecisionContext&)> fn;
};

Real arg_real(const std::string& s, const PrecisionContext& ctx) {
  return Real(s, ctx.working_bits());
}

long arg_long(const std::string& s) {
  size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw UsageError("expected an integer, got: " + s);
  return v;
}

const std::map<std::string, EvalFunction>& function_table() {
  static const std::map<std::string, EvalFunction> table = {
      {"pi", {0, "pi", [](auto&, const PrecisionContext& c) { return elementary_pi(c); }}},
      {"log2", {0, "log 2", [](auto&, const PrecisionContext& c) { return elementary_log2(c); }}},
      {"euler_gamma",
       {0, "Euler's constant (integral route)",
        [](auto&, const PrecisionContext& c) { return euler_gamma_cached(c); }}},
      {"exp", {1, "exp(x)", [](auto& a, const PrecisionContext& c) {
                 return elementary_exp(arg_real(a[0], c), c);
               }}},
      {"log", {1, "log(x)", [](auto& a, const PrecisionContext& c) {
                 return elementary_log(arg_real(a[0], c), c);
               }}},
      {"pow", {2, "x^y", [](auto& a, const PrecisionContext& c) {
                 return elementary_pow(arg_real(a[0], c), arg_real(a[1], c), c);
               }}},
      {"zeta", {1, "zeta(s), s != 1", [](auto& a, const PrecisionContext& c) {
                  return zeta(arg_real(a[0], c), c);
                }}},
      {"zeta_a", {1, "alternating zeta", [](auto& a, const PrecisionContext& c) {
                    return zeta_alternating(arg_real(a[0], c), c);
                  }}},
      {"zeta_a_prime", {1, "d/ds zeta_a(s)", [](auto& a, const PrecisionContext& c) {
                          return zeta_a_prime(arg_real(a[0], c), c);
                        }}},
      {"hurwitz_zeta", {2, "zeta(p, u), honest heuristic bound",
                        [](auto& a, const PrecisionContext& c) {
                          return hurwitz_zeta(arg_real(a[0], c), arg_real(a[1], c), c);
                        }}},
      {"lerch_phi_alt", {2, "Phi(-1, s, x)", [](auto& a, const PrecisionContext& c) {
                           return lerch_phi_alt(arg_real(a[0], c), arg_real(a[1], c), c);
                         }}},
      {"li", {2, "Li_s(x), integer s >= 0, x in [-1,1]",
              [](auto& a, const PrecisionContext& c) {
                return li(arg_long(a[0]), arg_real(a[1], c), c);
              }}},
      {"nielsen", {3, "Nielsen S_{n,p}(z)", [](auto& a, const PrecisionContext& c) {
                     return nielsen_S(arg_long(a[0]), arg_long(a[1]), arg_real(a[2], c), c);
                   }}},
      {"euler_sum", {1, "sum H_n/n^q closed form", [](auto& a, const PrecisionContext& c) {
                       return euler_sum_linear(arg_long(a[0]), c);
                     }}},
      {"euler_sum_direct", {2, "sum H^{(r)}_n/n^q direct oracle",
                            [](auto& a, const PrecisionContext& c) {
                              return euler_sum_direct(arg_long(a[0]), arg_long(a[1]), c);
                            }}},
      {"witten", {3, "Witten W(r,s,t), integral route",
                  [](auto& a, const PrecisionContext& c) {
                    return witten_W(arg_long(a[0]), arg_long(a[1]), arg_long(a[2]), c)
                        .integral_route;
                  }}},
      {"li_moment", {3, "Int x^{n-1} log^q x Li_p dx", [](auto& a, const PrecisionContext& c) {
                       return li_moment(arg_long(a[0]), arg_long(a[1]), arg_long(a[2]), c);
                     }}},
      {"log_gamma", {1, "log Gamma(x)", [](auto& a, const PrecisionContext& c) {
                       return log_gamma(arg_real(a[0], c), c);
                     }}},
      {"digamma", {1, "psi(x)", [](auto& a, const PrecisionContext& c) {
                     return digamma(arg_real(a[0], c), c);
                   }}},
      {"polygamma", {2, "psi^{(m)}(x), 1 <= m <= 8", [](auto& a, const PrecisionContext& c) {
                       return polygamma(arg_long(a[0]), arg_real(a[1], c), c);
                     }}},
      {"beta", {2, "B(x, y)", [](auto& a, const PrecisionContext& c) {
                  return beta_function(arg_real(a[0], c), arg_real(a[1], c), c);
                }}},
      {"binomial", {2, "C(n, k), exact", [](auto& a, const PrecisionContext& c) {
                      BigInt b = binomial(static_cast<unsigned long>(arg_long(a[0])),
                                          static_cast<unsigned long>(arg_long(a[1])));
                      Real v(c.working_bits());
                      mpfr_set_z(v.raw(), b.get_mpz_t(), MPFR_RNDN);
                      return Approx::exact(v);
                    }}},
      {"harmonic", {2, "H_n^{(r)}, exact", [](auto& a, const PrecisionContext& c) {
                      Rational h = harmonic(static_cast<unsigned long>(arg_long(a[0])),
                                            static_cast<unsigned long>(arg_long(a[1])));
                      return h.to_approx(c.working_bits());
                    }}},
      {"glaisher_log_a", {0, "log A = 1/12 - zeta'(-1)",
                          [](auto&, const PrecisionContext& c) {
                            return glaisher_constants(c).log_A;
                          }}},
      {"glaisher_log_b", {0, "log B = -zeta'(-2)", [](auto&, const PrecisionContext& c) {
                            return glaisher_constants(c).log_B;
                          }}},
  };
  return table;
}

int cmd_eval(const std::string& name, const std::vector<std::string>& args,
             const PrecisionContext& ctx) {
  auto it = function_table().find(name);
  if (it == function_table().end()) throw UsageError("unknown function: " + name);
  if (static_cast<int>(args.size()) != it->second.arity)
    throw UsageError(name + " expects " + std::to_string(it->second.arity) + " argument(s)");
  Approx r = it->second.fn(args, ctx);
  std::cout << r.value.to_string(ctx.target_digits) << "\n";
  std::cout << "bound " << r.error_bound.to_string(4) << "\n";
  return 0;
}

int summarize(const std::vector<VerificationOutcome>& outcomes) {
  long pass = 0, fail = 0, recorded = 0;
  for (const auto& o : outcomes) {
    if (o.status == "pass") ++pass;
    else if (o.status == "recorded") ++recorded;
    else ++fail;
  }
  std::cout << "pass " << pass << "  fail " << fail << "  recorded " << recorded << "\n";
  return fail > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arbitrary-precision zeta/polylog series, integrals and identity verification"};
  app.require_subcommand(1);

  long digits = 50;
  std::string report_path, format = "table", id_filter, category_filter;
  bool stable = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--digits", digits, "target decimal digits (10..1000)");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a function at the chosen precision");
  std::string fn_name;
  std::vector<std::string> fn_args;
  eval_cmd->add_option("function", fn_name, "function name (see `list`)")->required();
  eval_cmd->add_option("args", fn_args, "numeric arguments as decimal strings");
  add_common(eval_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run the identity corpus");
  verify_cmd->add_option("--id", id_filter, "run a single corpus entry");
  verify_cmd->add_option("--category", category_filter, "run one category");
  verify_cmd->add_option("--report", report_path, "write the report to this path");
  verify_cmd->add_option("--format", format, "report format: json|table");
  verify_cmd->add_flag("--stable", stable, "zero elapsed_ms for byte-stable reports");
  add_common(verify_cmd);

  auto* list_cmd = app.add_subcommand("list", "list corpus entries and eval functions");

  auto* bench_cmd = app.add_subcommand("bench", "run entries and print cost counters");
  bench_cmd->add_option("--id", id_filter, "bench a single corpus entry");
  bench_cmd->add_option("--category", category_filter, "bench one category");
  add_common(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (digits < 10 || digits > 1000) throw zk::UsageError("--digits must lie in [10, 1000]");
    zk::PrecisionContext ctx(digits, 15);

    if (eval_cmd->parsed()) return cmd_eval(fn_name, fn_args, ctx);

    if (list_cmd->parsed()) {
      std::cout << "corpus entries:\n";
      for (const auto& rec : zk::corpus())
        std::cout << "  " << rec.id << "  [" << zk::to_string(rec.category) << "]  "
                  << rec.paper_ref << "\n";
      std::cout << "\neval functions:\n";
      for (const auto& [name, f] : function_table())
        std::cout << "  " << name << "/" << f.arity << "  " << f.help << "\n";
      return 0;
    }

    zk::RunFilter filter;
    if (!id_filter.empty()) filter.id = id_filter;
    if (!category_filter.empty()) {
      auto cat = zk::parse_category(category_filter);
      if (!cat) throw zk::UsageError("unknown category: " + category_filter);
      filter.category = cat;
    }

    if (verify_cmd->parsed()) {
      auto outcomes = zk::run_corpus(filter, ctx);
      if (!id_filter.empty() && outcomes.empty())
        throw zk::UsageError("unknown corpus id: " + id_filter);
      std::string body = (format == "json") ? zk::emit_report_jsonl(outcomes, stable)
                                            : zk::emit_report_table(outcomes);
      if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) throw zk::UsageError("cannot write report to " + report_path);
        f << body;
      } else {
        std::cout << body;
      }
      return summarize(outcomes);
    }

    if (bench_cmd->parsed()) {
      auto outcomes = zk::run_corpus(filter, ctx);
      for (const auto& o : outcomes)
        std::cout << o.id << "  terms " << o.terms << "  nodes " << o.quadrature_nodes << "  ms "
                  << o.elapsed_ms << "\n";
      return summarize(outcomes);
    }
  } catch (const zk::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
