// Command-line front end: evaluate the implemented functions at arbitrary
// precision, run the identity verification suite, and emit digits-vs-work
// benchmarks.  Plain-text mode prints one record per line; --json emits
// the machine-readable schema.  Exit codes: 0 ok, 1 identity failure,
// 2 usage or domain error.

#include "barnes/barnes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace barnes;

namespace {

double wall_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct EvalSpec {
  std::string function;
  std::vector<std::string> args;
  long digits = 30;
  std::string method = "auto";
  long multigamma_n = 2;
  bool json_out = false;
};

OutputRecord run_eval(const EvalSpec& spec) {
  auto ctx = PrecisionContext::make(spec.digits);
  mpfr_prec_t bits = ctx.bits();
  auto t0 = std::chrono::steady_clock::now();
  auto need_arg = [&](size_t i) -> const std::string& {
    if (spec.args.size() <= i)
      throw DomainError("missing argument for function " + spec.function);
    return spec.args[i];
  };

  OutputRecord rec;
  rec.digits = spec.digits;
  const std::string& f = spec.function;

  if (f == "glaisher") {
    GlaisherMethod m = GlaisherMethod::OddZetaSeries;
    if (spec.method == "zeta-prime-2") m = GlaisherMethod::ZetaPrime2;
    else if (spec.method == "odd-zeta-series" || spec.method == "auto") m = GlaisherMethod::OddZetaSeries;
    else if (spec.method == "barnes-half") m = GlaisherMethod::BarnesHalf;
    else if (spec.method == "log-integral") m = GlaisherMethod::LogIntegral;
    else throw DomainError("unknown glaisher method: " + spec.method);
    auto e = log_glaisher(m, ctx);
    MPReal a = exp(e.value);
    rec.value = a.to_string(spec.digits);
    rec.err_log10 = e.err_log10 + a.log10_abs();  // d(e^x) = e^x dx
    rec.method = std::string(e.method);
    rec.elapsed_ms = wall_ms(t0);
    return rec;
  }

  if (f == "barnes-g" || f == "log-barnes-g") {
    MPComplex z = parse_complex(need_arg(0), bits);
    ComplexEval e;
    if (spec.method == "auto") {
      e = log_barnes_g(z, ctx);
    } else if (spec.method == "hermite") {
      e = log_g_hermite(z - 1, ctx);
    } else if (spec.method == "binet") {
      e = log_g_binet(z - 1, ctx);
    } else if (spec.method == "psi-quadrature") {
      e = log_g_psi_quadrature(z - 1, ctx);
    } else if (spec.method == "asymptotic") {
      e = log_barnes_g(z, ctx);  // dispatcher shifts into the asymptotic region
    } else {
      throw DomainError("unknown barnes-g method: " + spec.method);
    }
    if (e.zero) {
      rec.value = "0";
      rec.err_log10 = -400;
      rec.method = "zero";
      rec.elapsed_ms = wall_ms(t0);
      return rec;
    }
    if (f == "log-barnes-g") {
      rec.value = format_value(e.value, spec.digits);
      rec.err_log10 = e.err_log10;
    } else {
      MPComplex g = exp(e.value);
      rec.value = format_value(g, spec.digits);
      rec.err_log10 = e.err_log10 + abs(g).log10_abs();
    }
    rec.method = std::string(e.method);
    rec.elapsed_ms = wall_ms(t0);
    return rec;
  }

  if (f == "multigamma") {
    MPComplex z = parse_complex(need_arg(0), bits);
    auto e = log_multigamma(spec.multigamma_n, z, ctx);
    rec.value = format_value(e.value, spec.digits);
    rec.err_log10 = e.err_log10;
    rec.method = std::string(e.method);
    rec.elapsed_ms = wall_ms(t0);
    return rec;
  }

  if (f == "loggamma" || f == "digamma" || f == "trigamma" || f == "zeta-prime-neg1-z") {
    MPComplex z = parse_complex(need_arg(0), bits);
    ComplexEval e;
    if (f == "loggamma") e = log_gamma(z, ctx);
    else if (f == "digamma") e = digamma(z, ctx);
    else if (f == "trigamma") e = trigamma(z, ctx);
    else e = hurwitz_zeta_prime_neg1(z, ctx);
    rec.value = format_value(e.value, spec.digits);
    rec.err_log10 = e.err_log10;
    rec.method = std::string(e.method);
    rec.elapsed_ms = wall_ms(t0);
    return rec;
  }

  if (f == "hurwitz-zeta") {
    MPReal s(need_arg(0).c_str(), bits);
    MPComplex z = parse_complex(need_arg(1), bits);
    auto e = hurwitz_zeta(s, z, ctx);
    rec.value = format_value(e.value, spec.digits);
    rec.err_log10 = e.err_log10;
    rec.method = std::string(e.method);
    rec.elapsed_ms = wall_ms(t0);
    return rec;
  }

  if (f == "clausen") {
    MPReal theta(need_arg(0).c_str(), bits);
    auto e = clausen_cl2(theta, ctx);
    rec.value = e.value.to_string(spec.digits);
    rec.err_log10 = e.err_log10;
    rec.method = std::string(e.method);
    rec.elapsed_ms = wall_ms(t0);
    return rec;
  }

  throw DomainError("unknown function: " + f);
}

int cmd_eval(const EvalSpec& spec) {
  OutputRecord rec = run_eval(spec);
  if (spec.json_out) {
    json j{{"value", rec.value},
           {"err_log10", rec.err_log10},
           {"method", rec.method},
           {"digits", rec.digits},
           {"elapsed_ms", rec.elapsed_ms}};
    std::cout << j.dump() << "\n";
  } else {
    std::printf("value=%s err_log10=%.2f method=%s digits=%ld elapsed_ms=%.2f\n",
                rec.value.c_str(), rec.err_log10, rec.method.c_str(), rec.digits,
                rec.elapsed_ms);
  }
  return 0;
}

int cmd_verify(const std::string& selection, long digits, double tol_log10, bool json_out) {
  auto ctx = PrecisionContext::make(digits);
  auto reports = run_verify(selection, ctx, tol_log10);
  if (reports.empty()) {
    std::cerr << "no identities matched selection '" << selection << "'\n";
    return 2;
  }
  long fails = 0, flagged = 0;
  json arr = json::array();
  for (auto& r : reports) {
    if (r.status == IdentityReport::Status::fail) ++fails;
    if (r.status == IdentityReport::Status::flagged) ++flagged;
    if (json_out) {
      json j{{"identity_id", r.identity_id},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"residual_log10", r.residual_log10},
             {"tolerance_log10", r.tolerance_log10},
             {"status", to_string(r.status)}};
      if (!r.note.empty()) j["note"] = r.note;
      arr.push_back(std::move(j));
    } else {
      std::printf("%-7s %-42s residual=10^%-8.1f tol=10^%.1f%s%s\n", to_string(r.status),
                  r.identity_id.c_str(), r.residual_log10, r.tolerance_log10,
                  r.note.empty() ? "" : "  ", r.note.c_str());
    }
  }
  if (json_out) {
    std::cout << arr.dump() << "\n";
  } else {
    std::printf("%zu identities: %ld failed, %ld flagged\n", reports.size(), fails, flagged);
  }
  return fails > 0 ? 1 : 0;
}

int cmd_bench(const std::string& target, const std::vector<long>& digits_list,
              const std::string& zstr, bool json_out) {
  json arr = json::array();
  auto emit = [&](long digits, const std::string& method, long work, double ms) {
    if (json_out) {
      arr.push_back(json{{"target", target},
                         {"digits", digits},
                         {"method", method},
                         {"work", work},
                         {"elapsed_ms", ms}});
    } else {
      std::printf("%-9s digits=%-5ld %-18s work=%-8ld elapsed_ms=%.2f\n", target.c_str(),
                  digits, method.c_str(), work, ms);
    }
  };
  for (long digits : digits_list) {
    auto ctx = PrecisionContext::make(digits);
    if (target == "glaisher") {
      std::vector<GlaisherMethod> methods{GlaisherMethod::OddZetaSeries,
                                          GlaisherMethod::ZetaPrime2};
      if (digits <= 200) {
        methods.push_back(GlaisherMethod::BarnesHalf);
        methods.push_back(GlaisherMethod::LogIntegral);
      }
      for (auto m : methods) {
        auto t0 = std::chrono::steady_clock::now();
        auto e = log_glaisher(m, ctx);
        long work =
            (m == GlaisherMethod::OddZetaSeries) ? glaisher_series_terms_for(digits) : e.evaluations;
        emit(digits, std::string(to_string(m)), work, wall_ms(t0));
      }
    } else if (target == "barnes-g") {
      auto ctx2 = ctx;
      MPComplex z = parse_complex(zstr, ctx2.bits());
      struct Row { const char* name; std::function<ComplexEval()> run; };
      MPComplex w = z - 1;
      std::vector<Row> rows{
          {"hermite-integral", [&] { return log_g_hermite(w, ctx2); }},
          {"binet-integral", [&] { return log_g_binet(w, ctx2); }},
          {"psi-quadrature", [&] { return log_g_psi_quadrature(w, ctx2); }},
          {"asymptotic-shifted", [&] { return log_barnes_g(z, ctx2); }},
      };
      for (auto& row : rows) {
        auto t0 = std::chrono::steady_clock::now();
        auto e = row.run();
        emit(digits, row.name, e.evaluations, wall_ms(t0));
      }
    } else {
      throw DomainError("unknown bench target: " + target);
    }
  }
  if (json_out) std::cout << arr.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  widen_exponent_range();
  CLI::App app{"arbitrary-precision Barnes G / multiple gamma / Glaisher calculator"};
  app.require_subcommand(1);

  EvalSpec spec;
  auto* eval = app.add_subcommand("eval", "evaluate a function");
  eval->add_option("function", spec.function,
                   "one of: barnes-g log-barnes-g multigamma loggamma digamma trigamma "
                   "hurwitz-zeta zeta-prime-neg1-z clausen glaisher")
      ->required();
  eval->add_option("args", spec.args, "argument literals (reals or a+bi)");
  eval->add_option("--digits", spec.digits, "decimal digits (10..5000)")
      ->check(CLI::Range(10L, 5000L));
  eval->add_option("--method", spec.method, "method override where available");
  eval->add_option("--n", spec.multigamma_n, "multigamma order n (1..6)")
      ->check(CLI::Range(1L, 6L));
  eval->add_flag("--json", spec.json_out, "JSON output");

  std::string selection = "all";
  long vdigits = 30;
  double tol_log10 = 0;  // 0 = default: -(digits-5)
  bool vjson = false;
  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("selection", selection, "all or a group key");
  verify->add_option("--digits", vdigits, "decimal digits")->check(CLI::Range(10L, 5000L));
  verify->add_option("--tolerance-log10", tol_log10, "override tolerance exponent");
  verify->add_flag("--json", vjson, "JSON output");

  std::string target;
  std::vector<long> digits_list;
  std::string bench_z = "10";
  bool bjson = false;
  auto* bench = app.add_subcommand("bench", "digits-vs-work benchmarks");
  bench->add_option("target", target, "glaisher or barnes-g")->required();
  bench->add_option("--digits-list", digits_list, "digit counts (10..2000)")
      ->required()
      ->check(CLI::Range(10L, 2000L));
  bench->add_option("--z", bench_z, "argument for barnes-g");
  bench->add_flag("--json", bjson, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(spec);
    if (verify->parsed()) {
      double tol = tol_log10 != 0 ? tol_log10 : -(double(vdigits) - 5);
      return cmd_verify(selection, vdigits, tol, vjson);
    }
    if (bench->parsed()) return cmd_bench(target, digits_list, bench_z, bjson);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
