// Acceptance suite: every criterion pinned in code at its stated
// tolerance, one pass/fail line each, nonzero exit on any failure.

#include "barnes/barnes.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

using namespace barnes;

namespace {

int failures = 0;

void report(int criterion, const char* label, bool pass, double worst_log10, double tol_log10) {
  std::printf("%s  criterion-%d  %-58s worst=10^%-8.1f tol=10^%.1f\n", pass ? "PASS" : "FAIL",
              criterion, label, worst_log10, tol_log10);
  if (!pass) ++failures;
}

double worst = -400;
void track(const MPReal& resid) {
  double r = resid.log10_abs();
  if (r > worst) worst = r;
}
void reset() { worst = -400; }

MPReal rq(long num, long den, mpfr_prec_t bits) { return MPReal(ExactRational(num, den), bits); }

// shifted-asymptotic route for log G(z+1) (recurrence + truncated series)
MPComplex shifted_asymptotic(const MPComplex& z, const PrecisionContext& cx) {
  double thresh = 0.4 * cx.working_digits() + 4.0;
  long m = std::max(0L, static_cast<long>(std::ceil(thresh - z.re.to_double())));
  MPComplex shift(0L, cx.bits());
  for (long j = 0; j < m; ++j) shift += log_gamma(z + 1 + j, cx).value;
  MPComplex w = z + m;
  long terms = 1;
  double lz = abs(w).log10_abs();
  while (terms < 4000 && detail::asym_term_log10(terms + 1, lz) > -double(cx.working_digits()))
    ++terms;
  return log_g_asymptotic(w, terms, cx, false).value - shift;
}

void criterion1() {
  auto ctx = PrecisionContext::make(30);
  mpfr_prec_t bits = ctx.bits();
  reset();
  for (const char* zs : {"0.5", "1", "2", "2.5", "4", "10"}) {
    MPComplex z(MPReal(zs, bits));
    MPComplex vals[4] = {log_g_hermite(z, ctx).value, log_g_binet(z, ctx).value,
                         log_g_psi_quadrature(z, ctx).value, shifted_asymptotic(z, ctx)};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) track(abs(vals[i] - vals[j]));
  }
  report(1, "four-method log G agreement on {1/2,1,2,5/2,4,10}", worst < -27, worst, -27);
}

void criterion2() {
  auto ctx = PrecisionContext::make(30);
  mpfr_prec_t bits = ctx.bits();
  bool ok = true;
  reset();
  // G(2) = G(3) = 1
  track(abs(log_barnes_g(MPComplex(MPReal(2L, bits)), ctx).value));
  track(abs(log_barnes_g(MPComplex(MPReal(3L, bits)), ctx).value));
  ok = ok && worst < -27;
  // G(n+1) equals the superfactorial for n <= 8
  for (long n = 1; n <= 8; ++n) {
    MPReal lg = log_barnes_g(MPComplex(MPReal(n + 1, bits)), ctx).value.re;
    MPReal g = exp(lg);
    mpfr_round(g.raw(), g.raw());
    ok = ok && (mpfr_cmp_z(g.raw(), superfactorial(n).get_mpz_t()) == 0);
  }
  // det M_n = G(n+1) exactly for n <= 6
  for (long n = 1; n <= 6; ++n) ok = ok && (hankel_bell_det(n) == superfactorial(n));
  report(2, "exact anchors: G(2)=G(3)=1, superfactorials, Hankel-Bell", ok, worst, -27);
}

void criterion3() {
  auto ctx = PrecisionContext::make(30);
  mpfr_prec_t bits = ctx.bits();
  reset();
  struct Case { SpecialValueKey key; long num, den; };
  for (auto cse : {Case{SpecialValueKey::Half, 1, 2}, Case{SpecialValueKey::Quarter, 1, 4},
                   Case{SpecialValueKey::ThreeQuarters, 3, 4},
                   Case{SpecialValueKey::Third, 1, 3}}) {
    MPReal closed = special_value(cse.key, ctx);
    MPReal numeric = log_barnes_g(MPComplex(rq(cse.num, cse.den, bits)), ctx).value.re;
    track(abs(closed - numeric));
  }
  // the closed form at 1/2 against the three section-2 particular cases
  track(abs(multigamma_half(1, ctx) - ldexp(log(const_pi(bits)), -1)));
  MPReal n2 = ldexp(glaisher_log_cached(ctx) * 3, -1) + log(const_pi(bits)) / 4 -
              log2_const(ctx) / 24 - rq(1, 8, bits);
  track(abs(multigamma_half(2, ctx) - n2));
  MPReal pi = const_pi(bits);
  MPReal z3 = 1 + zeta_m1(3, ctx).value;
  MPReal n3 = ldexp(glaisher_log_cached(ctx) * 3, -1) + log(pi) * rq(3, 16, bits) -
              log2_const(ctx) / 24 + z3 * 7 / ldexp(pi * pi, 5) - rq(1, 8, bits);
  track(abs(multigamma_half(3, ctx) - n3));
  report(3, "closed-form special values and the 1/2 closed form (n=1,2,3)", worst < -27, worst,
         -27);
}

void criterion4() {
  auto ctx = PrecisionContext::make(30);
  mpfr_prec_t bits = ctx.bits();
  reset();
  // bridge
  for (const char* zs : {"0.5", "1", "1.5", "2"}) {
    MPReal z(zs, bits);
    track(abs(log_barnes_g(MPComplex(z + 1), ctx).value.re - z * log_gamma(z, ctx).value -
              zeta_prime_neg(1, ctx) + hurwitz_zeta_prime_neg1(z, ctx).value));
  }
  {
    MPReal z = rq(7, 3, bits);
    track(abs(log_barnes_g(MPComplex(z + 1), ctx).value.re - z * log_gamma(z, ctx).value -
              zeta_prime_neg(1, ctx) + hurwitz_zeta_prime_neg1(z, ctx).value));
  }
  // reflection
  for (long den : {4L, 3L, 2L}) track(reflection_residual(rq(1, den, bits), ctx));
  // multiplication
  track(multiplication_residual(2, MPComplex(rq(3, 4, bits)), ctx));
  track(multiplication_residual(2, MPComplex(MPReal(1L, bits)), ctx));
  track(multiplication_residual(3, MPComplex(rq(1, 3, bits)), ctx));
  // int1/int2 for n in {1,2}
  for (long n : {1L, 2L}) {
    auto [r1, r2] = verify_int1_int2(n, ctx);
    track(MPReal(std::pow(10.0, r1.residual_log10), bits));
    track(MPReal(std::pow(10.0, r2.residual_log10), bits));
  }
  // Bernoulli kernel integrals k <= 6
  MPReal two_pi = ldexp(const_pi(bits), 1);
  for (long k = 1; k <= 6; ++k) {
    auto q = integrate_semi_infinite_t<MPReal>(
        [&](const MPReal& t) { return pow(t, 2 * k - 1) / expm1(two_pi * t); },
        6.283185307179586, ctx, static_cast<int>(2 * k));
    ExactRational expect = bernoulli_number(2 * k) / (4 * k);
    if (k % 2 == 0) expect = -expect;
    track(abs(q.value - MPReal(expect, bits)));
  }
  report(4, "identity suites: bridge, reflection, multiplication, int1/int2, kernels", worst < -25,
         worst, -25);
}

void criterion5() {
  bool ok = true;
  double worst_err = -400;
  for (long p : {20L, 30L, 50L}) {
    auto ctx = PrecisionContext::make(p);
    auto refctx = PrecisionContext::make(p + 20);
    MPReal approx = log_glaisher(GlaisherMethod::OddZetaSeries, ctx).value;
    MPReal reference = log_glaisher(GlaisherMethod::OddZetaSeries, refctx).value;
    double err = abs(approx - reference).log10_abs();
    if (err + p > worst_err) worst_err = err + p;  // margin above 10^-p
    ok = ok && (err < -double(p));
  }
  auto ctx = PrecisionContext::make(30);
  double slope = glaisher_error_slope(glaisher_series_error_curve(40, ctx));
  ok = ok && (std::abs(slope - (-0.6020599913279624)) < 0.05);
  std::printf("      criterion-5 detail: slope %.4f (target -0.6021 +- 0.05)\n", slope);
  report(5, "Glaisher term-count law at p=20,30,50 and O(1/4^N) slope", ok, worst_err, 0);
}

void criterion6() {
  auto ctx = PrecisionContext::make(40);
  RealEval v[4] = {log_glaisher(GlaisherMethod::ZetaPrime2, ctx),
                   log_glaisher(GlaisherMethod::OddZetaSeries, ctx),
                   log_glaisher(GlaisherMethod::BarnesHalf, ctx),
                   log_glaisher(GlaisherMethod::LogIntegral, ctx)};
  reset();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) track(abs(v[i].value - v[j].value));
  report(6, "Glaisher four-way cross-agreement at digits=40", worst < -37, worst, -37);
}

void criterion7() {
  auto ctx = PrecisionContext::make(30);
  reset();
  bool flagged_seen = false;
  std::string note;
  for (auto& r : run_verify("table3", ctx, -25)) {
    if (r.status == IdentityReport::Status::flagged) {
      flagged_seen = true;
      note = r.note;
      continue;
    }
    track(MPReal(std::pow(10.0, r.residual_log10), ctx.bits()));
  }
  std::printf("      criterion-7 detail: %s\n", note.c_str());
  report(7, "section-3 table entries verified; entry 2 flagged with fitted factor",
         worst < -25 && flagged_seen, worst, -25);
}

void criterion8() {
  auto ctx = PrecisionContext::make(30);
  mpfr_prec_t bits = ctx.bits();
  bool ok = true;
  MPComplex z(MPReal(40L, bits));
  MPComplex ref_g = log_g_hermite(z, ctx).value;
  MPReal ref_g3 = log_multigamma(3, MPReal(41L, bits), ctx).value;
  double worst_margin = -400;
  for (long terms = 2; terms <= 8; ++terms) {
    auto a = log_g_asymptotic(z, terms, ctx, false);
    double actual = abs(a.value - ref_g).log10_abs();
    ok = ok && (actual < a.err_log10);
    worst_margin = std::max(worst_margin, actual - a.err_log10);
    auto b = log_gamma3_asymptotic(z, terms, ctx, false);
    double actual3 = abs(b.value.re - ref_g3).log10_abs();
    ok = ok && (actual3 < b.err_log10);
    worst_margin = std::max(worst_margin, actual3 - b.err_log10);
  }
  report(8, "asymptotic honesty at z=40: error below first omitted term (orders 2..8)", ok,
         worst_margin, 0);
}

void criterion9() {
  auto ctx = PrecisionContext::make(30);
  mpfr_prec_t bits = ctx.bits();
  reset();
  for (long n = 1; n <= 4; ++n) {
    for (long num : {1L, 2L, 3L, 5L}) {
      MPReal zv = rq(num, 2, bits);
      if (n == 1) {
        // Gamma_2(z+1) = Gamma_2(z)/Gamma_1(z)
        track(abs(log_multigamma(2, zv + 1, ctx).value - log_multigamma(2, zv, ctx).value +
                  log_gamma(zv, ctx).value));
      } else {
        track(abs(log_multigamma(n + 1, zv + 1, ctx).value -
                  log_multigamma(n + 1, zv, ctx).value + log_multigamma(n, zv, ctx).value));
      }
    }
  }
  report(9, "Gamma_n recurrence stack residuals, n <= 4, z in {1/2,1,3/2,5/2}", worst < -25,
         worst, -25);
}

}  // namespace

int main() {
  widen_exponent_range();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures) {
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
