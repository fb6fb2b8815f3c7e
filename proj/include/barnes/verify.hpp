#pragma once

// The identity verification suite: every cross-checkable identity the
// library implements, evaluated with both sides computed independently
// and reported as IdentityReports.  One entry (the x log x/(e^{2 pi x}+1)
// table integral) is permanently "flagged": the printed closed form is
// dimensionally off by a rational factor, so the suite reports the
// empirically fitted factor instead of passing or failing it.

#include "barnes/barnes_g.hpp"
#include "barnes/glaisher.hpp"
#include "barnes/multigamma.hpp"
#include "barnes/report.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace barnes {

struct IdentityCheck {
  std::string id;
  std::string group;
  std::function<IdentityReport(const PrecisionContext&, double)> run;
};

namespace detail {

// small continued-fraction rationalization: best p/q with q <= qmax
inline std::pair<long, long> rationalize(double x, long qmax) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int i = 0; i < 64; ++i) {
    double a = std::floor(v);
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > qmax || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = v - a;
    if (std::abs(frac) < 1e-15) break;
    v = 1.0 / frac;
  }
  return {p1, q1};
}

inline MPReal bern_kernel_integral(long power, const PrecisionContext& ctx) {
  MPReal two_pi = ldexp(const_pi(ctx.bits()), 1);
  return integrate_semi_infinite_t<MPReal>(
             [&](const MPReal& x) { return pow(x, power) / expm1(two_pi * x); },
             6.283185307179586, ctx, static_cast<int>(power + 1))
      .value;
}

}  // namespace detail

inline std::vector<IdentityCheck> identity_suite() {
  std::vector<IdentityCheck> suite;
  auto add = [&](std::string group, std::string id,
                 std::function<IdentityReport(const PrecisionContext&, double)> fn) {
    suite.push_back(IdentityCheck{std::move(id), std::move(group), std::move(fn)});
  };

  // --- Bernoulli kernel integrals: int t^{2k-1}/(e^{2pi t}-1) = (-1)^{k+1} B_2k/(4k)
  for (long k = 1; k <= 6; ++k) {
    add("bern-integral", "bern-integral.k=" + std::to_string(k),
        [k](const PrecisionContext& ctx, double tol) {
          MPReal lhs = detail::bern_kernel_integral(2 * k - 1, ctx);
          ExactRational r = bernoulli_number(2 * k) / (4 * k);
          if (k % 2 == 0) r = -r;
          return make_report("bern-integral.k=" + std::to_string(k), lhs,
                             MPReal(r, ctx.bits()), tol, ctx.digits);
        });
  }

  // --- exact combinatorics
  add("exact", "exact.stirling-recurrence", [](const PrecisionContext& ctx, double) {
    long bad = 0;
    for (long n = 1; n <= 30; ++n)
      for (long k = 0; k <= n; ++k) {
        BigInt expect = k * stirling_subset(n - 1, k) +
                        (k > 0 ? stirling_subset(n - 1, k - 1) : BigInt(0));
        if (stirling_subset(n, k) != expect) ++bad;
      }
    IdentityReport r;
    r.identity_id = "exact.stirling-recurrence";
    r.lhs = std::to_string(bad) + " violations";
    r.rhs = "0 violations";
    r.residual_log10 = bad == 0 ? -400 : 0;
    r.tolerance_log10 = -1;
    r.status = bad == 0 ? IdentityReport::Status::pass : IdentityReport::Status::fail;
    return r;
  });
  add("exact", "exact.bernoulli-sum", [](const PrecisionContext&, double) {
    long bad = 0;
    for (long n = 2; n <= 40; ++n) {
      ExactRational s(0);
      for (long k = 0; k < n; ++k)
        s += ExactRational(binomial_exact(n, k)) * bernoulli_number(k);
      if (s != 0) ++bad;
    }
    IdentityReport r;
    r.identity_id = "exact.bernoulli-sum";
    r.lhs = std::to_string(bad) + " violations";
    r.rhs = "0 violations";
    r.residual_log10 = bad == 0 ? -400 : 0;
    r.tolerance_log10 = -1;
    r.status = bad == 0 ? IdentityReport::Status::pass : IdentityReport::Status::fail;
    return r;
  });

  // --- Hankel determinants of Bell numbers = G(n+1) = superfactorial
  for (long n = 1; n <= 6; ++n) {
    add("hankel-bell", "hankel-bell.n=" + std::to_string(n),
        [n](const PrecisionContext& ctx, double) {
          BigInt det = hankel_bell_det(n);
          BigInt sf = superfactorial(n);  // G(n+1) = prod_{i<n} i!
          auto g = log_barnes_g(MPComplex(MPReal(n + 1, ctx.bits())), ctx);
          MPReal rounded = exp(g.value.re);
          mpfr_round(rounded.raw(), rounded.raw());
          IdentityReport r;
          r.identity_id = "hankel-bell.n=" + std::to_string(n);
          r.lhs = det.get_str();
          r.rhs = sf.get_str();
          bool exact_ok = (det == sf);
          bool disp_ok = mpfr_cmp_z(rounded.raw(), sf.get_mpz_t()) == 0;
          r.residual_log10 = (exact_ok && disp_ok) ? -400 : 0;
          r.tolerance_log10 = -1;
          r.status = (exact_ok && disp_ok) ? IdentityReport::Status::pass
                                           : IdentityReport::Status::fail;
          if (!disp_ok) r.note = "dispatcher round mismatch";
          return r;
        });
  }

  // --- G <-> zeta' bridge: log G(z+1) - z log Gamma(z) = zeta'(-1) - zeta'(-1,z)
  for (const char* zs : {"0.5", "1", "1.5", "2", "7/3"}) {
    add("bridge", std::string("bridge.eq-g2z.z=") + zs,
        [zs](const PrecisionContext& ctx, double tol) {
          mpfr_prec_t bits = ctx.bits();
          MPReal z = (std::string(zs) == "7/3") ? MPReal(ExactRational(7, 3), bits)
                                                : MPReal(zs, bits);
          MPReal lhs = log_barnes_g(MPComplex(z + 1), ctx).value.re -
                       z * log_gamma(z, ctx).value;
          MPReal rhs = zeta_prime_neg(1, ctx) - hurwitz_zeta_prime_neg1(z, ctx).value;
          return make_report(std::string("bridge.eq-g2z.z=") + zs, lhs, rhs, tol, ctx.digits);
        });
  }

  // --- reflection formula
  for (const char* zs : {"1/4", "1/3", "1/2"}) {
    add("reflection", std::string("reflection.z=") + zs,
        [zs](const PrecisionContext& ctx, double tol) {
          std::string s(zs);
          long den = s == "1/4" ? 4 : (s == "1/3" ? 3 : 2);
          MPReal z(ExactRational(1, den), ctx.bits());
          MPReal resid = reflection_residual(z, ctx);
          IdentityReport r;
          r.identity_id = std::string("reflection.z=") + zs;
          r.lhs = resid.to_string(6);
          r.rhs = "0";
          r.residual_log10 = resid.log10_abs();
          r.tolerance_log10 = tol;
          r.status = r.residual_log10 <= tol ? IdentityReport::Status::pass
                                             : IdentityReport::Status::fail;
          return r;
        });
  }

  // --- multiplication formula
  {
    struct MC { long n; ExactRational z; const char* tag; };
    for (auto mc : {MC{2, ExactRational(3, 4), "multiplication.n=2.z=3/4"},
                    MC{2, ExactRational(1, 1), "multiplication.n=2.z=1"},
                    MC{3, ExactRational(1, 3), "multiplication.n=3.z=1/3"}}) {
      add("multiplication", mc.tag, [mc](const PrecisionContext& ctx, double tol) {
        MPReal resid =
            multiplication_residual(mc.n, MPComplex(MPReal(mc.z, ctx.bits())), ctx);
        IdentityReport r;
        r.identity_id = mc.tag;
        r.lhs = resid.to_string(6);
        r.rhs = "0";
        r.residual_log10 = resid.log10_abs();
        r.tolerance_log10 = tol;
        r.status = r.residual_log10 <= tol ? IdentityReport::Status::pass
                                           : IdentityReport::Status::fail;
        return r;
      });
    }
  }

  // --- closed-form special values vs the dispatcher
  {
    struct SV { SpecialValueKey key; ExactRational z; const char* tag; };
    for (auto sv : {SV{SpecialValueKey::Half, ExactRational(1, 2), "special-value.half"},
                    SV{SpecialValueKey::Quarter, ExactRational(1, 4), "special-value.quarter"},
                    SV{SpecialValueKey::ThreeQuarters, ExactRational(3, 4),
                       "special-value.three-quarters"},
                    SV{SpecialValueKey::Third, ExactRational(1, 3), "special-value.third"},
                    SV{SpecialValueKey::TwoThirds, ExactRational(2, 3),
                       "special-value.two-thirds"}}) {
      add("special-value", sv.tag, [sv](const PrecisionContext& ctx, double tol) {
        MPReal closed = special_value(sv.key, ctx);
        MPReal numeric =
            log_barnes_g(MPComplex(MPReal(sv.z, ctx.bits())), ctx).value.re;
        return make_report(sv.tag, closed, numeric, tol, ctx.digits);
      });
    }
  }

  // --- the multigamma closed form at 1/2 vs the section-2 particular
  // cases and the integral route
  for (long n : {1L, 2L, 3L}) {
    add("prop-half", "prop-half.case.n=" + std::to_string(n),
        [n](const PrecisionContext& ctx, double tol) {
          mpfr_prec_t bits = ctx.bits();
          MPReal lhs = multigamma_half(n, ctx);
          MPReal rhs(bits);
          if (n == 1) {
            rhs = ldexp(log(const_pi(bits)), -1);  // log sqrt(pi)
          } else if (n == 2) {
            // log Gamma_2(1/2) = -log G(1/2) = 3/2 log A + log pi/4 - log2/24 - 1/8
            rhs = ldexp(glaisher_log_cached(ctx) * 3, -1) + log(const_pi(bits)) / 4 -
                  log2_const(ctx) / 24 - MPReal(ExactRational(1, 8), bits);
          } else {
            // log Gamma_3(1/2) = 3/2 log A + 3/16 log pi - log2/24
            //                    + 7 zeta(3)/(32 pi^2) - 1/8
            MPReal z3 = 1 + zeta_m1(3, ctx).value;
            MPReal pi = const_pi(bits);
            rhs = ldexp(glaisher_log_cached(ctx) * 3, -1) +
                  log(pi) * MPReal(ExactRational(3, 16), bits) - log2_const(ctx) / 24 +
                  z3 * 7 / (ldexp(pi * pi, 5)) - MPReal(ExactRational(1, 8), bits);
          }
          return make_report("prop-half.case.n=" + std::to_string(n), lhs, rhs, tol,
                             ctx.digits);
        });
  }
  for (long n : {1L, 2L, 3L, 4L}) {
    add("prop-half", "prop-half.integral.n=" + std::to_string(n),
        [n](const PrecisionContext& ctx, double tol) {
          MPReal lhs = multigamma_half(n, ctx);
          MPReal rhs =
              log_multigamma(n, MPReal(ExactRational(1, 2), ctx.bits()), ctx).value;
          return make_report("prop-half.integral.n=" + std::to_string(n), lhs, rhs, tol + 3,
                             ctx.digits);
        });
  }

  // --- the section-3 table of special integrals
  add("table3", "table3.entry1", [](const PrecisionContext& ctx, double tol) {
    MPReal two_pi = ldexp(const_pi(ctx.bits()), 1);
    MPReal lhs = ldexp(integrate_semi_infinite_t<MPReal>(
                           [&](const MPReal& x) { return x * log(x) / expm1(two_pi * x); },
                           6.283185307179586, ctx, 2)
                           .value,
                       1);
    return make_report("table3.entry1", lhs, zeta_prime_neg(1, ctx), tol, ctx.digits);
  });
  add("table3", "table3.entry2-flagged", [](const PrecisionContext& ctx, double) {
    // printed as  int x log x/(e^{2pi x}+1) = 12 zeta'(-1) + log 2 ;
    // dimensional comparison with its neighbours suggests a missing
    // rational prefactor.  Fit it empirically and flag.
    mpfr_prec_t bits = ctx.bits();
    MPReal two_pi = ldexp(const_pi(bits), 1);
    MPReal lhs = integrate_semi_infinite_t<MPReal>(
                     [&](const MPReal& x) { return x * log(x) / (exp(two_pi * x) + 1); },
                     6.283185307179586, ctx, 2)
                     .value;
    MPReal printed = ldexp(zeta_prime_neg(1, ctx), 2) * 3 + log2_const(ctx);
    auto [p, q] = detail::rationalize((lhs / printed).to_double(), 1000000);
    MPReal fitted = printed * p / q;
    IdentityReport r;
    r.identity_id = "table3.entry2-flagged";
    r.lhs = lhs.to_string(ctx.digits);
    r.rhs = printed.to_string(ctx.digits) + " (as printed)";
    r.residual_log10 = abs(lhs - fitted).log10_abs();
    r.tolerance_log10 = -double(ctx.digits) + 5;
    r.status = IdentityReport::Status::flagged;
    r.note = "suspected misprint; integral = (" + std::to_string(p) + "/" + std::to_string(q) +
             ") * (12 zeta'(-1) + log 2), fit residual 10^" +
             std::to_string(r.residual_log10);
    return r;
  });
  add("table3", "table3.entry3", [](const PrecisionContext& ctx, double tol) {
    mpfr_prec_t bits = ctx.bits();
    MPReal two_pi = ldexp(const_pi(bits), 1);
    MPReal one(1L, bits);
    MPReal lhs =
        integrate_semi_infinite_t<MPReal>(
            [&](const MPReal& x) { return x * log(one + x * x) / (exp(two_pi * x) + 1); },
            6.283185307179586, ctx, 3)
            .value;
    MPReal rhs = MPReal(ExactRational(3, 4), bits) -
                 log2_const(ctx) * MPReal(ExactRational(23, 24), bits) +
                 ldexp(zeta_prime_neg(1, ctx), -1);
    return make_report("table3.entry3", lhs, rhs, tol, ctx.digits);
  });
  for (const char* zs : {"0.5", "1", "3"}) {
    add("table3", std::string("table3.entry4.z=") + zs,
        [zs](const PrecisionContext& ctx, double tol) {
          mpfr_prec_t bits = ctx.bits();
          MPReal z(zs, bits);
          MPReal two_pi = ldexp(const_pi(bits), 1);
          MPReal lhs = ldexp(integrate_semi_infinite_t<MPReal>(
                                 [&](const MPReal& x) {
                                   return atan(x / z) / (exp(two_pi * x) + 1);
                                 },
                                 6.283185307179586, ctx, 2)
                                 .value,
                             1);
          MPReal rhs = z * log(z) - z + ldexp(log_2pi(ctx), -1) -
                       log_gamma(z + MPReal("0.5", bits), ctx).value;
          return make_report(std::string("table3.entry4.z=") + zs, lhs, rhs, tol, ctx.digits);
        });
  }
  add("table3", "table3.entry5", [](const PrecisionContext& ctx, double tol) {
    mpfr_prec_t bits = ctx.bits();
    MPReal two_pi = ldexp(const_pi(bits), 1);
    MPReal lhs = ldexp(integrate_semi_infinite_t<MPReal>(
                           [&](const MPReal& x) { return atan(x) / (exp(two_pi * x) + 1); },
                           6.283185307179586, ctx, 2)
                           .value,
                       2);
    MPReal rhs = log2_const(ctx) * 3 - 2;
    return make_report("table3.entry5", lhs, rhs, tol, ctx.digits);
  });
  add("table3", "table3.entry6.z=2", [](const PrecisionContext& ctx, double tol) {
    mpfr_prec_t bits = ctx.bits();
    MPReal z(2L, bits);
    MPReal two_pi = ldexp(const_pi(bits), 1);
    MPReal z2 = z * z;
    MPReal lhs = ldexp(integrate_semi_infinite_t<MPReal>(
                           [&](const MPReal& x) {
                             return x / ((exp(two_pi * x) + 1) * (x * x + z2));
                           },
                           6.283185307179586, ctx, 2)
                           .value,
                       1);
    MPReal rhs = digamma(z + MPReal("0.5", bits), ctx).value - log(z);
    return make_report("table3.entry6.z=2", lhs, rhs, tol, ctx.digits);
  });
  add("table3", "table3.entry7.z=2", [](const PrecisionContext& ctx, double tol) {
    mpfr_prec_t bits = ctx.bits();
    MPReal z(2L, bits);
    MPReal two_pi = ldexp(const_pi(bits), 1);
    MPReal z2 = z * z;
    MPReal lhs = ldexp(integrate_semi_infinite_t<MPReal>(
                           [&](const MPReal& x) {
                             return x / (expm1(two_pi * x) * (x * x + z2));
                           },
                           6.283185307179586, ctx, 2)
                           .value,
                       1);
    MPReal rhs = log(z) - digamma(z, ctx).value - 1 / ldexp(z, 1);
    return make_report("table3.entry7.z=2", lhs, rhs, tol, ctx.digits);
  });

  // --- int1/int2
  for (long n : {1L, 2L}) {
    add("int1int2", "int1int2.int1.n=" + std::to_string(n),
        [n](const PrecisionContext& ctx, double) {
          return verify_int1_int2(n, ctx).first;
        });
    add("int1int2", "int1int2.int2.n=" + std::to_string(n),
        [n](const PrecisionContext& ctx, double) {
          return verify_int1_int2(n, ctx).second;
        });
  }

  // --- Hermite representation self-consistency: zeta(s,z+1) = zeta(s,z) - z^-s
  for (const char* ss : {"-0.5", "2", "3"}) {
    add("hermite", std::string("hermite.shift.s=") + ss,
        [ss](const PrecisionContext& ctx, double tol) {
          mpfr_prec_t bits = ctx.bits();
          MPReal s(ss, bits);
          MPReal worst(0L, bits);
          for (const char* zs : {"0.5", "1", "2.5"}) {
            MPReal z(zs, bits);
            MPReal lhs = hurwitz_zeta(s, z + 1, ctx).value;
            MPReal rhs = hurwitz_zeta(s, z, ctx).value - pow(z, -s);
            MPReal d = abs(lhs - rhs);
            if (d > worst) worst = d;
          }
          IdentityReport r;
          r.identity_id = std::string("hermite.shift.s=") + ss;
          r.lhs = worst.to_string(6);
          r.rhs = "0";
          r.residual_log10 = worst.log10_abs();
          r.tolerance_log10 = tol;
          r.status = r.residual_log10 <= tol ? IdentityReport::Status::pass
                                             : IdentityReport::Status::fail;
          return r;
        });
  }

  // --- log Gamma reflection: log Gamma(z) + log Gamma(1-z) = log(pi/sin pi z)
  for (const char* zs : {"1/3", "1/4"}) {
    add("gamma", std::string("gamma.reflection.z=") + zs,
        [zs](const PrecisionContext& ctx, double tol) {
          mpfr_prec_t bits = ctx.bits();
          long den = std::string(zs) == "1/3" ? 3 : 4;
          MPReal z(ExactRational(1, den), bits);
          MPReal lhs = log_gamma(z, ctx).value + log_gamma(1 - z, ctx).value;
          MPReal pi = const_pi(bits);
          MPReal rhs = log(pi / sin(pi * z));
          return make_report(std::string("gamma.reflection.z=") + zs, lhs, rhs, tol,
                             ctx.digits);
        });
  }
  add("gamma", "gamma.digamma-duplication.z=1/2", [](const PrecisionContext& ctx, double tol) {
    mpfr_prec_t bits = ctx.bits();
    MPReal lhs = digamma(MPReal(ExactRational(1, 2), bits), ctx).value;
    MPReal rhs = digamma(MPReal(1L, bits), ctx).value - ldexp(log2_const(ctx), 1);
    return make_report("gamma.digamma-duplication.z=1/2", lhs, rhs, tol, ctx.digits);
  });

  // --- Clausen function
  add("clausen", "clausen.periodicity-oddness", [](const PrecisionContext& ctx, double tol) {
    mpfr_prec_t bits = ctx.bits();
    MPReal two_pi = ldexp(const_pi(bits), 1);
    MPReal worst(0L, bits);
    for (int i = 1; i <= 16; ++i) {
      MPReal t = two_pi * i / 17;
      MPReal a = clausen_cl2(t, ctx).value;
      MPReal b = clausen_cl2(t + two_pi, ctx).value;
      MPReal c = clausen_cl2(-t, ctx).value;
      MPReal d1 = abs(a - b), d2 = abs(a + c);
      if (d1 > worst) worst = d1;
      if (d2 > worst) worst = d2;
    }
    IdentityReport r;
    r.identity_id = "clausen.periodicity-oddness";
    r.lhs = worst.to_string(6);
    r.rhs = "0";
    r.residual_log10 = worst.log10_abs();
    r.tolerance_log10 = tol;
    r.status =
        r.residual_log10 <= tol ? IdentityReport::Status::pass : IdentityReport::Status::fail;
    return r;
  });
  add("clausen", "clausen.2pi3-trigamma", [](const PrecisionContext& ctx, double tol) {
    mpfr_prec_t bits = ctx.bits();
    MPReal pi = const_pi(bits);
    MPReal sqrt3 = sqrt(MPReal(3L, bits));
    MPReal lhs = clausen_cl2(ldexp(pi, 1) / 3, ctx).value;
    MPReal tg = trigamma(MPReal(ExactRational(1, 3), bits), ctx).value;
    MPReal rhs = tg / (sqrt3 * 3) - ldexp(pi * pi, 1) / (sqrt3 * 9);
    return make_report("clausen.2pi3-trigamma", lhs, rhs, tol, ctx.digits);
  });

  // --- multigamma recurrence stack and the corrected triple-gamma identity
  for (long n : {2L, 3L, 4L}) {
    add("multigamma", "multigamma.recurrence.n=" + std::to_string(n),
        [n](const PrecisionContext& ctx, double tol) {
          mpfr_prec_t bits = ctx.bits();
          MPReal worst(0L, bits);
          for (const char* zs : {"0.5", "1", "1.5", "2.5"}) {
            MPReal z(zs, bits);
            MPReal up = log_multigamma(n + 1, z + 1, ctx).value;
            MPReal lo = log_multigamma(n + 1, z, ctx).value;
            MPReal prev = log_multigamma(n, z, ctx).value;
            MPReal d = abs(up - lo + prev);
            if (d > worst) worst = d;
          }
          IdentityReport r;
          r.identity_id = "multigamma.recurrence.n=" + std::to_string(n);
          r.lhs = worst.to_string(6);
          r.rhs = "0";
          r.residual_log10 = worst.log10_abs();
          r.tolerance_log10 = tol;
          r.status = r.residual_log10 <= tol ? IdentityReport::Status::pass
                                             : IdentityReport::Status::fail;
          return r;
        });
  }
  for (long zi : {1L, 2L, 5L}) {
    add("multigamma", "multigamma.gamma3-integral.z=" + std::to_string(zi),
        [zi](const PrecisionContext& ctx, double tol) {
          // 2 log Gamma_3(z+1) = (z^3/3)(log z - H_3) - log G(z+1)
          //   - (zeta'(0) z^2 - 2 zeta'(-1) z + zeta'(-2)) - 2 I_c
          // (the n = 1 instance of the odd-case representation; sign
          // conventions validated against the difference equation)
          mpfr_prec_t bits = ctx.bits();
          MPReal z(zi, bits);
          MPReal two_pi = ldexp(const_pi(bits), 1);
          MPReal lhs = ldexp(log_multigamma(3, z + 1, ctx).value, 1);
          MPReal ic = integrate_semi_infinite_t<MPReal>(
                          [&](const MPReal& x) {
                            return x * x * atan(x / z) / expm1(two_pi * x);
                          },
                          6.283185307179586, ctx, 3)
                          .value;
          MPReal rhs = pow(z, 3) * (log(z) - MPReal(harmonic(3), bits)) / 3 -
                       log_barnes_g(MPComplex(z + 1), ctx).value.re -
                       (zeta_prime_0(ctx) * z * z - ldexp(zeta_prime_neg(1, ctx) * z, 1) +
                        zeta_prime_neg(2, ctx)) -
                       ldexp(ic, 1);
          return make_report("multigamma.gamma3-integral.z=" + std::to_string(zi), lhs, rhs,
                             tol, ctx.digits);
        });
  }

  // --- Glaisher
  add("glaisher", "glaisher.four-way", [](const PrecisionContext& ctx, double tol) {
    RealEval v[4] = {log_glaisher(GlaisherMethod::ZetaPrime2, ctx),
                     log_glaisher(GlaisherMethod::OddZetaSeries, ctx),
                     log_glaisher(GlaisherMethod::BarnesHalf, ctx),
                     log_glaisher(GlaisherMethod::LogIntegral, ctx)};
    MPReal worst(0L, ctx.bits());
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        MPReal d = abs(v[i].value - v[j].value);
        if (d > worst) worst = d;
      }
    IdentityReport r;
    r.identity_id = "glaisher.four-way";
    r.lhs = worst.to_string(6);
    r.rhs = "0";
    r.residual_log10 = worst.log10_abs();
    r.tolerance_log10 = tol;
    r.status =
        r.residual_log10 <= tol ? IdentityReport::Status::pass : IdentityReport::Status::fail;
    return r;
  });
  add("glaisher", "glaisher.eq-gk", [](const PrecisionContext& ctx, double) {
    // cache-level identity: log A = 1/12 - zeta'(-1), exact at working precision
    MPReal lhs = glaisher_log_cached(ctx);
    MPReal rhs = MPReal(ExactRational(1, 12), ctx.bits()) - zeta_prime_neg(1, ctx);
    return make_report("glaisher.eq-gk", lhs, rhs, -double(ctx.working_digits()) + 2,
                       ctx.digits);
  });
  add("glaisher", "glaisher.eq5-quadrature-vs-series",
      [](const PrecisionContext& ctx, double tol) {
        MPReal lhs = zeta_prime_neg(1, ctx);  // Eq.(5) quadrature route
        MPReal rhs = MPReal(ExactRational(1, 12), ctx.bits()) -
                     log_glaisher(GlaisherMethod::OddZetaSeries, ctx.with_more_digits(8)).value;
        return make_report("glaisher.eq5-quadrature-vs-series", lhs, rhs, tol, ctx.digits);
      });
  add("glaisher", "glaisher.log-integral-vs-zeta-prime-2",
      [](const PrecisionContext& ctx, double tol) {
        MPReal lhs = log_glaisher(GlaisherMethod::LogIntegral, ctx).value;
        MPReal rhs = log_glaisher(GlaisherMethod::ZetaPrime2, ctx).value;
        return make_report("glaisher.log-integral-vs-zeta-prime-2", lhs, rhs, tol, ctx.digits);
      });

  // --- zeta odds and ends
  add("zeta", "zeta.neg1-quarter", [](const PrecisionContext& ctx, double tol) {
    // zeta(-1, 1/4) = -B_2(1/4)/2 by direct Hermite quadrature
    mpfr_prec_t bits = ctx.bits();
    MPReal s(-1L, bits);
    MPReal lhs = hurwitz_zeta(s, MPReal(ExactRational(1, 4), bits), ctx).value;
    MPReal rhs = -ldexp(bernoulli_poly(2, MPReal(ExactRational(1, 4), bits), bits), -1);
    return make_report("zeta.neg1-quarter", lhs, rhs, tol, ctx.digits);
  });
  add("zeta", "zeta.zeta2", [](const PrecisionContext& ctx, double tol) {
    mpfr_prec_t bits = ctx.bits();
    MPReal pi = const_pi(bits);
    MPReal lhs = riemann_zeta(MPReal(2L, bits), ctx).value;
    return make_report("zeta.zeta2", lhs, pi * pi / 6, tol, ctx.digits);
  });
  add("zeta", "zeta.kernel-vs-series.s=3", [](const PrecisionContext& ctx, double tol) {
    MPReal lhs = zeta_m1_quadrature(3, ctx).value;
    MPReal rhs = zeta_m1(3, ctx).value;
    return make_report("zeta.kernel-vs-series.s=3", lhs, rhs, tol, ctx.digits);
  });
  add("zeta", "zeta.prime-neg2", [](const PrecisionContext& ctx, double tol) {
    // zeta'(-2) = -zeta(3)/(4 pi^2): functional-equation value vs the
    // corrected triple-gamma identity solved for zeta'(-2) at z = 1
    mpfr_prec_t bits = ctx.bits();
    MPReal z(1L, bits);
    MPReal two_pi = ldexp(const_pi(bits), 1);
    MPReal ic = integrate_semi_infinite_t<MPReal>(
                    [&](const MPReal& x) { return x * x * atan(x / z) / expm1(two_pi * x); },
                    6.283185307179586, ctx, 3)
                    .value;
    MPReal lhs = -(MPReal(harmonic(3), bits) / 3) - zeta_prime_0(ctx) +
                 ldexp(zeta_prime_neg(1, ctx), 1) - ldexp(ic, 1) -
                 ldexp(log_multigamma(3, MPReal(2L, bits), ctx).value, 1);
    return make_report("zeta.prime-neg2", lhs, zeta_prime_neg(2, ctx), tol, ctx.digits);
  });

  // --- dispatcher recurrence sample: log G(z+1) = log Gamma(z) + log G(z)
  add("barnes", "barnes.recurrence-sample", [](const PrecisionContext& ctx, double tol) {
    mpfr_prec_t bits = ctx.bits();
    MPReal worst(0L, bits);
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    auto next_u = [&]() {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return double(state >> 11) / 9007199254740992.0;
    };
    for (int i = 0; i < 10; ++i) {
      MPReal z(0.1 + 19.8 * next_u(), bits);
      MPComplex zc(z);
      MPReal d = abs(log_barnes_g(MPComplex(z + 1), ctx).value.re -
                     log_gamma(z, ctx).value - log_barnes_g(zc, ctx).value.re);
      if (d > worst) worst = d;
    }
    for (int i = 0; i < 4; ++i) {
      MPComplex z{MPReal(0.3 + 6.0 * next_u(), bits), MPReal(next_u() - 0.5, bits)};
      MPComplex d = log_barnes_g(z + 1, ctx).value - log_gamma(z, ctx).value -
                    log_barnes_g(z, ctx).value;
      MPReal da = abs(d);
      if (da > worst) worst = da;
    }
    IdentityReport r;
    r.identity_id = "barnes.recurrence-sample";
    r.lhs = worst.to_string(6);
    r.rhs = "0";
    r.residual_log10 = worst.log10_abs();
    r.tolerance_log10 = tol;
    r.status =
        r.residual_log10 <= tol ? IdentityReport::Status::pass : IdentityReport::Status::fail;
    return r;
  });
  // negative-axis values against the recurrence G(1-w) = Gamma(-w) G(-w)
  for (const char* ws : {"0.3", "1.4", "2.6"}) {
    add("barnes", std::string("barnes.negative-axis.w=") + ws,
        [ws](const PrecisionContext& ctx, double tol) {
          mpfr_prec_t bits = ctx.bits();
          MPReal w(ws, bits);
          auto gneg = log_barnes_g(MPComplex(-w), ctx);
          MPReal gval = exp(gneg.value.re);
          if (!gneg.value.im.is_zero()) gval = -gval;
          // Gamma(-w) = pi / (sin(-pi w) Gamma(1+w)), real and signed
          MPReal pi = const_pi(bits);
          MPReal gamma_neg = pi / (sin_pi_times(-w) * exp(log_gamma(w + 1, ctx).value));
          MPReal lhs = exp(log_barnes_g(MPComplex(1 - w), ctx).value.re);
          if (!log_barnes_g(MPComplex(1 - w), ctx).value.im.is_zero()) lhs = -lhs;
          return make_report(std::string("barnes.negative-axis.w=") + ws, lhs,
                             gamma_neg * gval, tol + 1, ctx.digits);
        });
  }

  return suite;
}

// run the suite (or one group) at the given precision; reports ordered by id
inline std::vector<IdentityReport> run_verify(const std::string& selection,
                                              const PrecisionContext& ctx, double tol_log10) {
  auto suite = identity_suite();
  std::vector<IdentityReport> out;
  for (auto& check : suite) {
    if (selection != "all" && check.group != selection) continue;
    out.push_back(check.run(ctx, tol_log10));
  }
  std::sort(out.begin(), out.end(),
            [](const IdentityReport& a, const IdentityReport& b) {
              return a.identity_id < b.identity_id;
            });
  return out;
}

inline std::vector<std::string> verify_groups() {
  std::vector<std::string> gs;
  for (auto& c : identity_suite())
    if (std::find(gs.begin(), gs.end(), c.group) == gs.end()) gs.push_back(c.group);
  std::sort(gs.begin(), gs.end());
  return gs;
}

}  // namespace barnes
