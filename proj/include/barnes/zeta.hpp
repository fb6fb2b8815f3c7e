#pragma once

// Hurwitz zeta via the Hermite integral
//   zeta(s,z) = z^-s/2 + z^{1-s}/(s-1)
//               + 2 int_0^inf sin(s arctan(x/z)) / ((x^2+z^2)^{s/2} (e^{2 pi x}-1)) dx
// valid for real s != 1, Re z > 0, plus the s-derivative at s = -1, the
// zeta'(-k) constants, and Euler-Maclaurin sums for zeta(s)-1 and
// zeta'(s) at integer s >= 2.

#include "barnes/constants.hpp"
#include "barnes/exact.hpp"
#include "barnes/gamma.hpp"
#include "barnes/quadrature.hpp"

namespace barnes {

namespace detail {

template <class S>
Eval<S> hurwitz_zeta_impl(const MPReal& s, const S& zin, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  if (s == 1L) throw PoleAtOne("hurwitz_zeta: s = 1");
  S z = zin.rounded_to(bits);
  if (!(real_part(z) > 0L)) throw DomainError("hurwitz_zeta: requires Re z > 0");
  MPReal two_pi = ldexp(const_pi(bits), 1);
  MPReal half_s = ldexp(s, -1);
  S z2 = z * z;
  int power_hint = static_cast<int>(std::max(2.0, std::ceil(std::abs(s.to_double())) + 2));
  auto q = integrate_semi_infinite_t<S>(
      [&](const MPReal& x) {
        S r2 = z2 + x * x;
        S kern = sin(atan(S(x) / z) * s) * exp(log(r2) * (-half_s));
        return kern / expm1(two_pi * x);
      },
      6.283185307179586, ctx, power_hint);
  S value = exp(log(z) * (-s)) * MPReal("0.5", bits) + exp(log(z) * (1L - s)) / (s - 1L) +
            q.value * 2L;
  return Eval<S>{value, log10_add(q.err_log10 + 0.302, -double(ctx.working_digits())),
                 "hermite-integral", q.evaluations};
}

template <class S>
Eval<S> zeta_prime_neg1_impl(const S& zin, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  S z = zin.rounded_to(bits);
  if (!(real_part(z) > 0L)) throw DomainError("hurwitz_zeta_prime_neg1: requires Re z > 0");
  MPReal two_pi = ldexp(const_pi(bits), 1);
  S z2 = z * z;
  auto qa = integrate_semi_infinite_t<S>(
      [&](const MPReal& x) { return atan(S(x) / z) / expm1(two_pi * x); }, 6.283185307179586,
      ctx, 2);
  auto qb = integrate_semi_infinite_t<S>(
      [&](const MPReal& x) { return log(z2 + x * x) * x / expm1(two_pi * x); },
      6.283185307179586, ctx, 3);
  S lz = log(z);
  S value = ldexp(z * z * lz, -1) - ldexp(z * z, -2) - ldexp(z * lz, -1) + z * qa.value * 2L +
            qb.value;
  return Eval<S>{value, log10_add(qa.err_log10 + 0.302, qb.err_log10),
                 "hermite-derivative-integral", qa.evaluations + qb.evaluations};
}

}  // namespace detail

// zeta(s, z) for real s != 1, Re z > 0
inline ComplexEval hurwitz_zeta(const MPReal& s, const MPComplex& z, const PrecisionContext& ctx) {
  if (z.is_real()) {
    auto e = detail::hurwitz_zeta_impl<MPReal>(s, z.re, ctx);
    return ComplexEval{MPComplex(e.value), e.err_log10, e.method, e.evaluations};
  }
  return detail::hurwitz_zeta_impl<MPComplex>(s, z, ctx);
}

inline RealEval hurwitz_zeta(const MPReal& s, const MPReal& z, const PrecisionContext& ctx) {
  return detail::hurwitz_zeta_impl<MPReal>(s, z, ctx);
}

// zeta'(-1, z) by direct quadrature of the two integrals in the Hermite
// derivative representation
inline ComplexEval hurwitz_zeta_prime_neg1(const MPComplex& z, const PrecisionContext& ctx) {
  if (z.is_real()) {
    auto e = detail::zeta_prime_neg1_impl<MPReal>(z.re, ctx);
    return ComplexEval{MPComplex(e.value), e.err_log10, e.method, e.evaluations};
  }
  return detail::zeta_prime_neg1_impl<MPComplex>(z, ctx);
}

inline RealEval hurwitz_zeta_prime_neg1(const MPReal& z, const PrecisionContext& ctx) {
  return detail::zeta_prime_neg1_impl<MPReal>(z, ctx);
}

// psi^(1)(z) = zeta(2, z)
inline ComplexEval trigamma(const MPComplex& z, const PrecisionContext& ctx) {
  if (detail::is_nonpositive_integer(z)) throw PoleError("trigamma: pole at non-positive integer");
  MPReal s(2L, ctx.bits());
  auto e = hurwitz_zeta(s, z, ctx);
  e.method = "hermite-integral";
  return e;
}

inline RealEval trigamma(const MPReal& z, const PrecisionContext& ctx) {
  auto e = trigamma(MPComplex(z), ctx);
  return RealEval{e.value.re, e.err_log10, e.method, e.evaluations};
}

// sum_{j >= 2} j^-s for integer s >= 2, Euler-Maclaurin
inline RealEval zeta_m1(long s, const PrecisionContext& ctx) {
  if (s < 2) throw DomainError("zeta_m1: requires integer s >= 2");
  mpfr_prec_t bits = ctx.bits();
  long wd = ctx.working_digits();
  long evals = 0;
  // plain truncation when the tail is already tiny
  auto tail_digits_at = [&](double J) { return s * std::log10(J); };
  if (tail_digits_at(12.0) > double(wd + 4)) {
    MPReal acc(0L, bits);
    for (long j = 2; j <= 12; ++j) {
      MPReal t(j, bits);
      acc += pow(t, -s);
      ++evals;
    }
    return RealEval{acc, -double(wd + 2), "shifted-series", evals};
  }
  long N = std::max<long>(16, static_cast<long>(1.3 * wd) + 10);
  MPReal acc(0L, bits);
  for (long j = 2; j < N; ++j) {
    MPReal t(j, bits);
    acc += pow(t, -s);
    ++evals;
  }
  MPReal Nr(N, bits);
  MPReal Npow = pow(Nr, -s);  // N^-s
  acc += Nr * Npow / (s - 1);  // integral N^{1-s}/(s-1)
  acc += ldexp(Npow, -1);
  // correction terms B_2m/(2m)! * (s)_{2m-1} * N^{-s-2m+1}
  MPReal invN2 = 1 / (Nr * Nr);
  MPReal poch(s, bits);           // (s)_1
  MPReal Np = Npow * Nr * invN2;  // N^{-s-1}
  MPReal eps = ctx.eps_working();
  auto& cache = ConstantsCache::instance();
  for (long m = 1; m < 4000; ++m) {
    MPReal term = cache.bern_over_fact(m, wd) * poch * Np;
    acc += term;
    ++evals;
    if (abs(term) < eps) return RealEval{acc, term.log10_abs(), "euler-maclaurin", evals};
    poch = poch * ((s + 2 * m - 1) * (s + 2 * m));
    Np = Np * invN2;
  }
  throw NonConvergence("zeta_m1: Euler-Maclaurin failed to reach tolerance");
}

// zeta'(s) at integer s >= 2:  -sum log k / k^s, Euler-Maclaurin with the
// x^-s log x derivative recurrence
inline MPReal zeta_prime_pos(long s, const PrecisionContext& ctx) {
  if (s < 2) throw DomainError("zeta_prime_pos: requires integer s >= 2");
  return ConstantsCache::instance()
      .get("zeta_prime_pos_" + std::to_string(s),
           ctx.working_digits(),
           [s](long wd) {
             PrecisionContext c{wd, 10};
             mpfr_prec_t bits = c.bits();
             long N = std::max<long>(16, static_cast<long>(1.3 * wd) + 10);
             MPReal acc(0L, bits);
             for (long j = 2; j < N; ++j) {
               MPReal t(j, bits);
               acc += log(t) * pow(t, -s);
             }
             MPReal Nr(N, bits), logN = log(Nr);
             MPReal Npow = pow(Nr, -s);
             // int_N^inf x^-s log x dx = N^{1-s} (log N/(s-1) + 1/(s-1)^2)
             acc += Nr * Npow * (logN / (s - 1) + MPReal(1L, bits) / ((s - 1) * (s - 1)));
             acc += ldexp(Npow * logN, -1);
             // - sum_m B_2m/(2m)! f^{(2m-1)}(N),  f = x^-s log x,
             // f^{(m)} = x^{-s-m} (a_m + b_m log x)
             MPReal a(0L, bits), b(1L, bits);
             MPReal xpow = Npow;  // N^{-s-m} running
             MPReal eps = c.eps_working();
             auto& cache = ConstantsCache::instance();
             long mder = 0;
             for (long m = 1; m < 4000; ++m) {
               // advance derivative order to 2m-1
               while (mder < 2 * m - 1) {
                 MPReal na = b - (s + mder) * a;
                 b = -((s + mder) * b);
                 a = na;
                 xpow = xpow / Nr;
                 ++mder;
               }
               MPReal term = cache.bern_over_fact(m, wd) * (a + b * logN) * xpow;
               acc -= term;
               if (abs(term) < eps) return -acc;
             }
             throw NonConvergence("zeta_prime_pos: Euler-Maclaurin failed");
           })
      .rounded_to(ctx.bits());
}

// zeta'(-k) for k >= 1.  k = 1 from the integral
//   zeta'(-1) = 2 int_0^inf x log x / (e^{2 pi x} - 1) dx;
// k >= 2 via the differentiated functional equation:
//   even k = 2m:   (-1)^m (2m)! zeta(2m+1) / (2^{2m+1} pi^{2m})
//   odd  k = 2m-1: 2 (-1)^m (2pi)^{-2m} (2m-1)! zeta(2m)
//                  * (log 2pi - psi(2m) - zeta'(2m)/zeta(2m))
inline MPReal zeta_prime_neg(long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("zeta_prime_neg: requires k >= 1");
  return ConstantsCache::instance()
      .get("zeta_prime_neg_" + std::to_string(k),
           ctx.working_digits(),
           [k](long wd) -> MPReal {
             PrecisionContext c{wd, 10};
             mpfr_prec_t bits = c.bits();
             if (k == 1) {
               MPReal two_pi = ldexp(const_pi(bits), 1);
               auto q = integrate_semi_infinite_t<MPReal>(
                   [&](const MPReal& x) { return x * log(x) / expm1(two_pi * x); },
                   6.283185307179586, c, 2);
               return ldexp(q.value, 1);
             }
             auto& cache = ConstantsCache::instance();
             if (k % 2 == 0) {
               long m = k / 2;
               MPReal z2m1 = 1 + zeta_m1(2 * m + 1, c).value;
               MPReal pi = const_pi(bits);
               MPReal v = MPReal(factorial_exact(2 * m), bits) * z2m1 /
                          (pow2i(2 * m + 1, bits) * pow(pi, 2 * m));
               return (m % 2 == 0) ? v : -v;
             }
             long m = (k + 1) / 2;
             MPReal z2m = cache.zeta_even(m, wd);
             MPReal psi2m = -euler_gamma(c) + MPReal(harmonic(2 * m - 1), bits);
             MPReal bracket = log_2pi(c) - psi2m - zeta_prime_pos(2 * m, c) / z2m;
             MPReal two_pi = ldexp(const_pi(bits), 1);
             MPReal v = ldexp(pow(two_pi, -2 * m) * MPReal(factorial_exact(2 * m - 1), bits) *
                                  z2m * bracket,
                              1);
             return (m % 2 == 0) ? v : -v;
           })
      .rounded_to(ctx.bits());
}

// log A = 1/12 - zeta'(-1), the cache-level identity
inline MPReal glaisher_log_cached(const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  return MPReal(ExactRational(1, 12), bits) - zeta_prime_neg(1, ctx);
}

// zeta(s) for real s != 1 via the Hermite integral at z = 1
inline RealEval riemann_zeta(const MPReal& s, const PrecisionContext& ctx) {
  if (s == 1L) throw PoleAtOne("riemann_zeta: s = 1");
  return hurwitz_zeta(s, MPReal(1L, ctx.bits()), ctx);
}

// (zeta(s) - 1) through the e^x(e^x-1) kernel; verify-suite route
inline RealEval zeta_m1_quadrature(long s, const PrecisionContext& ctx) {
  if (s < 2) throw DomainError("zeta_m1_quadrature: requires integer s >= 2");
  mpfr_prec_t bits = ctx.bits();
  auto q = integrate_semi_infinite_t<MPReal>(
      [&](const MPReal& x) {
        MPReal ex = exp(-x);
        return pow(x, s - 1) * ex * ex / (-expm1(-x));
      },
      2.0, ctx, static_cast<int>(s));
  MPReal v = q.value / MPReal(factorial_exact(s - 1), bits);
  return RealEval{v, q.err_log10, "zeta-kernel-integral", q.evaluations};
}

}  // namespace barnes
