#pragma once

// Multiple gamma functions Gamma_n under the recurrence
//   Gamma_{n+1}(z+1) = Gamma_{n+1}(z)/Gamma_n(z),  Gamma_1 = Gamma,
//   Gamma_n(1) = 1,
// via the general integral representations: for Re w > 0,
//
//   (2m)! log G_{2m+1}(w+1) = w^{2m+1}(log w - H_{2m+1})/(2m+1)
//     - sum_{k=0}^{2m} (-1)^k C(2m,k) zeta'(-k) w^{2m-k}
//     - sum_{k=1}^{2m-1} (-1)^k k! {2m,k} log G_{k+1}(w+1)
//     + 2 (-1)^m int_0^inf x^{2m} arctan(x/w)/(e^{2 pi x}-1) dx
//
//   (2m-1)! log G_{2m}(w+1) = -w^{2m}(log w - H_{2m})/(2m)
//     + sum_{k=0}^{2m-1} (-1)^k C(2m-1,k) zeta'(-k) w^{2m-1-k}
//     + sum_{k=1}^{2m-2} (-1)^k k! {2m-1,k} log G_{k+1}(w+1)
//     - (-1)^m int_0^inf x^{2m-1} log(x^2+w^2)/(e^{2 pi x}-1) dx
//
// solved recursively for the top order with the lower orders memoized per
// argument.  Supported n <= 6: the factorial Stirling weights and the
// x^{2m} kernels grow quickly past that.

#include "barnes/barnes_g.hpp"
#include "barnes/report.hpp"

#include <map>
#include <vector>

namespace barnes {

inline constexpr long kMultigammaMaxN = 6;

struct PknCoefficients {
  long n;
  std::vector<ExactRational> coeffs;  // [x^k] prod_{j=1}^{n-1} (x + j - 1/2), k = 0..n-1
};

// exact expansion by iterated convolution with the monic linear factors
inline PknCoefficients pkn_coefficients(long n) {
  if (n < 1) throw DomainError("pkn_coefficients: n must be >= 1");
  std::vector<ExactRational> c{ExactRational(1)};
  for (long j = 1; j < n; ++j) {
    std::vector<ExactRational> next(c.size() + 1);
    ExactRational root(2 * j - 1, 2);  // j - 1/2
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] += root * c[i];
      next[i + 1] += c[i];
    }
    for (auto& q : next) q.canonicalize();
    c = std::move(next);
  }
  return PknCoefficients{n, std::move(c)};
}

namespace detail {

template <class S>
S powi_or_pow(const S& w, long k) {
  if constexpr (std::is_same_v<S, MPReal>)
    return pow(w, k);
  else
    return powi(w, k);
}

inline MPComplex to_complex(const MPReal& z, mpfr_prec_t) { return MPComplex(z); }
inline MPComplex to_complex(const MPComplex& z, mpfr_prec_t) { return z; }

template <class S>
Eval<S> from_complex(const Eval<MPComplex>& e) {
  if constexpr (std::is_same_v<S, MPComplex>)
    return e;
  else
    return Eval<MPReal>{e.value.re, e.err_log10, e.method, e.evaluations};
}

// all of log Gamma_1(z) .. log Gamma_n(z) at one argument, Re z > 0
template <class S>
std::vector<Eval<S>> multigamma_stack(long n, const S& z, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  std::vector<Eval<S>> vals;
  vals.reserve(n + 1);
  vals.push_back(Eval<S>{S(0L, bits), -400, "one", 0});  // placeholder index 0
  if (real_part(z) <= 0L) throw DomainError("log_multigamma: requires Re z > 0");

  if (!(real_part(z) > 1L)) {
    // Gamma_n(z) = Gamma_n(z+1) * Gamma_{n-1}(z): climb from the shifted stack
    auto up = multigamma_stack(n, S(z + 1), ctx);
    for (long j = 1; j <= n; ++j) {
      if (j == 1) {
        vals.push_back(log_gamma(z, ctx));
      } else {
        Eval<S>& shifted = up[j];
        Eval<S>& lower = vals[j - 1];
        vals.push_back(Eval<S>{shifted.value + lower.value,
                               log10_add(shifted.err_log10, lower.err_log10), "recurrence",
                               shifted.evaluations + lower.evaluations});
      }
    }
    return vals;
  }

  S w = z - 1;  // Re w > 0
  MPReal two_pi = ldexp(const_pi(bits), 1);
  for (long N = 1; N <= n; ++N) {
    if (N == 1) {
      vals.push_back(log_gamma(z, ctx));
      continue;
    }
    if (N == 2) {
      auto g = log_barnes_g(to_complex(z, bits), ctx);
      vals.push_back(from_complex<S>(
          Eval<MPComplex>{-g.value, g.err_log10, g.method, g.evaluations}));
      continue;
    }
    long evals = 0;
    double err = -400;
    S acc(0L, bits);
    if (N % 2 == 1) {
      long m = (N - 1) / 2;
      acc = powi_or_pow(w, 2 * m + 1) * (log(w) - MPReal(harmonic(2 * m + 1), bits)) / (2 * m + 1);
      for (long k = 0; k <= 2 * m; ++k) {
        MPReal zp = (k == 0) ? zeta_prime_0(ctx) : zeta_prime_neg(k, ctx);
        S t = MPReal(binomial_exact(2 * m, k), bits) * zp * powi_or_pow(w, 2 * m - k);
        acc = (k % 2 == 0) ? acc - t : acc + t;
      }
      for (long k = 1; k <= 2 * m - 1; ++k) {
        MPReal weight(BigInt(factorial_exact(k) * stirling_subset(2 * m, k)), bits);
        S t = weight * vals[k + 1].value;
        acc = (k % 2 == 0) ? acc - t : acc + t;
        err = log10_add(err, vals[k + 1].err_log10 + weight.log10_abs());
      }
      auto q = integrate_semi_infinite_t<S>(
          [&](const MPReal& x) {
            return pow(x, 2 * m) * atan(S(x) / w) / expm1(two_pi * x);
          },
          6.283185307179586, ctx, static_cast<int>(2 * m + 1));
      evals += q.evaluations;
      err = log10_add(err, q.err_log10 + 0.302);
      acc = (m % 2 == 0) ? acc + ldexp(q.value, 1) : acc - ldexp(q.value, 1);
      acc = acc / MPReal(factorial_exact(2 * m), bits);
    } else {
      long m = N / 2;
      acc = -(powi_or_pow(w, 2 * m) * (log(w) - MPReal(harmonic(2 * m), bits)) / (2 * m));
      for (long k = 0; k <= 2 * m - 1; ++k) {
        MPReal zp = (k == 0) ? zeta_prime_0(ctx) : zeta_prime_neg(k, ctx);
        S t = MPReal(binomial_exact(2 * m - 1, k), bits) * zp * powi_or_pow(w, 2 * m - 1 - k);
        acc = (k % 2 == 0) ? acc + t : acc - t;
      }
      for (long k = 1; k <= 2 * m - 2; ++k) {
        MPReal weight(BigInt(factorial_exact(k) * stirling_subset(2 * m - 1, k)), bits);
        S t = weight * vals[k + 1].value;
        acc = (k % 2 == 0) ? acc + t : acc - t;
        err = log10_add(err, vals[k + 1].err_log10 + weight.log10_abs());
      }
      S w2 = w * w;
      auto q = integrate_semi_infinite_t<S>(
          [&](const MPReal& x) {
            return pow(x, 2 * m - 1) * log(w2 + x * x) / expm1(two_pi * x);
          },
          6.283185307179586, ctx, static_cast<int>(2 * m + 1));
      evals += q.evaluations;
      err = log10_add(err, q.err_log10);
      acc = (m % 2 == 0) ? acc - q.value : acc + q.value;
      acc = acc / MPReal(factorial_exact(2 * m - 1), bits);
    }
    vals.push_back(Eval<S>{std::move(acc), log10_add(err, -double(ctx.working_digits())),
                           "integral-recursion", evals});
  }
  return vals;
}

}  // namespace detail

// log Gamma_n(z), Re z > 0, n <= 6
inline ComplexEval log_multigamma(long n, const MPComplex& z, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("log_multigamma: n must be >= 1");
  if (n > kMultigammaMaxN) throw DomainError("log_multigamma: n > 6 not supported");
  if (z.is_real()) {
    auto stack = detail::multigamma_stack<MPReal>(n, z.re, ctx);
    auto& e = stack[n];
    return ComplexEval{MPComplex(e.value), e.err_log10, e.method, e.evaluations};
  }
  auto stack = detail::multigamma_stack<MPComplex>(n, z, ctx);
  return stack[n];
}

inline RealEval log_multigamma(long n, const MPReal& z, const PrecisionContext& ctx) {
  auto e = log_multigamma(n, MPComplex(z), ctx);
  return RealEval{e.value.re, e.err_log10, e.method, e.evaluations};
}

// Triple-gamma asymptotic expansion (large Re z):
//   2 log Gamma_3(z+1) = (z^3/3)(log z - 11/6) - (z^2/2)(log z - 3/2)
//     - zeta'(0) z^2 + z (zeta'(0) + 2 zeta'(-1)) + log z/12
//     - zeta'(-1) - zeta'(-2)
//     - sum_k B_{2k+2}/(4k(k+1) z^{2k}) + sum_k B_{2k+2}/(2(k+1)(2k-1) z^{2k-1})
// with the heuristic error set by the first omitted odd-power term.
inline ComplexEval log_gamma3_asymptotic(const MPComplex& zin, long terms,
                                         const PrecisionContext& ctx,
                                         bool check_tolerance = true) {
  mpfr_prec_t bits = ctx.bits();
  MPComplex z = zin.rounded_to(bits);
  if (!(z.re > 0L)) throw DomainError("log_gamma3_asymptotic: requires Re z > 0");
  double lz = abs(z).log10_abs();
  auto odd_term_log10 = [&](long k) {
    double lb = std::lgamma(2.0 * k + 3.0) / 2.302585092994046 +
                std::log10(2.0 / std::pow(2 * 3.141592653589793, 2.0 * k + 2.0));
    return lb - std::log10(2.0 * (k + 1.0) * (2 * k - 1.0)) - (2.0 * k - 1.0) * lz;
  };
  double omitted = odd_term_log10(terms + 1);
  if (check_tolerance && omitted > -double(ctx.digits))
    throw InsufficientDecay("log_gamma3_asymptotic: first omitted term above tolerance");
  MPComplex z2 = z * z;
  MPComplex lg = log(z);
  MPReal zp0 = zeta_prime_0(ctx), zp1 = zeta_prime_neg(1, ctx), zp2 = zeta_prime_neg(2, ctx);
  MPComplex acc = z2 * z * (lg - MPReal(ExactRational(11, 6), bits)) / 3 -
                  ldexp(z2 * (lg - MPReal(ExactRational(3, 2), bits)), -1) - z2 * zp0 +
                  z * (zp0 + ldexp(zp1, 1)) + lg / 12 - zp1 - zp2;
  auto& cache = ConstantsCache::instance();
  MPComplex zpow_even = 1L / z2;       // z^{-2k}
  MPComplex zpow_odd = 1L / z;         // z^{-(2k-1)}
  MPReal fct(24L, bits);               // (2k+2)! at k=1
  for (long k = 1; k <= terms; ++k) {
    if (k > 1) fct = fct * ((2 * k + 1) * (2 * k + 2));
    MPReal b = cache.bern_over_fact(k + 1, ctx.working_digits()) * fct;
    acc -= b * zpow_even / (4 * k * (k + 1));
    acc += b * zpow_odd / (2 * (k + 1) * (2 * k - 1));
    zpow_even = zpow_even / z2;
    zpow_odd = zpow_odd / z2;
  }
  acc = ldexp(acc, -1);  // formulas above give 2 log Gamma_3(z+1)
  return ComplexEval{acc, omitted - 0.302, "asymptotic", terms};
}

// closed form at z = 1/2:
//   (n-1)! log Gamma_n(1/2) = (2n-3)!! log pi / 2^n
//     - log 2 sum_{k=1}^{n-1} P_{k,n} B_{k+1} / ((k+1) 2^k)
//     - sum_{k=1}^{n-1} ((2^{k+1}-1)/2^k) P_{k,n} zeta'(-k)
// assembled from pkn_coefficients, bernoulli_number, zeta_prime_neg.
// (The factor conventions differ from some printings; this form
// reproduces sqrt(pi), the Barnes value and the triple-gamma value.)
inline MPReal multigamma_half(long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("multigamma_half: n must be >= 1");
  mpfr_prec_t bits = ctx.bits();
  auto P = pkn_coefficients(n);
  MPReal acc = MPReal(double_factorial(2 * n - 3), bits) * log(const_pi(bits));
  acc = ldexp(acc, -n);
  for (long k = 1; k <= n - 1; ++k) {
    ExactRational b = bernoulli_number(k + 1);
    if (b != 0) {
      ExactRational c = P.coeffs[k] * b / ((k + 1) * ExactRational(BigInt(1) << k));
      acc -= log2_const(ctx) * MPReal(c, bits);
    }
    ExactRational d = P.coeffs[k] * ExactRational((BigInt(1) << (k + 1)) - 1, BigInt(1) << k);
    acc -= MPReal(d, bits) * zeta_prime_neg(k, ctx);
  }
  return acc / MPReal(factorial_exact(n - 1), bits);
}

// the z = 1 instances of the general representations:
//   2 (-1)^n int x^{2n} arctan x/(e^{2pix}-1) dx
//     = H_{2n+1}/(2n+1) + sum_{k=0}^{2n} (-1)^k C(2n,k) zeta'(-k)
//   (-1)^n int x^{2n-1} log(1+x^2)/(e^{2pix}-1) dx
//     = H_{2n}/(2n) + sum_{k=0}^{2n-1} (-1)^k C(2n-1,k) zeta'(-k)
// both sides evaluated independently (quadrature vs constants)
inline std::pair<IdentityReport, IdentityReport> verify_int1_int2(long n,
                                                                  const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("verify_int1_int2: n must be >= 1");
  mpfr_prec_t bits = ctx.bits();
  MPReal two_pi = ldexp(const_pi(bits), 1);
  double tol = -double(ctx.digits) + 5;

  auto q1 = integrate_semi_infinite_t<MPReal>(
      [&](const MPReal& x) { return pow(x, 2 * n) * atan(x) / expm1(two_pi * x); },
      6.283185307179586, ctx, static_cast<int>(2 * n + 1));
  MPReal lhs1 = ldexp(q1.value, 1);
  if (n % 2 == 1) lhs1 = -lhs1;
  MPReal rhs1 = MPReal(harmonic(2 * n + 1), bits) / (2 * n + 1);
  for (long k = 0; k <= 2 * n; ++k) {
    MPReal zp = (k == 0) ? zeta_prime_0(ctx) : zeta_prime_neg(k, ctx);
    MPReal t = MPReal(binomial_exact(2 * n, k), bits) * zp;
    rhs1 = (k % 2 == 0) ? rhs1 + t : rhs1 - t;
  }
  auto r1 = make_report("int1.n=" + std::to_string(n), lhs1, rhs1, tol, ctx.digits);

  MPReal one(1L, bits);
  auto q2 = integrate_semi_infinite_t<MPReal>(
      [&](const MPReal& x) { return pow(x, 2 * n - 1) * log(one + x * x) / expm1(two_pi * x); },
      6.283185307179586, ctx, static_cast<int>(2 * n + 1));
  MPReal lhs2 = (n % 2 == 1) ? -q2.value : q2.value;
  MPReal rhs2 = MPReal(harmonic(2 * n), bits) / (2 * n);
  for (long k = 0; k <= 2 * n - 1; ++k) {
    MPReal zp = (k == 0) ? zeta_prime_0(ctx) : zeta_prime_neg(k, ctx);
    MPReal t = MPReal(binomial_exact(2 * n - 1, k), bits) * zp;
    rhs2 = (k % 2 == 0) ? rhs2 + t : rhs2 - t;
  }
  auto r2 = make_report("int2.n=" + std::to_string(n), lhs2, rhs2, tol, ctx.digits);
  return {r1, r2};
}

}  // namespace barnes
