#pragma once

// log Gamma and the digamma function.
//
// The public log_gamma evaluates the second Binet formula
//   log Gamma(z) = (z - 1/2) log z - z + log(2 pi)/2
//                  + 2 int_0^inf arctan(x/z)/(e^{2 pi x} - 1) dx
// after an upward recurrence to Re z >= 1.  digamma uses the classical
// Bernoulli asymptotic tail after shifting to Re z ~ 0.4 * working digits,
// with the reflection formula for Re z < 1/2.  An internal Stirling-series
// log Gamma (same shift policy) serves hot paths that need many
// evaluations without quadrature.

#include "barnes/constants.hpp"
#include "barnes/context.hpp"
#include "barnes/quadrature.hpp"

namespace barnes {

namespace detail {

template <class S>
inline const MPReal& real_part(const S& z) {
  if constexpr (std::is_same_v<S, MPReal>)
    return z;
  else
    return z.re;
}

template <class S>
inline bool is_nonpositive_integer(const S& z) {
  if constexpr (std::is_same_v<S, MPReal>)
    return z.is_integer() && z <= 0L;
  else
    return z.im.is_zero() && z.re.is_integer() && z.re <= 0L;
}

// cot(pi z) with the real part reduced mod 1 so large arguments keep
// full precision
template <class S>
inline S cot_pi(const S& z, mpfr_prec_t bits) {
  MPReal pi = const_pi(bits);
  if constexpr (std::is_same_v<S, MPReal>) {
    MPReal zr = z - floor(z);
    return cos(zr * pi) / sin(zr * pi);
  } else {
    S zr{z.re - floor(z.re), z.im};
    return cos(zr * pi) / sin(zr * pi);
  }
}

// shift distance for the Bernoulli asymptotics: large enough that the
// divergent tail's optimal truncation beats 10^-(digits+guard)
inline double asym_shift_target(const PrecisionContext& ctx) {
  return 0.4 * static_cast<double>(ctx.working_digits()) + 2.0;
}

template <class S>
S digamma_value(const S& zin, const PrecisionContext& ctx, long& evals) {
  mpfr_prec_t bits = ctx.bits();
  if (is_nonpositive_integer(zin)) throw PoleError("digamma: pole at non-positive integer");
  S z = zin.rounded_to(bits);
  MPReal half("0.5", bits);
  if (real_part(z) < half) {
    // psi(1-z) = psi(z) + pi cot(pi z)
    S rec = digamma_value(S(1L - z), ctx, evals);
    return rec - const_pi(bits) * cot_pi(z, bits);
  }
  double target = asym_shift_target(ctx);
  long m = std::max(0L, static_cast<long>(std::ceil(target - real_part(z).to_double())));
  S shift_sum(0L, bits);
  for (long j = 0; j < m; ++j) {
    shift_sum += 1L / (z + j);
    ++evals;
  }
  S w = z + m;
  S value = log(w) - 1L / (w * 2L);
  S w2 = w * w;
  S p = 1L / w2;
  MPReal fct(1L, bits);  // (2k-1)!
  MPReal eps = ctx.eps_working();
  auto& cache = ConstantsCache::instance();
  for (long k = 1; k < 100000; ++k) {
    if (k > 1) fct = fct * ((2 * k - 2) * (2 * k - 1));
    S term = cache.bern_over_fact(k, ctx.working_digits()) * fct * p;
    value = value - term;
    ++evals;
    if (abs(term) < eps) break;
    p = p / w2;
  }
  return value - shift_sum;
}

// Stirling-series log Gamma with the same shift policy; principal branch
// for Re z > 0.
template <class S>
S log_gamma_stirling(const S& zin, const PrecisionContext& ctx, long& evals) {
  mpfr_prec_t bits = ctx.bits();
  if (is_nonpositive_integer(zin)) throw PoleError("log_gamma: pole at non-positive integer");
  S z = zin.rounded_to(bits);
  double target = asym_shift_target(ctx);
  long m = std::max(0L, static_cast<long>(std::ceil(target - real_part(z).to_double())));
  S shift_sum(0L, bits);
  for (long j = 0; j < m; ++j) {
    shift_sum += log(z + j);
    ++evals;
  }
  S w = z + m;
  S value = (w - MPReal("0.5", bits)) * log(w) - w + ldexp(log_2pi(ctx), -1);
  S w2 = w * w;
  S p = 1L / w;
  MPReal fct(1L, bits);  // (2k-2)!
  MPReal eps = ctx.eps_working();
  auto& cache = ConstantsCache::instance();
  for (long k = 1; k < 100000; ++k) {
    if (k > 1) fct = fct * ((2 * k - 3) * (2 * k - 2));
    S term = cache.bern_over_fact(k, ctx.working_digits()) * fct * p;
    value = value + term;
    ++evals;
    if (abs(term) < eps) break;
    p = p / w2;
  }
  return value - shift_sum;
}

}  // namespace detail

// psi(z); Bernoulli tail after upward recurrence, reflection for Re z < 1/2
inline ComplexEval digamma(const MPComplex& z, const PrecisionContext& ctx) {
  long evals = 0;
  MPComplex v = detail::digamma_value(z, ctx, evals);
  return ComplexEval{v, -static_cast<double>(ctx.working_digits()) + 1, "bernoulli-asymptotic",
                     evals};
}

inline RealEval digamma(const MPReal& z, const PrecisionContext& ctx) {
  long evals = 0;
  MPReal v = detail::digamma_value(z, ctx, evals);
  return RealEval{v, -static_cast<double>(ctx.working_digits()) + 1, "bernoulli-asymptotic",
                  evals};
}

// gamma = -psi(1), cached
inline MPReal euler_gamma(const PrecisionContext& ctx) {
  return ConstantsCache::instance()
      .get("euler_gamma", ctx.working_digits(),
           [](long wd) {
             PrecisionContext c{wd, 10};
             long evals = 0;
             return -detail::digamma_value(MPReal(1L, c.bits()), c, evals);
           })
      .rounded_to(ctx.bits());
}

// principal-branch log Gamma(z) by the second Binet formula, with the
// recurrence log Gamma(z) = log Gamma(z+m) - sum log(z+j) for Re z < 1
inline ComplexEval log_gamma(const MPComplex& z, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  if (detail::is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
  long m = 0;
  double rez = z.re.to_double();
  if (rez < 1.0) m = static_cast<long>(std::ceil(1.0 - rez));
  MPComplex shift_sum(0L, bits);
  for (long j = 0; j < m; ++j) shift_sum += log(z + j);
  MPComplex w = z + m;

  long evals = m;
  double err;
  MPReal two_pi = ldexp(const_pi(bits), 1);
  MPComplex integral(0L, bits);
  if (w.is_real()) {
    auto q = integrate_semi_infinite_t<MPReal>(
        [&](const MPReal& x) { return atan(x / w.re) / expm1(two_pi * x); }, 6.283185307179586,
        ctx, 2);
    integral = MPComplex(q.value);
    err = q.err_log10;
    evals += q.evaluations;
  } else {
    auto q = integrate_semi_infinite_t<MPComplex>(
        [&](const MPReal& x) { return atan(MPComplex(x) / w) / expm1(two_pi * x); },
        6.283185307179586, ctx, 2);
    integral = q.value;
    err = q.err_log10;
    evals += q.evaluations;
  }
  MPComplex v = (w - MPReal("0.5", bits)) * log(w) - w + ldexp(log_2pi(ctx), -1) + integral * 2L;
  v = v - shift_sum;
  return ComplexEval{v, log10_add(err + 0.302, -static_cast<double>(ctx.working_digits())),
                     "binet-integral", evals};
}

inline RealEval log_gamma(const MPReal& z, const PrecisionContext& ctx) {
  if (z <= 0L) throw DomainError("log_gamma(real): requires z > 0");
  auto e = log_gamma(MPComplex(z), ctx);
  return RealEval{e.value.re, e.err_log10, e.method, e.evaluations};
}

}  // namespace barnes
