#pragma once

// The Barnes G-function engine: four independent log G methods, a
// region-aware dispatcher over the whole plane, reflection/multiplication
// residuals, and closed-form special values at 1/2, 1/4, 3/4, 1/3, 2/3.
//
// The four methods return log G(z+1) (they mirror integral
// representations stated for z+1); the dispatcher returns log G(z).
//
// Note on the asymptotic tail: with leading terms
//   log G(z+1) = (z^2/2)(log z - 3/2) - log z/12 - z zeta'(0) + zeta'(-1)
// the Bernoulli correction sum enters with a PLUS sign,
//   + sum_k B_{2k+2} / (4 k (k+1) z^{2k}),
// forced by the recurrence anchors G(2) = G(3) = 1 and confirmed against
// the integral methods at working precision.

#include "barnes/clausen.hpp"
#include "barnes/constants.hpp"
#include "barnes/exact.hpp"
#include "barnes/gamma.hpp"
#include "barnes/quadrature.hpp"
#include "barnes/zeta.hpp"

namespace barnes {

enum class BarnesMethod {
  HermiteIntegral,
  BinetIntegral,
  AsymptoticShifted,
  PsiQuadrature,
  Reflection,
  ClosedForm,
  RecurrenceShift,
};

constexpr std::string_view to_string(BarnesMethod m) {
  switch (m) {
    case BarnesMethod::HermiteIntegral: return "hermite-integral";
    case BarnesMethod::BinetIntegral: return "binet-integral";
    case BarnesMethod::AsymptoticShifted: return "asymptotic-shifted";
    case BarnesMethod::PsiQuadrature: return "psi-quadrature";
    case BarnesMethod::Reflection: return "reflection";
    case BarnesMethod::ClosedForm: return "closed-form";
    case BarnesMethod::RecurrenceShift: return "recurrence-shift";
  }
  return "?";
}

enum class SpecialValueKey { Half, Quarter, ThreeQuarters, Third, TwoThirds };

namespace detail {

// shared integral  int_0^inf x log(x^2 + z^2)/(e^{2 pi x} - 1) dx
template <class S>
QuadOutcome<S> hermite_log_kernel_integral(const S& z, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  MPReal two_pi = ldexp(const_pi(bits), 1);
  S z2 = z * z;
  return integrate_semi_infinite_t<S>(
      [&](const MPReal& x) { return log(z2 + x * x) * x / expm1(two_pi * x); },
      6.283185307179586, ctx, 3);
}

// On the boundary Re z = 0 (z = iy) the log kernel crosses its cut at
// x = |y|; the limit from Re z > 0 splits into a real principal-value
// piece with a log endpoint singularity at |y| plus the i pi jump:
//   int = int_0^inf x log|x^2-y^2| dx/(e^{2pix}-1)
//         + i pi sgn(y) int_0^{|y|} x dx/(e^{2pix}-1)
inline QuadOutcome<MPComplex> hermite_log_kernel_imaginary(const MPReal& y_in,
                                                           const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  MPReal y = abs(y_in);
  MPReal two_pi = ldexp(const_pi(bits), 1);
  MPReal zero(0L, bits);
  double target = ctx.working_digits() * 2.302585092994046 + 6.0;
  MPReal cut(std::max(target / 6.283185307179586 * 1.3, y.to_double() + 2.0), bits);
  // (0, y): x (log(y-x) + log(y+x)); the tanh-sinh callback's second
  // argument is the exact distance to the nearer endpoint
  auto q1 = tanh_sinh<MPReal>(
      [&](const MPReal& x, const MPReal& d) {
        MPReal lg = (ldexp(x, 1) > y) ? log(d) + log(y + x) : log(y - x) + log(y + x);
        return x * lg / expm1(two_pi * x);
      },
      zero, y, ctx);
  // (y, cut): x (log(x-y) + log(x+y)); d equals x-y on the left half
  auto q2 = tanh_sinh<MPReal>(
      [&](const MPReal& x, const MPReal& d) {
        MPReal lg = (ldexp(x, 1) < y + cut) ? log(d) + log(x + y) : log(x - y) + log(x + y);
        return x * lg / expm1(two_pi * x);
      },
      y, cut, ctx);
  auto q3 = tanh_sinh<MPReal>(
      [&](const MPReal& x, const MPReal&) { return x / expm1(two_pi * x); }, zero, y, ctx);
  MPReal impart = const_pi(bits) * q3.value;
  if (y_in.sign() < 0) impart = -impart;
  MPComplex v{q1.value + q2.value, impart};
  double err = log10_add(log10_add(q1.err_log10, q2.err_log10), q3.err_log10);
  return {v, err, q1.evaluations + q2.evaluations + q3.evaluations};
}

template <class S>
Eval<S> log_g_hermite_impl(const S& zin, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  S z = zin.rounded_to(bits);
  QuadOutcome<S> q = [&]() -> QuadOutcome<S> {
    if (real_part(z) > 0L) return hermite_log_kernel_integral(z, ctx);
    if constexpr (std::is_same_v<S, MPComplex>) {
      if (z.re.is_zero() && !z.im.is_zero()) return hermite_log_kernel_imaginary(z.im, ctx);
    }
    throw DomainError("log_g_hermite: requires Re z > 0");
  }();
  MPReal h2(harmonic(2), bits);  // H_2 = 3/2
  S v = ldexp(z * z, -1) * (log(z) - h2) - (z * zeta_prime_0(ctx) - zeta_prime_neg(1, ctx)) -
        q.value;
  return Eval<S>{v, log10_add(q.err_log10, -double(ctx.working_digits())),
                 to_string(BarnesMethod::HermiteIntegral), q.evaluations};
}

// Binet kernel (1/(1-e^-x) - 1/x - 1/2 - x/12)/x^2.  The direct form
// cancels catastrophically near 0; below x = 3/2 use
//   K(x)/x^2 = sum_{k>=2} (B_{2k}/(2k)!) x^{2k-3}.
inline MPReal binet_kernel_over_x2(const MPReal& x, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  if (x <= MPReal("1.5", bits)) {
    MPReal eps = ctx.eps_working();
    auto& cache = ConstantsCache::instance();
    MPReal x2 = x * x;
    MPReal p = x;  // x^{2k-3} at k=2
    MPReal acc(0L, bits);
    for (long k = 2; k < 100000; ++k) {
      MPReal term = cache.bern_over_fact(k, ctx.working_digits()) * p;
      acc += term;
      if (abs(term) < eps) break;
      p = p * x2;
    }
    return acc;
  }
  MPReal inv = 1 / (-expm1(-x));
  return (inv - 1 / x - MPReal("0.5", bits) - x / 12) / (x * x);
}

// The Binet integral enters with a plus sign: differentiating the
// kernel-subtracted Hurwitz integral at s = -1 picks up the factor
// d/ds [1/Gamma(s)] = -1 there, so
//   zeta'(-1,z) = 1/12 - z^2/4 + (log z/2) B_2(z) - int e^{-zx} K(x)/x^2 dx
// and through the G <-> zeta' bridge the integral flips to +.  This is
// confirmed against the other three methods at working precision.
template <class S>
Eval<S> log_g_binet_impl(const S& zin, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  S z = zin.rounded_to(bits);
  if (!(real_part(z) > 0L)) throw DomainError("log_g_binet: requires Re z > 0");
  double decay = std::max(real_part(z).to_double(), 1e-3);
  auto q = integrate_semi_infinite_t<S>(
      [&](const MPReal& x) { return exp(z * (-x)) * binet_kernel_over_x2(x, ctx); }, decay, ctx,
      2);
  Eval<S> lg = log_gamma(z, ctx);
  S b2 = bernoulli_poly(2, z, bits);
  S v = z * lg.value + ldexp(z * z, -2) - ldexp(log(z), -1) * b2 - glaisher_log_cached(ctx) +
        q.value;
  return Eval<S>{v,
                 log10_add(log10_add(q.err_log10, lg.err_log10), -double(ctx.working_digits())),
                 to_string(BarnesMethod::BinetIntegral), q.evaluations + lg.evaluations};
}

template <class S>
double abs_log10_of(const S& z) {
  if constexpr (std::is_same_v<S, MPReal>)
    return z.log10_abs();
  else
    return abs(z).log10_abs();
}

// log10 magnitude of the k-th asymptotic correction B_{2k+2}/(4k(k+1) z^{2k})
inline double asym_term_log10(long k, double log10_abs_z) {
  double lb = std::lgamma(2.0 * k + 3.0) / 2.302585092994046 +
              std::log10(2.0 / std::pow(2 * 3.141592653589793, 2.0 * k + 2.0));
  return lb - std::log10(4.0 * k * (k + 1.0)) - 2.0 * k * log10_abs_z;
}

template <class S>
Eval<S> log_g_asymptotic_impl(const S& zin, long terms, const PrecisionContext& ctx,
                              bool check_tolerance) {
  mpfr_prec_t bits = ctx.bits();
  S z = zin.rounded_to(bits);
  if (!(real_part(z) > 0L)) throw DomainError("log_g_asymptotic: requires Re z > 0");
  if (terms < 0) throw DomainError("log_g_asymptotic: terms must be >= 0");
  double lz = abs_log10_of(z);
  double omitted = asym_term_log10(terms + 1, lz);
  if (check_tolerance && omitted > -double(ctx.digits))
    throw InsufficientDecay("log_g_asymptotic: first omitted term above tolerance at this |z|");
  S v = ldexp(z * z, -1) * (log(z) - MPReal(harmonic(2), bits)) - log(z) / 12 -
        z * zeta_prime_0(ctx) + zeta_prime_neg(1, ctx);
  auto& cache = ConstantsCache::instance();
  S z2 = z * z;
  S p = 1L / z2;
  MPReal fct(24L, bits);  // (2k+2)! at k=1
  for (long k = 1; k <= terms + 1; ++k) {
    if (k > 1) fct = fct * ((2 * k + 1) * (2 * k + 2));
    S term = cache.bern_over_fact(k + 1, ctx.working_digits()) * fct * p / (4 * k * (k + 1));
    if (k <= terms) {
      v = v + term;
      p = p / z2;
    } else {
      omitted = abs(term).log10_abs();  // err = exact first omitted term
    }
  }
  return Eval<S>{v, omitted, to_string(BarnesMethod::AsymptoticShifted), terms};
}

}  // namespace detail

inline ComplexEval log_g_hermite(const MPComplex& z, const PrecisionContext& ctx) {
  if (z.is_real()) {
    auto e = detail::log_g_hermite_impl<MPReal>(z.re, ctx);
    return ComplexEval{MPComplex(e.value), e.err_log10, e.method, e.evaluations};
  }
  return detail::log_g_hermite_impl<MPComplex>(z, ctx);
}

inline ComplexEval log_g_binet(const MPComplex& z, const PrecisionContext& ctx) {
  if (z.is_real()) {
    auto e = detail::log_g_binet_impl<MPReal>(z.re, ctx);
    return ComplexEval{MPComplex(e.value), e.err_log10, e.method, e.evaluations};
  }
  return detail::log_g_binet_impl<MPComplex>(z, ctx);
}

// truncated asymptotic series with `terms` Bernoulli corrections; the
// reported err is the first omitted term's magnitude.  check_tolerance
// enforces the precondition that the omitted term is below 10^-digits.
inline ComplexEval log_g_asymptotic(const MPComplex& z, long terms, const PrecisionContext& ctx,
                                    bool check_tolerance = true) {
  if (z.is_real()) {
    auto e = detail::log_g_asymptotic_impl<MPReal>(z.re, terms, ctx, check_tolerance);
    return ComplexEval{MPComplex(e.value), e.err_log10, e.method, e.evaluations};
  }
  return detail::log_g_asymptotic_impl<MPComplex>(z, terms, ctx, check_tolerance);
}

// log G(z+1) = z(1-z)/2 + (z/2) log 2pi + int_0^z x psi(x) dx  for
// Re z > -1, with the log(z+1)-resolved continuation on -2 < Re z <= -1.
// The integrand is handled as x psi(x+1) - 1 (= x psi(x)), regular at 0.
inline ComplexEval log_g_psi_quadrature(const MPComplex& zin, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  MPComplex z = zin.rounded_to(bits);
  if (!(z.re > MPReal(-2L, bits))) throw DomainError("log_g_psi_quadrature: requires Re z > -2");
  MPComplex zp1 = z + 1;
  if (zp1.im.is_zero() && zp1.re <= 0L)
    throw PathCrossesPole("log_g_psi_quadrature: z+1 on the non-positive real axis");
  bool resolved = !(z.re > MPReal(-1L, bits));
  long evals = 0;
  MPComplex origin(0L, bits);
  QuadOutcome<MPComplex> q = [&] {
    if (!resolved) {
      return gauss_segment(
          [&](const MPComplex& x) {
            long e = 0;
            MPComplex v = detail::digamma_value(MPComplex(x + 1), ctx, e) * x - 1L;
            evals += e;
            return v;
          },
          origin, z, ctx);
    }
    return gauss_segment(
        [&](const MPComplex& x) {
          long e = 0;
          MPComplex v = detail::digamma_value(MPComplex(x + 1), ctx, e) * x - 1L - 1L / (x + 1);
          evals += e;
          return v;
        },
        origin, z, ctx);
  }();
  MPComplex v = ldexp(z * (1L - z), -1) + ldexp(z, -1) * log_2pi(ctx) + q.value;
  if (resolved) v += log(zp1);
  return ComplexEval{v, log10_add(q.err_log10, -double(ctx.working_digits())),
                     to_string(BarnesMethod::PsiQuadrature), q.evaluations + evals};
}

namespace detail {

// contour form: log G(z) = ((z-1)/2) log 2pi - (z-1)(z-2)/2
//               + int over {0, i, i+z-1, z-1} of x psi(x) dx,  arg z != pi
inline ComplexEval log_barnes_contour(const MPComplex& z, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  if (z.im.sign() < 0) {  // G(conj z) = conj G(z)
    auto e = log_barnes_contour(conj(z), ctx);
    return ComplexEval{conj(e.value), e.err_log10, e.method, e.evaluations};
  }
  MPComplex w = z - 1;
  MPComplex origin(0L, bits);
  MPComplex icorner{MPReal(0L, bits), MPReal(1L, bits)};
  MPComplex c2 = icorner + w;
  long evals = 0;
  auto f = [&](const MPComplex& x) {
    long e = 0;
    MPComplex v = digamma_value(MPComplex(x + 1), ctx, e) * x - 1L;
    evals += e;
    return v;
  };
  MPComplex total(0L, bits);
  double err = -400;
  for (const auto& [a, b] : {std::pair{origin, icorner}, std::pair{icorner, c2}, std::pair{c2, w}}) {
    auto q = gauss_segment(f, a, b, ctx);
    total += q.value;
    err = log10_add(err, q.err_log10);
  }
  MPComplex v = ldexp(w, -1) * log_2pi(ctx) - ldexp(w * (w - 1), -1) + total;
  return ComplexEval{v, log10_add(err, -double(ctx.working_digits())),
                     to_string(BarnesMethod::PsiQuadrature), evals};
}

// negative real non-integer z via the Clausen-periodicity reflection form:
// for w > 0,  G(-w) = (-1)^{floor(w/2)-1} G(w+2) |sin(pi w)/pi|^{w+1}
//             * exp(Cl2(2 pi {w}) / (2 pi))
inline ComplexEval log_barnes_negative_real(const MPReal& z, const PrecisionContext& ctx);

}  // namespace detail

inline ComplexEval log_barnes_g(const MPComplex& zin, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  MPComplex z = zin.rounded_to(bits);
  if (z.im.is_zero()) {
    if (z.re.is_integer() && z.re <= 0L) {
      // G(-n) = 0
      return ComplexEval{MPComplex(0L, bits), -400, "zero", 0, true};
    }
    if (z.re < 0L) return detail::log_barnes_negative_real(z.re, ctx);
  }
  double rez = z.re.to_double();
  double thresh = detail::asym_shift_target(ctx);
  if (rez - 1.0 >= thresh) {
    // already in the asymptotic region
    MPComplex w = z - 1;
    long terms = 1;
    double lz = z.is_real() ? w.re.log10_abs() : abs(w).log10_abs();
    while (terms < 100000 && detail::asym_term_log10(terms + 1, lz) > -double(ctx.working_digits()))
      ++terms;
    return log_g_asymptotic(w, terms, ctx, false);
  }
  if (rez > 0.0) {
    if (ctx.working_digits() <= 160) {
      // Hermite quadrature; one recurrence step when Re z <= 1
      if (rez > 1.0) return log_g_hermite(z - 1, ctx);
      auto g1 = log_g_hermite(z, ctx);  // log G(z+1)
      auto lg = log_gamma(z, ctx);
      return ComplexEval{g1.value - lg.value, log10_add(g1.err_log10, lg.err_log10),
                         to_string(BarnesMethod::RecurrenceShift),
                         g1.evaluations + lg.evaluations};
    }
    // high precision: shift into the asymptotic region, Stirling log Gamma
    long m = static_cast<long>(std::ceil(thresh - (rez - 1.0)));
    MPComplex shift_sum(0L, bits);
    long evals = 0;
    for (long j = 0; j < m; ++j) shift_sum += detail::log_gamma_stirling(MPComplex(z + j), ctx, evals);
    MPComplex w = z + (m - 1);  // G(z+m) = G((z+m-1)+1)
    long terms = 1;
    double lz = abs(w).log10_abs();
    while (terms < 100000 && detail::asym_term_log10(terms + 1, lz) > -double(ctx.working_digits()))
      ++terms;
    auto tail = log_g_asymptotic(w, terms, ctx, false);
    return ComplexEval{tail.value - shift_sum, log10_add(tail.err_log10, -double(ctx.working_digits())),
                       to_string(BarnesMethod::AsymptoticShifted), tail.evaluations + evals};
  }
  if (rez > -1.0) {
    // continuation strip via the psi quadrature with the resolved form
    return log_g_psi_quadrature(z - 1, ctx);
  }
  return detail::log_barnes_contour(z, ctx);
}

namespace detail {

inline ComplexEval log_barnes_negative_real(const MPReal& z, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  MPReal w = -z;  // w > 0, non-integer
  MPReal fl = floor(w);
  MPReal frac = w - fl;
  long fl_half = floor(ldexp(w, -1)).to_long();  // floor(w/2)
  int sign = ((fl_half - 1) % 2 == 0) ? 1 : -1;
  auto g2 = log_barnes_g(MPComplex(w + 2), ctx);
  MPReal sin_pw = abs(sin_pi_times(w)) / const_pi(bits);
  auto cl = clausen_cl2(ldexp(const_pi(bits), 1) * frac, ctx);
  MPReal logabs = g2.value.re + (w + 1) * log(sin_pw) + cl.value / ldexp(const_pi(bits), 1);
  MPComplex v{logabs, sign < 0 ? const_pi(bits) : MPReal(0L, bits)};
  return ComplexEval{v, log10_add(g2.err_log10, cl.err_log10),
                     to_string(BarnesMethod::Reflection), g2.evaluations + cl.evaluations};
}

}  // namespace detail

// |LHS - RHS| of the reflection formula
//   log(G(1+z)/G(1-z)) = -z log(sin(pi z)/pi) - Cl2(2 pi z)/(2 pi),  0 < z < 1,
// both sides computed independently
inline MPReal reflection_residual(const MPReal& z, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  if (!(z > 0L && z < 1L)) throw DomainError("reflection_residual: requires 0 < z < 1");
  MPReal pi = const_pi(bits);
  MPComplex one_plus(MPReal(1L, bits) + z);
  MPComplex one_minus(MPReal(1L, bits) - z);
  MPReal lhs = log_barnes_g(one_plus, ctx).value.re - log_barnes_g(one_minus, ctx).value.re;
  MPReal rhs = -(z * log(sin(pi * z) / pi)) - clausen_cl2(ldexp(pi, 1) * z, ctx).value / ldexp(pi, 1);
  return abs(lhs - rhs);
}

// |log LHS - log RHS| of the multiplication formula
//   G(nz) = e^{zeta'(-1)(1-n^2)} n^{n^2 z^2/2 - n z + 5/12}
//           (2 pi)^{(n-1)(1-n z)/2} prod_{i,j=0}^{n-1} G(z + (i+j)/n)
inline MPReal multiplication_residual(long n, const MPComplex& z, const PrecisionContext& ctx) {
  if (n < 2) throw DomainError("multiplication_residual: requires n >= 2");
  mpfr_prec_t bits = ctx.bits();
  auto is_zero_arg = [&](const MPComplex& a) {
    return a.im.is_zero() && a.re.is_integer() && a.re <= 0L;
  };
  MPComplex nz = z * n;
  if (is_zero_arg(nz)) throw ZeroFactor("multiplication_residual: G(nz) hits a zero");
  MPComplex lhs = log_barnes_g(nz, ctx).value;
  MPReal nn(n, bits);
  MPComplex rhs =
      MPComplex(zeta_prime_neg(1, ctx) * (1 - n * n)) +
      (ldexp(z * z * (n * n), -1) - z * n + MPReal(ExactRational(5, 12), bits)) * log(nn) +
      MPComplex(ldexp((1L - z * n) * (n - 1), -1) * log_2pi(ctx));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      MPComplex arg = z + MPReal(ExactRational(i + j, n), bits);
      if (is_zero_arg(arg)) throw ZeroFactor("multiplication_residual: factor hits a zero of G");
      rhs += log_barnes_g(arg, ctx).value;
    }
  }
  return abs(lhs - rhs);
}

// closed-form log G at the distinguished rational points, assembled from
// cached constants
inline MPReal special_value(SpecialValueKey key, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  MPReal pi = const_pi(bits);
  MPReal logA = glaisher_log_cached(ctx);
  auto rational = [&](long num, long den) { return MPReal(ExactRational(num, den), bits); };
  switch (key) {
    case SpecialValueKey::Half:
      // log G(1/2) = 1/8 + log2/24 - log pi/4 - (3/2) log A
      return rational(1, 8) + log2_const(ctx) / 24 - log(pi) / 4 - ldexp(logA * 3, -1);
    case SpecialValueKey::Quarter: {
      // log G(1/4) = 3/32 - G/(4 pi) - (3/4) log Gamma(1/4) - (9/8) log A
      MPReal lg14 = log_gamma(rational(1, 4), ctx).value;
      return rational(3, 32) - catalan_const(ctx) / (pi * 4) - lg14 * 3 / 4 - logA * 9 / 8;
    }
    case SpecialValueKey::ThreeQuarters: {
      // log G(3/4) = log G(1/4) + G/(2 pi) - log2/8 - log pi/4 + log Gamma(1/4)
      MPReal lg14 = log_gamma(rational(1, 4), ctx).value;
      return special_value(SpecialValueKey::Quarter, ctx) + catalan_const(ctx) / (pi * 2) -
             log2_const(ctx) / 8 - log(pi) / 4 + lg14;
    }
    case SpecialValueKey::Third: {
      // log G(1/3) = 1/9 + log3/72 + pi/(18 sqrt3) - (2/3) log Gamma(1/3)
      //              - (4/3) log A - psi^(1)(1/3)/(12 sqrt3 pi)
      MPReal sqrt3 = sqrt(MPReal(3L, bits));
      MPReal lg13 = log_gamma(rational(1, 3), ctx).value;
      MPReal tg13 = trigamma(rational(1, 3), ctx).value;
      return rational(1, 9) + log(MPReal(3L, bits)) / 72 + pi / (sqrt3 * 18) - lg13 * 2 / 3 -
             logA * 4 / 3 - tg13 / (sqrt3 * pi * 12);
    }
    case SpecialValueKey::TwoThirds: {
      // from the ratio form: log(G(1/3)/G(2/3)) = log(2 pi)/3 - log3/6
      //   - log Gamma(1/3) + (2 pi^2 - 3 psi^(1)(1/3))/(18 pi sqrt3)
      MPReal sqrt3 = sqrt(MPReal(3L, bits));
      MPReal lg13 = log_gamma(rational(1, 3), ctx).value;
      MPReal tg13 = trigamma(rational(1, 3), ctx).value;
      MPReal ratio = log_2pi(ctx) / 3 - log(MPReal(3L, bits)) / 6 - lg13 +
                     (ldexp(pi * pi, 1) - tg13 * 3) / (pi * sqrt3 * 18);
      return special_value(SpecialValueKey::Third, ctx) - ratio;
    }
  }
  throw DomainError("special_value: unknown key");
}

}  // namespace barnes
