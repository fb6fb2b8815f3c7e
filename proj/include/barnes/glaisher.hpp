#pragma once

// Four independent computations of log A (Glaisher-Kinkelin):
//
//   ZetaPrime2:    log A = gamma/12 - zeta'(2)/(2 pi^2) + log(2 pi)/12
//   OddZetaSeries: log A = log2/12
//                  + (1/36) sum_{k>=1} (zeta(2k+1)-1)(28 + 3/(1+k) - 6/(2+k)),
//                  truncated at N = ceil((digits/2) log2 10) terms, the
//                  count that delivers `digits` decimal digits (O(4^-N)
//                  remainder)
//   BarnesHalf:    log A = 1/12 + log2/36 - log pi/6 - (2/3) log G(1/2)
//                  with log G(1/2) strictly via the x psi(x) quadrature
//                  route (the closed form would be circular here)
//   LogIntegral:   log A = (1 + log 2pi)/12
//                  - (1/(2 pi^2)) int_0^inf x log x/(e^x - 1) dx

#include "barnes/barnes_g.hpp"

#include <vector>

namespace barnes {

enum class GlaisherMethod { ZetaPrime2, OddZetaSeries, BarnesHalf, LogIntegral };

constexpr std::string_view to_string(GlaisherMethod m) {
  switch (m) {
    case GlaisherMethod::ZetaPrime2: return "zeta-prime-2";
    case GlaisherMethod::OddZetaSeries: return "odd-zeta-series";
    case GlaisherMethod::BarnesHalf: return "barnes-half";
    case GlaisherMethod::LogIntegral: return "log-integral";
  }
  return "?";
}

// the paper's term-count law for p decimal digits
inline long glaisher_series_terms_for(long digits) {
  return static_cast<long>(std::ceil(digits / 2.0 * 3.321928094887362));
}

inline RealEval log_glaisher(GlaisherMethod method, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  switch (method) {
    case GlaisherMethod::ZetaPrime2: {
      MPReal pi = const_pi(bits);
      MPReal v = euler_gamma(ctx) / 12 - zeta_prime_pos(2, ctx) / ldexp(pi * pi, 1) +
                 log_2pi(ctx) / 12;
      return RealEval{v, -double(ctx.working_digits()) + 1, to_string(method), 1};
    }
    case GlaisherMethod::OddZetaSeries: {
      long N = glaisher_series_terms_for(ctx.digits);
      MPReal acc = log2_const(ctx) / 12;
      long evals = 0;
      for (long k = 1; k <= N; ++k) {
        auto zm1 = zeta_m1(2 * k + 1, ctx);
        evals += zm1.evaluations;
        MPReal w = MPReal(28L, bits) + MPReal(ExactRational(3, 1 + k), bits) -
                   MPReal(ExactRational(6, 2 + k), bits);
        acc += zm1.value * w / 36;
      }
      // remainder ~ (28/36)(zeta(2N+3)-1)*(4/3) ~ 0.26 * 4^-N
      double err = -0.585 - 0.60206 * static_cast<double>(N);
      return RealEval{acc, err, to_string(method), evals == 0 ? N : evals};
    }
    case GlaisherMethod::BarnesHalf: {
      auto g = log_g_psi_quadrature(MPComplex(MPReal("-0.5", bits)), ctx);  // log G(1/2)
      MPReal v = MPReal(ExactRational(1, 12), bits) + log2_const(ctx) / 36 -
                 log(const_pi(bits)) / 6 - g.value.re * 2 / 3;
      return RealEval{v, g.err_log10, to_string(method), g.evaluations};
    }
    case GlaisherMethod::LogIntegral: {
      auto q = integrate_semi_infinite_t<MPReal>(
          [&](const MPReal& x) { return x * log(x) / expm1(x); }, 1.0, ctx, 2);
      MPReal pi = const_pi(bits);
      MPReal v = (1 + log_2pi(ctx)) / 12 - q.value / ldexp(pi * pi, 1);
      return RealEval{v, q.err_log10, to_string(method), q.evaluations};
    }
  }
  throw DomainError("log_glaisher: unknown method");
}

// partial-sum errors of the odd-zeta series against a digits+20 reference;
// the fitted slope of log10(err) vs N validates the O(1/4^N) remainder
inline std::vector<std::pair<long, double>> glaisher_series_error_curve(
    long max_terms, const PrecisionContext& ctx) {
  if (max_terms < 4) throw DomainError("glaisher_series_error_curve: max_terms must be >= 4");
  PrecisionContext refctx = ctx.with_more_digits(20);
  MPReal reference = log_glaisher(GlaisherMethod::OddZetaSeries, refctx).value;
  mpfr_prec_t bits = refctx.bits();
  std::vector<std::pair<long, double>> curve;
  MPReal acc = log2_const(refctx) / 12;
  for (long k = 1; k <= max_terms; ++k) {
    MPReal w = MPReal(28L, bits) + MPReal(ExactRational(3, 1 + k), bits) -
               MPReal(ExactRational(6, 2 + k), bits);
    acc += zeta_m1(2 * k + 1, refctx).value * w / 36;
    curve.emplace_back(k, abs(acc - reference).log10_abs());
  }
  return curve;
}

// least-squares slope of log10(err) per term over the curve
inline double glaisher_error_slope(const std::vector<std::pair<long, double>>& curve) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double n = static_cast<double>(curve.size());
  for (auto& [N, e] : curve) {
    sx += N;
    sy += e;
    sxx += double(N) * N;
    sxy += N * e;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace barnes
