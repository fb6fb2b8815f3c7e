#pragma once

// Clausen function Cl_2(theta) = sum_{k>=1} sin(k theta)/k^2.
//
// Evaluated by the singular-part-subtracted form of the defining series:
//   Cl_2(theta) = theta - theta log theta
//                 + sum_{n>=1} zeta(2n) theta^{2n+1} / (n (2n+1) (2 pi)^{2n})
// after reduction to [0, pi] by periodicity and oddness.  The remaining
// series converges at worst like (1/4)^n at theta = pi.

#include "barnes/constants.hpp"
#include "barnes/context.hpp"

namespace barnes {

inline RealEval clausen_cl2(const MPReal& theta_in, const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  MPReal pi = const_pi(bits);
  MPReal two_pi = ldexp(pi, 1);
  // reduce mod 2 pi into [0, 2 pi)
  MPReal theta = theta_in.rounded_to(bits);
  theta = theta - floor(theta / two_pi) * two_pi;
  int sign = 1;
  if (theta > pi) {  // Cl2(2 pi - t) = -Cl2(t)
    theta = two_pi - theta;
    sign = -1;
  }
  if (theta.is_zero()) return RealEval{MPReal(0L, bits), -400, "accelerated-series", 0};

  MPReal value = theta - theta * log(theta);
  MPReal ratio = theta / two_pi;
  MPReal r2 = ratio * ratio;
  MPReal p = theta * r2;  // theta * (theta/2pi)^{2n}
  MPReal eps = ctx.eps_working();
  auto& cache = ConstantsCache::instance();
  long n = 1;
  for (; n < 2'000'000; ++n) {
    MPReal term = cache.zeta_even(n, ctx.working_digits()) * p / (n * (2 * n + 1));
    value += term;
    if (term < eps) break;
    p = p * r2;
  }
  if (sign < 0) value = -value;
  return RealEval{value, -double(ctx.working_digits()) + 1, "accelerated-series", n};
}

// Catalan's constant, derived from Cl_2(pi/2) rather than tabulated
inline MPReal catalan_const(const PrecisionContext& ctx) {
  return ConstantsCache::instance()
      .get("catalan", ctx.working_digits(),
           [](long wd) {
             PrecisionContext c{wd, 10};
             return clausen_cl2(ldexp(const_pi(c.bits()), -1), c).value;
           })
      .rounded_to(ctx.bits());
}

}  // namespace barnes
