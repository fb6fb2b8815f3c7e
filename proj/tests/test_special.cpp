#include "barnes/clausen.hpp"
#include "barnes/gamma.hpp"
#include "barnes/zeta.hpp"
#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace barnes;

namespace {
const PrecisionContext ctx = PrecisionContext::make(30);
const mpfr_prec_t bits = ctx.bits();

MPReal mpfr_oracle(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const MPReal& x) {
  MPReal r(bits);
  fn(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

TEST_CASE("log_gamma (Binet integral)") {
  MPReal half(ExactRational(1, 2), bits);
  CHECK(abs(log_gamma(half, ctx).value - ldexp(log(const_pi(bits)), -1)).log10_abs() <
        -ctx.digits);
  CHECK(abs(log_gamma(MPReal(1L, bits), ctx).value).log10_abs() < -ctx.digits);
  CHECK(abs(log_gamma(MPReal(5L, bits), ctx).value - log(MPReal(24L, bits))).log10_abs() <
        -ctx.digits);

  SECTION("against the library oracle on the real axis") {
    for (const char* zs : {"0.37", "1", "3.25", "7.9", "41.5"}) {
      MPReal z(zs, bits);
      MPReal expect = mpfr_oracle([](mpfr_ptr r, mpfr_srcptr x, mpfr_rnd_t rnd) {
        int sign;
        return mpfr_lgamma(r, &sign, x, rnd);
      }, z);
      INFO("z=" << zs);
      CHECK(abs(log_gamma(z, ctx).value - expect).log10_abs() < -ctx.digits);
    }
  }

  SECTION("pole and domain errors") {
    CHECK_THROWS_AS(log_gamma(MPComplex(MPReal(-3L, bits)), ctx), PoleError);
    CHECK_THROWS_AS(log_gamma(MPReal(-1L, bits), ctx), DomainError);
  }

  SECTION("agrees with the Stirling-series internal route") {
    long evals = 0;
    MPComplex z{MPReal("2.2", bits), MPReal("1.7", bits)};
    MPComplex a = log_gamma(z, ctx).value;
    MPComplex b = detail::log_gamma_stirling(z, ctx, evals);
    CHECK(abs(a - b).log10_abs() < -ctx.digits);
  }
}

TEST_CASE("digamma") {
  CHECK(abs(digamma(MPReal(1L, bits), ctx).value + euler_gamma(ctx)).log10_abs() < -ctx.digits);

  SECTION("duplication-derived value at 1/2") {
    MPReal lhs = digamma(MPReal(ExactRational(1, 2), bits), ctx).value;
    MPReal rhs = digamma(MPReal(1L, bits), ctx).value - ldexp(log2_const(ctx), 1);
    CHECK(abs(lhs - rhs).log10_abs() < -ctx.digits);
  }

  SECTION("against mpfr_digamma on the real axis, incl. reflection region") {
    for (const char* zs : {"0.3", "-0.75", "2.25", "11", "-4.2"}) {
      MPReal z(zs, bits);
      MPReal expect = mpfr_oracle(mpfr_digamma, z);
      INFO("z=" << zs);
      CHECK(abs(digamma(z, ctx).value - expect).log10_abs() < -ctx.digits + 1);
    }
  }

  SECTION("the psi special integral (section-3 table, last entry)") {
    MPReal z(2L, bits);
    MPReal two_pi = ldexp(const_pi(bits), 1);
    auto q = integrate_semi_infinite(
        [&](const MPReal& x) { return x / (expm1(two_pi * x) * (x * x + z * z)); },
        6.283185307179586, ctx, 2);
    MPReal rhs = log(z) - digamma(z, ctx).value - 1 / ldexp(z, 1);
    CHECK(abs(ldexp(q.value, 1) - rhs).log10_abs() < -ctx.digits);
  }

  CHECK_THROWS_AS(digamma(MPReal(0L, bits), ctx), PoleError);
}

TEST_CASE("euler gamma is reproduced") {
  MPReal expect(bits);
  mpfr_const_euler(expect.raw(), MPFR_RNDN);
  CHECK(abs(euler_gamma(ctx) - expect).log10_abs() < -ctx.digits);
}

TEST_CASE("trigamma") {
  MPReal pi = const_pi(bits);
  CHECK(abs(trigamma(MPReal(1L, bits), ctx).value - pi * pi / 6).log10_abs() < -ctx.digits);
  // zeta(2, 1/2) = 3 zeta(2) = pi^2/2
  CHECK(abs(trigamma(MPReal(ExactRational(1, 2), bits), ctx).value - ldexp(pi * pi, -1))
            .log10_abs() < -ctx.digits);
  CHECK_THROWS_AS(trigamma(MPComplex(MPReal(-2L, bits)), ctx), PoleError);
}

TEST_CASE("hurwitz zeta via the Hermite integral") {
  MPReal pi = const_pi(bits);
  CHECK(abs(hurwitz_zeta(MPReal(2L, bits), MPReal(1L, bits), ctx).value - pi * pi / 6)
            .log10_abs() < -ctx.digits);

  SECTION("zeta(2, 1/3) = psi^(1)(1/3) and the EM oracle agrees") {
    MPReal third(ExactRational(1, 3), bits);
    MPReal a = hurwitz_zeta(MPReal(2L, bits), third, ctx).value;
    MPReal b = oracle::hurwitz_em(MPReal(2L, bits), third, ctx);
    CHECK(abs(a - b).log10_abs() < -ctx.digits);
  }

  SECTION("zeta(-1, 1/4) = -B_2(1/4)/2") {
    MPReal quarter(ExactRational(1, 4), bits);
    MPReal a = hurwitz_zeta(MPReal(-1L, bits), quarter, ctx).value;
    MPReal b = -ldexp(bernoulli_poly(2, quarter, bits), -1);
    CHECK(abs(a - b).log10_abs() < -ctx.digits);
  }

  SECTION("EM oracle across s, incl. s < 1") {
    for (const char* ss : {"-0.5", "1.5", "2", "3", "6.25"}) {
      MPReal s(ss, bits);
      MPReal z("0.8", bits);
      INFO("s=" << ss);
      CHECK(abs(hurwitz_zeta(s, z, ctx).value - oracle::hurwitz_em(s, z, ctx)).log10_abs() <
            -ctx.digits);
    }
  }

  SECTION("shift property zeta(s,z+1) = zeta(s,z) - z^-s at fixed points") {
    for (const char* ss : {"-0.5", "2", "3"}) {
      for (const char* zs : {"0.5", "1", "2.5"}) {
        MPReal s(ss, bits), z(zs, bits);
        MPReal lhs = hurwitz_zeta(s, z + 1, ctx).value;
        MPReal rhs = hurwitz_zeta(s, z, ctx).value - pow(z, -s);
        INFO("s=" << ss << " z=" << zs);
        CHECK(abs(lhs - rhs).log10_abs() < -ctx.digits);
      }
    }
  }

  CHECK_THROWS_AS(hurwitz_zeta(MPReal(1L, bits), MPReal(2L, bits), ctx), PoleAtOne);
  CHECK_THROWS_AS(hurwitz_zeta(MPReal(2L, bits), MPReal(-1L, bits), ctx), DomainError);
}

TEST_CASE("zeta'(-1, z) by direct quadrature") {
  SECTION("z = 1 reduces to zeta'(-1)") {
    MPReal a = hurwitz_zeta_prime_neg1(MPReal(1L, bits), ctx).value;
    CHECK(abs(a - zeta_prime_neg(1, ctx)).log10_abs() < -ctx.digits);
  }
  SECTION("half-argument identity") {
    MPReal a = hurwitz_zeta_prime_neg1(MPReal(ExactRational(1, 2), bits), ctx).value;
    MPReal b = -ldexp(zeta_prime_neg(1, ctx), -1) - log2_const(ctx) / 24;
    CHECK(abs(a - b).log10_abs() < -ctx.digits);
  }
  SECTION("matches the general-j oracle at j = 1") {
    MPReal z("1.6", bits);
    MPReal a = hurwitz_zeta_prime_neg1(z, ctx).value;
    CHECK(abs(a - oracle::zeta_prime_neg_z(1, z, ctx)).log10_abs() < -ctx.digits);
  }
}

TEST_CASE("zeta'(-k) constants") {
  SECTION("k = 1: quadrature route vs the odd-zeta series route") {
    MPReal viaseries =
        MPReal(ExactRational(1, 12), bits) -
        (log2_const(ctx) / 12 + [&] {
          MPReal acc(0L, bits);
          for (long k = 1; k <= 60; ++k) {
            MPReal w = MPReal(28L, bits) + MPReal(ExactRational(3, 1 + k), bits) -
                       MPReal(ExactRational(6, 2 + k), bits);
            acc += zeta_m1(2 * k + 1, ctx).value * w / 36;
          }
          return acc;
        }());
    CHECK(abs(zeta_prime_neg(1, ctx) - viaseries).log10_abs() < -ctx.digits);
  }
  SECTION("k = 2 equals -zeta(3)/(4 pi^2)") {
    MPReal pi = const_pi(bits);
    MPReal z3 = 1 + zeta_m1(3, ctx).value;
    CHECK(abs(zeta_prime_neg(2, ctx) + z3 / (ldexp(pi * pi, 2))).log10_abs() < -ctx.digits);
  }
  SECTION("zeta'(0) = -log(2 pi)/2") {
    CHECK(abs(zeta_prime_0(ctx) + ldexp(log_2pi(ctx), -1)).log10_abs() < -ctx.working_digits() + 2);
  }
  SECTION("odd k via the functional equation against the direct-quadrature oracle") {
    for (long k : {3L, 5L}) {
      // zeta'(-k,1) = zeta'(-k)
      MPReal a = oracle::zeta_prime_neg_z(k, MPReal(1L, bits), ctx);
      INFO("k=" << k);
      CHECK(abs(a - zeta_prime_neg(k, ctx)).log10_abs() < -ctx.digits);
    }
  }
}

TEST_CASE("riemann zeta and zeta - 1") {
  MPReal pi = const_pi(bits);
  CHECK(abs(riemann_zeta(MPReal(2L, bits), ctx).value - pi * pi / 6).log10_abs() < -ctx.digits);
  SECTION("against mpfr_zeta including s < 1") {
    for (const char* ss : {"0.5", "-1.5", "3", "9.25"}) {
      MPReal s(ss, bits);
      MPReal expect = mpfr_oracle(mpfr_zeta, s);
      INFO("s=" << ss);
      CHECK(abs(riemann_zeta(s, ctx).value - expect).log10_abs() < -ctx.digits);
    }
  }
  SECTION("kernel quadrature route agrees with the series for zeta(3)-1") {
    CHECK(abs(zeta_m1_quadrature(3, ctx).value - zeta_m1(3, ctx).value).log10_abs() <
          -ctx.digits);
  }
  SECTION("zeta'(2) by Euler-Maclaurin vs a coarse finite difference") {
    MPReal h("1e-12", bits);
    MPReal fd = (mpfr_oracle(mpfr_zeta, MPReal(2L, bits) + h) -
                 mpfr_oracle(mpfr_zeta, MPReal(2L, bits) - h)) /
                ldexp(h, 1);
    CHECK(abs(zeta_prime_pos(2, ctx) - fd).log10_abs() < -20);  // fd is O(h^2) accurate
  }
}

TEST_CASE("Clausen function") {
  MPReal pi = const_pi(bits);
  CHECK(clausen_cl2(MPReal(0L, bits), ctx).value.is_zero());

  SECTION("Cl2(pi/2) = Catalan") {
    MPReal expect(bits);
    mpfr_const_catalan(expect.raw(), MPFR_RNDN);
    CHECK(abs(clausen_cl2(ldexp(pi, -1), ctx).value - expect).log10_abs() < -ctx.digits);
    CHECK(abs(catalan_const(ctx) - expect).log10_abs() < -ctx.digits);
  }

  SECTION("Cl2(pi/2) against the alternating-series partial sums") {
    MPReal acc(0L, bits);
    for (long k = 0; k < 20000; ++k) {
      MPReal t = 1 / MPReal((2 * k + 1) * (2 * k + 1), bits);
      acc = (k % 2 == 0) ? acc + t : acc - t;
    }
    CHECK(abs(clausen_cl2(ldexp(pi, -1), ctx).value - acc).to_double() < 1e-8);
  }

  SECTION("Cl2(2pi/3) via the trigamma identity") {
    MPReal sqrt3 = sqrt(MPReal(3L, bits));
    MPReal lhs = clausen_cl2(ldexp(pi, 1) / 3, ctx).value;
    MPReal tg = trigamma(MPReal(ExactRational(1, 3), bits), ctx).value;
    MPReal rhs = tg / (sqrt3 * 3) - ldexp(pi * pi, 1) / (sqrt3 * 9);
    CHECK(abs(lhs - rhs).log10_abs() < -ctx.digits);
  }

  SECTION("periodicity and oddness on a grid") {
    MPReal two_pi = ldexp(pi, 1);
    for (int i = 1; i <= 16; ++i) {
      MPReal t = two_pi * i / 17;
      MPReal a = clausen_cl2(t, ctx).value;
      CHECK(abs(clausen_cl2(t + two_pi, ctx).value - a).log10_abs() < -ctx.working_digits() + 3);
      CHECK(abs(clausen_cl2(-t, ctx).value + a).log10_abs() < -ctx.working_digits() + 3);
    }
  }
}
