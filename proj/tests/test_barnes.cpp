#include "barnes/barnes_g.hpp"
#include "barnes/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace barnes;

namespace {
const PrecisionContext ctx = PrecisionContext::make(30);
const mpfr_prec_t bits = ctx.bits();

MPComplex c(const char* re) { return MPComplex(MPReal(re, bits)); }
MPReal rq(long num, long den) { return MPReal(ExactRational(num, den), bits); }
}  // namespace

TEST_CASE("integral methods at the integer anchors G(2)=G(3)=1, G(4)=2") {
  for (auto method : {&log_g_hermite, &log_g_binet, &log_g_psi_quadrature}) {
    CHECK(abs(method(c("1"), ctx).value).log10_abs() < -ctx.digits);
    CHECK(abs(method(c("2"), ctx).value).log10_abs() < -ctx.digits);
    CHECK(abs(method(c("3"), ctx).value - MPComplex(log2_const(ctx))).log10_abs() <
          -ctx.digits);
  }
}

namespace {
// shifted asymptotic route for log G(z+1): recurrence into the validated
// region, then the truncated series; log Gamma factors via the Binet op
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
}  // namespace

TEST_CASE("four-method pairwise agreement (dispatch set)") {
  for (const char* zs : {"0.5", "1", "2", "2.5", "4", "10"}) {
    MPComplex z = c(zs);
    MPComplex vals[4] = {
        log_g_hermite(z, ctx).value,
        log_g_binet(z, ctx).value,
        log_g_psi_quadrature(z, ctx).value,
        shifted_asymptotic(z, ctx),
    };
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        INFO("z=" << zs << " pair " << i << "," << j);
        CHECK(abs(vals[i] - vals[j]).log10_abs() < -(ctx.digits - 3));
      }
  }
}

TEST_CASE("asymptotic series") {
  SECTION("first correction term is B_4/(8 z^2)") {
    MPComplex z = c("40");
    MPComplex with0 = log_g_asymptotic(z, 0, ctx, false).value;
    MPComplex with1 = log_g_asymptotic(z, 1, ctx, false).value;
    MPReal expect = MPReal(ExactRational(-1, 240), bits) / (MPReal(1600L, bits));
    CHECK(abs((with1 - with0).re - expect).log10_abs() < -ctx.digits + 1);
  }
  SECTION("error honesty at z = 40, truncation orders 2..8") {
    MPComplex z = c("40");
    MPComplex reference = log_g_hermite(z, ctx).value;
    for (long terms = 2; terms <= 8; ++terms) {
      auto e = log_g_asymptotic(z, terms, ctx, false);
      double actual = abs(e.value - reference).log10_abs();
      INFO("terms=" << terms << " actual=10^" << actual << " omitted=10^" << e.err_log10);
      CHECK(actual < e.err_log10);
    }
  }
  SECTION("tolerance precondition is enforced") {
    CHECK_THROWS_AS(log_g_asymptotic(c("4"), 8, ctx), InsufficientDecay);
  }
  SECTION("matches the Stirling-type form near z = 1e6 to O(1/z)") {
    MPComplex z = c("1000000");
    MPComplex a = log_g_asymptotic(z, 2, ctx, false).value;
    MPReal zr = z.re;
    MPReal stirling = ldexp(zr * log_2pi(ctx), -1) - glaisher_log_cached(ctx) -
                      zr * zr * 3 / 4 + (ldexp(zr * zr, -1) - rq(1, 12)) * log(zr);
    CHECK(abs(a.re - stirling).to_double() < 1e-12);
  }
}

TEST_CASE("psi quadrature continuation") {
  SECTION("z = 1/2 agrees with the closed-form G(3/2)") {
    MPReal lhs = log_g_psi_quadrature(c("0.5"), ctx).value.re;
    MPReal rhs = ldexp(log(const_pi(bits)), -1) + special_value(SpecialValueKey::Half, ctx);
    CHECK(abs(lhs - rhs).log10_abs() < -ctx.digits);
  }
  SECTION("z = i agrees with the Hermite boundary evaluation") {
    MPComplex zi{MPReal(0L, bits), MPReal(1L, bits)};
    CHECK(abs(log_g_psi_quadrature(zi, ctx).value - log_g_hermite(zi, ctx).value).log10_abs() <
          -ctx.digits);
  }
  SECTION("resolved continuation -2 < Re z <= -1 joins the contour branch") {
    MPComplex z{MPReal("-1.4", bits), MPReal("0.6", bits)};
    MPComplex viapsi = log_g_psi_quadrature(z, ctx).value;      // log G(z+1)
    MPComplex viadisp = log_barnes_g(z + 1, ctx).value;         // contour (Re(z+1) <= -0?)
    CHECK(abs(viapsi - viadisp).log10_abs() < -(ctx.digits - 3));
  }
  SECTION("path through a psi pole is rejected") {
    CHECK_THROWS_AS(log_g_psi_quadrature(c("-1.5"), ctx), PathCrossesPole);
  }
}

TEST_CASE("dispatcher") {
  SECTION("zeros at non-positive integers") {
    for (const char* zs : {"0", "-1", "-3", "-12"}) {
      auto e = log_barnes_g(c(zs), ctx);
      INFO("z=" << zs);
      CHECK(e.zero);
    }
    CHECK_FALSE(log_barnes_g(c("2"), ctx).zero);
  }
  SECTION("superfactorial anchors: G(6) = 288, log exactness") {
    auto e = log_barnes_g(c("6"), ctx);
    CHECK(abs(e.value.re - log(MPReal(288L, bits))).log10_abs() < -ctx.digits);
  }
  SECTION("hankel bridge: exp(log G(n+1)) rounds to det M_n, n <= 6") {
    for (long n = 1; n <= 6; ++n) {
      auto e = log_barnes_g(MPComplex(MPReal(n + 1, bits)), ctx);
      MPReal g = exp(e.value.re);
      mpfr_round(g.raw(), g.raw());
      INFO("n=" << n);
      CHECK(mpfr_cmp_z(g.raw(), hankel_bell_det(n).get_mpz_t()) == 0);
    }
  }
  SECTION("recurrence over 40 seeded arguments, real axis") {
    unsigned long long state = 42;
    auto next_u = [&]() {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return double(state >> 11) / 9007199254740992.0;
    };
    for (int i = 0; i < 40; ++i) {
      MPReal z(0.1 + 19.9 * next_u(), bits);
      MPReal resid = abs(log_barnes_g(MPComplex(z + 1), ctx).value.re -
                         log_gamma(z, ctx).value - log_barnes_g(MPComplex(z), ctx).value.re);
      INFO("i=" << i << " z~" << z.to_double());
      CHECK(resid.log10_abs() < -ctx.digits);
    }
  }
  SECTION("recurrence in the branch-consistent strip") {
    unsigned long long state = 7;
    auto next_u = [&]() {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return double(state >> 11) / 9007199254740992.0;
    };
    for (int i = 0; i < 8; ++i) {
      MPComplex z{MPReal(0.2 + 8.0 * next_u(), bits), MPReal(next_u() - 0.5, bits)};
      MPComplex resid =
          log_barnes_g(z + 1, ctx).value - log_gamma(z, ctx).value - log_barnes_g(z, ctx).value;
      INFO("i=" << i);
      CHECK(abs(resid).log10_abs() < -ctx.digits);
    }
  }
  SECTION("negative real axis via the Clausen reflection form") {
    // independent expectation from the recurrence G(1-w) = Gamma(-w) G(-w)
    for (const char* ws : {"0.5", "0.3", "1.4", "2.6"}) {
      MPReal w(ws, bits);
      auto gneg = log_barnes_g(MPComplex(-w), ctx);
      MPReal gval = exp(gneg.value.re);
      if (!gneg.value.im.is_zero()) gval = -gval;
      auto g1mw = log_barnes_g(MPComplex(1 - w), ctx);
      MPReal lhs = exp(g1mw.value.re);
      if (!g1mw.value.im.is_zero()) lhs = -lhs;
      MPReal pi = const_pi(bits);
      MPReal gamma_neg = pi / (sin_pi_times(-w) * exp(log_gamma(w + 1, ctx).value));
      INFO("w=" << ws);
      CHECK(abs(lhs - gamma_neg * gval).log10_abs() < -(ctx.digits - 4));
    }
    // sign pattern from the floor convention
    CHECK(!log_barnes_g(c("-0.3"), ctx).value.im.is_zero());   // G(-0.3) < 0
    CHECK(!log_barnes_g(c("-1.4"), ctx).value.im.is_zero());   // G(-1.4) < 0
    CHECK(log_barnes_g(c("-2.6"), ctx).value.im.is_zero());    // G(-2.6) > 0
  }
  SECTION("complex plane away from the axis (contour branch)") {
    MPComplex z{MPReal("-2.5", bits), MPReal("0.7", bits)};
    auto e = log_barnes_g(z, ctx);
    // recurrence against the strip-consistent value at z+1
    MPComplex rhs = log_barnes_g(z + 1, ctx).value - log_gamma(z, ctx).value;
    CHECK(abs(e.value - rhs).log10_abs() < -(ctx.digits - 3));
  }
}

TEST_CASE("G <-> zeta' bridge") {
  for (const char* zs : {"0.5", "1", "1.5", "2"}) {
    MPReal z(zs, bits);
    MPReal resid = abs(log_barnes_g(MPComplex(z + 1), ctx).value.re -
                       z * log_gamma(z, ctx).value - zeta_prime_neg(1, ctx) +
                       hurwitz_zeta_prime_neg1(z, ctx).value);
    INFO("z=" << zs);
    CHECK(resid.log10_abs() < -ctx.digits);
  }
  MPReal z = rq(7, 3);
  MPReal resid = abs(log_barnes_g(MPComplex(z + 1), ctx).value.re -
                     z * log_gamma(z, ctx).value - zeta_prime_neg(1, ctx) +
                     hurwitz_zeta_prime_neg1(z, ctx).value);
  CHECK(resid.log10_abs() < -ctx.digits);
}

TEST_CASE("reflection residuals") {
  for (long den : {2L, 3L, 4L}) {
    MPReal resid = reflection_residual(rq(1, den), ctx);
    INFO("z=1/" << den);
    CHECK(resid.log10_abs() < -ctx.digits);
  }
}

TEST_CASE("multiplication residuals") {
  CHECK(multiplication_residual(2, MPComplex(rq(3, 4)), ctx).log10_abs() < -ctx.digits);
  CHECK(multiplication_residual(2, MPComplex(rq(1, 1)), ctx).log10_abs() < -ctx.digits);
  CHECK(multiplication_residual(3, MPComplex(rq(1, 3)), ctx).log10_abs() < -ctx.digits);
  CHECK_THROWS_AS(multiplication_residual(2, MPComplex(MPReal(0L, bits)), ctx), ZeroFactor);
}

TEST_CASE("special values match independent dispatcher evaluation") {
  struct Case { SpecialValueKey key; long num, den; };
  for (auto cse : {Case{SpecialValueKey::Half, 1, 2}, Case{SpecialValueKey::Quarter, 1, 4},
                   Case{SpecialValueKey::ThreeQuarters, 3, 4}, Case{SpecialValueKey::Third, 1, 3},
                   Case{SpecialValueKey::TwoThirds, 2, 3}}) {
    MPReal closed = special_value(cse.key, ctx);
    MPReal numeric = log_barnes_g(MPComplex(rq(cse.num, cse.den)), ctx).value.re;
    INFO("z=" << cse.num << "/" << cse.den);
    CHECK(abs(closed - numeric).log10_abs() < -ctx.digits);
  }
}

TEST_CASE("method tags identify the chosen branch") {
  CHECK(log_barnes_g(c("6"), ctx).method == "hermite-integral");
  CHECK(log_barnes_g(c("0.5"), ctx).method == "recurrence-shift");
  CHECK(log_barnes_g(c("-0.3"), ctx).method == "reflection");
  CHECK(log_barnes_g(c("-3"), ctx).method == "zero");
  MPComplex far{MPReal(40L, bits), MPReal(0L, bits)};
  CHECK(log_barnes_g(far, ctx).method == "asymptotic-shifted");
  MPComplex left{MPReal("-3.5", bits), MPReal("1.5", bits)};
  CHECK(log_barnes_g(left, ctx).method == "psi-quadrature");
}
