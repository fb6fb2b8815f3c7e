#include "barnes/exact.hpp"
#include "barnes/multigamma.hpp"
#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace barnes;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == ExactRational(1));
  CHECK(bernoulli_number(1) == ExactRational(-1, 2));
  CHECK(bernoulli_number(2) == ExactRational(1, 6));
  CHECK(bernoulli_number(3) == ExactRational(0));
  CHECK(bernoulli_number(4) == ExactRational(-1, 30));
  CHECK(bernoulli_number(12) == ExactRational(-691, 2730));

  SECTION("sum_{k<n} C(n,k) B_k = 0 for n >= 2") {
    for (long n = 2; n <= 60; ++n) {
      ExactRational s(0);
      for (long k = 0; k < n; ++k)
        s += ExactRational(binomial_exact(n, k)) * bernoulli_number(k);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("bernoulli polynomials") {
  mpfr_prec_t bits = 200;
  MPReal half(ExactRational(1, 2), bits);
  CHECK(abs(bernoulli_poly(2, MPReal(0L, bits), bits) - MPReal(ExactRational(1, 6), bits))
            .log10_abs() < -50);
  CHECK(bernoulli_poly(1, half, bits).is_zero());
  CHECK(abs(bernoulli_poly(2, half, bits) - MPReal(ExactRational(-1, 12), bits)).log10_abs() <
        -50);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == ExactRational(1));
  CHECK(harmonic(2) == ExactRational(3, 2));
  CHECK(harmonic(3) == ExactRational(11, 6));
  CHECK(harmonic(10) == ExactRational(7381, 2520));
}

TEST_CASE("stirling subset numbers") {
  CHECK(stirling_subset(0, 0) == 1);
  for (long n = 1; n <= 10; ++n) CHECK(stirling_subset(n, 0) == 0);
  CHECK(stirling_subset(3, 2) == 3);

  SECTION("recurrence holds exactly up to n = 30") {
    for (long n = 1; n <= 30; ++n)
      for (long k = 0; k <= n; ++k) {
        BigInt expect =
            k * stirling_subset(n - 1, k) + (k > 0 ? stirling_subset(n - 1, k - 1) : BigInt(0));
        CHECK(stirling_subset(n, k) == expect);
      }
  }

  SECTION("counts set partitions (brute force)") {
    for (int n = 0; n <= 8; ++n) {
      auto counts = oracle::partition_counts_brute(n);
      for (int k = 0; k <= n; ++k)
        CHECK(stirling_subset(n, k) == BigInt(static_cast<unsigned long>(counts[k])));
    }
  }
}

TEST_CASE("bell numbers") {
  CHECK(bell_number(0) == 1);
  CHECK(bell_number(2) == 2);
  CHECK(bell_number(3) == 5);
  CHECK(bell_number(10) == 115975);
  for (int n = 0; n <= 8; ++n) {
    auto counts = oracle::partition_counts_brute(n);
    unsigned long total = 0;
    for (auto c : counts) total += c;
    CHECK(bell_number(n) == BigInt(total));
  }
}

TEST_CASE("hankel determinants of Bell numbers") {
  CHECK(hankel_bell_det(1) == 1);
  CHECK(hankel_bell_det(2) == 1);
  CHECK(hankel_bell_det(3) == 2);

  SECTION("equals the superfactorial forced by the recurrence, n <= 8") {
    for (long n = 1; n <= 8; ++n) CHECK(hankel_bell_det(n) == superfactorial(n));
  }

  SECTION("matches cofactor expansion, n <= 5") {
    for (long n = 1; n <= 5; ++n) {
      std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m[i][j] = bell_number(i + j + 1);
      CHECK(hankel_bell_det(n) == oracle::det_cofactor(m));
    }
  }
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK_THROWS_AS(double_factorial(-2), DomainError);
}

TEST_CASE("P_{k,n} coefficients") {
  auto p1 = pkn_coefficients(1);
  REQUIRE(p1.coeffs.size() == 1);
  CHECK(p1.coeffs[0] == 1);

  auto p2 = pkn_coefficients(2);
  REQUIRE(p2.coeffs.size() == 2);
  CHECK(p2.coeffs[0] == ExactRational(1, 2));
  CHECK(p2.coeffs[1] == 1);

  auto p3 = pkn_coefficients(3);
  REQUIRE(p3.coeffs.size() == 3);
  CHECK(p3.coeffs[0] == ExactRational(3, 4));
  CHECK(p3.coeffs[1] == 2);
  CHECK(p3.coeffs[2] == 1);

  SECTION("constant term is (2n-3)!!/2^{n-1}, leading term 1") {
    for (long n = 1; n <= 12; ++n) {
      auto p = pkn_coefficients(n);
      CHECK(p.coeffs[0] ==
            ExactRational(double_factorial(2 * n - 3), BigInt(1) << (n - 1)));
      CHECK(p.coeffs[n - 1] == 1);
    }
  }
}
