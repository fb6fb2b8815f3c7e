#pragma once

// Exact combinatorial objects: Bernoulli and harmonic numbers, Stirling
// subset numbers, Bell numbers, Hankel determinants of Bell numbers,
// double factorials.  Everything here is exact big-integer / big-rational
// arithmetic (GMP); no floating point.

#include "barnes/mpreal.hpp"

#include <gmpxx.h>

#include <mutex>
#include <vector>

namespace barnes {

using ExactRational = mpq_class;  // canonical: den > 0, gcd(num, den) = 1
using BigInt = mpz_class;

inline BigInt binomial_exact(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt factorial_exact(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace detail {
struct ExactTables {
  std::mutex mu;
  std::vector<ExactRational> bernoulli;          // B_0, B_1, ... (B_1 = -1/2)
  std::vector<ExactRational> harmonic;           // H_0 = 0, H_1, ...
  std::vector<std::vector<BigInt>> stirling;     // stirling[n][k], k <= n
  std::vector<BigInt> bell;

  static ExactTables& instance() {
    static ExactTables t;
    return t;
  }
};
}  // namespace detail

// B_n, convention B_1 = -1/2.  Classical recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0, memoized.
inline ExactRational bernoulli_number(long n) {
  if (n < 0) throw DomainError("bernoulli_number: n must be >= 0");
  auto& t = detail::ExactTables::instance();
  std::lock_guard<std::mutex> lock(t.mu);
  auto& B = t.bernoulli;
  if (B.empty()) B.push_back(ExactRational(1));
  while (static_cast<long>(B.size()) <= n) {
    long m = static_cast<long>(B.size());
    if (m > 1 && m % 2 == 1) {
      B.push_back(ExactRational(0));
      continue;
    }
    ExactRational s(0);
    for (long k = 0; k < m; ++k) {
      if (B[k] == 0) continue;
      s += ExactRational(binomial_exact(m + 1, k)) * B[k];
    }
    s /= binomial_exact(m + 1, m);
    ExactRational b = -s;
    b.canonicalize();
    B.push_back(b);
  }
  return B[n];
}

// H_p = sum_{k=1}^{p} 1/k
inline ExactRational harmonic(long p) {
  if (p < 1) throw DomainError("harmonic: p must be >= 1");
  auto& t = detail::ExactTables::instance();
  std::lock_guard<std::mutex> lock(t.mu);
  auto& H = t.harmonic;
  if (H.empty()) H.push_back(ExactRational(0));
  while (static_cast<long>(H.size()) <= p) {
    long k = static_cast<long>(H.size());
    ExactRational h = H.back() + ExactRational(1, k);
    h.canonicalize();
    H.push_back(h);
  }
  return H[p];
}

// Stirling subset numbers {n,k}:  {n,k} = k {n-1,k} + {n-1,k-1},
// base row {n,0} = [n == 0].
inline BigInt stirling_subset(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("stirling_subset: n,k must be >= 0");
  if (k > n) return BigInt(0);
  auto& t = detail::ExactTables::instance();
  std::lock_guard<std::mutex> lock(t.mu);
  auto& S = t.stirling;
  if (S.empty()) S.push_back({BigInt(1)});
  while (static_cast<long>(S.size()) <= n) {
    long m = static_cast<long>(S.size());
    std::vector<BigInt> row(m + 1);
    row[0] = 0;
    for (long j = 1; j <= m; ++j) {
      BigInt up = (j < m) ? S[m - 1][j] : BigInt(0);
      row[j] = j * up + S[m - 1][j - 1];
    }
    S.push_back(std::move(row));
  }
  return S[n][k];
}

// Bell numbers B_n = sum_k {n,k}
inline BigInt bell_number(long n) {
  if (n < 0) throw DomainError("bell_number: n must be >= 0");
  stirling_subset(n, 0);  // fill triangle
  auto& t = detail::ExactTables::instance();
  std::lock_guard<std::mutex> lock(t.mu);
  auto& S = t.stirling;
  BigInt s(0);
  for (long k = 0; k <= n; ++k) s += S[n][k];
  return s;
}

// det of the n x n Hankel matrix M[i][j] = Bell(i+j-1), 1-based, computed
// by Bareiss fraction-free elimination.  Exact; equals G(n+1).
inline BigInt hankel_bell_det(long n) {
  if (n < 1) throw DomainError("hankel_bell_det: n must be >= 1");
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) a[i][j] = bell_number(i + j + 1);
  BigInt prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      long p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return BigInt(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact division
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

// n!! with (-1)!! = 1 and 0!! = 1
inline BigInt double_factorial(long n) {
  if (n < -1) throw DomainError("double_factorial: n must be >= -1");
  BigInt r(1);
  for (long k = n; k >= 2; k -= 2) r *= k;
  return r;
}

// superfactorial prod_{i=1}^{n-1} i!  ( = G(n+1) at positive integers)
inline BigInt superfactorial(long n) {
  if (n < 1) throw DomainError("superfactorial: n must be >= 1");
  BigInt r(1);
  for (long i = 1; i < n; ++i) r *= factorial_exact(i);
  return r;
}

// B_n(z) by the binomial expansion over exact Bernoulli numbers
inline MPComplex bernoulli_poly(long n, const MPComplex& z, mpfr_prec_t bits) {
  if (n < 0) throw DomainError("bernoulli_poly: n must be >= 0");
  MPComplex acc(0L, bits);
  for (long k = 0; k <= n; ++k) {
    ExactRational c = ExactRational(binomial_exact(n, k)) * bernoulli_number(k);
    if (c == 0) continue;
    acc += MPReal(c, bits) * powi(z, n - k);
  }
  return acc;
}

inline MPReal bernoulli_poly(long n, const MPReal& z, mpfr_prec_t bits) {
  return bernoulli_poly(n, MPComplex(z), bits).re;
}

}  // namespace barnes
