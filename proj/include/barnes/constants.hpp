#pragma once

// Precision-aware cache of fundamental constants and numeric coefficient
// tables.  Each entry is stored at the highest working precision ever
// requested and rounded down on lower-precision reads.  Safe for
// concurrent readers with exclusive fill; computations may re-enter the
// cache for other keys.

#include "barnes/context.hpp"
#include "barnes/exact.hpp"
#include "barnes/mpreal.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace barnes {

class ConstantsCache {
 public:
  static ConstantsCache& instance() {
    static ConstantsCache c;
    return c;
  }

  // generic memo: compute(wd) must return the value at working digits wd
  MPReal get(const std::string& key, long working_digits,
             const std::function<MPReal(long)>& compute) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = values_.find(key);
    if (it == values_.end() || it->second.second < working_digits) {
      MPReal v = compute(working_digits);
      it = values_.insert_or_assign(it == values_.end() ? values_.begin() : it, key,
                                    std::make_pair(std::move(v), working_digits));
    }
    return it->second.first.rounded_to(digits_to_bits(working_digits));
  }

  // B_{2k}/(2k)! at working precision, by power-series inversion of
  // (e^t - 1)/t; the inversion is numerically benign (max intermediate is
  // within a factor pi of the result).
  MPReal bern_over_fact(long k, long working_digits) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (working_digits > bf_digits_ || static_cast<long>(bf_.size()) <= k) {
      long want_k = std::max<long>(k + 8, static_cast<long>(bf_.size()) * 2);
      long wd = std::max(working_digits, bf_digits_);
      build_bern_over_fact(want_k, wd);
    }
    return bf_[k].rounded_to(digits_to_bits(working_digits));
  }

  // zeta(2n) from the Bernoulli table: |B_2n| (2pi)^{2n} / (2 (2n)!)
  MPReal zeta_even(long n, long working_digits) {
    if (n < 1) throw DomainError("zeta_even: n must be >= 1");
    mpfr_prec_t bits = digits_to_bits(working_digits + 4);
    MPReal two_pi = ldexp(const_pi(bits), 1);
    MPReal v = abs(bern_over_fact(n, working_digits + 4)) * pow(two_pi, 2 * n) / 2;
    return v.rounded_to(digits_to_bits(working_digits));
  }

 private:
  std::recursive_mutex mu_;
  std::map<std::string, std::pair<MPReal, long>> values_;
  std::vector<MPReal> bf_;  // bf_[k] = B_{2k}/(2k)!
  long bf_digits_ = 0;

  void build_bern_over_fact(long kmax, long wd) {
    mpfr_prec_t bits = digits_to_bits(wd + 8);
    long n = 2 * kmax + 1;
    // a_j = 1/(j+1)!  ;  b = 1/a by series inversion, b_j = B_j/j!
    std::vector<MPReal> a, b;
    a.reserve(n + 1);
    b.reserve(n + 1);
    MPReal fct(1L, bits);
    for (long j = 0; j <= n; ++j) {
      fct = (j == 0) ? MPReal(1L, bits) : fct * (j + 1);
      a.emplace_back(1 / fct);  // 1/(j+1)!
    }
    b.emplace_back(1L, bits);
    for (long j = 1; j <= n; ++j) {
      MPReal s(0L, bits);
      for (long i = 1; i <= j; ++i) s += a[i] * b[j - i];
      b.emplace_back(-s);
    }
    bf_.clear();
    for (long kk = 0; 2 * kk <= n; ++kk) bf_.push_back(b[2 * kk]);
    bf_digits_ = wd;
  }
};

inline MPReal pi_const(const PrecisionContext& ctx) { return const_pi(ctx.bits()); }

inline MPReal log2_const(const PrecisionContext& ctx) {
  MPReal r(ctx.bits());
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

inline MPReal log_2pi(const PrecisionContext& ctx) {
  return ConstantsCache::instance().get("log_2pi", ctx.working_digits(), [](long wd) {
    mpfr_prec_t bits = digits_to_bits(wd + 4);
    return log(ldexp(const_pi(bits), 1));
  });
}

// zeta'(0) = -log(2 pi)/2
inline MPReal zeta_prime_0(const PrecisionContext& ctx) {
  return ldexp(-log_2pi(ctx), -1);
}

}  // namespace barnes
