#pragma once

#include "barnes/mpreal.hpp"

#include <cmath>
#include <string_view>

namespace barnes {

// Requested decimal digits plus guard digits; threaded explicitly through
// every evaluation.  Error estimates in results are relative to `digits`,
// the guard only pads the working precision.
struct PrecisionContext {
  long digits = 30;
  long guard = 20;

  static PrecisionContext make(long digits) {
    if (digits < 1) throw DomainError("digits must be >= 1");
    long g = 10 + static_cast<long>(std::ceil(std::log10(static_cast<double>(digits)))) * 5;
    return PrecisionContext{digits, g};
  }

  long working_digits() const { return digits + guard; }
  mpfr_prec_t bits() const { return digits_to_bits(working_digits()); }
  // working precision widened for values whose magnitude eats leading digits
  mpfr_prec_t bits_for_magnitude(double log10_mag) const {
    double extra = log10_mag > 0 ? log10_mag : 0.0;
    return digits_to_bits(working_digits() + static_cast<long>(extra) + 2);
  }

  MPReal eps_working() const {  // 10^-(digits+guard)
    MPReal t(-working_digits(), bits());
    MPReal ten(10L, bits());
    return pow(ten, t);
  }
  double tol_log10() const { return -static_cast<double>(digits); }

  PrecisionContext with_more_digits(long extra) const {
    PrecisionContext c = *this;
    c.digits += extra;
    return c;
  }
};

// value + error estimate + method tag + work counter
template <class V>
struct Eval {
  V value;
  double err_log10 = -400;        // log10 of estimated absolute error bound
  std::string_view method = "";   // which formula produced the value
  long evaluations = 0;           // integrand/term evaluations spent
  bool zero = false;              // set only for log G at a zero of G
};

using RealEval = Eval<MPReal>;
using ComplexEval = Eval<MPComplex>;

inline double log10_add(double a, double b) {  // log10(10^a + 10^b)
  if (a < b) std::swap(a, b);
  return a + std::log10(1.0 + std::pow(10.0, b - a));
}

}  // namespace barnes
