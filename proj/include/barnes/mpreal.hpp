#pragma once

// Value-semantic wrappers around MPFR reals and pairs of them as complex
// numbers.  Precision is a property of each value; binary operations work
// at the larger of the two operand precisions and there is no ambient
// global precision anywhere in this library.

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace barnes {

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};
struct PoleAtOne : std::runtime_error {
  explicit PoleAtOne(const std::string& what) : std::runtime_error(what) {}
};
struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};
struct InsufficientDecay : std::runtime_error {
  explicit InsufficientDecay(const std::string& what) : std::runtime_error(what) {}
};
struct PathCrossesPole : std::runtime_error {
  explicit PathCrossesPole(const std::string& what) : std::runtime_error(what) {}
};
struct ZeroFactor : std::runtime_error {
  explicit ZeroFactor(const std::string& what) : std::runtime_error(what) {}
};

inline mpfr_prec_t digits_to_bits(long decimal_digits) {
  // 1 digit = log2(10) ~ 3.3219.. bits, plus a little slack
  return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873623 + 16);
}

// MPFR's default exponent range caps values near 10^(3*10^8); exp(log G)
// at large arguments wants more.  Widen once per process.
inline void widen_exponent_range() {
  static const bool done = [] {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
    return true;
  }();
  (void)done;
}

class MPReal {
 public:
  MPReal() { mpfr_init2(v_, 53); }
  explicit MPReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  MPReal(long n, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  MPReal(int n, mpfr_prec_t prec) : MPReal(static_cast<long>(n), prec) {}
  MPReal(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  MPReal(const char* s, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s, 10, MPFR_RNDN) != 0)
      throw DomainError(std::string("unparseable decimal literal: ") + s);
  }
  MPReal(const mpq_class& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  MPReal(const mpz_class& z, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }

  MPReal(const MPReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MPReal(MPReal&& o) noexcept {
    mpfr_init2(v_, 53);
    mpfr_swap(v_, o.v_);
  }
  MPReal& operator=(const MPReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MPReal& operator=(MPReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MPReal() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  // Copy rounded to a (typically lower) target precision.
  MPReal rounded_to(mpfr_prec_t prec) const {
    MPReal r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  // log2 of magnitude (exponent); 0 exponent convention for zero/nan
  long exponent2() const {
    if (mpfr_zero_p(v_) || mpfr_nan_p(v_) || mpfr_inf_p(v_)) return 0;
    return static_cast<long>(mpfr_get_exp(v_));
  }
  // crude log10 of |x|, -inf for 0; cheap, double-based
  double log10_abs() const {
    if (mpfr_zero_p(v_)) return -1e300;
    if (mpfr_nan_p(v_) || mpfr_inf_p(v_)) return 1e300;
    long e = static_cast<long>(mpfr_get_exp(v_));
    MPReal m = *this;
    mpfr_abs(m.v_, m.v_, MPFR_RNDN);
    mpfr_mul_2si(m.v_, m.v_, -e, MPFR_RNDN);  // mantissa in [0.5,1)
    return e * 0.30102999566398120 + std::log10(mpfr_get_d(m.v_, MPFR_RNDN));
  }

  // Decimal string with `digits` significant figures, round-trippable.
  std::string to_string(long digits) const;

  friend void swap(MPReal& a, MPReal& b) noexcept { mpfr_swap(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t common_prec(const MPReal& a, const MPReal& b) {
  return std::max(a.prec(), b.prec());
}

#define BARNES_MPREAL_BINOP(op, fn)                              \
  inline MPReal operator op(const MPReal& a, const MPReal& b) {  \
    MPReal r(common_prec(a, b));                                 \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                    \
    return r;                                                    \
  }
BARNES_MPREAL_BINOP(+, mpfr_add)
BARNES_MPREAL_BINOP(-, mpfr_sub)
BARNES_MPREAL_BINOP(*, mpfr_mul)
BARNES_MPREAL_BINOP(/, mpfr_div)
#undef BARNES_MPREAL_BINOP

inline MPReal operator-(const MPReal& a) {
  MPReal r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline MPReal operator+(const MPReal& a, long b) {
  MPReal r(a.prec());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline MPReal operator+(long a, const MPReal& b) { return b + a; }
inline MPReal operator-(const MPReal& a, long b) {
  MPReal r(a.prec());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline MPReal operator-(long a, const MPReal& b) {
  MPReal r(b.prec());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
inline MPReal operator*(const MPReal& a, long b) {
  MPReal r(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline MPReal operator*(long a, const MPReal& b) { return b * a; }
inline MPReal operator/(const MPReal& a, long b) {
  MPReal r(a.prec());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
inline MPReal operator/(long a, const MPReal& b) {
  MPReal r(b.prec());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
inline MPReal& operator+=(MPReal& a, const MPReal& b) { a = a + b; return a; }
inline MPReal& operator-=(MPReal& a, const MPReal& b) { a = a - b; return a; }
inline MPReal& operator*=(MPReal& a, const MPReal& b) { a = a * b; return a; }
inline MPReal& operator/=(MPReal& a, const MPReal& b) { a = a / b; return a; }
inline MPReal& operator+=(MPReal& a, long b) { a = a + b; return a; }
inline MPReal& operator*=(MPReal& a, long b) { a = a * b; return a; }
inline MPReal& operator/=(MPReal& a, long b) { a = a / b; return a; }

inline int cmp(const MPReal& a, const MPReal& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator<(const MPReal& a, const MPReal& b) { return cmp(a, b) < 0; }
inline bool operator>(const MPReal& a, const MPReal& b) { return cmp(a, b) > 0; }
inline bool operator<=(const MPReal& a, const MPReal& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const MPReal& a, const MPReal& b) { return cmp(a, b) >= 0; }
inline bool operator==(const MPReal& a, const MPReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const MPReal& a, const MPReal& b) { return !(a == b); }
inline bool operator<(const MPReal& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const MPReal& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator<=(const MPReal& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
inline bool operator>=(const MPReal& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
inline bool operator==(const MPReal& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

#define BARNES_MPREAL_FN1(name, fn)          \
  inline MPReal name(const MPReal& a) {      \
    MPReal r(a.prec());                      \
    fn(r.raw(), a.raw(), MPFR_RNDN);         \
    return r;                                \
  }
BARNES_MPREAL_FN1(abs, mpfr_abs)
BARNES_MPREAL_FN1(sqrt, mpfr_sqrt)
BARNES_MPREAL_FN1(exp, mpfr_exp)
BARNES_MPREAL_FN1(expm1, mpfr_expm1)
BARNES_MPREAL_FN1(log, mpfr_log)
BARNES_MPREAL_FN1(log1p, mpfr_log1p)
BARNES_MPREAL_FN1(sin, mpfr_sin)
BARNES_MPREAL_FN1(cos, mpfr_cos)
BARNES_MPREAL_FN1(tan, mpfr_tan)
BARNES_MPREAL_FN1(atan, mpfr_atan)
BARNES_MPREAL_FN1(sinh, mpfr_sinh)
BARNES_MPREAL_FN1(cosh, mpfr_cosh)
BARNES_MPREAL_FN1(asinh, mpfr_asinh)
#undef BARNES_MPREAL_FN1

inline MPReal floor(const MPReal& a) {
  MPReal r(a.prec());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDD);
  return r;
}
inline MPReal ceil(const MPReal& a) {
  MPReal r(a.prec());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDU);
  return r;
}

inline MPReal atan2(const MPReal& y, const MPReal& x) {
  MPReal r(common_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline MPReal pow(const MPReal& a, const MPReal& b) {
  MPReal r(common_prec(a, b));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline MPReal pow(const MPReal& a, long n) {
  MPReal r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline MPReal pow2i(long n, mpfr_prec_t prec) {  // 2^n
  MPReal r(1L, prec);
  mpfr_mul_2si(r.raw(), r.raw(), n, MPFR_RNDN);
  return r;
}
inline MPReal ldexp(const MPReal& a, long n) {
  MPReal r(a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline MPReal const_pi(mpfr_prec_t prec) {
  MPReal r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
inline MPReal sin_pi_times(const MPReal& x) {  // sin(pi*x) with argument reduction
  // reduce x mod 2 first so the multiplication by pi does not lose digits
  MPReal t(x.prec() + 32);
  mpfr_set(t.raw(), x.raw(), MPFR_RNDN);
  MPReal two(2L, t.prec());
  MPReal k = floor(t / two) * 2L;
  t = t - k;
  return sin(t * const_pi(t.prec())).rounded_to(x.prec());
}

inline std::string MPReal::to_string(long digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  std::string sgn;
  if (!m.empty() && m[0] == '-') {
    sgn = "-";
    m = m.substr(1);
  }
  // m is the digit string with implied decimal point before it: value = 0.m * 10^e
  std::string out = sgn + m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(e - 1);
  return out;
}

// ---------------------------------------------------------------------------

class MPComplex {
 public:
  MPReal re, im;

  MPComplex() = default;
  explicit MPComplex(mpfr_prec_t prec) : re(0L, prec), im(0L, prec) {}
  MPComplex(MPReal r) : re(std::move(r)), im(0L, re.prec()) {}
  MPComplex(MPReal r, MPReal i) : re(std::move(r)), im(std::move(i)) {}
  MPComplex(long r, mpfr_prec_t prec) : re(r, prec), im(0L, prec) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_real() const { return im.is_zero(); }
  MPComplex rounded_to(mpfr_prec_t p) const { return {re.rounded_to(p), im.rounded_to(p)}; }
};

inline MPComplex operator+(const MPComplex& a, const MPComplex& b) { return {a.re + b.re, a.im + b.im}; }
inline MPComplex operator-(const MPComplex& a, const MPComplex& b) { return {a.re - b.re, a.im - b.im}; }
inline MPComplex operator-(const MPComplex& a) { return {-a.re, -a.im}; }
inline MPComplex operator*(const MPComplex& a, const MPComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline MPComplex operator*(const MPComplex& a, const MPReal& b) { return {a.re * b, a.im * b}; }
inline MPComplex operator*(const MPReal& a, const MPComplex& b) { return b * a; }
inline MPComplex operator*(const MPComplex& a, long b) { return {a.re * b, a.im * b}; }
inline MPComplex operator*(long b, const MPComplex& a) { return a * b; }
inline MPComplex operator+(const MPComplex& a, const MPReal& b) { return {a.re + b, a.im}; }
inline MPComplex operator+(const MPReal& b, const MPComplex& a) { return a + b; }
inline MPComplex operator-(const MPComplex& a, const MPReal& b) { return {a.re - b, a.im}; }
inline MPComplex operator-(const MPReal& b, const MPComplex& a) { return {b - a.re, -a.im}; }
inline MPComplex operator+(const MPComplex& a, long b) { return {a.re + b, a.im}; }
inline MPComplex operator+(long b, const MPComplex& a) { return a + b; }
inline MPComplex operator-(const MPComplex& a, long b) { return {a.re - b, a.im}; }
inline MPComplex operator-(long a, const MPComplex& b) { return {a - b.re, -b.im}; }
inline MPComplex operator/(const MPComplex& a, const MPReal& b) { return {a.re / b, a.im / b}; }
inline MPComplex operator/(const MPComplex& a, long b) { return {a.re / b, a.im / b}; }
inline MPComplex operator/(const MPComplex& a, const MPComplex& b) {
  MPReal d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline MPComplex operator/(const MPReal& a, const MPComplex& b) { return MPComplex(a) / b; }
inline MPComplex operator/(long a, const MPComplex& b) {
  MPReal d = b.re * b.re + b.im * b.im;
  return {a * b.re / d, -(a * b.im) / d};
}
inline MPComplex& operator+=(MPComplex& a, const MPComplex& b) { a = a + b; return a; }
inline MPComplex& operator-=(MPComplex& a, const MPComplex& b) { a = a - b; return a; }

inline MPComplex ldexp(const MPComplex& a, long n) { return {ldexp(a.re, n), ldexp(a.im, n)}; }
inline MPReal abs(const MPComplex& a) {
  MPReal r(a.prec());
  mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
  return r;
}
inline MPReal arg(const MPComplex& a) { return atan2(a.im, a.re); }
inline MPComplex conj(const MPComplex& a) { return {a.re, -a.im}; }

// principal branch
inline MPComplex log(const MPComplex& a) {
  if (a.im.is_zero() && a.re.sign() > 0) return MPComplex(log(a.re));
  return {log(abs(a)), arg(a)};
}
inline MPComplex exp(const MPComplex& a) {
  if (a.im.is_zero()) return MPComplex(exp(a.re));
  MPReal m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}
inline MPComplex sin(const MPComplex& a) {
  if (a.im.is_zero()) return MPComplex(sin(a.re));
  return {sin(a.re) * cosh(a.im), cos(a.re) * sinh(a.im)};
}
inline MPComplex cos(const MPComplex& a) {
  if (a.im.is_zero()) return MPComplex(cos(a.re));
  return {cos(a.re) * cosh(a.im), -(sin(a.re) * sinh(a.im))};
}
inline MPComplex cot(const MPComplex& a) { return cos(a) / sin(a); }

// principal arctan via logs; fine for arguments off the cut [i, i*inf), (-i*inf, -i]
inline MPComplex atan(const MPComplex& w) {
  if (w.im.is_zero()) return MPComplex(atan(w.re));
  mpfr_prec_t p = w.prec();
  MPComplex iw{-w.im, w.re};  // i*w
  MPComplex a = log(MPComplex(1L, p) - iw);
  MPComplex b = log(MPComplex(1L, p) + iw);
  MPComplex d = a - b;  // log((1-iw)/(1+iw))
  return {-(d.im / 2), d.re / 2};  // (i/2)*d
}

inline MPComplex pow(const MPComplex& a, const MPReal& s) {
  if (a.im.is_zero() && a.re.sign() > 0) return MPComplex(pow(a.re, s));
  return exp(log(a) * s);
}
inline MPComplex powi(const MPComplex& a, long n) {  // integer exponent, by squaring
  if (n < 0) return 1L / powi(a, -n);
  MPComplex r(1L, a.prec()), base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

}  // namespace barnes
