#pragma once

// Quadrature and summation engines.
//
// Semi-infinite integrals are truncated where the integrand's exponential
// envelope drops below the working target and then handled by tanh-sinh
// (double-exponential) quadrature with level doubling; the variable
// transform tolerates the logarithmic endpoint behaviour the Binet-type
// kernels have at 0.  Finite contour segments use fixed-order
// Gauss-Legendre panels with adaptive bisection.

#include "barnes/context.hpp"
#include "barnes/mpreal.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace barnes {

namespace detail {

// One tanh-sinh node: fraction from the nearer endpoint plus weight,
// both for abscissa t = k*h > 0 (level tables hold only new nodes).
struct TSNode {
  MPReal frac;    // sigma(t) = (1 - tanh((pi/2) sinh t))/2, distance from endpoint
  MPReal weight;  // (pi/2) cosh t / cosh^2((pi/2) sinh t)
};

struct TSLevel {
  std::vector<TSNode> nodes;  // nodes with odd index at this level's spacing
};

struct TSTable {
  double tmax = 0;
  MPReal center_weight;  // weight at t = 0 (pi/2)
  std::vector<TSLevel> levels;
};

// Cache of tanh-sinh tables keyed by (bits, tmax in fixed steps) and of
// Gauss-Legendre rules keyed by (bits, order).  Concurrent readers, one
// filler.
class QuadCache {
 public:
  static QuadCache& instance() {
    static QuadCache c;
    return c;
  }

  std::shared_ptr<const TSTable> tanh_sinh_table(mpfr_prec_t bits, double tmax, int max_level) {
    long tkey = static_cast<long>(std::ceil(tmax));
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(static_cast<long>(bits), tkey);
    auto it = ts_.find(key);
    if (it == ts_.end() || static_cast<int>(it->second->levels.size()) < max_level + 1) {
      auto table = build_ts(bits, static_cast<double>(tkey), max_level);
      it = ts_.insert_or_assign(it == ts_.end() ? ts_.begin() : it, key, std::move(table));
    }
    return it->second;
  }

  std::shared_ptr<const std::vector<std::pair<MPReal, MPReal>>> gauss_legendre(mpfr_prec_t bits,
                                                                               int order) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(static_cast<long>(bits), static_cast<long>(order));
    auto it = gl_.find(key);
    if (it == gl_.end()) {
      it = gl_.emplace(key, build_gl(bits, order)).first;
    }
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<long, long>, std::shared_ptr<const TSTable>> ts_;
  std::map<std::pair<long, long>, std::shared_ptr<const std::vector<std::pair<MPReal, MPReal>>>> gl_;

  static std::shared_ptr<const TSTable> build_ts(mpfr_prec_t bits, double tmax, int max_level) {
    auto table = std::make_shared<TSTable>();
    table->tmax = tmax;
    MPReal pi_half = const_pi(bits) / 2;
    table->center_weight = pi_half;  // at t=0: cosh 0 = 1, sech^2 0 = 1
    // level L spacing h = 1/2^L; level 0 holds all integer-t nodes,
    // level L>0 holds odd multiples of h.
    for (int L = 0; L <= max_level; ++L) {
      TSLevel lev;
      double h = std::ldexp(1.0, -L);
      long kstep = (L == 0) ? 1 : 2;
      long kstart = 1;
      for (long k = kstart; k * h <= tmax; k += kstep) {
        MPReal t(k, bits);
        t = ldexp(t, -L);
        MPReal u = pi_half * sinh(t);
        // sigma = 1/(1+e^{2u}) computed from the tiny side
        MPReal e = exp(ldexp(u, 1) * -1L);  // e^{-2u}, u > 0
        MPReal frac = e / (1 + e);
        // weight = (pi/2) cosh t sech^2 u = (pi/2) cosh t * 4 e^{-2u}/(1+e^{-2u})^2
        MPReal se = (1 + e);
        MPReal w = pi_half * cosh(t) * ldexp(e, 2) / (se * se);
        lev.nodes.push_back(TSNode{std::move(frac), std::move(w)});
      }
      table->levels.push_back(std::move(lev));
    }
    return table;
  }

  static std::shared_ptr<const std::vector<std::pair<MPReal, MPReal>>> build_gl(mpfr_prec_t bits,
                                                                                int order) {
    // nodes/weights of order-n Gauss-Legendre on [-1,1]; Newton from the
    // Chebyshev-like initial guess, at full working precision
    auto rule = std::make_shared<std::vector<std::pair<MPReal, MPReal>>>();
    int n = order;
    MPReal pi = const_pi(bits);
    for (int i = 1; i <= (n + 1) / 2; ++i) {
      MPReal x = cos(pi * (4 * i - 1) / (4 * n + 2));
      MPReal dp(0L, bits);
      for (int it = 0; it < 200; ++it) {
        // evaluate P_n and P_n' by recurrence
        MPReal p0(1L, bits), p1 = x;
        for (int k = 2; k <= n; ++k) {
          MPReal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        MPReal dx = p1 / dp;
        x = x - dx;
        if (dx.is_zero() || dx.exponent2() < -(bits + 8)) break;
      }
      // converged x; weight = 2/((1-x^2) P_n'(x)^2), recompute dp at final x
      MPReal p0(1L, bits), p1 = x;
      for (int k = 2; k <= n; ++k) {
        MPReal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      MPReal w = 2 / ((1 - x * x) * dp * dp);
      rule->emplace_back(x, w);
    }
    return rule;
  }
};

template <class T>
void accumulate_node(T& acc, const T& v) {
  acc += v;
}

template <class T>
double abs_log10(const T& v) {
  if constexpr (std::is_same_v<T, MPReal>)
    return v.log10_abs();
  else
    return abs(v).log10_abs();
}

}  // namespace detail

template <class T>
struct QuadOutcome {
  T value;
  double err_log10;
  long evaluations;
};

// tanh-sinh on the finite interval (a, b); F takes the abscissa and the
// distance to the nearer endpoint (exact in the transform, useful for
// endpoint-singular integrands), returning MPReal or MPComplex.
template <class T, class F>
QuadOutcome<T> tanh_sinh(F&& f, const MPReal& a, const MPReal& b, const PrecisionContext& ctx,
                         int max_level = 14) {
  mpfr_prec_t bits = ctx.bits();
  MPReal len = b - a;
  double eps_log10 = -static_cast<double>(ctx.working_digits());
  // transformed-tail cutoff: (pi/2) e^{tmax} ~ ln(1/eps) + margin
  double ln_inv_eps = ctx.working_digits() * 2.302585092994046 + 8.0;
  double tmax = std::asinh((2.0 / 3.141592653589793) * ln_inv_eps) + 0.25;

  auto table = detail::QuadCache::instance().tanh_sinh_table(bits, tmax, max_level);

  long evals = 0;
  MPReal h(1L, bits);
  MPReal half_len = ldexp(len, -1);  // dx = (len/2) dp
  T sum = f(a + half_len, half_len) * table->center_weight;
  ++evals;
  for (const auto& nd : table->levels[0].nodes) {
    MPReal d = len * nd.frac;
    sum += (f(a + d, d) + f(b - d, d)) * nd.weight;
    evals += 2;
  }
  T integral = sum * h * half_len;
  double prev_diff_log10 = 1e300;
  for (int L = 1; L <= max_level; ++L) {
    for (const auto& nd : table->levels[L].nodes) {
      MPReal d = len * nd.frac;
      sum += (f(a + d, d) + f(b - d, d)) * nd.weight;
      evals += 2;
    }
    h = ldexp(h, -1);
    T next = sum * h * half_len;
    T diff = next - integral;
    double dl = detail::abs_log10(diff);
    integral = next;
    double scale = detail::abs_log10(integral);
    if (dl < eps_log10 + std::max(0.0, scale) || dl < eps_log10) {
      // widen by the accumulation-rounding floor so the estimate stays an
      // upper bound even when the transform has fully converged
      double floor = -double(bits) * 0.3010299956639812 +
                     0.5 * std::log10(double(evals + 1)) + 1.0 + std::max(0.0, scale);
      return {integral, log10_add(dl, floor), evals};
    }
    prev_diff_log10 = dl;
  }
  (void)prev_diff_log10;
  throw NonConvergence("tanh_sinh: no level agreement within max_level");
}

// integral over (0, inf) of a smooth integrand decaying at least like
// e^{-decay_hint x}; power_hint bounds the polynomial growth factor.
template <class T, class F>
QuadOutcome<T> integrate_semi_infinite_t(F&& f, double decay_hint, const PrecisionContext& ctx,
                                         int power_hint = 8) {
  if (!(decay_hint > 0)) throw DomainError("integrate_semi_infinite: decay_hint must be > 0");
  // truncate where x^p e^{-decay x} < 10^-(digits+guard)
  double target = ctx.working_digits() * 2.302585092994046 + 6.0;
  double xmax = target / decay_hint;
  for (int i = 0; i < 3; ++i)
    xmax = (target + power_hint * std::log(std::max(xmax, 2.0))) / decay_hint;
  MPReal zero(0L, ctx.bits());
  MPReal cut(xmax, ctx.bits());
  auto g = [&](const MPReal& x, const MPReal&) { return f(x); };
  return tanh_sinh<T>(g, zero, cut, ctx);
}

// EvalResult-shaped wrappers per the library's public surface
template <class F>
RealEval integrate_semi_infinite(F&& f, double decay_hint, const PrecisionContext& ctx,
                                 int power_hint = 8) {
  auto q = integrate_semi_infinite_t<MPReal>(std::forward<F>(f), decay_hint, ctx, power_hint);
  return RealEval{q.value.rounded_to(ctx.bits()), q.err_log10, "tanh-sinh", q.evaluations};
}

// Fixed-order Gauss-Legendre on the straight complex segment [a, b] with
// adaptive bisection until two depths agree; used for the finite psi
// contour integrals.
template <class F>
QuadOutcome<MPComplex> gauss_segment(F&& f, const MPComplex& a, const MPComplex& b,
                                     const PrecisionContext& ctx) {
  mpfr_prec_t bits = ctx.bits();
  int order = static_cast<int>(24 + ctx.working_digits() / 2);
  order += order % 2;  // even order: every node is strictly off-center
  auto rule = detail::QuadCache::instance().gauss_legendre(bits, order);
  double eps_log10 = -static_cast<double>(ctx.working_digits());
  long evals = 0;

  auto panel = [&](const MPComplex& u, const MPComplex& v) {
    MPComplex mid = (u + v) / 2L;
    MPComplex half = (v - u) / 2L;
    MPComplex acc(0L, bits);
    for (const auto& [x, w] : *rule) {
      acc += (f(mid + half * x) + f(mid - half * x)) * w;
      evals += 2;
    }
    return acc * half;
  };

  std::function<MPComplex(const MPComplex&, const MPComplex&, const MPComplex&, int)> refine =
      [&](const MPComplex& u, const MPComplex& v, const MPComplex& whole, int depth) -> MPComplex {
    MPComplex mid = (u + v) / 2L;
    MPComplex left = panel(u, mid);
    MPComplex right = panel(mid, v);
    MPComplex diff = left + right - whole;
    double dl = abs(diff).log10_abs();
    double scale = std::max(0.0, abs(whole).log10_abs());
    if (dl < eps_log10 + scale) return left + right;
    if (depth >= 12) throw NonConvergence("gauss_segment: panel refinement exhausted");
    return refine(u, mid, left, depth + 1) + refine(mid, v, right, depth + 1);
  };

  MPComplex whole = panel(a, b);
  MPComplex result = refine(a, b, whole, 0);
  double err = abs(whole - result).log10_abs();
  if (err > eps_log10) err = eps_log10;  // refinement met the target
  return {result, err, evals};
}

// series summation with a caller-supplied tail bound:
// stops at the first N with tail_bound(N) < 10^-(digits+guard)
template <class Term, class Tail>
RealEval sum_series(Term&& term, Tail&& tail_bound, long first_index, const PrecisionContext& ctx,
                    long max_terms = 2'000'000) {
  mpfr_prec_t bits = ctx.bits();
  MPReal eps = ctx.eps_working();
  MPReal acc(0L, bits);
  long n = first_index;
  for (; n - first_index < max_terms; ++n) {
    acc += term(n);
    MPReal tb = tail_bound(n);
    if (tb < eps) {
      return RealEval{acc, tb.log10_abs(), "series", n - first_index + 1};
    }
  }
  throw NonConvergence("sum_series: term cap exceeded before tail bound met");
}

}  // namespace barnes
