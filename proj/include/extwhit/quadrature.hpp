#pragma once

#include <concepts>
#include <functional>
#include <limits>
#include <utility>

#include "extwhit/types.hpp"

namespace extwhit {

enum class IntervalKind { unit, affine, semi_infinite };

// Integration domain: (0,1), (lo,hi) with hi > lo, or (lo, inf).
struct Interval {
  IntervalKind kind = IntervalKind::unit;
  double lo = 0.0;
  double hi = 1.0;

  static Interval unit() { return {}; }
  static Interval affine(double lo, double hi) { return {IntervalKind::affine, lo, hi}; }
  static Interval semi_infinite(double lo = 0.0) {
    return {IntervalKind::semi_infinite, lo, std::numeric_limits<double>::infinity()};
  }
};

struct QuadSpec {
  double rel_tol = 1e-12;
  int max_level = 12;
  Interval interval{};

  // Throws DomainError unless 0 < rel_tol < 1, 3 <= max_level <= 15 and the
  // interval is non-degenerate.
  void validate() const;
};

// A quadrature node together with its distances to both interval ends,
// computed without cancellation. to_hi is +inf on semi-infinite intervals.
struct Abscissa {
  double x;
  double from_lo;
  double to_hi;
};

namespace detail {

using NodeIntegrand = std::function<Complex(const Abscissa&)>;

// Double-exponential driver. When log_mode is set the integrand returns the
// complex log of its value and the sum is accumulated relative to a running
// maximum exponent, which ends up in the result's log_scale.
// Integrands that only see x cannot tell a node rounded onto an endpoint
// from the endpoint itself; such nodes are skipped when skip_rounded is set.
EvalOutcome de_integrate(const NodeIntegrand& f, const QuadSpec& spec, bool log_mode, bool skip_rounded);

template <class F>
constexpr bool takes_abscissa = std::invocable<F&, const Abscissa&>;

template <class F>
NodeIntegrand adapt(F&& f) {
  if constexpr (takes_abscissa<F>) {
    return [&f](const Abscissa& a) { return Complex(f(a)); };
  } else {
    return [&f](const Abscissa& a) { return Complex(f(a.x)); };
  }
}

}  // namespace detail

// Tanh-sinh over finite intervals, exp-sinh over (lo, inf). The level-k rule
// uses step 2^-k; abs_err_estimate is the difference between the last two
// levels and converged is set once it drops below rel_tol * |value|.
// f may take a double or an Abscissa. Endpoints are never evaluated.
template <class F>
EvalOutcome integrate(F&& f, const QuadSpec& spec) {
  return detail::de_integrate(detail::adapt(f), spec, false, !detail::takes_abscissa<F>);
}

template <class F>
EvalOutcome integrate_semi_infinite(F&& f, QuadSpec spec) {
  if (spec.interval.kind != IntervalKind::semi_infinite) spec.interval = Interval::semi_infinite();
  return detail::de_integrate(detail::adapt(f), spec, false, !detail::takes_abscissa<F>);
}

// Same as integrate, but f returns log(integrand). The result carries the
// dominant exponent in log_scale, so integrands far outside the binary64
// range are handled.
template <class F>
EvalOutcome integrate_log(F&& log_f, const QuadSpec& spec) {
  return detail::de_integrate(detail::adapt(log_f), spec, true, !detail::takes_abscissa<F>);
}

}  // namespace extwhit
