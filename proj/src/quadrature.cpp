#include "extwhit/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace extwhit {

namespace {

constexpr int kMaxLevel = 15;
constexpr int kMinCheckLevel = 3;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
// Finite-interval nodes stop once the distance to the endpoint (in units of
// the half-length) falls below this; exp-sinh nodes stop at u outside
// [kTiny, 1/kTiny].
constexpr double kTiny = 1e-300;
// Semi-infinite tails are cut after this many consecutive negligible terms.
constexpr int kTailRun = 4;
constexpr double kTailRatio = 1e-20;

// tanh-sinh node at tau >= 0 on [-1, 1]: x = tanh(pi/2 sinh tau), c = 1 - x.
struct TanhNode {
  double x;
  double c;
  double w;
};

// exp-sinh node pair at +tau and -tau: u = exp(+-pi/2 sinh tau).
struct ExpNode {
  double u_pos;
  double w_pos;
  double u_neg;
  double w_neg;
};

// tau values belonging to level k: all integers for k = 0, odd multiples of
// 2^-k afterwards.
template <class Node, class Make>
std::vector<Node> build_level(int level, double tau_max, Make make) {
  std::vector<Node> nodes;
  const double h = std::ldexp(1.0, -level);
  const int start = level == 0 ? 0 : 1;
  const int stride = level == 0 ? 1 : 2;
  for (int j = start;; j += stride) {
    const double tau = j * h;
    if (tau > tau_max) break;
    nodes.push_back(make(tau));
  }
  return nodes;
}

TanhNode make_tanh(double tau) {
  const double v = kHalfPi * std::sinh(tau);
  const double e = std::exp(-2.0 * v);
  const double c = 2.0 * e / (1.0 + e);
  const double ch = std::cosh(tau);
  // sech^2(v) = 4 e / (1 + e)^2
  const double w = kHalfPi * ch * 4.0 * e / ((1.0 + e) * (1.0 + e));
  return {1.0 - c, c, w};
}

ExpNode make_exp(double tau) {
  const double v = kHalfPi * std::sinh(tau);
  const double ch = kHalfPi * std::cosh(tau);
  const double up = std::exp(v);
  const double un = std::exp(-v);
  return {up, ch * up, un, ch * un};
}

double tanh_tau_max() {
  // c ~ 2 exp(-2v) reaches kTiny at v = log(2/kTiny)/2.
  const double v = 0.5 * std::log(2.0 / kTiny);
  return std::asinh(v / kHalfPi);
}

double exp_tau_max() { return std::asinh(-std::log(kTiny) / kHalfPi); }

const std::vector<TanhNode>& tanh_level(int level) {
  static std::array<std::once_flag, kMaxLevel + 1> once;
  static std::array<std::vector<TanhNode>, kMaxLevel + 1> table;
  std::call_once(once[level], [level] { table[level] = build_level<TanhNode>(level, tanh_tau_max(), make_tanh); });
  return table[level];
}

const std::vector<ExpNode>& exp_level(int level) {
  static std::array<std::once_flag, kMaxLevel + 1> once;
  static std::array<std::vector<ExpNode>, kMaxLevel + 1> table;
  std::call_once(once[level], [level] { table[level] = build_level<ExpNode>(level, exp_tau_max(), make_exp); });
  return table[level];
}

// Running sum of weighted terms relative to exp(shift).
class Accumulator {
 public:
  Accumulator(const detail::NodeIntegrand& f, bool log_mode, bool skip_rounded, double lo, double hi)
      : f_(f), log_mode_(log_mode), skip_rounded_(skip_rounded), lo_(lo), hi_(hi) {}

  // Weighted integrand value in units of exp(shift). Rescales `held` sums
  // when the shift moves.
  Complex term(const Abscissa& a, double w, std::array<Complex*, 3> held) {
    if (skip_rounded_ && (a.x <= lo_ || a.x >= hi_)) return 0.0;
    const Complex v = f_(a);
    if (!log_mode_) {
      if (!is_finite(v)) throw NumericalError("integrand returned a non-finite value at x=" + std::to_string(a.x));
      return w * v;
    }
    if (std::isnan(v.real()) || std::isnan(v.imag()) || v.real() == std::numeric_limits<double>::infinity()) {
      throw NumericalError("log-integrand returned a non-finite value at x=" + std::to_string(a.x));
    }
    if (v.real() == -std::numeric_limits<double>::infinity() || w == 0.0) return 0.0;
    const double lw = v.real() + std::log(w);
    if (lw > shift_) {
      const double factor = std::exp(shift_ - lw);
      for (Complex* s : held) {
        if (s != nullptr) *s *= factor;
      }
      shift_ = lw;
    }
    return std::polar(std::exp(lw - shift_), v.imag());
  }

  double shift() const { return log_mode_ ? shift_ : 0.0; }

 private:
  const detail::NodeIntegrand& f_;
  bool log_mode_;
  bool skip_rounded_;
  double lo_;
  double hi_;
  double shift_ = -std::numeric_limits<double>::infinity();
};

// Tail cut for semi-infinite sums.
struct TailGuard {
  int run = 0;
  bool done = false;

  void observe(Complex t, Complex reference) {
    const double ref = std::abs(reference);
    if (ref > 0.0 && std::abs(t) <= kTailRatio * ref) {
      if (++run >= kTailRun) done = true;
    } else {
      run = 0;
    }
  }
};

EvalOutcome finish(Complex value, Complex previous, double shift, bool converged, double h_scale) {
  EvalOutcome r;
  r.value = value * h_scale;
  r.abs_err_estimate = std::abs(value - previous) * h_scale;
  r.converged = converged;
  r.log_scale = std::isfinite(shift) ? shift : 0.0;
  if (!std::isfinite(shift)) {
    r.value = 0.0;
    r.abs_err_estimate = 0.0;
  }
  return normalize(r);
}

bool level_converged(int level, Complex current, Complex previous, double rel_tol) {
  if (level < kMinCheckLevel) return false;
  const double diff = std::abs(current - previous);
  if (current == 0.0 && previous == 0.0) return true;
  return diff <= rel_tol * std::abs(current);
}

EvalOutcome tanh_sinh(const detail::NodeIntegrand& f, const QuadSpec& spec, bool log_mode, bool skip_rounded) {
  const double lo = spec.interval.lo;
  const double hi = spec.interval.hi;
  const double half = 0.5 * (hi - lo);
  Accumulator acc(f, log_mode, skip_rounded, lo, hi);
  Complex prev = 0.0;
  Complex curr = 0.0;
  Complex level_sum = 0.0;
  for (int level = 0; level <= spec.max_level; ++level) {
    level_sum = 0.0;
    const double h = std::ldexp(1.0, -level);
    for (const TanhNode& n : tanh_level(level)) {
      const double near = half * n.c;
      const double far = half * (2.0 - n.c);
      if (n.x == 0.0) {
        level_sum += acc.term({lo + half, half, half}, n.w, {&level_sum, &curr, &prev});
        continue;
      }
      level_sum += acc.term({hi - near, far, near}, n.w, {&level_sum, &curr, &prev});
      level_sum += acc.term({lo + near, near, far}, n.w, {&level_sum, &curr, &prev});
    }
    prev = curr;
    curr = level == 0 ? level_sum : 0.5 * curr + h * level_sum;
    if (level_converged(level, curr, prev, spec.rel_tol)) {
      return finish(curr, prev, acc.shift(), true, half);
    }
  }
  return finish(curr, prev, acc.shift(), false, half);
}

EvalOutcome exp_sinh(const detail::NodeIntegrand& f, const QuadSpec& spec, bool log_mode, bool skip_rounded) {
  const double lo = spec.interval.lo;
  const double inf = std::numeric_limits<double>::infinity();
  Accumulator acc(f, log_mode, skip_rounded, lo, inf);
  Complex prev = 0.0;
  Complex curr = 0.0;
  Complex level_sum = 0.0;
  for (int level = 0; level <= spec.max_level; ++level) {
    level_sum = 0.0;
    const double h = std::ldexp(1.0, -level);
    const auto& nodes = exp_level(level);
    // Reference magnitude for the tail test, in units of the sum at step h.
    auto reference = [&] { return level == 0 ? level_sum : curr / h; };
    TailGuard right;
    TailGuard left;
    for (const ExpNode& n : nodes) {
      if (n.u_pos == 1.0) {
        level_sum += acc.term({lo + 1.0, 1.0, inf}, n.w_pos, {&level_sum, &curr, &prev});
        continue;
      }
      if (!right.done) {
        const Complex t = acc.term({lo + n.u_pos, n.u_pos, inf}, n.w_pos, {&level_sum, &curr, &prev});
        level_sum += t;
        right.observe(t, reference());
      }
      if (!left.done) {
        const Complex t = acc.term({lo + n.u_neg, n.u_neg, inf}, n.w_neg, {&level_sum, &curr, &prev});
        level_sum += t;
        left.observe(t, reference());
      }
      if (right.done && left.done) break;
    }
    prev = curr;
    curr = level == 0 ? level_sum : 0.5 * curr + h * level_sum;
    if (level_converged(level, curr, prev, spec.rel_tol)) {
      return finish(curr, prev, acc.shift(), true, 1.0);
    }
  }
  return finish(curr, prev, acc.shift(), false, 1.0);
}

}  // namespace

void QuadSpec::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("quadrature rel_tol must lie in (0, 1)");
  if (max_level < 3 || max_level > kMaxLevel) throw DomainError("quadrature max_level must lie in [3, 15]");
  switch (interval.kind) {
    case IntervalKind::unit:
      if (interval.lo != 0.0 || interval.hi != 1.0) throw DomainError("unit interval must be (0, 1)");
      break;
    case IntervalKind::affine:
      if (!(interval.hi - interval.lo > 0.0)) throw DomainError("affine interval requires beta - alpha > 0");
      break;
    case IntervalKind::semi_infinite:
      if (!std::isfinite(interval.lo)) throw DomainError("semi-infinite interval needs a finite lower limit");
      break;
  }
}

namespace detail {

EvalOutcome de_integrate(const NodeIntegrand& f, const QuadSpec& spec, bool log_mode, bool skip_rounded) {
  spec.validate();
  if (spec.interval.kind == IntervalKind::semi_infinite) return exp_sinh(f, spec, log_mode, skip_rounded);
  return tanh_sinh(f, spec, log_mode, skip_rounded);
}

}  // namespace detail

}  // namespace extwhit
