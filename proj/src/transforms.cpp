#include "extwhit/transforms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "extwhit/core_special.hpp"

namespace extwhit {

namespace {

constexpr double kTailDrop = 60.0;
constexpr double kMaxLaplaceCut = 1e6;

QuadSpec outer_spec(const TransformControl& ctl) { return QuadSpec{ctl.outer_tol, ctl.max_level, {}}; }
QuadSpec inner_spec(const TransformControl& ctl) { return QuadSpec{ctl.inner_tol, ctl.max_level, {}}; }

// Splits (0, inf) at `split`: tanh-sinh on (0, split), exp-sinh on (split, inf).
template <class LogF>
EvalOutcome split_log_integral(LogF log_f, double split, const TransformControl& ctl) {
  QuadSpec lo = outer_spec(ctl);
  lo.interval = Interval::affine(0.0, split);
  QuadSpec hi = outer_spec(ctl);
  hi.interval = Interval::semi_infinite(split);
  const EvalOutcome left = integrate_log([&](const Abscissa& a) { return log_f(a.from_lo); }, lo);
  const EvalOutcome right = integrate_log([&](const Abscissa& a) { return log_f(a.x); }, hi);
  return left + right;
}

// Crude location of the maximum of Re log_f on a logarithmic grid.
template <class LogF>
double peak_scan(LogF log_f, double lo, double hi, int points) {
  double best_x = lo;
  double best = -std::numeric_limits<double>::infinity();
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double x = lo * std::exp(step * i);
    const double v = log_f(x).real();
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

void require_positive_pair(Complex kappa, Complex mu, const char* what) {
  if (!((mu - kappa + 0.5).real() > 0.0 && (mu + kappa + 0.5).real() > 0.0)) {
    throw DomainError(std::string(what) + " requires Re(mu +- kappa + 1/2) > 0");
  }
}

}  // namespace

EvalOutcome mellin_generic(const std::function<Complex(double)>& f, Complex s, const MellinStrip& strip, double split,
                           const TransformControl& ctl) {
  if (!(s.real() > -strip.small_exponent)) {
    throw DomainError("Mellin integral requires Re(s) > " + std::to_string(-strip.small_exponent) +
                      " (strip of analyticity)");
  }
  if (!(s.real() < strip.large_decay)) {
    throw DomainError("Mellin integral requires Re(s) < " + std::to_string(strip.large_decay) +
                      " (strip of analyticity)");
  }
  if (!(split > 0.0)) throw DomainError("Mellin split point must be positive");
  auto log_f = [&](double x) -> Complex {
    const Complex v = f(x);
    if (v == 0.0) return -std::numeric_limits<double>::infinity();
    return (s - 1.0) * std::log(x) + std::log(v);
  };
  return split_log_integral(log_f, split, ctl);
}

void MellinQuery::validate() const {
  args.validate();
  if (!(nu >= 0.0)) throw DomainError("Mellin transform requires nu >= 0");
  if (!(s.real() > nu)) {
    throw DomainError("requires Re(s) > nu (strip of analyticity); got Re(s)=" + std::to_string(s.real()) +
                      ", nu=" + std::to_string(nu));
  }
  require_positive_pair(args.kappa, args.mu, "Mellin transform");
}

EvalOutcome mellin_lhs(const MellinQuery& q, const TransformControl& ctl) {
  q.validate();
  if (q.args.z == 0.0) return EvalOutcome{};
  const QuadSpec inner = inner_spec(ctl);
  auto log_f = [&](double p) -> Complex {
    const EvalOutcome m = whittaker_ext(q.args, ExtParams{p, q.nu}, Route::definition(), inner);
    if (m.value == 0.0) return -std::numeric_limits<double>::infinity();
    return (q.s - 1.0) * std::log(p) + m.log_value();
  };
  const double split = std::max(0.25 * (q.s.real() - q.nu), 0.125);
  return split_log_integral(log_f, split, ctl);
}

EvalOutcome mellin_rhs(const MellinQuery& q) {
  q.validate();
  const Complex kappa = q.args.kappa;
  const Complex mu = q.args.mu;
  const Complex z = q.args.z;
  const Complex s = q.s;
  if (z == 0.0) return EvalOutcome{};
  const Complex b = mu - kappa + 0.5;
  const Complex bc = mu + kappa + 0.5;
  const Complex log_factor = (s - 1.0) * std::numbers::ln2 + (mu + 0.5) * principal_log(z) - 0.5 * z -
                             0.5 * std::log(std::numbers::pi) - log_beta(b, bc) + log_gamma(0.5 * (s - q.nu)) +
                             log_gamma(0.5 * (s + q.nu + 1.0)) + log_beta(b + s, bc + s);
  const EvalOutcome phi = chf_classic(b + s, 2.0 * mu + 2.0 * s + 1.0, z);
  return phi * from_log(log_factor, 0.0, true);
}

void LaplaceQuery::validate() const {
  if (!(alpha > 0.0 && beta > 0.0)) throw DomainError("Laplace-type integral requires alpha > 0 and beta > 0");
  if (!(2.0 * alpha - beta >= 0.0)) {
    throw DomainError("requires 2alpha - beta >= 0 (so that 0 < chi <= 1)");
  }
  if (!((mu + alpha + 0.5).real() > 0.0)) throw DomainError("requires Re(mu + alpha + 1/2) > 0");
  const WhittakerArgs args{kappa, mu, 1.0};
  args.validate();
  params.validate();
}

EvalOutcome laplace_lhs(const LaplaceQuery& q, const TransformControl& ctl) {
  q.validate();
  const QuadSpec inner = inner_spec(ctl);
  auto log_f = [&](double x) -> Complex {
    const EvalOutcome m = whittaker_ext({q.kappa, q.mu, q.beta * x}, q.params, Route::definition(), inner);
    if (m.value == 0.0) return -std::numeric_limits<double>::infinity();
    return (q.alpha - 1.0) * std::log(x) - q.alpha * x + m.log_value();
  };
  const double split = peak_scan(log_f, 1e-2, 1e4, 25);
  // At chi = 1 the integrand decays only like exp(-2 sqrt(p beta x)), so the
  // exp-sinh tail would reach arguments where M itself is unreliable. The
  // range is cut where the integrand is kTailDrop below its peak instead.
  const double peak = log_f(split).real();
  double cut = 2.0 * split;
  bool reached = false;
  while (cut < kMaxLaplaceCut) {
    if (log_f(cut).real() < peak - kTailDrop) {
      reached = true;
      break;
    }
    cut *= 2.0;
  }
  QuadSpec lo = outer_spec(ctl);
  lo.interval = Interval::affine(0.0, split);
  QuadSpec hi = outer_spec(ctl);
  hi.interval = Interval::affine(split, cut);
  const EvalOutcome left = integrate_log([&](const Abscissa& a) { return log_f(a.from_lo); }, lo);
  EvalOutcome right = integrate_log([&](const Abscissa& a) { return log_f(a.x); }, hi);
  right.converged = right.converged && reached;
  return left + right;
}

EvalOutcome laplace_rhs(const LaplaceQuery& q, const QuadSpec& quad) {
  q.validate();
  const double chi = q.chi();
  const Complex a = q.mu + q.alpha + 0.5;
  const Complex b = q.mu - q.kappa + 0.5;
  const Complex c = 2.0 * q.mu + 1.0;
  EvalOutcome gauss;
  if (chi == 1.0) {
    gauss = ext_beta_pnu(b, c - a - b, q.params, quad) * from_log(-log_beta(b, c - b), 0.0, true);
  } else {
    gauss = ext_gauss_pnu(a, b, c, chi, q.params, ChfRoute::integral, quad);
  }
  const Complex log_factor = -q.alpha * std::log(q.beta) + log_gamma(a) + a * std::log(chi);
  return gauss * from_log(log_factor, 0.0, true);
}

EvalOutcome corollary_rhs(double alpha, Complex kappa, Complex mu, const ExtParams& params, const QuadSpec& quad) {
  const LaplaceQuery q{alpha, 2.0 * alpha, kappa, mu, params};
  q.validate();
  const Complex a = mu + alpha + 0.5;
  const Complex b = mu - kappa + 0.5;
  const EvalOutcome bp = ext_beta_pnu(b, kappa - alpha, params, quad);
  const Complex log_factor = log_gamma(a) - alpha * std::log(2.0 * alpha) - log_beta(b, mu + kappa + 0.5);
  return bp * from_log(log_factor, 0.0, true);
}

}  // namespace extwhit
