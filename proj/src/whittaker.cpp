#include "extwhit/whittaker.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "extwhit/core_special.hpp"

namespace extwhit {

namespace {

constexpr double kLn2 = std::numbers::ln2;

EvalOutcome times_exp(const EvalOutcome& r, Complex log_factor) { return r * from_log(log_factor, 0.0, true); }

// z^{mu+1/2} e^{-z/2}; zero at z = 0 when Re(mu+1/2) > 0.
Complex log_prefactor(const WhittakerArgs& a) { return (a.mu + 0.5) * principal_log(a.z) - 0.5 * a.z; }

bool vanishes_at_origin(const WhittakerArgs& a) {
  if (a.z != 0.0) return false;
  if (!((a.mu + 0.5).real() > 0.0)) throw DomainError("M at z = 0 requires Re(mu + 1/2) > 0");
  return true;
}

void require_real_params(const ExtParams& params, const char* what) {
  if (params.p.imag() != 0.0) throw DomainError(std::string(what) + " requires real p");
}

// The Beta-type integral of one representation, in log-scaled form. The
// prefactor z^{mu+1/2} / B(mu-kappa+1/2, mu+kappa+1/2) is applied by the caller.
EvalOutcome route_integral(const WhittakerArgs& a, const BesselKernel& kernel, Route route, QuadSpec quad) {
  const Complex ea = a.mu - a.kappa - 1.0;
  const Complex eb = a.mu + a.kappa - 1.0;
  const Complex z = a.z;
  switch (route.kind) {
    case RouteKind::unit: {
      quad.interval = Interval::unit();
      auto log_f = [&](const Abscissa& x) -> Complex {
        const double t = x.from_lo;
        const double tc = x.to_hi;
        return ea * std::log(t) + eb * std::log(tc) + z * (t - 0.5) + kernel.log_scaled_k(t * tc);
      };
      return integrate_log(log_f, quad);
    }
    case RouteKind::affine:
    case RouteKind::symmetric: {
      const double lo = route.kind == RouteKind::symmetric ? -1.0 : route.alpha;
      const double hi = route.kind == RouteKind::symmetric ? 1.0 : route.beta;
      quad.interval = Interval::affine(lo, hi);
      quad.validate();
      const double len = hi - lo;
      auto log_f = [&](const Abscissa& x) -> Complex {
        const double l = x.from_lo;
        const double r = x.to_hi;
        return ea * std::log(l) + eb * std::log(r) + z * (l / len - 0.5) + kernel.log_scaled_k((l / len) * (r / len));
      };
      EvalOutcome r = integrate_log(log_f, quad);
      return times_exp(r, (1.0 - 2.0 * a.mu) * std::log(len));
    }
    case RouteKind::semi_infinite: {
      quad.interval = Interval::semi_infinite();
      auto log_f = [&](const Abscissa& x) -> Complex {
        const double u = x.from_lo;
        const double v = 1.0 + u;
        const double t = u / v;
        return ea * std::log(u) - 2.0 * a.mu * std::log1p(u) + z * (t - 0.5) + kernel.log_scaled_k(t / v);
      };
      return integrate_log(log_f, quad);
    }
    case RouteKind::definition:
      break;
  }
  throw Error("route_integral: unexpected route");
}

}  // namespace

void WhittakerArgs::validate() const {
  const Complex twice = 2.0 * mu;
  if (std::abs(twice.imag()) <= 1e-12 && twice.real() < 0.0 &&
      std::abs(twice.real() - std::round(twice.real())) <= 1e-12) {
    throw DomainError("requires 2mu != -1, -2, ... (got mu=" + to_string(mu) + ")");
  }
  if (!is_finite(kappa) || !is_finite(mu) || !is_finite(z)) throw DomainError("non-finite Whittaker argument");
}

const char* route_name(RouteKind kind) {
  switch (kind) {
    case RouteKind::definition:
      return "definition";
    case RouteKind::unit:
      return "integral_unit";
    case RouteKind::affine:
      return "integral_affine";
    case RouteKind::semi_infinite:
      return "integral_semi_infinite";
    case RouteKind::symmetric:
      return "integral_symmetric";
  }
  return "?";
}

EvalOutcome whittaker_ext(const WhittakerArgs& args, const ExtParams& params, Route route, const QuadSpec& quad) {
  args.validate();
  params.validate();
  const Complex b = args.mu - args.kappa + 0.5;
  const Complex c = 2.0 * args.mu + 1.0;
  if (params.classical()) detail::require_classical_exponents(b, c - b);
  if (vanishes_at_origin(args)) return EvalOutcome{};
  if (route.kind == RouteKind::definition) {
    if (params.classical()) return times_exp(chf_classic(b, c, args.z), log_prefactor(args));
    return times_exp(ext_chf_pnu(b, c, args.z, params, ChfRoute::integral, quad), log_prefactor(args));
  }
  const BesselKernel kernel(params);
  const EvalOutcome integral = route_integral(args, kernel, route, quad);
  return times_exp(integral, (args.mu + 0.5) * principal_log(args.z) - log_beta(b, c - b));
}

EvalOutcome whittaker_ext_nu0(const WhittakerArgs& args, Complex p, const QuadSpec& quad) {
  args.validate();
  const ExtParams params{p, 0.0};
  params.validate();
  const Complex b = args.mu - args.kappa + 0.5;
  const Complex c = 2.0 * args.mu + 1.0;
  if (params.classical()) detail::require_classical_exponents(b, c - b);
  if (vanishes_at_origin(args)) return EvalOutcome{};
  const Complex ea = b - 1.0;
  const Complex eb = c - b - 1.0;
  const Complex z = args.z;
  QuadSpec q = quad;
  q.interval = Interval::affine(-1.0, 1.0);
  auto log_f = [&](const Abscissa& x) -> Complex {
    const double l = x.from_lo;
    const double r = x.to_hi;
    return ea * std::log(l) + eb * std::log(r) + 0.5 * z * x.x - 4.0 * p / (l * r);
  };
  const EvalOutcome integral = integrate_log(log_f, q);
  return times_exp(integral, -2.0 * args.mu * kLn2 + (args.mu + 0.5) * principal_log(z) - log_beta(b, c - b));
}

EvalOutcome whittaker_diff_formula(const WhittakerArgs& args, const ExtParams& params, int n, const QuadSpec& quad) {
  if (n < 0) throw DomainError("derivative order must be nonnegative");
  args.validate();
  const Complex b = args.mu - args.kappa + 0.5;
  const Complex c = 2.0 * args.mu + 1.0;
  if (is_nonpositive_integer(c + double(n), 1e-12)) throw PoleError("requires 2mu + n + 1 away from 0, -1, -2, ...");
  if (args.z == 0.0) throw DomainError("differentiation formula needs z != 0 (negative powers of z)");
  const WhittakerArgs shifted{args.kappa - 0.5 * n, args.mu + 0.5 * n, args.z};
  const EvalOutcome m = whittaker_ext(shifted, params, Route::definition(), quad);
  const Complex ratio = pochhammer(b, n) / pochhammer(c, n);
  const Complex log_factor = -(args.mu + 0.5 + 0.5 * n) * principal_log(args.z) + 0.5 * args.z;
  return times_exp(m, log_factor) * ratio;
}

EvalOutcome whittaker_summation(const WhittakerArgs& args, Complex p, int n, const QuadSpec& quad) {
  if (n < 0) throw DomainError("summation formula needs a nonnegative integer nu");
  args.validate();
  if (!(p.real() > 0.0)) throw DomainError("summation formula requires Re(p) > 0");
  if (vanishes_at_origin(args)) return EvalOutcome{};
  const Complex b = args.mu - args.kappa + 0.5;
  const Complex bc = args.mu + args.kappa + 0.5;
  const Complex c = 2.0 * args.mu + 1.0;
  EvalOutcome sum;
  double a_k = 1.0;
  Complex inv_2p_k = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      a_k *= double(n + k) * double(n - k + 1) / double(k);
      inv_2p_k /= 2.0 * p;
    }
    const Complex coef = a_k * inv_2p_k * pochhammer(b, k) * pochhammer(bc, k) / pochhammer(c, 2 * k);
    if (coef == 0.0) continue;
    sum = sum + ext_chf_p(b + double(k), c + 2.0 * k, args.z, p, quad) * coef;
  }
  return times_exp(sum, log_prefactor(args));
}

KummerResidual whittaker_kummer_transform_check(const WhittakerArgs& args, const ExtParams& params,
                                                const QuadSpec& quad) {
  args.validate();
  if (args.z == 0.0) throw DomainError("transformation check needs z != 0");
  const Complex neg_z = -args.z;
  const Complex power = -(args.mu + 0.5);
  const EvalOutcome left = times_exp(whittaker_ext(args, params, Route::definition(), quad), power * principal_log(args.z));
  const WhittakerArgs reflected{-args.kappa, args.mu, neg_z};
  const EvalOutcome right =
      times_exp(whittaker_ext(reflected, params, Route::definition(), quad), power * principal_log(neg_z));
  KummerResidual r;
  r.lhs = left.unscaled();
  r.rhs = right.unscaled();
  r.relative = rel_diff(right, left);
  r.residual = r.relative * std::abs(r.lhs);
  r.converged = left.converged && right.converged;
  return r;
}

AsymptoticForm asymptotic_form(double kappa, double mu, double p) {
  if (!(p > 0.0)) throw DomainError("asymptotic law requires p > 0");
  if (!(mu - kappa + 0.5 > 0.0 && mu + kappa + 0.5 > 0.0)) {
    throw DomainError("asymptotic law requires mu - kappa + 1/2 > 0 and mu + kappa + 1/2 > 0");
  }
  AsymptoticForm f;
  const double log_a = 0.5 * std::log(std::numbers::pi) - p + 0.5 * (mu + kappa) * std::log(p) -
                       log_beta(mu - kappa + 0.5, mu + kappa + 0.5).real();
  f.amplitude = std::exp(log_a);
  f.power_exponent = 0.5 * (mu - kappa);
  f.sqrt_rate = -2.0 * std::sqrt(p);
  return f;
}

double log_asymptotic_leading(double kappa, double mu, double p, double x) {
  if (!(x > 0.0)) throw DomainError("asymptotic law requires x > 0");
  const AsymptoticForm f = asymptotic_form(kappa, mu, p);
  return std::log(f.amplitude) + f.power_exponent.real() * std::log(x) + f.linear_rate * x +
         f.sqrt_rate * std::sqrt(x);
}

double asymptotic_leading(double kappa, double mu, double p, double x) {
  return std::exp(log_asymptotic_leading(kappa, mu, p, x));
}

BoundReport whittaker_upper_bound(const WhittakerArgs& args, const ExtParams& params, const QuadSpec& quad) {
  args.validate();
  params.validate();
  const double nu = params.nu;
  if (!(nu > 0.0)) throw DomainError("upper bound requires nu > 0");
  if (args.kappa.imag() != 0.0 || args.mu.imag() != 0.0) throw DomainError("upper bound requires real kappa, mu");
  const double kappa = args.kappa.real();
  const double mu = args.mu.real();
  if (!(mu - kappa + 0.5 > 0.0 && mu + kappa + 0.5 > 0.0)) {
    throw DomainError("upper bound requires mu - kappa + 1/2 > 0 and mu + kappa + 1/2 > 0");
  }
  const Complex p = params.p;
  const double re_p = p.real();
  const double log_c = nu * kLn2 + (nu + 1.0) * std::log(std::abs(p)) + std::lgamma(nu + 0.5) -
                       0.5 * std::log(std::numbers::pi) - (2.0 * nu + 1.0) * std::log(re_p);
  const double x = args.z.real();
  const EvalOutcome phi = chf_classic(mu - kappa + nu + 0.5, 2.0 * mu + 2.0 * nu + 1.0, x);
  const double log_rest = (mu + 0.5) * std::log(std::abs(args.z)) - 0.5 * x +
                          log_beta(mu - kappa + nu + 0.5, mu + kappa + nu + 0.5).real() -
                          log_beta(mu - kappa + 0.5, mu + kappa + 0.5).real();
  const EvalOutcome m = whittaker_ext(args, params, Route::definition(), quad);
  BoundReport r;
  r.bound_value = std::exp(log_c + log_rest) * std::abs(phi.value);
  r.function_abs = std::abs(m.unscaled());
  r.satisfied = r.function_abs < r.bound_value;
  r.margin = std::abs(r.bound_value - r.function_abs);
  r.converged = m.converged && phi.converged;
  return r;
}

BoundReport whittaker_lower_bound(double kappa, double mu, double x, const ExtParams& params, int n,
                                  const QuadSpec& quad) {
  params.validate();
  require_real_params(params, "lower bound");
  if (!(params.p.real() > 0.0)) throw DomainError("lower bound requires p > 0");
  if (!(x > 0.0)) throw DomainError("lower bound requires x > 0");
  if (n < 0) throw DomainError("lower bound needs a nonnegative truncation index");
  if (!(mu - kappa + 0.5 > 0.0 && mu + kappa + 0.5 > 0.0)) {
    throw DomainError("lower bound requires mu - kappa + 1/2 > 0 and mu + kappa + 1/2 > 0");
  }
  const double b = mu - kappa + 0.5;
  const double bc = mu + kappa + 0.5;
  const double log_norm = (mu + 0.5) * std::log(x) - 0.5 * x - log_beta(b, bc).real();
  EvalOutcome sum;
  bool converged = true;
  for (int j = 0; j <= n; ++j) {
    const EvalOutcome bj = ext_beta_pnu(b + j, bc, params, quad);
    converged = converged && bj.converged;
    sum = sum + times_exp(bj, j * std::log(x) - std::lgamma(j + 1.0));
  }
  const WhittakerArgs args{kappa, mu, x};
  const EvalOutcome m = whittaker_ext(args, params, Route::definition(), quad);
  BoundReport r;
  r.bound_value = times_exp(sum, log_norm).unscaled().real();
  r.function_abs = std::abs(m.unscaled());
  r.satisfied = m.unscaled().real() > r.bound_value;
  r.margin = std::abs(r.function_abs - r.bound_value);
  r.converged = converged && m.converged;
  return r;
}

}  // namespace extwhit
