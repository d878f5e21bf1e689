#pragma once

#include "extwhit/extended.hpp"

namespace extwhit {

// (kappa, mu, z) with 2mu away from -1, -2, ... and the principal branch of z.
struct WhittakerArgs {
  Complex kappa = 0.0;
  Complex mu = 0.0;
  Complex z = 0.0;

  void validate() const;
};

enum class RouteKind { definition, unit, affine, semi_infinite, symmetric };

struct Route {
  RouteKind kind = RouteKind::definition;
  double alpha = -1.0;
  double beta = 1.0;

  static Route definition() { return {}; }
  static Route unit() { return {RouteKind::unit}; }
  static Route affine(double alpha, double beta) { return {RouteKind::affine, alpha, beta}; }
  static Route semi_infinite() { return {RouteKind::semi_infinite}; }
  static Route symmetric() { return {RouteKind::symmetric}; }
};

const char* route_name(RouteKind kind);

// M^{(p,nu)}_{kappa,mu}(z) = z^{mu+1/2} e^{-z/2} Phi_{p,nu}(mu-kappa+1/2; 2mu+1; z),
// or one of its Beta-type integral representations.
EvalOutcome whittaker_ext(const WhittakerArgs& args, const ExtParams& params, Route route = Route::definition(),
                          const QuadSpec& quad = default_quad());

// nu = 0 form over (-1, 1) with the exponential kernel exp(zu/2 - 4p/(1-u^2)).
EvalOutcome whittaker_ext_nu0(const WhittakerArgs& args, Complex p, const QuadSpec& quad = default_quad());

// (mu-kappa+1/2)_n / (2mu+1)_n z^{-mu-1/2-n/2} e^{z/2} M_{kappa-n/2, mu+n/2}(z),
// the n-th derivative of z^{-mu-1/2} e^{z/2} M_{kappa,mu}(z).
EvalOutcome whittaker_diff_formula(const WhittakerArgs& args, const ExtParams& params, int n,
                                   const QuadSpec& quad = default_quad());

// M^{(p,n)} as a finite sum of p-extended Kummer functions (integer nu = n).
EvalOutcome whittaker_summation(const WhittakerArgs& args, Complex p, int n, const QuadSpec& quad = default_quad());

// z^{-mu-1/2} M_{kappa,mu}(z) against (-z)^{-mu-1/2} M_{-kappa,mu}(-z).
struct KummerResidual {
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
  double relative = 0.0;
  bool converged = true;
};

KummerResidual whittaker_kummer_transform_check(const WhittakerArgs& args, const ExtParams& params,
                                                const QuadSpec& quad = default_quad());

// A x^{(mu-kappa)/2} exp(x/2 - 2 sqrt(p x)).
struct AsymptoticForm {
  double amplitude = 0.0;
  Complex power_exponent;
  double linear_rate = 0.5;
  double sqrt_rate = 0.0;
};

AsymptoticForm asymptotic_form(double kappa, double mu, double p);
double log_asymptotic_leading(double kappa, double mu, double p, double x);
// May overflow to inf for large x; use the log form there.
double asymptotic_leading(double kappa, double mu, double p, double x);

struct BoundReport {
  double bound_value = 0.0;
  double function_abs = 0.0;
  bool satisfied = false;
  double margin = 0.0;
  bool converged = true;
};

// |M^{(p,nu)}_{kappa,mu}(z)| < C |z|^{mu+1/2} e^{-Re z/2} B(mu-kappa+nu+1/2, mu+kappa+nu+1/2)
//   / B(mu-kappa+1/2, mu+kappa+1/2) Phi(mu-kappa+nu+1/2; 2mu+2nu+1; Re z),
// C = 2^nu |p|^{nu+1} Gamma(nu+1/2) / (sqrt(pi) (Re p)^{2nu+1}).
BoundReport whittaker_upper_bound(const WhittakerArgs& args, const ExtParams& params,
                                  const QuadSpec& quad = default_quad());

// M^{(p,nu)}_{kappa,mu}(x) > x^{mu+1/2} e^{-x/2} sum_{j<=n} x^j/j! B_{p,nu}(mu-kappa+j+1/2, mu+kappa+1/2)
//   / B(mu-kappa+1/2, mu+kappa+1/2).
BoundReport whittaker_lower_bound(double kappa, double mu, double x, const ExtParams& params, int n,
                                  const QuadSpec& quad = default_quad());

}  // namespace extwhit
