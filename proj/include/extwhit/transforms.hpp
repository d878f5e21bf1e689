#pragma once

#include <functional>
#include <limits>

#include "extwhit/whittaker.hpp"

namespace extwhit {

// Tolerances for the nested transform integrals. The inner Whittaker
// quadrature runs at inner_tol; the outer one at outer_tol.
struct TransformControl {
  double outer_tol = 1e-9;
  double inner_tol = 1e-11;
  int max_level = 12;
};

// f(x) = O(x^{small_exponent}) as x -> 0 and O(x^{-large_decay}) as x -> inf
// (large_decay = inf for exponential decay). The Mellin integral converges
// for -small_exponent < Re(s) < large_decay.
struct MellinStrip {
  double small_exponent = 0.0;
  double large_decay = std::numeric_limits<double>::infinity();
};

// int_0^inf x^{s-1} f(x) dx, split at `split` into a tanh-sinh and an
// exp-sinh piece.
EvalOutcome mellin_generic(const std::function<Complex(double)>& f, Complex s, const MellinStrip& strip,
                           double split = 1.0, const TransformControl& ctl = {});

struct MellinQuery {
  Complex s;
  WhittakerArgs args;
  double nu = 0.0;

  void validate() const;
};

// int_0^inf p^{s-1} M^{(p,nu)}_{kappa,mu}(z) dp.
EvalOutcome mellin_lhs(const MellinQuery& q, const TransformControl& ctl = {});

// 2^{s-1} z^{mu+1/2} e^{-z/2} / (sqrt(pi) B(mu-kappa+1/2, mu+kappa+1/2))
//   Gamma((s-nu)/2) Gamma((s+nu+1)/2) B(mu-kappa+s+1/2, mu+kappa+s+1/2)
//   Phi(mu-kappa+s+1/2; 2mu+2s+1; z).
EvalOutcome mellin_rhs(const MellinQuery& q);

struct LaplaceQuery {
  double alpha = 1.0;
  double beta = 1.0;
  Complex kappa = 0.0;
  Complex mu = 0.0;
  ExtParams params;

  double chi() const { return 2.0 * beta / (2.0 * alpha + beta); }
  void validate() const;
};

// int_0^inf x^{alpha-1} e^{-alpha x} M^{(p,nu)}_{kappa,mu}(beta x) dx.
EvalOutcome laplace_lhs(const LaplaceQuery& q, const TransformControl& ctl = {});

// beta^{-alpha} Gamma(mu+alpha+1/2) chi^{mu+alpha+1/2} F_{p,nu}(mu+alpha+1/2, mu-kappa+1/2; 2mu+1; chi).
// At chi = 1 the Gauss function is evaluated through B_{p,nu}.
EvalOutcome laplace_rhs(const LaplaceQuery& q, const QuadSpec& quad = default_quad());

// Gamma(mu+alpha+1/2) / (2alpha)^alpha B_{p,nu}(mu-kappa+1/2, kappa-alpha)
//   / B(mu-kappa+1/2, mu+kappa+1/2).
EvalOutcome corollary_rhs(double alpha, Complex kappa, Complex mu, const ExtParams& params,
                          const QuadSpec& quad = default_quad());

}  // namespace extwhit
