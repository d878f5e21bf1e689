#pragma once

#include "extwhit/types.hpp"

namespace extwhit {

// Series controls for the hypergeometric Maclaurin sums. Summation stops
// once three consecutive terms satisfy |term| < tol * |partial sum|.
struct SeriesControl {
  double tol = 1e-15;
  int max_terms = 10000;
};

// Principal branch of log Gamma(z). Lanczos (g = 607/128) for Re z >= 1/2,
// upward recursion with principal logs elsewhere. Throws PoleError at
// z = 0, -1, -2, ...
Complex log_gamma(Complex z);

// Gamma(x) Gamma(y) / Gamma(x + y).
Complex beta(Complex x, Complex y);

// Rising factorial a (a+1) ... (a+n-1); (a)_0 = 1.
Complex pochhammer(Complex a, int n);

// Kummer's function Phi(b; c; z) = 1F1(b; c; z) by its Maclaurin series.
EvalOutcome chf_classic(Complex b, Complex c, Complex z, SeriesControl ctl = {});

// Gauss F(a, b; c; z) for |z| < 1 by its Maclaurin series.
EvalOutcome gauss_classic(Complex a, Complex b, Complex c, Complex z, SeriesControl ctl = {});

// Whittaker M_{kappa,mu}(z) = z^{mu+1/2} e^{-z/2} Phi(mu - kappa + 1/2; 2mu + 1; z)
// with the principal power, -pi < arg z <= pi.
EvalOutcome whittaker_classic(Complex kappa, Complex mu, Complex z, SeriesControl ctl = {});

// Principal log with arg in (-pi, pi]; a negative zero imaginary part is
// treated as +0.
Complex principal_log(Complex z);

// Principal z^a = exp(a log z); 0^a = 0 for Re a > 0.
Complex principal_pow(Complex z, Complex a);

}  // namespace extwhit
