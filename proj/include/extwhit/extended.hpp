#pragma once

#include "extwhit/quadrature.hpp"
#include "extwhit/types.hpp"

namespace extwhit {

// Extension pair (p, nu). Either Re(p) > 0 and nu >= 0, or p = nu = 0 (the
// classical functions).
struct ExtParams {
  Complex p = 0.0;
  double nu = 0.0;

  void validate() const;
  bool classical() const { return p == 0.0 && nu == 0.0; }
};

// sqrt(2p/pi) K_{nu+1/2}(p/s) as a function of the geometric factor s > 0,
// evaluated in log form. At p = 0 (nu = 0) this is the limit sqrt(s).
// Complex p is supported for integer nu only (finite closed form).
class BesselKernel {
 public:
  explicit BesselKernel(const ExtParams& params);

  Complex log_scaled_k(double s) const;
  // log of G(s) = s^{-1/2} sqrt(2p/pi) K_{nu+1/2}(p/s); G -> exp(-p/s) for nu = 0.
  Complex log_weight(double s) const { return log_scaled_k(s) - 0.5 * std::log(s); }

  const ExtParams& params() const { return params_; }

 private:
  ExtParams params_;
  double rho_;
  int half_index_;
  Complex log_norm_;
};

enum class ChfRoute { integral, series };

// Quadrature controls for the extended functions; the interval is ignored.
inline QuadSpec default_quad() { return QuadSpec{}; }

// Series truncation for the B_{p,nu}-weighted Maclaurin sums.
struct ExtSeriesControl {
  double tol = 1e-14;
  int max_terms = 200;
};

// B(x, y; p) = int_0^1 t^{x-1} (1-t)^{y-1} exp(-p / (t(1-t))) dt.
EvalOutcome ext_beta_p(Complex x, Complex y, Complex p, const QuadSpec& quad = default_quad());

// B_{p,nu}(x, y) = sqrt(2p/pi) int_0^1 t^{x-3/2} (1-t)^{y-3/2} K_{nu+1/2}(p/(t(1-t))) dt.
EvalOutcome ext_beta_pnu(Complex x, Complex y, const ExtParams& params, const QuadSpec& quad = default_quad());

// Phi_p(b; c; z): exp(zt - p/(t(1-t))) weighted Beta integral over B(b, c-b).
EvalOutcome ext_chf_p(Complex b, Complex c, Complex z, Complex p, const QuadSpec& quad = default_quad());

// Phi_{p,nu}(b; c; z) by its integral representation or its B_{p,nu} series.
EvalOutcome ext_chf_pnu(Complex b, Complex c, Complex z, const ExtParams& params,
                        ChfRoute route = ChfRoute::integral, const QuadSpec& quad = default_quad(),
                        ExtSeriesControl series = {});

// n-th z-derivative of Phi_{p,nu}(b; c; z): (b)_n/(c)_n Phi_{p,nu}(b+n; c+n; z).
EvalOutcome ext_chf_pnu_deriv(Complex b, Complex c, Complex z, const ExtParams& params, int n,
                              const QuadSpec& quad = default_quad());

// F_{p,nu}(a, b; c; z). The integral route accepts any z off the cut
// [1, inf) plus z = 1 when p > 0; the series route needs |z| < 1.
EvalOutcome ext_gauss_pnu(Complex a, Complex b, Complex c, Complex z, const ExtParams& params,
                          ChfRoute route = ChfRoute::integral, const QuadSpec& quad = default_quad(),
                          ExtSeriesControl series = {});

// log B(x, y) via log-gamma.
Complex log_beta(Complex x, Complex y);

namespace detail {

// int_0^1 t^{x-1} (1-t)^{y-1} exp(extra(t, 1-t)) G(t(1-t)) dt in log-scaled form.
template <class Extra>
EvalOutcome kernel_integral(Complex x, Complex y, const BesselKernel& kernel, Extra extra, QuadSpec quad);

}  // namespace detail

}  // namespace extwhit

#include "extwhit/detail/kernel_integral.hpp"
