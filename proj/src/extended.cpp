#include "extwhit/extended.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "extwhit/bessel_k.hpp"
#include "extwhit/core_special.hpp"

namespace extwhit {

void ExtParams::validate() const {
  if (!(nu >= 0.0)) throw DomainError("extension requires nu >= 0 (got nu=" + std::to_string(nu) + ")");
  if (p == 0.0) {
    if (nu != 0.0) throw DomainError("p = 0 is only admissible together with nu = 0 (p=nu=0)");
    return;
  }
  if (!(p.real() > 0.0)) throw DomainError("extension requires Re(p) > 0 (got p=" + to_string(p) + ")");
}

BesselKernel::BesselKernel(const ExtParams& params) : params_(params), rho_(params.nu + 0.5), half_index_(-1) {
  params_.validate();
  const BesselOrder order(rho_);
  half_index_ = order.half_index();
  if (params_.p.imag() != 0.0 && half_index_ < 0) {
    throw CapabilityError("complex p is supported only for integer nu (got nu=" + std::to_string(params_.nu) + ")");
  }
  if (params_.p != 0.0) log_norm_ = 0.5 * std::log(2.0 * params_.p / std::numbers::pi);
}

Complex BesselKernel::log_scaled_k(double s) const {
  const Complex p = params_.p;
  if (p == 0.0) return 0.5 * std::log(s);
  const Complex zeta = p / s;
  if (!std::isfinite(zeta.real())) return -std::numeric_limits<double>::infinity();
  if (half_index_ >= 0) {
    // sqrt(2p/pi) sqrt(pi/(2 zeta)) = sqrt(s) on the principal branches.
    return 0.5 * std::log(s) - zeta + std::log(half_integer_ratio(half_index_, zeta));
  }
  const double z = zeta.real();
  return log_norm_ + log_k_scaled(rho_, z) - z;
}

Complex log_beta(Complex x, Complex y) {
  if (is_nonpositive_integer(x) || is_nonpositive_integer(y) || is_nonpositive_integer(x + y)) {
    throw PoleError("B(x,y) normalisation is singular (x=" + to_string(x) + ", y=" + to_string(y) + ")");
  }
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

namespace detail {

void require_classical_exponents(Complex x, Complex y) {
  if (!(x.real() > 0.0 && y.real() > 0.0)) {
    throw DomainError("p = nu = 0 requires Re(c) > Re(b) > 0, i.e. positive real parts of both Beta exponents (got " +
                      to_string(x) + ", " + to_string(y) + ")");
  }
}

}  // namespace detail

namespace {

void require_p(Complex p) {
  if (p == 0.0) return;
  if (!(p.real() > 0.0)) throw DomainError("extension requires Re(p) > 0 (got p=" + to_string(p) + ")");
}

EvalOutcome chaudhry_integral(Complex x, Complex y, Complex z, Complex p, QuadSpec quad) {
  require_p(p);
  if (p == 0.0) detail::require_classical_exponents(x, y);
  quad.interval = Interval::unit();
  const Complex xm = x - 1.0;
  const Complex ym = y - 1.0;
  auto log_f = [&](const Abscissa& a) -> Complex {
    const double t = a.from_lo;
    const double tc = a.to_hi;
    return xm * std::log(t) + ym * std::log(tc) + z * t - p / (t * tc);
  };
  return integrate_log(log_f, quad);
}

EvalOutcome inverse_beta(Complex b, Complex c) { return from_log(-log_beta(b, c - b), 0.0, true); }

// 1 - z t without cancellation near t = 1.
Complex one_minus_zt(Complex z, double t, double tc) { return t < 0.5 ? 1.0 - z * t : (1.0 - z) + z * tc; }

// sum_n coef_n B_{p,nu}(b+n, c-b) / B(b, c-b), where coef_n = coef_{n-1} * step(n).
template <class Step>
EvalOutcome beta_series(Complex b, Complex c, const ExtParams& params, const QuadSpec& quad,
                        ExtSeriesControl ctl, Step step) {
  const BesselKernel kernel(params);
  const EvalOutcome norm = inverse_beta(b, c);
  auto zero = [](double, double) { return Complex(0.0); };
  Complex coef = 1.0;
  EvalOutcome sum;
  sum.value = 0.0;
  int small_run = 0;
  double last_term = 0.0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    if (n > 0) coef *= step(n);
    if (coef == 0.0) {
      // Terminating or z = 0: every later term vanishes.
      return sum;
    }
    const EvalOutcome bn = detail::kernel_integral(b + double(n), c - b, kernel, zero, quad);
    const EvalOutcome term = bn * norm * coef;
    sum = sum + term;
    last_term = std::abs(term.unscaled());
    const double scale = std::abs(sum.unscaled());
    if (last_term < ctl.tol * scale || (scale == 0.0 && last_term == 0.0)) {
      if (++small_run == 3) {
        sum.abs_err_estimate += last_term * (sum.log_scale == 0.0 ? 1.0 : 0.0);
        return sum;
      }
    } else {
      small_run = 0;
    }
  }
  sum.converged = false;
  sum.abs_err_estimate += last_term;
  return sum;
}

}  // namespace

EvalOutcome ext_beta_p(Complex x, Complex y, Complex p, const QuadSpec& quad) {
  return chaudhry_integral(x, y, 0.0, p, quad);
}

EvalOutcome ext_beta_pnu(Complex x, Complex y, const ExtParams& params, const QuadSpec& quad) {
  const BesselKernel kernel(params);
  return detail::kernel_integral(x, y, kernel, [](double, double) { return Complex(0.0); }, quad);
}

EvalOutcome ext_chf_p(Complex b, Complex c, Complex z, Complex p, const QuadSpec& quad) {
  const EvalOutcome norm = inverse_beta(b, c);
  return chaudhry_integral(b, c - b, z, p, quad) * norm;
}

EvalOutcome ext_chf_pnu(Complex b, Complex c, Complex z, const ExtParams& params, ChfRoute route,
                        const QuadSpec& quad, ExtSeriesControl series) {
  if (route == ChfRoute::series) {
    return beta_series(b, c, params, quad, series, [z](int n) { return z / double(n); });
  }
  const BesselKernel kernel(params);
  const EvalOutcome norm = inverse_beta(b, c);
  auto extra = [z](double t, double) { return z * t; };
  return detail::kernel_integral(b, c - b, kernel, extra, quad) * norm;
}

EvalOutcome ext_chf_pnu_deriv(Complex b, Complex c, Complex z, const ExtParams& params, int n,
                              const QuadSpec& quad) {
  if (n < 0) throw DomainError("derivative order must be nonnegative");
  if (is_nonpositive_integer(c + double(n), 1e-12)) {
    throw PoleError("derivative needs c + n away from 0, -1, -2, ... (c=" + to_string(c) + ")");
  }
  const Complex ratio = pochhammer(b, n) / pochhammer(c, n);
  if (ratio == 0.0) return EvalOutcome{};
  return ext_chf_pnu(b + double(n), c + double(n), z, params, ChfRoute::integral, quad) * ratio;
}

EvalOutcome ext_gauss_pnu(Complex a, Complex b, Complex c, Complex z, const ExtParams& params, ChfRoute route,
                          const QuadSpec& quad, ExtSeriesControl series) {
  if (route == ChfRoute::series) {
    if (std::abs(z) >= 1.0) {
      throw DomainError("F_{p,nu} series requires |z| < 1 (got z=" + to_string(z) + ")");
    }
    return beta_series(b, c, params, quad, series, [a, z](int n) { return (a + double(n - 1)) * z / double(n); });
  }
  if (z.imag() == 0.0 && z.real() > 1.0) {
    throw DomainError("F_{p,nu} requires |arg(1-z)| < pi; z=" + to_string(z) + " lies on the branch cut");
  }
  params.validate();
  if (z == 1.0 && params.classical()) detail::require_classical_exponents(b, c - a - b);
  const BesselKernel kernel(params);
  const EvalOutcome norm = inverse_beta(b, c);
  auto extra = [a, z](double t, double tc) { return -a * std::log(one_minus_zt(z, t, tc)); };
  return detail::kernel_integral(b, c - b, kernel, extra, quad) * norm;
}

}  // namespace extwhit
