#include "extwhit/core_special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace extwhit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Godfrey's coefficients for g = 607/128, n = 15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

Complex log_gamma_lanczos(Complex z) {
  const Complex w = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (w + double(k));
  const Complex t = w + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (w + 0.5) * std::log(t) - t + std::log(series);
}

// Stopping rule shared by the two Maclaurin sums.
struct SeriesState {
  Complex sum = 0.0;
  double abs_sum = 0.0;
  int small_run = 0;
};

EvalOutcome finish_series(const SeriesState& s, Complex last_term, bool converged) {
  EvalOutcome r;
  r.value = s.sum;
  r.abs_err_estimate = std::abs(last_term) + 4.0 * kEps * s.abs_sum;
  r.converged = converged;
  return normalize(r);
}

}  // namespace

Complex principal_log(Complex z) {
  return std::log(Complex(z.real(), z.imag() == 0.0 ? 0.0 : z.imag()));
}

Complex principal_pow(Complex z, Complex a) {
  if (z == 0.0) {
    if (a == 0.0) return 1.0;
    if (a.real() > 0.0) return 0.0;
    throw DomainError("0^a with Re(a) <= 0 is undefined");
  }
  return std::exp(a * principal_log(z));
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at nonpositive integer " + to_string(z));
  }
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  const int n = int(std::ceil(0.5 - z.real()));
  Complex logs = 0.0;
  for (int k = 0; k < n; ++k) logs += std::log(z + double(k));
  return log_gamma_lanczos(z + double(n)) - logs;
}

Complex beta(Complex x, Complex y) {
  if (is_nonpositive_integer(x) || is_nonpositive_integer(y) || is_nonpositive_integer(x + y)) {
    throw PoleError("beta: x, y and x+y must avoid 0, -1, -2, ... (got x=" + to_string(x) +
                    ", y=" + to_string(y) + ")");
  }
  const Complex r = std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
  if (!is_finite(r)) throw NumericalError("beta: result overflows binary64");
  return r;
}

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  Complex r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + double(k);
  return r;
}

namespace {

EvalOutcome chf_series(Complex b, Complex c, Complex z, SeriesControl ctl) {
  SeriesState s;
  Complex term = 1.0;
  s.sum = term;
  s.abs_sum = 1.0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    term *= (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
    s.sum += term;
    s.abs_sum += std::abs(term);
    if (!is_finite(s.sum)) throw NumericalError("Phi(b;c;z): series overflow at z=" + to_string(z));
    if (std::abs(term) < ctl.tol * std::abs(s.sum)) {
      if (++s.small_run == 3) return finish_series(s, term, true);
    } else {
      s.small_run = 0;
    }
  }
  return finish_series(s, term, false);
}

}  // namespace

EvalOutcome chf_classic(Complex b, Complex c, Complex z, SeriesControl ctl) {
  if (is_nonpositive_integer(c, 1e-12)) {
    throw PoleError("Phi(b;c;z): c must not be a nonpositive integer (c=" + to_string(c) + ")");
  }
  // Kummer's transformation: on the left half-plane the direct series cancels
  if (z.real() < 0.0) return chf_series(c - b, c, -z, ctl) * from_log(z, 0.0, true);
  return chf_series(b, c, z, ctl);
}

EvalOutcome gauss_classic(Complex a, Complex b, Complex c, Complex z, SeriesControl ctl) {
  if (std::abs(z) >= 1.0) {
    throw DomainError("F(a,b;c;z): series requires |z| < 1 (got z=" + to_string(z) + ")");
  }
  if (is_nonpositive_integer(c, 1e-12)) {
    throw PoleError("F(a,b;c;z): c must not be a nonpositive integer (c=" + to_string(c) + ")");
  }
  SeriesState s;
  Complex term = 1.0;
  s.sum = term;
  s.abs_sum = 1.0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
    s.sum += term;
    s.abs_sum += std::abs(term);
    if (std::abs(term) < ctl.tol * std::abs(s.sum)) {
      if (++s.small_run == 3) return finish_series(s, term, true);
    } else {
      s.small_run = 0;
    }
  }
  return finish_series(s, term, false);
}

EvalOutcome whittaker_classic(Complex kappa, Complex mu, Complex z, SeriesControl ctl) {
  if (is_nonpositive_integer(2.0 * mu + 1.0, 1e-12)) {
    throw PoleError("M_{kappa,mu}: requires 2mu != -1, -2, ... (mu=" + to_string(mu) + ")");
  }
  const Complex half_mu = mu + 0.5;
  if (z == 0.0) {
    if (half_mu.real() > 0.0) return EvalOutcome{};
    throw DomainError("M_{kappa,mu}(0) requires Re(mu + 1/2) > 0");
  }
  const EvalOutcome phi = chf_classic(mu - kappa + 0.5, 2.0 * mu + 1.0, z, ctl);
  // Prefactor in log form so the product never overflows on its own.
  const Complex log_pref = half_mu * principal_log(z) - 0.5 * z;
  return phi * from_log(log_pref, 0.0, true);
}

}  // namespace extwhit
