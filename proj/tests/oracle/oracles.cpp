#include "oracles.hpp"

#include <cmath>

namespace oracle {

namespace {

const double kPi = 3.14159265358979323846;

double beta_real(double x, double y) { return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y); }

// B(x, y; p) with the flat exp(-p/(t(1-t))) factor; no substitution needed.
double beta_p(double x, double y, double p) {
  return midpoint(
      [=](double t) {
        const double s = t * (1.0 - t);
        return std::pow(t, x - 1.0) * std::pow(1.0 - t, y - 1.0) * std::exp(-p / s);
      },
      0.0, 1.0);
}

}  // namespace

double midpoint(const std::function<double(double)>& f, double lo, double hi, long n) {
  const double h = (hi - lo) / double(n);
  long double sum = 0.0L;
  for (long i = 0; i < n; ++i) sum += f(lo + (double(i) + 0.5) * h);
  return double(sum * h);
}

Complex log_gamma(Complex z) {
  const int shift = 20;
  Complex w = z + double(shift);
  // B_{2k} / (2k (2k-1)), k = 1..8
  const double c[] = {1.0 / 12.0,         -1.0 / 360.0,         1.0 / 1260.0,         -1.0 / 1680.0,
                      1.0 / 1188.0,       -691.0 / 360360.0,    1.0 / 156.0,          -3617.0 / 122400.0};
  Complex series = 0.0;
  Complex wp = w;
  const Complex w2 = w * w;
  for (const double ck : c) {
    series += ck / wp;
    wp *= w2;
  }
  Complex r = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series;
  for (int k = 0; k < shift; ++k) r -= std::log(z + double(k));
  return r;
}

double chf_half_three_halves(double x) {
  return midpoint([=](double u) { return std::exp(x * u * u); }, 0.0, 1.0);
}

double gauss(double a, double b, double c, double z) {
  const double norm = std::tgamma(c) / (std::tgamma(b) * std::tgamma(c - b));
  const double d = c - b;
  const double left = midpoint(
      [=](double u) {
        const double t = std::pow(u, 1.0 / b);
        return std::pow(1.0 - t, d - 1.0) * std::pow(1.0 - z * t, -a) / b;
      },
      0.0, std::pow(0.5, b));
  const double right = midpoint(
      [=](double v) {
        const double t = 1.0 - std::pow(v, 1.0 / d);
        return std::pow(t, b - 1.0) * std::pow(1.0 - z * t, -a) / d;
      },
      0.0, std::pow(0.5, d));
  return norm * (left + right);
}

double whittaker_b1(double kappa, double mu, double x) {
  (void)kappa;  // fixed by mu - kappa + 1/2 = 1
  const double c = 2.0 * mu + 1.0;
  const double phi =
      2.0 * (c - 1.0) * midpoint([=](double v) { return std::pow(v, 2.0 * c - 3.0) * std::exp(x * (1.0 - v * v)); }, 0.0, 1.0);
  return std::pow(x, mu + 0.5) * std::exp(-0.5 * x) * phi;
}

double k_scaled(double rho, double x) {
  const double top = std::acosh(1.0 + 800.0 / x);
  return midpoint([=](double t) { return std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(rho * t); }, 0.0, top);
}

double k_half_closed(int n, double x) {
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double a = std::tgamma(n + k + 1.0) / (std::tgamma(n - k + 1.0) * std::tgamma(k + 1.0));
    sum += a / std::pow(2.0 * x, k);
  }
  return std::sqrt(kPi / (2.0 * x)) * sum;
}

double beta_p_11() { return beta_p(1.0, 1.0, 1.0); }

double exp_u_inv_u() {
  return midpoint([](double u) { return std::exp(-u - 1.0 / u) * (1.0 + 1.0 / (u * u)); }, 0.0, 1.0);
}

double chf_p_1_3_2() {
  return midpoint([](double t) { return (1.0 - t) * std::exp(2.0 * t - 1.0 / (t * (1.0 - t))); }, 0.0, 1.0) /
         beta_real(1.0, 2.0);
}

double beta_pnu_direct() {
  // sqrt(2/pi) K_{3/2}(X) = X^{-1/2} e^{-X} (1 + 1/X), X = 1/(t(1-t))
  return midpoint(
      [](double t) {
        const double X = 1.0 / (t * (1.0 - t));
        return (1.0 - t) * std::exp(-X) * (1.0 + 1.0 / X) / std::sqrt(X);
      },
      0.0, 1.0);
}

double beta_pnu_sum() { return beta_p(1.5, 2.5, 1.0) + beta_p(2.5, 3.5, 1.0); }

double whittaker_nu0_point() {
  const double z = 1.5, p = 0.5;
  const double integral = midpoint(
      [=](double t) { return std::sqrt(1.0 - t) * std::exp(z * t - p / (t * (1.0 - t))); }, 0.0, 1.0);
  return std::pow(z, 1.25) * std::exp(-0.5 * z) * integral / beta_real(1.0, 1.5);
}

double kummer_lhs() {
  // e^{-z/2} Phi_{1,1}(1; 3; 2); kernel s^{1/2} e^{-1/s} (1 + s)
  const double integral = midpoint(
      [](double t) {
        const double s = t * (1.0 - t);
        return (1.0 - t) * std::exp(2.0 * t - 1.0 / s) * (1.0 + s);
      },
      0.0, 1.0);
  return std::exp(-1.0) * integral / beta_real(1.0, 2.0);
}

double kummer_rhs() {
  // e^{z/2} Phi_{1,1}(2; 3; -2)
  const double integral = midpoint(
      [](double t) {
        const double s = t * (1.0 - t);
        return t * std::exp(-2.0 * t - 1.0 / s) * (1.0 + s);
      },
      0.0, 1.0);
  return std::exp(1.0) * integral / beta_real(2.0, 1.0);
}

double mellin_rhs_point() {
  const double s = 2.0, mu = 1.0, z = 1.0;
  // B(mu+s+1/2, mu+s+1/2) Phi(mu+s+1/2; 2mu+2s+1; z) = int t^{2.5} (1-t)^{2.5} e^{zt} dt
  const double bphi =
      midpoint([=](double t) { return std::pow(t * (1.0 - t), mu + s - 0.5) * std::exp(z * t); }, 0.0, 1.0);
  return std::pow(2.0, s - 1.0) * std::pow(z, mu + 0.5) * std::exp(-0.5 * z) /
         (std::sqrt(kPi) * beta_real(mu + 0.5, mu + 0.5)) * std::tgamma(s / 2.0) * std::tgamma((s + 1.0) / 2.0) * bphi;
}

double laplace_rhs_point() {
  const double alpha = 1.0, beta = 1.0, mu = 1.0, p = 1.0;
  const double chi = 2.0 * beta / (2.0 * alpha + beta);
  const double a = mu + alpha + 0.5, b = mu + 0.5, c = 2.0 * mu + 1.0;
  const double f = midpoint(
                       [=](double t) {
                         return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) * std::pow(1.0 - chi * t, -a) *
                                std::exp(-p / (t * (1.0 - t)));
                       },
                       0.0, 1.0) /
                   beta_real(b, c - b);
  return std::pow(beta, -alpha) * std::tgamma(a) * std::pow(chi, a) * f;
}

}  // namespace oracle
