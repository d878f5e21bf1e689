#include "extwhit/bessel_k.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace extwhit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr int kMaxIter = 100000;

// Taylor coefficients of 1/Gamma(1 + x) about x = 0.
constexpr std::array<double, 30> kRecipGamma = {
    1.0,
    0.5772156649015328606065,
    -0.655878071520253881077,
    -0.042002635034095235529,
    0.1665386113822914895017,
    -0.04219773455554433674821,
    -0.009621971527876973562115,
    0.007218943246663099542395,
    -0.001165167591859065112114,
    -0.0002152416741149509728157,
    0.0001280502823881161861532,
    -0.00002013485478078823865569,
    -0.000001250493482142670657345,
    0.000001133027231981695882374,
    -2.05633841697760710345e-7,
    6.116095104481415817862e-9,
    5.002007644469222930056e-9,
    -1.181274570487020144588e-9,
    1.043426711691100510492e-10,
    7.78226343990507125405e-12,
    -3.696805618642205708188e-12,
    5.100370287454475979015e-13,
    -2.058326053566506783222e-14,
    -5.34812253942301798237e-15,
    1.226778628238260790159e-15,
    -1.181259301697458769514e-16,
    1.18669225475160033258e-18,
    1.412380655318031781556e-18,
    -2.298745684435370206592e-19,
    1.714406321927337433384e-20};

// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
void temme_gammas(double mu, double& gam1, double& gam2) {
  const double mu2 = mu * mu;
  double odd = 0.0;
  double even = 0.0;
  for (int j = int(kRecipGamma.size()) - 1; j >= 0; --j) {
    if (j % 2 == 1) {
      odd = odd * mu2 + kRecipGamma[j];
    } else {
      even = even * mu2 + kRecipGamma[j];
    }
  }
  gam1 = -odd;
  gam2 = even;
}

// Scaled pair (e^x K_mu, e^x K_{mu+1}) for |mu| <= 1/2, in units of
// exp(log_unit).
struct KPair {
  double k_mu;
  double k_mu1;
  double log_unit;
};

KPair temme_series(double mu, double x) {
  const double x2 = 0.5 * x;
  const double pimu = kPi * mu;
  const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
  double gam1 = 0.0;
  double gam2 = 0.0;
  temme_gammas(mu, gam1, gam2);
  const double gampl = gam2 - mu * gam1;
  const double gammi = gam2 + mu * gam1;
  double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  double sum = ff;
  e = std::exp(e);
  double p = 0.5 * e / gampl;
  double q = 0.5 / (e * gammi);
  double c = 1.0;
  d = x2 * x2;
  double sum1 = p;
  const double mu2 = mu * mu;
  for (int i = 1; i < kMaxIter; ++i) {
    const double di = i;
    ff = (di * ff + p + q) / (di * di - mu2);
    c *= d / di;
    p /= di - mu;
    q /= di + mu;
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - di * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  const double ex = std::exp(x);
  return {sum * ex, sum1 * (2.0 / x) * ex, 0.0};
}

KPair steed_fraction(double mu, double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < kMaxIter; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h = a1 * h;
  const double kmu = std::sqrt(kPi / (2.0 * x)) / s;
  return {kmu, kmu * (mu + x + 0.5 - h) / x, 0.0};
}

// Forward recurrence K_{m+1} = K_{m-1} + (2m/x) K_m from order mu up to rho;
// the pair is rescaled whenever it grows large.
KPair recur_up(KPair k, double mu, int steps, double x) {
  for (int i = 1; i <= steps; ++i) {
    const double next = (mu + i) * (2.0 / x) * k.k_mu1 + k.k_mu;
    k.k_mu = k.k_mu1;
    k.k_mu1 = next;
    if (std::abs(next) > 1e250) {
      k.k_mu *= 1e-250;
      k.k_mu1 *= 1e-250;
      k.log_unit += 250.0 * std::numbers::ln10;
    }
  }
  return k;
}

KPair general_pair(double rho, double x) {
  const int nl = int(rho + 0.5);
  const double mu = rho - nl;
  const KPair base = x <= 2.0 ? temme_series(mu, x) : steed_fraction(mu, x);
  return recur_up(base, mu, nl, x);
}

double log_half_integer_sum(int n, double x) {
  if (x >= 0.5 || n == 0) return 0.5 * std::log(kPi / (2.0 * x)) + std::log(std::real(half_integer_ratio(n, x)));
  // small x: pull out the top power (2x)^{-n} so tiny arguments cannot overflow
  double a = 1.0;
  for (int k = 0; k < n; ++k) a = a * double(n + k + 1) * double(n - k) / double(k + 1);
  double sum = a;
  const double two_x = 2.0 * x;
  double pw = 1.0;
  for (int k = n; k > 0; --k) {
    a = a * double(k) / (double(n + k) * double(n - k + 1));
    pw *= two_x;
    sum += a * pw;
  }
  return 0.5 * std::log(kPi / (2.0 * x)) - double(n) * std::log(two_x) + std::log(sum);
}

}  // namespace

BesselOrder::BesselOrder(double rho) : rho_(rho), half_index_(-1) {
  if (!(rho >= 0.5 - 1e-12)) {
    throw DomainError("Bessel kernel order must satisfy rho = nu + 1/2 >= 1/2 (got " +
                      std::to_string(rho) + ")");
  }
  const double twice = 2.0 * rho;
  const double r = std::round(twice);
  if (std::abs(twice - r) <= 1e-12 && int(r) % 2 == 1) half_index_ = (int(r) - 1) / 2;
}

Complex half_integer_ratio(int n, Complex zeta) {
  if (n < 0) throw DomainError("half_integer_ratio: n must be nonnegative");
  // Horner in w = 1/(2 zeta) with a_{k+1} = a_k (n+k+1)(n-k)/(k+1).
  std::array<double, 64> a{};
  if (n >= int(a.size())) throw CapabilityError("half-integer kernel limited to nu < 64");
  a[0] = 1.0;
  for (int k = 0; k < n; ++k) a[k + 1] = a[k] * double(n + k + 1) * double(n - k) / double(k + 1);
  const Complex w = 1.0 / (2.0 * zeta);
  Complex s = a[n];
  for (int k = n - 1; k >= 0; --k) s = s * w + a[k];
  return s;
}

double k_half_integer_sum(int n, double x) {
  if (!(x > 0.0)) throw DomainError("K_{n+1/2}(x) requires x > 0");
  return std::sqrt(kPi / (2.0 * x)) * std::real(half_integer_ratio(n, x));
}

double k_scaled_general(double rho, double x) {
  if (!(x > 0.0)) throw DomainError("K_rho(x) requires x > 0");
  const KPair k = general_pair(rho, x);
  return k.k_mu * std::exp(k.log_unit);
}

double log_k_scaled(double rho, double x) {
  if (!(x > 0.0)) throw DomainError("K_rho(x) requires x > 0");
  if (x > 1e30) {
    // Two-term large-argument form; the next correction is O(x^-2).
    return 0.5 * std::log(kPi / 2.0) - 0.5 * std::log(x) + std::log1p((4.0 * rho * rho - 1.0) / (8.0 * x));
  }
  const BesselOrder order(rho);
  if (order.is_half_integer()) return log_half_integer_sum(order.half_index(), x);
  if (x < 1e-100) {
    // Leading small-argument form; the relative correction is O(x^{2 min(rho,1)}).
    return std::lgamma(rho) + (rho - 1.0) * std::numbers::ln2 - rho * std::log(x) + x;
  }
  const KPair k = general_pair(rho, x);
  return std::log(k.k_mu) + k.log_unit;
}

EvalOutcome k_scaled(BesselOrder order, double x) {
  if (!(x > 0.0)) throw DomainError("K_rho(x) requires x > 0 (got " + std::to_string(x) + ")");
  const double log_v = order.is_half_integer() ? log_half_integer_sum(order.half_index(), x)
                                               : log_k_scaled(order.rho(), x);
  const bool in_range = order.rho() <= 50.0 && x >= 1e-8 && x <= 1e8;
  const double rel = (order.is_half_integer() ? 4.0 : 64.0) * kEps;
  return from_log(log_v, in_range ? rel : 1e-6, in_range);
}

EvalOutcome k_unscaled(BesselOrder order, double x) {
  EvalOutcome r = k_scaled(order, x);
  EvalOutcome damp;
  damp.value = 1.0;
  damp.log_scale = -x;
  return r * damp;
}

}  // namespace extwhit
