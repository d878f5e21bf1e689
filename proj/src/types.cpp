#include "extwhit/types.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace extwhit {

namespace {

// Largest |log magnitude| folded back into a plain binary64 value.
constexpr double kFoldLimit = 690.0;

}  // namespace

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_nonpositive_integer(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  const double re = z.real();
  if (re > tol) return false;
  return std::abs(re - std::round(re)) <= tol;
}

EvalOutcome normalize(EvalOutcome r) {
  if (!is_finite(r.value) || !std::isfinite(r.log_scale)) {
    throw NumericalError("non-finite value produced (" + to_string(r.value) + ")");
  }
  const double mag = std::abs(r.value);
  if (mag == 0.0) {
    r.log_scale = 0.0;
    r.underflow_scaled = false;
    return r;
  }
  if (r.log_scale == 0.0) {
    r.underflow_scaled = false;
    return r;
  }
  const double total = std::log(mag) + r.log_scale;
  if (std::abs(total) < kFoldLimit) {
    const double f = std::exp(r.log_scale);
    r.value *= f;
    r.abs_err_estimate *= f;
    r.log_scale = 0.0;
    r.underflow_scaled = false;
  } else {
    r.value /= mag;
    r.abs_err_estimate /= mag;
    r.log_scale = total;
    r.underflow_scaled = true;
  }
  return r;
}

EvalOutcome from_log(Complex log_value, double rel_err, bool converged) {
  EvalOutcome r;
  if (log_value.real() == -std::numeric_limits<double>::infinity()) {
    r.value = 0.0;
    r.converged = converged;
    return r;
  }
  r.value = std::polar(1.0, log_value.imag());
  r.log_scale = log_value.real();
  r.abs_err_estimate = std::abs(rel_err);
  r.converged = converged;
  return normalize(r);
}

EvalOutcome operator*(const EvalOutcome& a, const EvalOutcome& b) {
  const double ma = std::abs(a.value);
  const double mb = std::abs(b.value);
  EvalOutcome r;
  r.converged = a.converged && b.converged;
  if (ma == 0.0 || mb == 0.0) {
    r.value = 0.0;
    r.abs_err_estimate = 0.0;
    // Zero times something: absolute error is only known when the other
    // factor is an unscaled finite number.
    if (ma == 0.0 && b.log_scale == 0.0) r.abs_err_estimate = a.abs_err_estimate * mb;
    if (mb == 0.0 && a.log_scale == 0.0) r.abs_err_estimate += b.abs_err_estimate * ma;
    return r;
  }
  const double rel = a.abs_err_estimate / ma + b.abs_err_estimate / mb;
  r.value = (a.value / ma) * (b.value / mb);
  r.log_scale = std::log(ma) + std::log(mb) + a.log_scale + b.log_scale;
  r.abs_err_estimate = rel;
  return normalize(r);
}

EvalOutcome operator/(const EvalOutcome& a, const EvalOutcome& b) {
  const double mb = std::abs(b.value);
  if (mb == 0.0) throw NumericalError("division by a zero-valued evaluation");
  EvalOutcome inv;
  inv.value = std::conj(b.value / mb) / mb;
  inv.log_scale = -b.log_scale;
  inv.abs_err_estimate = b.abs_err_estimate / (mb * mb);
  inv.converged = b.converged;
  return a * inv;
}

EvalOutcome operator*(const EvalOutcome& a, Complex factor) {
  EvalOutcome f;
  f.value = factor;
  return a * f;
}

EvalOutcome operator+(const EvalOutcome& a, const EvalOutcome& b) {
  if (a.value == 0.0) {
    EvalOutcome r = b;
    r.abs_err_estimate += a.abs_err_estimate * std::exp(a.log_scale - b.log_scale);
    r.converged = a.converged && b.converged;
    return r;
  }
  if (b.value == 0.0) {
    EvalOutcome r = a;
    r.abs_err_estimate += b.abs_err_estimate * std::exp(b.log_scale - a.log_scale);
    r.converged = a.converged && b.converged;
    return r;
  }
  const double top = std::max(a.log_scale, b.log_scale);
  const double fa = std::exp(a.log_scale - top);
  const double fb = std::exp(b.log_scale - top);
  EvalOutcome r;
  r.value = a.value * fa + b.value * fb;
  r.abs_err_estimate = a.abs_err_estimate * fa + b.abs_err_estimate * fb;
  r.log_scale = top;
  r.converged = a.converged && b.converged;
  return normalize(r);
}

double rel_diff(Complex a, Complex b) {
  const double d = std::abs(a - b);
  const double m = std::abs(b);
  return m > 0.0 ? d / m : d;
}

double rel_diff(const EvalOutcome& a, const EvalOutcome& b) {
  if (b.value == 0.0) return std::abs(a.unscaled());
  const Complex va = a.value * std::exp(a.log_scale - b.log_scale);
  return rel_diff(va, b.value);
}

std::string to_string(Complex z) {
  char buf[96];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace extwhit
