#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace extwhit {

using Complex = std::complex<double>;

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter falls outside the region where the requested function is
// defined (|z| >= 1 for a series, Re(p) < 0, 2mu a negative integer, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument sits on a pole of Gamma (or of a Pochhammer-normalised Beta).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The combination is mathematically fine but not supported by the kernel
// evaluators, e.g. non-integer nu with complex p.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A result would be NaN or overflow binary64 in unscaled form.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Result of a numerical evaluation.
//
// The represented number is value * exp(log_scale). log_scale is zero unless
// the magnitude does not fit in binary64, in which case underflow_scaled is
// set and value has unit magnitude. abs_err_estimate is expressed in the same
// units as value.
struct EvalOutcome {
  Complex value{};
  double abs_err_estimate = 0.0;
  bool converged = true;
  bool underflow_scaled = false;
  double log_scale = 0.0;

  // log of the represented number (principal imaginary part).
  Complex log_value() const { return std::log(value) + log_scale; }

  // The represented number; may be 0 or inf when underflow_scaled is set.
  Complex unscaled() const {
    if (log_scale == 0.0) return value;
    return value * std::exp(log_scale);
  }

  double rel_err_estimate() const {
    const double m = std::abs(value);
    return m > 0.0 ? abs_err_estimate / m : abs_err_estimate;
  }
};

// Folds log_scale into value when the result fits comfortably in binary64;
// otherwise normalises value to unit magnitude and marks it scaled.
EvalOutcome normalize(EvalOutcome r);

// Builds an outcome from a log-magnitude/phase pair plus a relative error.
EvalOutcome from_log(Complex log_value, double rel_err, bool converged);

// Product and quotient with relative error propagation.
EvalOutcome operator*(const EvalOutcome& a, const EvalOutcome& b);
EvalOutcome operator/(const EvalOutcome& a, const EvalOutcome& b);
EvalOutcome operator*(const EvalOutcome& a, Complex factor);

// Sum of two unscaled-compatible outcomes (log scales are aligned).
EvalOutcome operator+(const EvalOutcome& a, const EvalOutcome& b);

// Relative distance |a - b| / |b| computed in log space when either side is
// scaled.
double rel_diff(const EvalOutcome& a, const EvalOutcome& b);
double rel_diff(Complex a, Complex b);

bool is_finite(Complex z);

// True when z lies within tol of one of 0, -1, -2, ...
bool is_nonpositive_integer(Complex z, double tol = 0.0);

std::string to_string(Complex z);

}  // namespace extwhit
