#pragma once

#include "extwhit/types.hpp"

namespace extwhit {

// Order rho = nu + 1/2 of the kernel K_rho. Orders below 1/2 are rejected.
class BesselOrder {
 public:
  explicit BesselOrder(double rho);
  static BesselOrder from_nu(double nu) { return BesselOrder(nu + 0.5); }

  double rho() const { return rho_; }
  // True when 2 rho is an odd positive integer (to 1e-12), i.e. nu integral.
  bool is_half_integer() const { return half_index_ >= 0; }
  // n such that rho = n + 1/2; -1 when not a half-integer order.
  int half_index() const { return half_index_; }

 private:
  double rho_;
  int half_index_;
};

// e^x K_rho(x) for x > 0. Half-integer orders use the finite closed form;
// other orders use Temme's series (x <= 2) or Steed's continued fraction
// (x > 2) followed by forward recurrence. Outside rho <= 50, x in
// [1e-8, 1e8] the value is still returned but converged is false.
EvalOutcome k_scaled(BesselOrder order, double x);

// K_rho(x) = k_scaled * e^{-x}; returned in scaled form (underflow_scaled)
// when it leaves the binary64 range.
EvalOutcome k_unscaled(BesselOrder order, double x);

// e^x K_{n+1/2}(x) = sqrt(pi/(2x)) sum_{k<=n} a_k(n) / (2x)^k with
// a_k(n) = (n+k)! / ((n-k)! k!).
double k_half_integer_sum(int n, double x);

// The general-order route of k_scaled, also at half-integer orders.
double k_scaled_general(double rho, double x);

// log(e^x K_rho(x)) for any x > 0 and rho >= 0; never overflows.
double log_k_scaled(double rho, double x);

// sum_{k<=n} a_k(n) / (2 zeta)^k for complex zeta (Re zeta > 0), which equals
// sqrt(2 zeta / pi) e^zeta K_{n+1/2}(zeta).
Complex half_integer_ratio(int n, Complex zeta);

}  // namespace extwhit
