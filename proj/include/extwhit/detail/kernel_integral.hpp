#pragma once

#include <cmath>
#include <string>

namespace extwhit::detail {

void require_classical_exponents(Complex x, Complex y);

template <class Extra>
EvalOutcome kernel_integral(Complex x, Complex y, const BesselKernel& kernel, Extra extra, QuadSpec quad) {
  if (kernel.params().classical()) require_classical_exponents(x, y);
  quad.interval = Interval::unit();
  const Complex xm = x - 1.0;
  const Complex ym = y - 1.0;
  auto log_f = [&](const Abscissa& a) -> Complex {
    const double t = a.from_lo;
    const double tc = a.to_hi;
    return xm * std::log(t) + ym * std::log(tc) + extra(t, tc) + kernel.log_weight(t * tc);
  };
  return integrate_log(log_f, quad);
}

}  // namespace extwhit::detail
