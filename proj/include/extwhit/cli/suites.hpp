#pragma once

#include <string>
#include <vector>

#include "extwhit/quadrature.hpp"

namespace extwhit::cli {

struct CaseResult {
  std::string label;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;

  double max_residual() const;
  bool passed() const;
};

// reductions, kummer, summation, diff, mellin, laplace, bounds, routes.
const std::vector<std::string>& suite_names();

// Runs one suite. quad.rel_tol drives every quadrature; the transform suites
// use min(10 * rel_tol, 1e-6) for the outer integral and 1/100 of that inside.
SuiteResult run_suite(const std::string& name, const QuadSpec& quad);

}  // namespace extwhit::cli
