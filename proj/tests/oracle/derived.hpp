#pragma once

#include <functional>
#include <string>
#include <vector>

#include "extwhit/types.hpp"

namespace oracle {

// One derived reference value: how it is regenerated, how the library
// computes the same quantity, and the agreement required between the two.
struct Derived {
  std::string name;
  std::string provenance;
  double tolerance;
  std::function<extwhit::Complex()> regenerate;
  std::function<extwhit::EvalOutcome()> library;
};

const std::vector<Derived>& derived_values();

}  // namespace oracle
