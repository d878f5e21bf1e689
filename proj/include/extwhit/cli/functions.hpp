#pragma once

#include <string>
#include <vector>

#include "extwhit/cli/parse.hpp"
#include "extwhit/quadrature.hpp"

namespace extwhit::cli {

struct FunctionSpec {
  std::string name;
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

const std::vector<FunctionSpec>& function_table();
const FunctionSpec& find_function(const std::string& name);

// Parameter names accepted by `fn` after aliasing (x -> z where the function
// has no x of its own).
std::string resolve_param(const FunctionSpec& fn, const std::string& name);

// Evaluates a registered function; missing or unknown parameters raise
// UsageError.
EvalOutcome evaluate(const std::string& fn, const Assignments& params, const QuadSpec& quad);

}  // namespace extwhit::cli
