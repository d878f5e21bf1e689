#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "extwhit/types.hpp"

namespace extwhit::cli {

// Malformed command line (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "1.5", "-2", "3+4i", "1e-3-2.5i", "2i", "-i". No whitespace.
Complex parse_complex(const std::string& text);
double parse_real(const std::string& text);

// Maps Greek letters and their ASCII names to one spelling: kappa, mu, nu,
// rho, alpha, beta, chi.
std::string canonical_name(const std::string& raw);

using Assignments = std::map<std::string, std::string>;

// name=value tokens; names are canonicalised and must not repeat.
Assignments parse_assignments(const std::vector<std::string>& tokens);

// Sweep axis "name:lin|log:lo:hi:n".
struct Axis {
  std::string name;
  bool log_spacing = false;
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;

  std::vector<double> points() const;
};

Axis parse_axis(const std::string& spec);

}  // namespace extwhit::cli
