#include "extwhit/cli/parse.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

namespace extwhit::cli {

namespace {

bool read_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && errno == 0 && std::isfinite(out);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

Complex parse_complex(const std::string& text) {
  double re = 0.0;
  if (read_double(text, re)) return re;
  if (text.empty() || text.back() != 'i') throw UsageError("not a number: '" + text + "'");
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one or an exponent sign.
  std::string::size_type cut = std::string::npos;
  for (std::string::size_type k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    double v = 0.0;
    if (!read_double(s, v)) throw UsageError("not a number: '" + text + "'");
    return v;
  };
  if (cut == std::string::npos) return Complex(0.0, imag_part(body));
  if (!read_double(body.substr(0, cut), re)) throw UsageError("not a number: '" + text + "'");
  return Complex(re, imag_part(body.substr(cut)));
}

double parse_real(const std::string& text) {
  double v = 0.0;
  if (!read_double(text, v)) throw UsageError("not a real number: '" + text + "'");
  return v;
}

std::string canonical_name(const std::string& raw) {
  static const std::map<std::string, std::string> greek = {
      {"κ", "kappa"}, {"μ", "mu"},     {"ν", "nu"}, {"ρ", "rho"},
      {"α", "alpha"}, {"β", "beta"},   {"χ", "chi"}};
  const auto it = greek.find(raw);
  return it == greek.end() ? raw : it->second;
}

Assignments parse_assignments(const std::vector<std::string>& tokens) {
  Assignments out;
  for (const std::string& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size()) {
      throw UsageError("expected name=value, got '" + tok + "'");
    }
    const std::string name = canonical_name(tok.substr(0, eq));
    if (!out.emplace(name, tok.substr(eq + 1)).second) throw UsageError("parameter '" + name + "' given twice");
  }
  return out;
}

std::vector<double> Axis::points() const {
  std::vector<double> pts;
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : double(i) / (count - 1);
    pts.push_back(log_spacing ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f);
  }
  if (count > 1) pts.back() = hi;
  return pts;
}

Axis parse_axis(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() != 5) throw UsageError("axis must look like name:lin|log:lo:hi:n, got '" + spec + "'");
  Axis a;
  a.name = canonical_name(parts[0]);
  if (a.name.empty()) throw UsageError("axis needs a parameter name, got '" + spec + "'");
  if (parts[1] == "log") {
    a.log_spacing = true;
  } else if (parts[1] != "lin") {
    throw UsageError("axis spacing must be lin or log, got '" + parts[1] + "'");
  }
  a.lo = parse_real(parts[2]);
  a.hi = parse_real(parts[3]);
  double n = 0.0;
  if (!read_double(parts[4], n) || n < 1.0 || n != std::floor(n) || n > 1e6) {
    throw UsageError("axis point count must be a positive integer, got '" + parts[4] + "'");
  }
  a.count = int(n);
  if (!(a.hi >= a.lo)) throw UsageError("axis upper bound must not be below the lower bound");
  if (a.log_spacing && !(a.lo > 0.0)) throw UsageError("log axis needs positive bounds");
  return a;
}

}  // namespace extwhit::cli
