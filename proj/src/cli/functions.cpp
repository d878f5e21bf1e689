#include "extwhit/cli/functions.hpp"

#include <algorithm>

#include "extwhit/bessel_k.hpp"
#include "extwhit/core_special.hpp"
#include "extwhit/whittaker.hpp"

namespace extwhit::cli {

namespace {

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

class Args {
 public:
  Args(const FunctionSpec& fn, const Assignments& raw) {
    for (const auto& [name, value] : raw) {
      const std::string key = resolve_param(fn, name);
      if (!values_.emplace(key, value).second) throw UsageError("parameter '" + key + "' given twice");
    }
    for (const std::string& r : fn.required) {
      if (!values_.count(r)) throw UsageError(fn.name + " needs parameter '" + r + "'");
    }
  }

  Complex c(const std::string& name, Complex fallback = 0.0) const {
    const auto it = values_.find(name);
    return it == values_.end() ? fallback : parse_complex(it->second);
  }

  double r(const std::string& name, double fallback = 0.0) const {
    const auto it = values_.find(name);
    return it == values_.end() ? fallback : parse_real(it->second);
  }

  std::string s(const std::string& name, const std::string& fallback) const {
    const auto it = values_.find(name);
    return it == values_.end() ? fallback : it->second;
  }

 private:
  Assignments values_;
};

ChfRoute chf_route(const std::string& s) {
  if (s == "integral") return ChfRoute::integral;
  if (s == "series") return ChfRoute::series;
  throw UsageError("route must be integral or series, got '" + s + "'");
}

Route whittaker_route(const Args& a) {
  const std::string s = a.s("route", "definition");
  if (s == "definition") return Route::definition();
  if (s == "unit") return Route::unit();
  if (s == "affine") return Route::affine(a.r("alpha", -1.0), a.r("beta", 1.0));
  if (s == "semi_infinite") return Route::semi_infinite();
  if (s == "symmetric") return Route::symmetric();
  throw UsageError("route must be one of definition, unit, affine, semi_infinite, symmetric; got '" + s + "'");
}

ExtParams ext(const Args& a) { return ExtParams{a.c("p"), a.r("nu")}; }

EvalOutcome plain(Complex v) {
  if (!is_finite(v)) throw NumericalError("result is not finite");
  EvalOutcome r;
  r.value = v;
  return r;
}

}  // namespace

const std::vector<FunctionSpec>& function_table() {
  static const std::vector<FunctionSpec> table = {
      {"beta", {"x", "y"}, {}},
      {"ext_beta_p", {"x", "y", "p"}, {}},
      {"ext_beta_pnu", {"x", "y", "p", "nu"}, {}},
      {"chf", {"b", "c", "z"}, {}},
      {"ext_chf_p", {"b", "c", "z", "p"}, {}},
      {"ext_chf_pnu", {"b", "c", "z", "p", "nu"}, {"route"}},
      {"gauss", {"a", "b", "c", "z"}, {}},
      {"ext_gauss_pnu", {"a", "b", "c", "z", "p", "nu"}, {"route"}},
      {"whittaker", {"kappa", "mu", "z"}, {}},
      {"whittaker_ext", {"kappa", "mu", "z", "p", "nu"}, {"route", "alpha", "beta"}},
      {"asymptotic_leading", {"kappa", "mu", "p", "x"}, {}},
      {"bessel_k_scaled", {"rho", "x"}, {}},
  };
  return table;
}

const FunctionSpec& find_function(const std::string& name) {
  for (const FunctionSpec& f : function_table()) {
    if (f.name == name) return f;
  }
  std::string known;
  for (const FunctionSpec& f : function_table()) known += (known.empty() ? "" : ", ") + f.name;
  throw UsageError("unknown function '" + name + "' (known: " + known + ")");
}

std::string resolve_param(const FunctionSpec& fn, const std::string& name) {
  const std::string n = canonical_name(name);
  if (has(fn.required, n) || has(fn.optional, n)) return n;
  if (n == "x" && has(fn.required, "z")) return "z";
  throw UsageError(fn.name + " has no parameter '" + name + "'");
}

EvalOutcome evaluate(const std::string& name, const Assignments& params, const QuadSpec& quad) {
  const FunctionSpec& fn = find_function(name);
  const Args a(fn, params);
  if (name == "beta") return plain(beta(a.c("x"), a.c("y")));
  if (name == "ext_beta_p") return ext_beta_p(a.c("x"), a.c("y"), a.c("p"), quad);
  if (name == "ext_beta_pnu") return ext_beta_pnu(a.c("x"), a.c("y"), ext(a), quad);
  if (name == "chf") return chf_classic(a.c("b"), a.c("c"), a.c("z"));
  if (name == "ext_chf_p") return ext_chf_p(a.c("b"), a.c("c"), a.c("z"), a.c("p"), quad);
  if (name == "ext_chf_pnu") {
    return ext_chf_pnu(a.c("b"), a.c("c"), a.c("z"), ext(a), chf_route(a.s("route", "integral")), quad);
  }
  if (name == "gauss") return gauss_classic(a.c("a"), a.c("b"), a.c("c"), a.c("z"));
  if (name == "ext_gauss_pnu") {
    return ext_gauss_pnu(a.c("a"), a.c("b"), a.c("c"), a.c("z"), ext(a), chf_route(a.s("route", "integral")), quad);
  }
  if (name == "whittaker") return whittaker_classic(a.c("kappa"), a.c("mu"), a.c("z"));
  if (name == "whittaker_ext") {
    return whittaker_ext({a.c("kappa"), a.c("mu"), a.c("z")}, ext(a), whittaker_route(a), quad);
  }
  if (name == "asymptotic_leading") {
    return from_log(log_asymptotic_leading(a.r("kappa"), a.r("mu"), a.r("p"), a.r("x")), 0.0, true);
  }
  if (name == "bessel_k_scaled") return k_scaled(BesselOrder(a.r("rho")), a.r("x"));
  throw UsageError("unknown function '" + name + "'");
}

}  // namespace extwhit::cli
