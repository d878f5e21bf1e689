#include "extwhit/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "extwhit/core_special.hpp"
#include "extwhit/transforms.hpp"
#include "extwhit/whittaker.hpp"

namespace extwhit::cli {

namespace {

std::string short_num(Complex v) {
  char buf[64];
  if (v.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%g", v.real());
  } else if (v.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%gi", v.imag());
  } else {
    std::snprintf(buf, sizeof buf, "%g%+gi", v.real(), v.imag());
  }
  return buf;
}

std::string label(std::initializer_list<std::pair<const char*, Complex>> items) {
  std::string s;
  for (const auto& [k, v] : items) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += short_num(v);
  }
  return s;
}

// A case fails when its residual exceeds the tolerance, is NaN, or when the
// underlying evaluation did not converge.
void add(SuiteResult& out, std::string lbl, double residual, double tol, bool converged = true) {
  const bool pass = converged && residual < tol;
  out.cases.push_back({std::move(lbl) + (converged ? "" : " (not converged)"), residual, tol, pass});
}

const Complex kI(0.0, 1.0);

void reductions(SuiteResult& out, const QuadSpec& quad) {
  const ExtParams classical{0.0, 0.0};
  const Route routes[] = {Route::definition(), Route::unit(), Route::affine(-1.0, 2.0), Route::semi_infinite(),
                          Route::symmetric()};
  const Complex zs[] = {0.5, 1.0, 2.0, 4.0, 2.0 * kI};
  for (const Complex z : zs) {
    const EvalOutcome m = whittaker_ext({0.0, 0.5, z}, classical, Route::definition(), quad);
    add(out, "M_{0,1/2} = 2 sinh(z/2) " + label({{"z", z}}), rel_diff(m.unscaled(), 2.0 * std::sinh(0.5 * z)),
        1e-10, m.converged);
  }
  const std::pair<double, double> km[] = {{0.0, 0.5}, {0.25, 0.75}, {-0.5, 1.0}, {0.5, 2.0}};
  for (const auto& [kappa, mu] : km) {
    for (const Complex z : zs) {
      const EvalOutcome ref = whittaker_classic(kappa, mu, z);
      for (const Route& r : routes) {
        const EvalOutcome m = whittaker_ext({kappa, mu, z}, classical, r, quad);
        add(out, std::string("classical ") + route_name(r.kind) + " " + label({{"kappa", kappa}, {"mu", mu}, {"z", z}}),
            rel_diff(m, ref), 1e-10, m.converged && ref.converged);
      }
      const EvalOutcome nu0 = whittaker_ext_nu0({kappa, mu, z}, 0.0, quad);
      add(out, "classical nu=0 form " + label({{"kappa", kappa}, {"mu", mu}, {"z", z}}), rel_diff(nu0, ref), 1e-10,
          nu0.converged);
    }
  }
  for (const double p : {0.25, 1.0, 4.0}) {
    for (const auto& [kappa, mu] : km) {
      for (const Complex z : zs) {
        const WhittakerArgs args{kappa, mu, z};
        const EvalOutcome m = whittaker_ext(args, {p, 0.0}, Route::definition(), quad);
        const Complex b = mu - kappa + 0.5;
        const EvalOutcome chf = ext_chf_p(b, 2.0 * mu + 1.0, z, p, quad);
        const EvalOutcome ref = chf * from_log((mu + 0.5) * principal_log(z) - 0.5 * z, 0.0, true);
        const std::string l = label({{"kappa", kappa}, {"mu", mu}, {"z", z}, {"p", p}});
        add(out, "nu=0 vs p-extension " + l, rel_diff(m, ref), 1e-10, m.converged && ref.converged);
        const EvalOutcome nu0 = whittaker_ext_nu0(args, p, quad);
        add(out, "nu=0 exponential form " + l, rel_diff(nu0, m), 1e-10, nu0.converged);
      }
    }
    for (const auto& [x, y] : std::initializer_list<std::pair<Complex, Complex>>{{1.5, 1.5}, {2.0, 3.0}, {0.5, -1.5}, {1.0 + kI, 2.0}}) {
      const EvalOutcome a = ext_beta_pnu(x, y, {p, 0.0}, quad);
      const EvalOutcome b = ext_beta_p(x, y, p, quad);
      add(out, "B_{p,0} = B(.,.;p) " + label({{"x", x}, {"y", y}, {"p", p}}), rel_diff(a, b), 1e-10,
          a.converged && b.converged);
    }
  }
  for (const auto& [x, y] : std::initializer_list<std::pair<Complex, Complex>>{{1.5, 1.5}, {2.0, 3.0}, {0.7, 2.2}}) {
    const EvalOutcome a = ext_beta_p(x, y, 0.0, quad);
    add(out, "B(.,.;0) = B " + label({{"x", x}, {"y", y}}), rel_diff(a.unscaled(), beta(x, y)), 1e-10, a.converged);
  }
}

void kummer(SuiteResult& out, const QuadSpec& quad) {
  const Complex zs[] = {0.5, 1.0, 2.0, 4.0, 2.0 * kI, 1.0 + kI, -1.5};
  const std::pair<double, double> pn[] = {{0.0, 0.0}, {0.25, 0.0}, {1.0, 0.5}, {1.0, 1.0}, {4.0, 2.0}};
  for (const double kappa : {0.0, 0.5, -0.5}) {
    for (const double mu : {0.75, 1.0, 2.0}) {
      for (const Complex z : zs) {
        for (const auto& [p, nu] : pn) {
          const KummerResidual r = whittaker_kummer_transform_check({kappa, mu, z}, {p, nu}, quad);
          const double tol = (p == 0.0 && nu == 0.0) ? 1e-12 : 1e-9;
          add(out, label({{"kappa", kappa}, {"mu", mu}, {"z", z}, {"p", p}, {"nu", nu}}), r.relative, tol,
              r.converged);
        }
      }
    }
  }
}

void summation(SuiteResult& out, const QuadSpec& quad) {
  for (int n = 0; n <= 3; ++n) {
    for (const double kappa : {0.0, 0.5}) {
      for (const double mu : {0.75, 1.0, 2.0}) {
        for (const Complex z : {Complex(0.5), Complex(1.0), Complex(2.0), 1.0 + kI}) {
          for (const Complex p : {Complex(0.25), Complex(1.0), Complex(4.0)}) {
            const WhittakerArgs args{kappa, mu, z};
            const EvalOutcome s = whittaker_summation(args, p, n, quad);
            const EvalOutcome d = whittaker_ext(args, {p, double(n)}, Route::definition(), quad);
            add(out, label({{"n", n}, {"kappa", kappa}, {"mu", mu}, {"z", z}, {"p", p}}), rel_diff(s, d), 1e-8,
                s.converged && d.converged);
          }
        }
      }
    }
  }
}

void diff(SuiteResult& out, const QuadSpec& quad) {
  for (const auto& [kappa, mu] : std::initializer_list<std::pair<double, double>>{{0.0, 1.0}, {0.5, 0.75}}) {
    for (const Complex z : {Complex(0.5), Complex(1.0), Complex(2.0), 1.0 + kI}) {
      for (const auto& [p, nu] : std::initializer_list<std::pair<double, double>>{{0.5, 0.0}, {1.0, 0.5}, {2.0, 1.0}}) {
        const ExtParams params{p, nu};
        bool converged = true;
        auto g = [&](Complex w) {
          const EvalOutcome m = whittaker_ext({kappa, mu, w}, params, Route::definition(), quad);
          converged = converged && m.converged;
          return (m * from_log(-(mu + 0.5) * principal_log(w) + 0.5 * w, 0.0, true)).unscaled();
        };
        const std::string l = label({{"kappa", kappa}, {"mu", mu}, {"z", z}, {"p", p}, {"nu", nu}});
        const double scale = std::max(1.0, std::abs(z));
        const double h1 = 1e-5 * scale;
        const Complex fd1 = (g(z + h1) - g(z - h1)) / (2.0 * h1);
        const EvalOutcome d1 = whittaker_diff_formula({kappa, mu, z}, params, 1, quad);
        add(out, "n=1 " + l, rel_diff(fd1, d1.unscaled()), 1e-6, converged && d1.converged);
        const double h2 = 1e-3 * scale;
        const Complex fd2 = (g(z + h2) - 2.0 * g(z) + g(z - h2)) / (h2 * h2);
        const EvalOutcome d2 = whittaker_diff_formula({kappa, mu, z}, params, 2, quad);
        add(out, "n=2 " + l, rel_diff(fd2, d2.unscaled()), 1e-4, converged && d2.converged);
      }
    }
  }
}

TransformControl transform_control(const QuadSpec& quad) {
  TransformControl ctl;
  ctl.outer_tol = std::min(quad.rel_tol * 10.0, 1e-6);
  ctl.inner_tol = ctl.outer_tol / 100.0;
  ctl.max_level = quad.max_level;
  return ctl;
}

void mellin(SuiteResult& out, const QuadSpec& quad) {
  const TransformControl ctl = transform_control(quad);
  for (const double nu : {0.0, 0.5, 1.0}) {
    for (const double ds : {0.5, 1.0, 2.5}) {
      for (const double kappa : {0.0, 0.25}) {
        for (const double mu : {0.75, 1.0}) {
          for (const double z : {0.5, 1.0, 2.0}) {
            const MellinQuery q{nu + ds, {kappa, mu, z}, nu};
            const EvalOutcome l = mellin_lhs(q, ctl);
            const EvalOutcome r = mellin_rhs(q);
            add(out, label({{"s", nu + ds}, {"nu", nu}, {"kappa", kappa}, {"mu", mu}, {"z", z}}), rel_diff(l, r), 1e-6,
                l.converged);
          }
        }
      }
    }
  }
}

void laplace(SuiteResult& out, const QuadSpec& quad) {
  const TransformControl ctl = transform_control(quad);
  for (const double alpha : {0.75, 1.0, 2.0}) {
    for (const double bf : {0.5, 1.0, 2.0}) {
      for (const double kappa : {0.0, 0.25}) {
        for (const double mu : {0.75, 1.0}) {
          for (const double p : {0.25, 1.0, 4.0}) {
            for (const double nu : {0.0, 0.5, 1.0}) {
              const LaplaceQuery q{alpha, bf * alpha, kappa, mu, {p, nu}};
              const EvalOutcome l = laplace_lhs(q, ctl);
              const EvalOutcome r = laplace_rhs(q, quad);
              const std::string lbl =
                  label({{"alpha", alpha}, {"beta", bf * alpha}, {"kappa", kappa}, {"mu", mu}, {"p", p}, {"nu", nu}});
              add(out, lbl, rel_diff(l, r), 1e-6, l.converged && r.converged);
              if (bf == 2.0) {
                const EvalOutcome c = corollary_rhs(alpha, kappa, mu, {p, nu}, quad);
                add(out, "closed form at beta=2alpha " + lbl, rel_diff(c, r), 1e-10, c.converged);
              }
            }
          }
        }
      }
    }
  }
}

void bounds(SuiteResult& out, const QuadSpec& quad) {
  const std::pair<double, double> km[] = {{0.0, 1.0}, {0.25, 0.75}, {-0.25, 1.5}};
  const Complex zs[] = {0.5, 1.0, 2.0, 4.0, 1.0 + kI, 2.0 * kI};
  std::vector<ExtParams> upper_params;
  for (const double p : {0.5, 1.0, 2.0}) {
    for (const double nu : {0.5, 1.0, 2.5}) upper_params.push_back({p, nu});
  }
  for (const Complex p : {1.0 + kI, 2.0 - 0.5 * kI}) {
    for (const double nu : {1.0, 2.0}) upper_params.push_back({p, nu});
  }
  for (const auto& [kappa, mu] : km) {
    for (const Complex z : zs) {
      for (const ExtParams& e : upper_params) {
        const BoundReport r = whittaker_upper_bound({kappa, mu, z}, e, quad);
        add(out, "upper |M|/bound " + label({{"kappa", kappa}, {"mu", mu}, {"z", z}, {"p", e.p}, {"nu", e.nu}}),
            r.function_abs / r.bound_value, 1.0, r.converged && r.satisfied);
      }
    }
  }
  for (const auto& [kappa, mu] : km) {
    for (const double x : {0.5, 2.0, 5.0}) {
      for (const double p : {0.5, 1.0, 2.0}) {
        for (const double nu : {0.0, 0.5, 2.0}) {
          double previous = 0.0;
          for (const int n : {0, 1, 2, 5}) {
            const BoundReport r = whittaker_lower_bound(kappa, mu, x, {p, nu}, n, quad);
            const std::string l = label({{"n", n}, {"kappa", kappa}, {"mu", mu}, {"x", x}, {"p", p}, {"nu", nu}});
            add(out, "lower bound/M " + l, r.bound_value / r.function_abs, 1.0, r.converged && r.satisfied);
            if (n > 0) {
              add(out, "lower bound increases " + l, previous / r.bound_value, 1.0, r.bound_value > previous);
            }
            previous = r.bound_value;
          }
        }
      }
    }
  }
}

void routes(SuiteResult& out, const QuadSpec& quad) {
  const Route rs[] = {Route::definition(), Route::unit(), Route::semi_infinite(), Route::symmetric(),
                      Route::affine(-2.0, 3.0)};
  for (const double kappa : {0.0, 0.5, -0.5}) {
    for (const double mu : {0.75, 1.0, 2.0}) {
      for (const double z : {0.5, 1.0, 2.0, 4.0}) {
        for (const double p : {0.25, 1.0, 4.0}) {
          for (const double nu : {0.0, 0.5, 1.0, 2.0}) {
            std::vector<EvalOutcome> v;
            bool converged = true;
            for (const Route& r : rs) {
              v.push_back(whittaker_ext({kappa, mu, z}, {p, nu}, r, quad));
              converged = converged && v.back().converged;
            }
            double worst = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
              for (std::size_t j = i + 1; j < v.size(); ++j) worst = std::max(worst, rel_diff(v[i], v[j]));
            }
            add(out, "pairwise " + label({{"kappa", kappa}, {"mu", mu}, {"z", z}, {"p", p}, {"nu", nu}}), worst, 1e-8,
                converged);
          }
        }
      }
    }
  }
}

using SuiteFn = std::function<void(SuiteResult&, const QuadSpec&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"reductions", reductions}, {"kummer", kummer}, {"summation", summation}, {"diff", diff},
      {"mellin", mellin},         {"laplace", laplace}, {"bounds", bounds},     {"routes", routes}};
  return r;
}

}  // namespace

double SuiteResult::max_residual() const {
  double m = 0.0;
  for (const CaseResult& c : cases) {
    if (std::isnan(c.residual) || c.residual > m) m = c.residual;
  }
  return m;
}

bool SuiteResult::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"reductions", "kummer", "summation", "diff",
                                                 "mellin",     "laplace", "bounds",   "routes"};
  return names;
}

SuiteResult run_suite(const std::string& name, const QuadSpec& quad) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown suite '" + name + "'");
  SuiteResult r;
  r.name = name;
  it->second(r, quad);
  return r;
}

}  // namespace extwhit::cli
