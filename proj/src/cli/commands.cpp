#include "extwhit/cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "extwhit/cli/format.hpp"
#include "extwhit/cli/functions.hpp"
#include "extwhit/cli/parse.hpp"
#include "extwhit/cli/suites.hpp"
#include "extwhit/whittaker.hpp"
#include "json.hpp"

namespace extwhit::cli {

namespace {

using nlohmann::json;

enum class Format { plain, json, csv };

struct Global {
  std::optional<double> tol;
  int max_level = 12;
  std::string format = "plain";

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::plain;
  }

  // flag > EXTWHIT_TOL > per-command default
  QuadSpec quad(double fallback) const {
    QuadSpec q;
    q.rel_tol = fallback;
    if (const char* env = std::getenv("EXTWHIT_TOL"); env && *env && !tol) {
      try {
        q.rel_tol = parse_real(env);
      } catch (const UsageError&) {
        throw UsageError(std::string("EXTWHIT_TOL is not a number: '") + env + "'");
      }
    }
    if (tol) q.rel_tol = *tol;
    q.max_level = max_level;
    q.validate();
    return q;
  }
};

std::string num(Complex v) { return to_string(v); }

json complex_json(Complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

// ---- eval

int cmd_eval(const Global& g, const std::string& fn, const std::vector<std::string>& tokens, std::ostream& out) {
  const Assignments params = parse_assignments(tokens);
  const EvalOutcome r = evaluate(fn, params, g.quad(1e-10));
  switch (g.fmt()) {
    case Format::plain: {
      out << "function = " << fn << "\n";
      if (r.log_scale != 0.0) {
        out << "value = " << num(r.value) << " * exp(" << format_double(r.log_scale) << ")\n";
      } else {
        out << "value = " << num(r.value) << "\n";
      }
      out << "abs_err_estimate = " << format_double(r.abs_err_estimate) << "\n";
      out << "converged = " << (r.converged ? "true" : "false") << "\n";
      break;
    }
    case Format::json: {
      json p = json::object();
      for (const auto& [k, v] : params) p[k] = v;
      json j = {{"function", fn},
                {"params", p},
                {"value", complex_json(r.value)},
                {"log_scale", r.log_scale},
                {"underflow_scaled", r.underflow_scaled},
                {"abs_err_estimate", r.abs_err_estimate},
                {"converged", r.converged}};
      out << canonical_json(j) << "\n";
      break;
    }
    case Format::csv:
      out << csv_line({"function", "re", "im", "log_scale", "abs_err_estimate", "converged"});
      out << csv_line({fn, format_double(r.value.real()), format_double(r.value.imag()), format_double(r.log_scale),
                       format_double(r.abs_err_estimate), r.converged ? "true" : "false"});
      break;
  }
  return r.converged ? 0 : 2;
}

// ---- check

int cmd_check(const Global& g, const std::string& suite, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    bool known = false;
    for (const std::string& n : suite_names()) known = known || n == suite;
    if (!known) throw UsageError("unknown suite '" + suite + "'");
    names = {suite};
  }
  const QuadSpec quad = g.quad(1e-10);
  std::vector<SuiteResult> results;
  bool all_pass = true;
  if (g.fmt() == Format::csv) out << csv_line({"suite", "case", "residual", "tolerance", "pass"});
  for (const std::string& n : names) {
    results.push_back(run_suite(n, quad));
    const SuiteResult& s = results.back();
    all_pass = all_pass && s.passed();
    if (g.fmt() == Format::plain) {
      for (const CaseResult& c : s.cases) {
        out << s.name << "  " << c.label << "  residual=" << format_double(c.residual)
            << "  tolerance=" << format_double(c.tolerance) << "  " << (c.pass ? "pass" : "FAIL") << "\n";
      }
      out << "suite " << s.name << ": " << s.cases.size() << " cases, max residual "
          << format_double(s.max_residual()) << ", " << (s.passed() ? "PASS" : "FAIL") << "\n";
    } else if (g.fmt() == Format::csv) {
      for (const CaseResult& c : s.cases) {
        out << csv_line({s.name, c.label, format_double(c.residual), format_double(c.tolerance),
                         c.pass ? "true" : "false"});
      }
    }
    out.flush();
  }
  if (g.fmt() == Format::json) {
    json suites = json::array();
    for (const SuiteResult& s : results) {
      json cases = json::array();
      for (const CaseResult& c : s.cases) {
        cases.push_back({{"label", c.label}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
      }
      suites.push_back({{"name", s.name}, {"cases", cases}, {"max_residual", s.max_residual()}, {"passed", s.passed()}});
    }
    out << canonical_json(json{{"passed", all_pass}, {"suites", suites}}) << "\n";
  }
  return all_pass ? 0 : 3;
}

// ---- table

int cmd_table(const Global& g, const std::string& fn, const std::vector<std::string>& tokens,
              const std::vector<std::string>& axis_specs, bool ratio, std::ostream& out) {
  const FunctionSpec& spec = find_function(fn);
  if (axis_specs.empty() || axis_specs.size() > 2) throw UsageError("table needs one or two --axis specs");
  std::vector<Axis> axes;
  for (const std::string& a : axis_specs) {
    Axis ax = parse_axis(a);
    ax.name = resolve_param(spec, ax.name);
    for (const Axis& other : axes) {
      if (other.name == ax.name) throw UsageError("axis '" + ax.name + "' given twice");
    }
    axes.push_back(ax);
  }
  Assignments fixed;
  for (const auto& [k, v] : parse_assignments(tokens)) {
    const std::string key = resolve_param(spec, k);
    for (const Axis& ax : axes) {
      if (ax.name == key) throw UsageError("parameter '" + key + "' is both fixed and swept");
    }
    fixed[key] = v;
  }
  if (ratio && fn != "whittaker_ext") throw UsageError("--ratio is only defined for whittaker_ext");

  std::vector<std::string> header;
  for (const Axis& ax : axes) header.push_back(ax.name);
  for (const auto& [k, v] : fixed) header.push_back(k);
  for (const char* c : {"re", "im", "abs_err_estimate", "converged"}) header.push_back(c);
  if (ratio) header.push_back("ratio");

  const QuadSpec quad = g.quad(1e-8);
  const std::vector<double> first = axes[0].points();
  const std::vector<double> second = axes.size() > 1 ? axes[1].points() : std::vector<double>{0.0};
  bool all_converged = true;
  json rows = json::array();
  const bool as_json = g.fmt() == Format::json;
  if (!as_json) out << csv_line(header);
  for (const double a : first) {
    for (const double b : second) {
      Assignments point = fixed;
      point[axes[0].name] = format_double(a);
      if (axes.size() > 1) point[axes[1].name] = format_double(b);
      const EvalOutcome r = evaluate(fn, point, quad);
      all_converged = all_converged && r.converged;
      const Complex v = r.unscaled();
      std::vector<std::string> fields;
      json row = json::array();
      fields.push_back(format_double(a));
      row.push_back(a);
      if (axes.size() > 1) {
        fields.push_back(format_double(b));
        row.push_back(b);
      }
      for (const auto& [k, s] : fixed) {
        fields.push_back(s);
        row.push_back(s);
      }
      fields.push_back(format_double(v.real()));
      fields.push_back(format_double(v.imag()));
      fields.push_back(format_double(r.abs_err_estimate * std::exp(r.log_scale)));
      fields.push_back(r.converged ? "true" : "false");
      row.push_back(v.real());
      row.push_back(v.imag());
      row.push_back(r.abs_err_estimate * std::exp(r.log_scale));
      row.push_back(r.converged);
      if (ratio) {
        const Complex z = parse_complex(point.at("z"));
        if (z.imag() != 0.0 || z.real() <= 0.0) throw DomainError("ratio mode requires real z > 0");
        const double l = log_asymptotic_leading(parse_real(point.at("kappa")), parse_real(point.at("mu")),
                                                parse_real(point.at("p")), z.real());
        const double q = std::exp(r.log_value() - l).real();
        fields.push_back(format_double(q));
        row.push_back(q);
      }
      if (as_json) {
        rows.push_back(row);
      } else {
        out << csv_line(fields);
      }
    }
  }
  if (as_json) out << canonical_json(json{{"columns", header}, {"rows", rows}}) << "\n";
  return all_converged ? 0 : 2;
}

// ---- asymp

struct AsympOptions {
  double kappa = 0.0;
  double mu = 1.0;
  double p = 1.0;
  double nu = 0.0;
  std::vector<double> xs = {1e2, 4e2, 1.6e3, 6.4e3};
};

int cmd_asymp(const Global& g, const AsympOptions& o, std::ostream& out) {
  if (!(o.p > 0.0)) throw DomainError("asymptotic law requires p > 0");
  if (!(o.mu - o.kappa + 0.5 > 0.0) || !(o.mu + o.kappa + 0.5 > 0.0)) {
    throw DomainError("asymptotic law requires mu - kappa + 1/2 > 0 and mu + kappa + 1/2 > 0");
  }
  if (o.xs.size() < 2) throw UsageError("asymp needs at least two x values");
  for (const double x : o.xs) {
    if (!(x > 0.0)) throw DomainError("asymptotic scan requires x > 0");
  }
  const QuadSpec quad = g.quad(1e-10);
  std::vector<double> ratios, rs;
  bool converged = true;
  for (const double x : o.xs) {
    const EvalOutcome m = whittaker_ext({o.kappa, o.mu, x}, {o.p, o.nu}, Route::definition(), quad);
    converged = converged && m.converged;
    const double q = std::exp(m.log_value() - log_asymptotic_leading(o.kappa, o.mu, o.p, x)).real();
    ratios.push_back(q);
    rs.push_back(q - 1.0);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(o.xs.size());
  for (std::size_t i = 0; i < o.xs.size(); ++i) {
    const double lx = std::log(o.xs[i]);
    const double ly = std::log(std::abs(rs[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const bool in_band = slope >= -0.65 && slope <= -0.35;
  const AsymptoticForm form = asymptotic_form(o.kappa, o.mu, o.p);

  switch (g.fmt()) {
    case Format::plain:
      for (std::size_t i = 0; i < o.xs.size(); ++i) {
        out << "x = " << format_double(o.xs[i]) << "  ratio = " << format_double(ratios[i])
            << "  r = " << format_double(rs[i]) << "\n";
      }
      out << "amplitude = " << format_double(form.amplitude) << "\n";
      out << "slope = " << format_double(slope) << "\n";
      out << "within_band = " << (in_band ? "true" : "false") << "\n";
      break;
    case Format::json: {
      json pts = json::array();
      for (std::size_t i = 0; i < o.xs.size(); ++i) pts.push_back({{"x", o.xs[i]}, {"ratio", ratios[i]}, {"r", rs[i]}});
      out << canonical_json(json{{"kappa", o.kappa},
                                 {"mu", o.mu},
                                 {"p", o.p},
                                 {"nu", o.nu},
                                 {"amplitude", form.amplitude},
                                 {"points", pts},
                                 {"slope", slope},
                                 {"within_band", in_band},
                                 {"converged", converged}})
          << "\n";
      break;
    }
    case Format::csv:
      out << csv_line({"x", "ratio", "r"});
      for (std::size_t i = 0; i < o.xs.size(); ++i) {
        out << csv_line({format_double(o.xs[i]), format_double(ratios[i]), format_double(rs[i])});
      }
      break;
  }
  if (!converged) return 2;
  return in_band ? 0 : 3;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended Whittaker, Beta and hypergeometric functions"};
  app.name("extwhit");
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  double tol = 0.0;
  auto* tol_opt = app.add_option("--tol", tol, "relative tolerance (default from EXTWHIT_TOL or per command)");
  app.add_option("--max-level", g.max_level, "maximum quadrature level")->check(CLI::Range(3, 15));
  app.add_option("--format", g.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));

  std::string fn;
  std::vector<std::string> tokens;
  auto* eval = app.add_subcommand("eval", "evaluate one function");
  eval->add_option("function", fn, "function name")->required();
  eval->add_option("params", tokens, "name=value assignments");

  std::string suite;
  auto* check = app.add_subcommand("check", "run an identity suite");
  check->add_option("suite", suite, "suite name or all")->required();

  std::string table_fn;
  std::vector<std::string> table_tokens, axis_specs;
  bool ratio = false;
  auto* table = app.add_subcommand("table", "sweep a function over one or two axes");
  table->add_option("function", table_fn, "function name")->required();
  table->add_option("params", table_tokens, "fixed name=value assignments");
  table->add_option("--axis", axis_specs, "name:lin|log:lo:hi:n");
  table->add_flag("--ratio", ratio, "add value / asymptotic_leading column");

  AsympOptions ao;
  auto* asymp = app.add_subcommand("asymp", "scan M / leading - 1 against x");
  asymp->add_option("--kappa", ao.kappa);
  asymp->add_option("--mu", ao.mu);
  asymp->add_option("--p", ao.p);
  asymp->add_option("--nu", ao.nu);
  asymp->add_option("--x", ao.xs, "x values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "extwhit: " << e.what() << "\n";
    return 1;
  }
  if (tol_opt->count() > 0) g.tol = tol;

  try {
    if (*eval) return cmd_eval(g, fn, tokens, out);
    if (*check) return cmd_check(g, suite, out);
    if (*table) return cmd_table(g, table_fn, table_tokens, axis_specs, ratio, out);
    if (*asymp) return cmd_asymp(g, ao, out);
  } catch (const UsageError& e) {
    err << "extwhit: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "extwhit: " << e.what() << "\n";
    return 1;
  } catch (const CapabilityError& e) {
    err << "extwhit: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    err << "extwhit: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace extwhit::cli
