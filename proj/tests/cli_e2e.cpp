// Drives the installed extwhit binary through a shell and checks the exit
// code and output contracts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "extwhit/cli/format.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run_cli(const std::string& args, const std::string& env = "") {
  const std::string err_path = "cli_e2e_stderr.txt";
  const std::string cmd = env + (env.empty() ? "" : " ") + EXTWHIT_BIN + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream e(err_path);
  std::stringstream ss;
  ss << e.rdbuf();
  r.err = ss.str();
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::string line;
  std::istringstream in(s);
  while (std::getline(in, line)) v.push_back(line);
  return v;
}

bool round_trips(const std::string& out) {
  std::string body = out;
  if (!body.empty() && body.back() == '\n') body.pop_back();
  return extwhit::cli::canonical_json(nlohmann::json::parse(body)) == body;
}

}  // namespace

TEST_CASE("eval prints the classical value") {
  const Run r = run_cli("eval whittaker_ext κ=0 μ=0.5 z=1 p=0 ν=0");
  CHECK(r.code == 0);
  CHECK(r.out.find("value = 1.0421906109874948\n") != std::string::npos);
  CHECK(r.out.find("abs_err_estimate = ") != std::string::npos);
  CHECK(r.out.find("converged = true") != std::string::npos);
}

TEST_CASE("eval nu = 0 Beta equals the p-extension") {
  const Run a = run_cli("eval ext_beta_pnu x=1.5 y=1.5 p=1 ν=0");
  const Run b = run_cli("eval ext_beta_p x=1.5 y=1.5 p=1");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  const auto value = [](const std::string& s) { return s.substr(s.find("value = "), s.find('\n', s.find("value = ")) - s.find("value = ")); };
  CHECK(value(a.out) == value(b.out));
}

TEST_CASE("eval errors") {
  Run r = run_cli("eval whittaker_ext kappa=0 mu=-0.5 z=1 p=1 nu=0");
  CHECK(r.code == 1);
  CHECK(r.err.find("2mu") != std::string::npos);
  CHECK(lines(r.err).size() == 1);
  CHECK(run_cli("eval nosuch x=1").code == 1);
  CHECK(run_cli("eval beta x=1 y=abc").code == 1);
  CHECK(run_cli("eval beta x=1").code == 1);
  CHECK(run_cli("eval ext_beta_pnu x=1 y=1 p=0 nu=1").code == 1);
  CHECK(run_cli("eval ext_beta_pnu x=1 y=1 p=1+1i nu=0.5").code == 1);
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("--format xml eval beta x=1 y=1").code == 1);
  CHECK(run_cli("--tol 2 eval beta x=1 y=1").code == 1);
}

TEST_CASE("eval non-convergence exits 2") {
  const Run r = run_cli("--tol 1e-15 --max-level 3 eval ext_beta_p x=0.5 y=0.5 p=0.001");
  CHECK(r.code == 2);
  CHECK(r.out.find("converged = false") != std::string::npos);
}

TEST_CASE("eval JSON and CSV") {
  const Run j = run_cli("--format json eval whittaker_ext kappa=0 mu=0.5 z=1+1i p=1 nu=0.5");
  CHECK(j.code == 0);
  CHECK(round_trips(j.out));
  const nlohmann::json v = nlohmann::json::parse(j.out);
  CHECK(v.at("converged") == true);
  CHECK(v.at("params").at("z") == "1+1i");
  const Run c = run_cli("--format csv eval chf b=1 c=2 z=1");
  CHECK(c.code == 0);
  const auto ls = lines(c.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "function,re,im,log_scale,abs_err_estimate,converged");
  CHECK(ls[1].rfind("chf,1.7182818284590", 0) == 0);
  CHECK(c.out.find('\r') == std::string::npos);
}

TEST_CASE("tolerance precedence") {
  const Run env = run_cli("--format json eval ext_beta_p x=1.5 y=1.5 p=1", "EXTWHIT_TOL=abc");
  CHECK(env.code == 1);
  CHECK(env.err.find("EXTWHIT_TOL") != std::string::npos);
  CHECK(run_cli("--tol 1e-9 eval ext_beta_p x=1.5 y=1.5 p=1", "EXTWHIT_TOL=abc").code == 0);
  const Run loose = run_cli("--max-level 3 eval ext_beta_p x=0.5 y=0.5 p=0.001", "EXTWHIT_TOL=0.5");
  CHECK(loose.code == 0);
  CHECK(run_cli("--max-level 3 eval ext_beta_p x=0.5 y=0.5 p=0.001", "EXTWHIT_TOL=1e-15").code == 2);
}

TEST_CASE("check kummer and bounds pass") {
  const Run k = run_cli("check kummer");
  CHECK(k.code == 0);
  CHECK(k.out.find("FAIL") == std::string::npos);
  const Run b = run_cli("--format csv check bounds");
  CHECK(b.code == 0);
  const auto ls = lines(b.out);
  REQUIRE(ls.size() > 1);
  CHECK(ls[0] == "suite,case,residual,tolerance,pass");
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].substr(ls[i].size() - 5) == ",true");
}

TEST_CASE("check failure exits 3 and unknown suite exits 1") {
  CHECK(run_cli("--max-level 3 --tol 1e-14 check routes").code == 3);
  CHECK(run_cli("check everything").code == 1);
}

TEST_CASE("check all as JSON") {
  const Run r = run_cli("--format json check all");
  CHECK(r.code == 0);
  CHECK(round_trips(r.out));
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("passed") == true);
  REQUIRE(j.at("suites").size() == 8);
  for (const auto& s : j.at("suites")) {
    CHECK(s.contains("max_residual"));
    CHECK(s.at("passed") == true);
    CHECK(s.at("cases").size() > 0);
  }
}

TEST_CASE("table rows and header") {
  const Run r = run_cli("table whittaker_ext kappa=0 mu=1 p=1 nu=0 --axis x:log:1:100:20");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 21);
  CHECK(ls[0] == "z,kappa,mu,nu,p,re,im,abs_err_estimate,converged");
  CHECK(ls[1].rfind("1,0,1,0,1,", 0) == 0);
  CHECK(ls[20].rfind("100,", 0) == 0);
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("table ratio column") {
  const Run r = run_cli("table whittaker_ext kappa=0 mu=1 p=1 nu=0 --axis x:log:100:6400:4 --ratio");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0].substr(ls[0].size() - 6) == ",ratio");
  const double last = std::stod(ls[4].substr(ls[4].rfind(',') + 1));
  CHECK(std::abs(last - 1.0) < 0.2);
}

TEST_CASE("table with two axes and JSON") {
  const Run r = run_cli("--format json table chf b=1 --axis c:lin:1:2:3 --axis z:lin:0:1:2");
  CHECK(r.code == 0);
  CHECK(round_trips(r.out));
  CHECK(nlohmann::json::parse(r.out).at("rows").size() == 6);
}

TEST_CASE("table errors") {
  CHECK(run_cli("table whittaker_ext kappa=0 mu=1 p=1 nu=0 --axis x:log:1:abc:20").code == 1);
  CHECK(run_cli("table whittaker_ext kappa=0 mu=1 p=1 nu=0").code == 1);
  CHECK(run_cli("table whittaker_ext kappa=0 mu=1 p=1 nu=0 --axis q:lin:0:1:3").code == 1);
  CHECK(run_cli("table beta x=1 --axis y:lin:1:2:3 --ratio").code == 1);
}

TEST_CASE("asymp") {
  const Run r = run_cli("asymp --kappa 0 --mu 1 --p 1 --nu 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("slope = -0.5") != std::string::npos);
  const Run j = run_cli("--format json asymp --kappa 0 --mu 1 --p 1 --nu 2");
  CHECK(j.code == 0);
  CHECK(round_trips(j.out));
  const nlohmann::json v = nlohmann::json::parse(j.out);
  CHECK(v.at("points").size() == 4);
  CHECK(std::abs(v.at("slope").get<double>() + 0.5) < 0.15);
  CHECK(run_cli("asymp --p 0").code == 1);
  CHECK(run_cli("asymp --p -1").code == 1);
  CHECK(run_cli("asymp --kappa 3 --mu 1").code == 1);
  // far too small x for the law to hold: the slope leaves its band
  CHECK(run_cli("asymp --x 0.1,0.2,0.4").code == 3);
}
