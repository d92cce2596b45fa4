#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "opsplit/commands.hpp"
#include "opsplit/config.hpp"
#include "opsplit/errors.hpp"
#include "opsplit/iteration.hpp"
#include "opsplit/report_io.hpp"

#ifndef OPSPLIT_CLI
#error "OPSPLIT_CLI must name the command-line binary"
#endif

using namespace opsplit;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("opsplit_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& body) {
  std::ofstream(p, std::ios::binary) << body;
}

int run_cli(const std::string& args, const fs::path& dir) {
  const std::string cmd = std::string("\"") + OPSPLIT_CLI + "\" " + args + " > \"" +
                          (dir / "stdout.txt").string() + "\" 2> \"" +
                          (dir / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config defaults to the worked instance") {
  const RunConfig c = parse_run_config("{}");
  CHECK(c.model.dim() == 2);
  CHECK(c.model.gamma == 0.5);
  CHECK(c.model.w == Point::Ones(2));
  CHECK(c.selected_suites().size() == 14);
  CHECK(c.start() == Point::Zero(2));
  CHECK(c.probe_point()[0] == 2.0);
}

TEST_CASE("config parsing") {
  const RunConfig c = parse_run_config(R"({
    "dim": 3, "U": [[1, 0, 0]], "v": [0, 1, 0], "a": [0, 0, 2], "w": [1, 1, 1],
    "gamma": 0.3, "lambda": 0.9, "a_sign": "plus_v", "seed": 42,
    "suites": ["EQ9_DRS_FORMS", "EQ10_SWAP"], "instances": 5, "tol_multi": 1e-8,
    "max_iters": 7, "stop_tol": 1e-6, "x0": [1, 2, 3], "operator_a": "zero"})");
  CHECK(c.model.dim() == 3);
  CHECK(c.model.u.rank() == 1);
  CHECK(c.model.a_sign == ASign::kPlusV);
  CHECK(c.suite.seed == 42);
  CHECK(c.suite.instances == 5);
  CHECK(c.suite.tol.multi == 1e-8);
  CHECK(c.suite.model.gamma == 0.3);
  CHECK(c.suites.size() == 2);
  CHECK(c.max_iters == 7);
  CHECK(c.operator_a == IterOperatorA::kZero);
  CHECK(c.start()[2] == 3.0);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_run_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_run_config("[]"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"w": [1]})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"gamma": "half"})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"gamma": 1.0})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"max_iters": 0})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"stop_tol": 0})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"U": [[1, 0], [2, 0]]})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"v": [1, 1]})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"suites": ["NOPE"]})"), UnknownSuite);

  RunConfig c = parse_run_config(R"({"w": [0, 0], "suites": ["PROP28_NONEQUALITIES"]})");
  CHECK_THROWS_AS(check_run_config(c), ConfigError);
  c = parse_run_config(R"({"a": [0, 1], "suites": ["PROP28_NONEQUALITIES"]})");
  CHECK_THROWS_AS(check_run_config(c), ConfigError);
  c = parse_run_config(R"({"w": [0, 0], "suites": ["EQ9_DRS_FORMS"]})");
  CHECK_NOTHROW(check_run_config(c));
  set_suites(c, "EQ9_DRS_FORMS, EQ10_SWAP");
  CHECK(c.suites.size() == 2);
  CHECK_THROWS_AS(set_suites(c, ","), ConfigError);
}

TEST_CASE("iteration on the worked instance") {
  RunConfig c = parse_run_config(R"({"x0": [2, 0], "stop_tol": 1e-12})");
  const Splitting s(iteration_pair(c));
  const IterationTrace t = iterate_aac(s, c.start(), 60, c.stop_tol);
  CHECK(t.converged);
  CHECK(t.residuals.size() == t.iterates.size() - 1);
  CHECK(t.shadows.size() == t.iterates.size());
  CHECK(t.residuals.back() <= c.stop_tol);
  CHECK(t.iterates.back()[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(t.iterates.back()[1] == doctest::Approx(-1.0).epsilon(1e-10));
  for (std::size_t k = 2; k < t.residuals.size(); ++k) CHECK(t.residuals[k] < t.residuals[k - 1]);
  CHECK(t.rate == doctest::Approx(0.625).epsilon(1e-3));
  // shadow sequence is J_{A_g} of the iterates
  CHECK((t.shadows[3] - s.side_a().jg(t.iterates[3])).norm() == 0.0);

  const IterationTrace short_run = iterate_aac(s, c.start(), 3, c.stop_tol);
  CHECK_FALSE(short_run.converged);
  CHECK(short_run.residuals.size() == 3);
}

TEST_CASE("estimate_rate") {
  std::vector<double> r;
  for (int k = 0; k < 30; ++k) r.push_back(std::pow(0.5, k));
  CHECK(estimate_rate(r) == doctest::Approx(0.5));
  CHECK(estimate_rate(std::vector<double>{1.0}) == 0.0);
  CHECK(estimate_rate(std::vector<double>{0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("trace csv layout") {
  RunConfig c = parse_run_config(R"({"x0": [2, 0]})");
  const IterationTrace t = iterate_aac(Splitting(iteration_pair(c)), c.start(), 2, 1e-12);
  std::ostringstream os;
  write_trace_csv(os, t);
  const std::string csv = os.str();
  CHECK(csv.rfind("n,x0,x1,shadow0,shadow1,residual\n", 0) == 0);
  CHECK(csv.find("\n0,2,0,") != std::string::npos);
  CHECK(csv.find("\n1,1.5,-0.5,") != std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("zero operators contract by (2g-1)^2") {
  RunConfig c = parse_run_config(R"({"w": [0, 0], "lambda": 1, "gamma": 0.2,
    "operator_a": "zero", "operator_b": "zero", "x0": [1, -2]})");
  const IterationTrace t = iterate_aac(Splitting(iteration_pair(c)), c.start(), 200, 1e-12);
  CHECK(t.converged);
  CHECK((t.iterates[1] - 0.36 * t.iterates[0]).norm() < 1e-15);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(INFINITY) == "null");
  CHECK(format_number(std::nan("")) == "null");
}

TEST_CASE("report table on the worked instance") {
  const RunConfig c = parse_run_config("{}");
  const auto rows = closed_form_table(c.model, c.probe_point());
  CHECK(rows.size() == 23);
  for (const TableRow& r : rows) {
    if (r.form == "T_AgBg") {
      CHECK(r.closed_form[0] == 1.5);
      CHECK(r.closed_form[1] == -0.5);
      CHECK(r.gap == 0.0);
    }
    if (r.form == "RBg_Ts_vs_T_RBg") CHECK(r.gap == doctest::Approx(std::sqrt(0.5)));
  }
}

TEST_CASE("binary: exit codes") {
  const fs::path dir = scratch("codes");
  CHECK(run_cli("verify --suites NOPE --out \"" + (dir / "o").string() + "\"", dir) == 2);
  CHECK(slurp(dir / "stderr.txt").find("NOPE") != std::string::npos);

  write(dir / "w0.json", R"({"w": [0, 0]})");
  CHECK(run_cli("verify --config \"" + (dir / "w0.json").string() +
                    "\" --suites PROP28_NONEQUALITIES --out \"" + (dir / "o").string() + "\"",
                dir) == 2);
  CHECK(slurp(dir / "stderr.txt").find("degenerate") != std::string::npos);

  write(dir / "bad.json", R"({"gamma": )");
  CHECK(run_cli("iterate --config \"" + (dir / "bad.json").string() + "\"", dir) == 2);

  CHECK(run_cli("verify --suites EQ9_DRS_FORMS,EQ10_SWAP --out \"" + (dir / "ok").string() + "\"",
                dir) == 0);
  CHECK(fs::exists(dir / "ok" / "EQ9_DRS_FORMS.report.json"));
  CHECK(fs::exists(dir / "ok" / "EQ10_SWAP.report.json"));

  write(dir / "it.json", R"({"x0": [2, 0], "max_iters": 3})");
  CHECK(run_cli("iterate --config \"" + (dir / "it.json").string() + "\" --out \"" +
                    (dir / "it").string() + "\"",
                dir) == 1);
  CHECK(fs::exists(dir / "it" / "trace.csv"));

  CHECK(run_cli("report --out \"" + (dir / "rep").string() + "\"", dir) == 0);
  CHECK(fs::exists(dir / "rep" / "closed_forms.tsv"));

  CHECK(run_cli("", dir) == 2);
}

TEST_CASE("binary: verify is byte-reproducible") {
  const fs::path dir = scratch("repro");
  write(dir / "cfg.json", R"({"instances": 10, "samples": 4})");
  const std::string cfg = "--config \"" + (dir / "cfg.json").string() + "\"";
  run_cli("verify " + cfg + " --out \"" + (dir / "a").string() + "\"", dir);
  run_cli("verify " + cfg + " --out \"" + (dir / "b").string() + "\"", dir);
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir / "a")) {
    ++files;
    CHECK(slurp(e.path()) == slurp(dir / "b" / e.path().filename()));
  }
  CHECK(files == 14);
}
