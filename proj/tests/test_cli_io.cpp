#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ratios/report_io.hpp"
#include "ratios/selftest.hpp"

using namespace ratios;

namespace {

ReportTable sample_table() {
  ReportTable t;
  t.add_meta("subcommand", std::string("demo"));
  t.add_meta("x", static_cast<long long>(1000));
  t.add_meta("shift", Cplx(0.1, -0.05));
  t.columns = {"label", "value", "z", "count", "ok"};
  t.rows.push_back({std::string("plain"), 0.5, Cplx(1.0, 2.0),
                    static_cast<long long>(3), true});
  t.rows.push_back({std::string("needs,quoting \"here\""), 1e-300,
                    Cplx(-0.0, 1e16), static_cast<long long>(-1), false});
  return t;
}

std::string run_cli(const std::string& args, const std::string& out_file,
                    int expect_code) {
  std::string cmd = std::string(RATIOS_CLI_PATH) + " " + args + " --out " +
                    out_file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == expect_code);
  std::ifstream in(out_file, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("CSV layout: metadata comments, header, complex expansion") {
  std::ostringstream os;
  write_csv(os, sample_table());
  std::string s = os.str();
  CHECK(s.rfind("# version=", 0) == 0);
  CHECK(s.find("# subcommand=demo\n") != std::string::npos);
  CHECK(s.find("# shift=0.1+-0.05i\n") != std::string::npos);
  // complex column expands into _re/_im fields
  CHECK(s.find("label,value,z_re,z_im,count,ok\n") != std::string::npos);
  CHECK(s.find("plain,0.5,1,2,3,true\n") != std::string::npos);
  // commas and quotes inside a string field get RFC-style quoting
  CHECK(s.find("\"needs,quoting \"\"here\"\"\"") != std::string::npos);
  CHECK(s.back() == '\n');
  CHECK(s.find('\r') == std::string::npos);  // LF only
}

TEST_CASE("JSON layout: meta object and {re,im} complex encoding") {
  std::ostringstream os;
  write_json(os, sample_table());
  std::string s = os.str();
  CHECK(s.find("\"meta\":{\"version\":") != std::string::npos);
  CHECK(s.find("\"subcommand\":\"demo\"") != std::string::npos);
  CHECK(s.find("\"z\":{\"re\":1,\"im\":2}") != std::string::npos);
  CHECK(s.find("\"ok\":true") != std::string::npos);
  CHECK(s.find("\"needs,quoting \\\"here\\\"\"") != std::string::npos);
}

TEST_CASE("serialization is byte-stable") {
  auto once = [] {
    std::ostringstream c, j;
    write_csv(c, sample_table());
    write_json(j, sample_table());
    return c.str() + j.str();
  };
  CHECK(once() == once());
  CHECK(suite_report_determinism().pass);
}

TEST_CASE("CLI: identical config gives byte-identical files") {
  std::string args = "singular-series --h-max 6 --alpha 0.08+0.01i";
  std::string a = run_cli(args, "cli_det_a.csv", 0);
  std::string b = run_cli(args, "cli_det_b.csv", 0);
  CHECK(!a.empty());
  CHECK(a == b);
  std::string j = run_cli(args + " --format json", "cli_det_c.json", 0);
  CHECK(j.rfind("{\"meta\":", 0) == 0);
  std::remove("cli_det_a.csv");
  std::remove("cli_det_b.csv");
  std::remove("cli_det_c.json");
}

TEST_CASE("CLI: invalid configuration exits 2, range overflow exits 2") {
  run_cli("correlations --x 10", "cli_err.csv", 2);
  run_cli("singular-series --alpha 0.9", "cli_err.csv", 2);  // |shift| >= 1/4
  run_cli("singular-series --alpha 1+2", "cli_err.csv", 2);  // parse failure
  run_cli("meanvalue --T 50", "cli_err.csv", 2);
  run_cli("nonsense-subcommand", "cli_err.csv", 2);
  std::remove("cli_err.csv");
}

TEST_CASE("CLI: correlations smoke run emits ensemble statistics") {
  std::string out =
      run_cli("correlations --x 2000 --h-max 20", "cli_corr.csv", 0);
  CHECK(out.find("# median_rel_error=") != std::string::npos);
  CHECK(out.find("# mean_rel_error=") != std::string::npos);
  // header + 20 rows after the metadata block
  int data_lines = 0;
  std::istringstream is(out);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') ++data_lines;
  CHECK(data_lines == 21);
  std::remove("cli_corr.csv");
}

TEST_CASE("CLI: meanvalue diagonal-dominated flag at lambda < 1") {
  std::string out =
      run_cli("meanvalue --T 200 --lambda 0.9", "cli_mv.csv", 0);
  CHECK(out.find("# lambda=0.9") != std::string::npos);
  CHECK(out.find(",true,") != std::string::npos);  // diagonal_dominated column
  std::remove("cli_mv.csv");
}
