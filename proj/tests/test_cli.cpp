#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "support.hpp"

#include "hh/cli.hpp"
#include "hh/json_io.hpp"

using namespace hh;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / "hh_cli_test";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("test classifies the first integrable case") {
  Run r = run({"test", "--lambda", "1", "--C", "-1"});
  CHECK(r.code == cli::kOk);
  Report rep = report_from_json(parse_json(r.out));
  CHECK(rep.data["classification"]["kind"] == "IntegrableCandidate");
  CHECK(rep.data["classification"]["integrable_case"] == "i");
}

TEST_CASE("series output is deterministic and carries provenance") {
  fs::path d = scratch();
  std::string a = (d / "a.json").string(), b = (d / "b.json").string();
  CHECK(run({"series", "--lambda", "1/9", "--C", "-16/5", "--branch", "real-plus", "--order", "6", "--out", a}).code ==
        cli::kOk);
  CHECK(run({"series", "--lambda", "1/9", "--C", "-16/5", "--branch", "real-plus", "--order", "6", "-o", b}).code ==
        cli::kOk);
  CHECK(read_file(a) == read_file(b));
  SeriesSolution s = solution_from_json(parse_json(read_file(a)));
  CHECK(s.branch == "real-plus");
  CHECK(s.registry.size() == 2);
  CHECK(s.y.coeff(Rat(2)) == ParamPoly(AlgScalar(Rat(-1819, 663552))));
}

TEST_CASE("decimal inputs are exact") {
  Run r = run({"series", "--lambda", "1", "--C", "-1.125", "--branch", "puiseux-plus", "--order", "2"});
  CHECK(r.code == cli::kOk);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run({"series", "--lambda", "1/9", "--C", "-16/5", "--branch", "nope"}).code == cli::kConfig);
  CHECK(run({"series", "--lambda", "x", "--C", "-16/5", "--branch", "real-plus"}).code == cli::kConfig);
  CHECK(run({"series", "--lambda", "1/9", "--C", "-3", "--branch", "real-plus"}).code == cli::kConfig);
  CHECK(run({"test", "--lambda", "1", "--C", "0"}).code == cli::kConfig);
  CHECK(run({"--precision", "32", "test", "--lambda", "1", "--C", "-1"}).code == cli::kConfig);
  CHECK(run({"frobnicate"}).code == cli::kConfig);
  CHECK(run({}).code == cli::kConfig);
}

TEST_CASE("an obstructed expansion exits with 3") {
  Run r = run({"series", "--lambda", "1/9", "--C", "-16/5", "--branch", "case2", "--order", "6"});
  CHECK(r.code == cli::kObstruction);
  CHECK(report_from_json(parse_json(r.out)).kind == "obstruction");
}

TEST_CASE("verify passes on a family and fails against the wrong closed form") {
  fs::path d = scratch();
  std::string s = (d / "s.json").string();
  REQUIRE(run({"series", "--lambda", "1/9", "--C", "-16/5", "--branch", "real-plus", "--order", "12", "-o", s}).code ==
          cli::kOk);
  Run ok = run({"verify", "--solution", s, "--against", "minus"});
  CHECK(ok.code == cli::kOk);
  CHECK(report_from_json(parse_json(ok.out)).pass());
  Run bad = run({"verify", "--solution", s, "--against", "plus"});
  CHECK(bad.code == cli::kVerification);
  Run csv = run({"--format", "csv", "verify", "--solution", s});
  CHECK(csv.out.rfind("name,pass,detail,location\n", 0) == 0);
}

TEST_CASE("converge reports N = 8") {
  fs::path d = scratch();
  std::string s = (d / "c.json").string();
  REQUIRE(run({"series", "--lambda", "1/9", "--C", "-16/5", "--branch", "real-plus", "--order", "12", "-o", s}).code ==
          cli::kOk);
  Run r = run({"converge", "--solution", s, "--horizon", "40", "--epsilon", "1/10"});
  CHECK(r.code == cli::kOk);
  ConvergenceCert c = cert_from_json(parse_json(r.out));
  CHECK(c.N == 8);
  CHECK(c.granted);
  CHECK(c.comparison_constant == Rat(10));
}

TEST_CASE("match and eval reproduce the closed form") {
  fs::path d = scratch();
  std::string fam = (d / "f.json").string(), cf = (d / "cf.json").string(), m = (d / "m.json").string();
  REQUIRE(run({"series", "--lambda", "1/9", "--C", "-16/5", "--branch", "real-plus", "--order", "30", "-o", fam})
              .code == cli::kOk);
  REQUIRE(run({"closed-form", "--which", "minus", "--order", "30", "-o", cf}).code == cli::kOk);
  REQUIRE(run({"match", "--family", fam, "--target", cf, "-o", m}).code == cli::kOk);
  Run e = run({"--format", "csv", "eval", "--solution", fam, "--bindings", m, "--tau", "1/2", "--tau", "0"});
  CHECK(e.code == cli::kOk);
  std::istringstream lines(e.out);
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == "t_re,t_im,x_re,x_im,y_re,y_im,tail_estimate,status");
  CHECK(row1.substr(row1.size() - 3) == ",ok");
  CHECK(row2.find("error") != std::string::npos);
  // y(1/2) from the closed form: -5 / (3 (1 - 3 sin(1/6 + phi))^2), sin phi = 1/3, cos phi < 0.
  double sn = std::sin(1.0 / 6 + M_PI - std::asin(1.0 / 3));
  double y = -5.0 / (3 * (1 - 3 * sn) * (1 - 3 * sn));
  std::istringstream cells(row1);
  std::vector<std::string> v;
  for (std::string c; std::getline(cells, c, ',');) v.push_back(c);
  CHECK(std::abs(std::stod(v[4]) - y) < 1e-12);
}

TEST_CASE("eval of the zero series gives zero columns") {
  fs::path d = scratch();
  SeriesSolution z;
  z.params = {Rat(1), Rat(-1)};
  z.family = "zero";
  z.branch = "zero";
  z.x = PSeries::zero(Rat(10));
  z.y = PSeries::zero(Rat(10));
  std::string p = (d / "z.json").string();
  write_file_atomic(p, dump(to_json(z)));
  Run e = run({"--format", "csv", "eval", "--solution", p, "--radius", "1/2", "--points", "3"});
  CHECK(e.code == cli::kOk);
  std::istringstream lines(e.out);
  std::string row;
  std::getline(lines, row);
  int n = 0;
  while (std::getline(lines, row)) {
    ++n;
    CHECK(row.find(",0,0,0,0,") != std::string::npos);
  }
  CHECK(n == 3);
}

TEST_CASE("batch runs commands in parallel and keeps their order") {
  fs::path d = scratch();
  std::string f = (d / "batch.txt").string();
  write_file_atomic(f, "# comment\ntest --lambda 1 --C -1\ntest --lambda 1/16 --C -16\ntest --lambda 2 --C -6\n");
  Run r = run({"batch", "--file", f, "--jobs", "3"});
  CHECK(r.code == cli::kOk);
  auto p1 = r.out.find("\"i\""), p2 = r.out.find("\"iii\""), p3 = r.out.find("\"ii\"");
  CHECK(p1 < p2);
  CHECK(p2 < p3);
  write_file_atomic(f, "test --lambda 1 --C -1\nseries --lambda 1 --C 0 --branch case2\n");
  CHECK(run({"batch", "--file", f, "--jobs", "2"}).code == cli::kConfig);
}

TEST_CASE("help and precision environment") {
  Run h = run({"series", "--help"});
  CHECK(h.code == cli::kOk);
  CHECK(h.out.find("--branch") != std::string::npos);
  CHECK(h.out.find("Exit codes") != std::string::npos);
  ::setenv("HH_PRECISION", "128", 1);
  CHECK(cli::default_precision() == 128);
  ::setenv("HH_PRECISION", "12", 1);
  CHECK(run({"test", "--lambda", "1", "--C", "-1"}).code == cli::kConfig);
  ::unsetenv("HH_PRECISION");
  CHECK(cli::default_precision() == 256);
}
