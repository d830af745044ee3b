#include "doctest.h"
#include "xxzcorr/cli.hpp"
#include "xxzcorr/state_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace xxz;

namespace {
struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  try {
    const CliConfig c = parse_cli(args);
    const int s = run_cli(c, out, err);
    return {s, out.str(), err.str()};
  } catch (const CliError& e) {
    return {e.exit_code(), e.exit_code() == 0 ? e.what() : "", e.exit_code() == 0 ? "" : e.what()};
  }
}

std::vector<double> last_row(const std::string& csv) {
  std::istringstream is(csv);
  std::string line, last;
  while (std::getline(is, line))
    if (!line.empty()) last = line;
  std::vector<double> v;
  std::istringstream ls(last);
  std::string cell;
  while (std::getline(ls, cell, ','))
    if (!cell.empty() && cell != "ok") v.push_back(std::stod(cell));
  return v;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("xxzcorr_test_" + name);
}
}  // namespace

TEST_CASE("parse the documented invocations") {
  const CliConfig m = parse_cli({"measures", "--state-file", "rho.json"});
  CHECK(m.command == Command::measures);
  CHECK(m.state_file == "rho.json");

  const CliConfig t = parse_cli({"thermal", "-J", "1", "-Jz", "-0.5", "-B", "0", "-D", "0", "-T", "0.5", "--engine", "both"});
  CHECK(t.command == Command::thermal);
  CHECK(t.J == 1.0);
  CHECK(t.Jz == -0.5);
  CHECK(t.T == 0.5);
  CHECK(t.engine == Engine::both);

  const CliConfig f = parse_cli({"figure", "fig2", "--format", "csv", "-o", "fig2.csv"});
  CHECK(f.command == Command::figure);
  CHECK(f.figure == "fig2");
  CHECK(f.output == "fig2.csv");
  CHECK(f.format == OutputFormat::csv);

  const CliConfig a = parse_cli({"thermal", "-J", "1", "-T", "0.5", "--axis", "B:0:2:3", "--axis", "D:0:1:4"});
  REQUIRE(a.axes.size() == 2);
  CHECK(a.axes[1].name == "D");
  CHECK(a.axes[1].count == 4);
}

TEST_CASE("usage errors") {
  for (const std::vector<std::string>& bad : std::vector<std::vector<std::string>>{
           {},
           {"plot"},
           {"thermal", "-J", "1", "-T", "0.5", "--bogus"},
           {"thermal", "-J", "abc", "-T", "0.5"},
           {"thermal", "-J", "1", "-T"},
           {"thermal", "-J", "1"},
           {"thermal", "-J", "1", "-T", "0"},
           {"thermal", "-J", "1", "-T", "-1"},
           {"thermal", "-J", "1", "-T", "1", "--ground-state"},
           {"thermal", "-T", "1", "--axis", "B:0:1"},
           {"thermal", "-T", "1", "--axis", "B:0:x:3"},
           {"thermal", "-T", "1", "--axis", "B:0:1:1"},
           {"thermal", "-T", "1", "--axis", "t:0:1:3"},
           {"thermal", "-B", "1", "-T", "1", "--axis", "B:0:1:3"},
           {"thermal", "-T", "1", "--axis", "B:0:1:3", "--axis", "D:0:1:3", "--axis", "J:0:1:3"},
           {"thermal", "-T", "1", "--engine", "fast"},
           {"dynamics", "-J", "1", "--gamma", "1"},
           {"dynamics", "-J", "1", "--gamma", "1", "-t", "1", "--initial", "file"},
           {"dynamics", "-J", "1", "--gamma", "1", "-t", "1", "--initial", "psi3"},
           {"measures"},
           {"measures", "--bell", "psi1", "-T", "1"},
           {"figure"},
           {"verify", "--format", "csv"},
       }) {
    CAPTURE(bad.size());
    const Run r = run(bad);
    CHECK(r.status == kExitUsage);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits successfully") {
  const Run top = run({"--help"});
  CHECK(top.status == 0);
  CHECK(top.out.find("thermal") != std::string::npos);
  const Run sub = run({"thermal", "--help"});
  CHECK(sub.status == 0);
  CHECK(sub.out.find("--axis") != std::string::npos);
}

TEST_CASE("thermal point with both engines") {
  const Run r = run({"thermal", "-J", "1", "-Jz", "-0.5", "-B", "0", "-D", "0", "-T", "0.5", "--engine", "both"});
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("J,Jz,B,D,T,C_closedform,C_oracle,C_delta,", 0) == 0);
  const auto v = last_row(r.out);
  REQUIRE(v.size() == 5 + 12);
  CHECK(v[5] == doctest::Approx(0.14020241203646).epsilon(1e-12));
  for (std::size_t i = 7; i < v.size(); i += 3) CHECK(v[i] < 1e-6);
}

TEST_CASE("infinite temperature and ground state") {
  const auto hot = last_row(run({"thermal", "-J", "1", "-Jz", "0", "-B", "0", "-D", "0", "-T", "1e6"}).out);
  REQUIRE(hot.size() == 9);
  for (std::size_t i = 5; i < 9; ++i) CHECK(hot[i] < 1e-6);

  const auto cold = last_row(run({"thermal", "-J", "1", "--ground-state"}).out);
  REQUIRE(cold.size() == 9);
  for (std::size_t i = 5; i < 9; ++i) CHECK(cold[i] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("dynamics point reports eight values and four deltas") {
  const Run r = run({"dynamics", "-J", "1", "-D", "0.4", "--gamma", "1", "-t", "1", "--initial", "psi1", "--engine", "both"});
  REQUIRE(r.status == 0);
  const auto v = last_row(r.out);
  CHECK(v.size() == 6 + 12);
  const Run c = run({"dynamics", "-J", "1", "-D", "0.4", "--gamma", "1", "-t", "1", "--engine", "both", "--formula", "corrected"});
  const auto w = last_row(c.out);
  for (std::size_t i = 8; i < w.size(); i += 3) CHECK(w[i] < 1e-8);
}

TEST_CASE("sweeps and figures") {
  const Run r = run({"thermal", "-J", "1", "-Jz", "0.5", "-T", "0.5", "--axis", "B:0:2:3", "--axis", "D:0:1:3", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(r.out.front() == '[');
  std::size_t rows = 0;
  for (std::size_t p = r.out.find("\"status\""); p != std::string::npos; p = r.out.find("\"status\"", p + 1)) ++rows;
  CHECK(rows == 9);

  const auto path = temp_path("fig2.csv");
  std::filesystem::remove(path);
  const Run f = run({"figure", "fig2", "--points", "21", "--format", "csv", "-o", path.string()});
  REQUIRE(f.status == 0);
  CHECK(f.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "J,Jz,B,D,T,C,CC,QD,GMD2,status");
  std::filesystem::remove(path);

  CHECK(run({"figure", "fig9"}).status == kExitFailure);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"figure", "fig6", "--points", "15", "--format", "json"};
  const Run a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("dump-state round trip") {
  const auto path = temp_path("rho.json");
  const Run first = run({"measures", "-J", "0.7", "-Jz", "0.2", "-B", "0.4", "-D", "0.9", "-T", "0.6", "--dump-state", path.string()});
  REQUIRE(first.status == 0);
  const Run second = run({"measures", "--state-file", path.string()});
  REQUIRE(second.status == 0);
  const auto a = last_row(first.out), b = last_row(second.out);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);

  // the same file as an initial state
  const Run dyn = run({"dynamics", "-J", "1", "--gamma", "0.5", "-t", "1", "--initial", "file", "--state-file", path.string(), "--engine", "oracle"});
  CHECK(dyn.status == 0);
  std::filesystem::remove(path);

  const Run missing = run({"measures", "--state-file", path.string()});
  CHECK(missing.status == kExitFailure);
  CHECK(missing.out.empty());
}

TEST_CASE("fatal errors write nothing to the output file") {
  const auto path = temp_path("never.csv");
  std::filesystem::remove(path);
  // closed form has no ground-state evaluation
  const Run r = run({"thermal", "-J", "1", "--ground-state", "--engine", "closedform", "-o", path.string()});
  CHECK(r.status == kExitFailure);
  CHECK_FALSE(std::filesystem::exists(path));
}

TEST_CASE("measures of a Bell state") {
  const auto v = last_row(run({"measures", "--bell", "psi2"}).out);
  REQUIRE(v.size() >= 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(v[i] == doctest::Approx(1.0));
}
