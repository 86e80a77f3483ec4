#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / ("lapinv_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string(LAPINV_CLI) + " --cache-dir " + (scratch() / "cache").string() + " " + args +
                          " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_CASE("invert a single point") {
  const Run r = run("invert --g power:beta=1 --beta 1 --v 3.7");
  CHECK(r.code == 0);
  CHECK(r.out == "3.7,1\n");
}

TEST_CASE("beta at a non-positive integer is a usage error") {
  const Run r = run("invert --g power:beta=1 --beta -2 --v 1");
  CHECK(r.code == 2);
  CHECK(r.err.find("Dirac") != std::string::npos);
}

TEST_CASE("argument errors exit with 2") {
  CHECK(run("invert --g bogus:beta=1 --beta 1 --v 1").code == 2);
  CHECK(run("invert --g power:beta=1 --beta 1 --v-grid log:1:2").code == 2);
  CHECK(run("invert --g power:beta=1 --beta 1 --v abc").code == 2);
  CHECK(run("invert --g power:beta=1 --beta 1").code == 2);
  CHECK(run("fp --beta -0.5").code == 2);
  CHECK(run("no-such-command").code == 2);
}

TEST_CASE("finite part commands") {
  const Run one = run("fp --beta -0.5 --v 1 --f one");
  CHECK(one.code == 0);
  CHECK(one.out == "-2\n");
  const Run cos = run("fp --beta -0.5 --v 1 --f cos --digits 8");
  CHECK(cos.out == "-2.3216778\n");
  const Run log = run("fp --beta -1 --v 1 --f exp");
  CHECK(log.code == 3);
  CHECK(log.err.find("LogarithmicFinitePart") != std::string::npos);
}

TEST_CASE("decimal input is never rounded through a double") {
  const std::string v = "0.1234567890123456789012345678901234567891";
  const Run r = run("invert --g power:beta=0.000001 --beta 0.000001 --precision 40 --format json --v " + v);
  CHECK(r.code == 0);
  CHECK(r.out.find("\"beta\": \"0.000001\"") != std::string::npos);
  CHECK(r.out.find("\"v\": \"" + v + "\"") != std::string::npos);
}

TEST_CASE("identical invocations give identical files") {
  const std::string args = " invert --g series:beta=-0.398406:coeffs=1,0.5,0.25 --beta -0.398406 --twoN 10 "
                           "--precision 40 --v-grid log:1e-3:10:7 --exact --out ";
  const fs::path a = scratch() / "a.csv";
  const fs::path b = scratch() / "b.csv";
  REQUIRE(run(args + a.string()).code == 0);
  REQUIRE(run(args + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  std::istringstream rows(slurp(a));
  int n = 0;
  for (std::string line; std::getline(rows, line); ++n) {
    const double err = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(err < 1e-35);
  }
  CHECK(n == 7);
}

TEST_CASE("table and beta estimation") {
  const Run t = run("table --beta 0.5 --twoN 4 --precision 30");
  CHECK(t.code == 0);
  CHECK(t.out.find("\"checksum\"") != std::string::npos);
  const Run e = run("estimate-beta --g power:beta=0.000001 --precision 30 --format json");
  CHECK(e.code == 0);
  CHECK(e.out.find("\"beta\": \"0.000001") != std::string::npos);
}

TEST_CASE("dglap problem file") {
  const fs::path problem = scratch() / "devolve.json";
  write(problem, R"({
    "tau": "-0.0332005",
    "g0_model": {"beta": "1", "precision": 50, "coeffs": ["0", "1", "0.3", "0.02"]},
    "fs0_model": {"beta": "1", "precision": 50, "coeffs": ["0.5", "0.2", "0.01"]},
    "x": ["0.1", "0.0001"],
    "output_digits": 12
  })");
  const Run r = run("dglap --problem " + problem.string());
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::string header;
  std::getline(rows, header);
  CHECK(header == "x,v,G");
  std::string row;
  std::getline(rows, row);
  CHECK(row.starts_with("0.1,2.30258509299,"));
  CHECK(run("dglap --problem " + problem.string()).out == r.out);

  write(scratch() / "bad.json", R"({"n_f": 4})");
  CHECK(run("dglap --problem " + (scratch() / "bad.json").string()).code == 2);
}

TEST_CASE("quick selftest passes") {
  const Run r = run("selftest --quick");
  CHECK(r.code == 0);
  CHECK(r.out.find("all suites pass") != std::string::npos);
}
