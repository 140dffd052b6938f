#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "secrecy/cli_app.hpp"

using namespace secrecy;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("essr_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("essr subcommand writes a dataset and is idempotent") {
  TempDir dir;
  const std::vector<std::string> args = {
      "essr", "--M", "12",    "--N", "12",   "--K", "4",  "--k", "4",
      "--snr-db", "10",  "--strategy", "random", "--trials", "300", "--seed", "7",
      "--out", dir.file("point.csv")};
  CHECK(run_cli(args) == 0);
  const std::string first = slurp(dir.file("point.csv"));
  CHECK(first.rfind("# spec: ", 0) == 0);
  CHECK(first.find("\npoint,mc_mean,mc_stderr,analytic,trials\n") != std::string::npos);
  CHECK(run_cli(args) == 0);
  CHECK(slurp(dir.file("point.csv")) == first);

  // thread count must not alter the bytes
  auto threaded = args;
  threaded.push_back("--threads");
  threaded.push_back("8");
  CHECK(run_cli(threaded) == 0);
  CHECK(slurp(dir.file("point.csv")) == first);
}

TEST_CASE("unit conversion applies at output only") {
  TempDir dir;
  std::vector<std::string> nats = {"essr", "--M", "12", "--N", "12", "--K", "4", "--k", "4",
                                   "--snr-db", "10", "--strategy", "random", "--trials", "200",
                                   "--format", "json", "--out", dir.file("nats.json")};
  std::vector<std::string> bits = nats;
  bits[bits.size() - 1] = dir.file("bits.json");
  bits.push_back("--unit");
  bits.push_back("bits");
  CHECK(run_cli(nats) == 0);
  CHECK(run_cli(bits) == 0);
  const std::string a = slurp(dir.file("nats.json"));
  const std::string b = slurp(dir.file("bits.json"));
  CHECK(a.find("\"unit\": \"nats\"") != std::string::npos);
  CHECK(b.find("\"unit\": \"bits\"") != std::string::npos);
  // config echo makes the files self-describing
  CHECK(a.find("\"seed\": 1") != std::string::npos);
  CHECK(a.find("\"trials\": 200") != std::string::npos);
}

TEST_CASE("config file with unknown keys is rejected") {
  TempDir dir;
  {
    std::ofstream os(dir.file("bad.json"));
    os << R"({"M": 10, "N": 10, "K": 4, "k": 2, "snr_db": 10, "strateggy": "random"})";
  }
  CHECK(run_cli({"essr", "--config", dir.file("bad.json")}) == 2);
  {
    std::ofstream os(dir.file("good.json"));
    os << R"({"M": 12, "N": 12, "K": 4, "k": 4, "snr_db": 10, "strategy": "random",
              "trials": 100, "seed": 3})";
  }
  CHECK(run_cli({"essr", "--config", dir.file("good.json"), "--out", dir.file("ok.csv")}) == 0);
}

TEST_CASE("invalid parameters exit with code 2 and name the field") {
  CHECK(run_cli({"essr", "--M", "20", "--N", "20", "--K", "400", "--k", "25", "--snr-db", "30",
                 "--strategy", "greedy-main", "--trials", "10"}) == 2);
  CHECK(run_cli({"essr", "--M", "10", "--N", "10", "--K", "4", "--k", "5", "--snr-db", "10",
                 "--strategy", "random", "--trials", "10"}) == 2);
  CHECK(run_cli({"essr", "--M", "10", "--N", "10", "--K", "4", "--k", "2", "--snr-db", "10",
                 "--strategy", "no-such-strategy", "--trials", "10"}) == 2);
  CHECK(run_cli({"bogus-subcommand"}) == 2);
}

TEST_CASE("sweep subcommand emits one row per axis value") {
  TempDir dir;
  CHECK(run_cli({"sweep", "--M", "10", "--N", "12", "--K", "40", "--snr-db", "20", "--strategy",
                 "greedy-main", "--trials", "60", "--axis", "k", "--values", "1,2,3", "--out",
                 dir.file("sweep.csv")}) == 0);
  const std::string csv = slurp(dir.file("sweep.csv"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // echo + header + 3 rows
}

TEST_CASE("table1 subcommand writes the energy table") {
  TempDir dir;
  CHECK(run_cli({"table1", "--trials", "300", "--out", dir.file("table.csv")}) == 0);
  const std::string csv = slurp(dir.file("table.csv"));
  CHECK(csv.rfind("# spec: ", 0) == 0);
  CHECK(csv.find("\nM,numerical,analytical,gumbel_ref\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("figure subcommand honors overrides") {
  TempDir dir;
  CHECK(run_cli({"figure", "--id", "4", "--trials", "30", "--out", dir.file("fig4"),
                 "--format", "json"}) == 0);
  const std::string json = slurp(dir.file("fig4.json"));
  CHECK(json.find("\"figure\": 4") != std::string::npos);
  CHECK(run_cli({"figure", "--id", "12", "--trials", "30"}) == 2);
}

TEST_CASE("output directory environment variable provides the default root") {
  TempDir dir;
  ::setenv("ESSR_SIM_OUT_DIR", dir.path.c_str(), 1);
  CHECK(run_cli({"essr", "--M", "12", "--N", "12", "--K", "2", "--k", "2", "--snr-db", "10",
                 "--strategy", "random", "--trials", "50", "--out", "env_point.csv"}) == 0);
  ::unsetenv("ESSR_SIM_OUT_DIR");
  CHECK(fs::exists(dir.path / "env_point.csv"));
}

TEST_CASE("validate subcommand runs selected deterministic criteria") {
  CHECK(run_cli({"validate", "--only", "8", "--quick"}) == 0);
}

TEST_SUITE_END();
