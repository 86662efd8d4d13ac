#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>

#include "support.hpp"
#include "thermosim/csv_io.hpp"

namespace fs = std::filesystem;
using thermosim::read_file;

namespace {

const fs::path kDir = fs::temp_directory_path() / "thermosim_cli_test";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::string& args) {
  fs::create_directories(kDir);
  const auto out = kDir / "stdout.txt", err = kDir / "stderr.txt";
  const std::string cmd = std::string(THERMOSIM_CLI) + " " + args + " >" + out.string() + " 2>" +
                          err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out), read_file(err)};
}

std::string data(const std::string& rel) { return thermosim::test::data(rel).string(); }
std::string tmp(const std::string& name) { return (kDir / name).string(); }

}  // namespace

TEST_CASE("simulate is byte identical across runs") {
  const std::string common = " --scenario " + data("scenarios/base_station.json");
  REQUIRE(cli("simulate" + common + " --out-trajectory " + tmp("a.csv") + " --out-metrics " +
              tmp("a.json")).code == 0);
  REQUIRE(cli("simulate" + common + " --out-trajectory " + tmp("b.csv") + " --out-metrics " +
              tmp("b.json")).code == 0);
  CHECK(read_file(tmp("a.csv")) == read_file(tmp("b.csv")));
  CHECK(read_file(tmp("a.json")) == read_file(tmp("b.json")));
  const auto traj = thermosim::parse_trajectory(read_file(tmp("a.csv")));
  CHECK(traj.size() == 1440);
  CHECK_NOTHROW(thermosim::parse_metrics(read_file(tmp("a.json"))));
}

TEST_CASE("usage errors exit 2") {
  auto r = cli("simulate --scenario x.json");
  CHECK(r.code == 2);
  CHECK(r.err.find("\"error\":\"usage\"") != std::string::npos);
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("validate-model --preset fig9 --out " + tmp("f.csv")).code == 2);
}

TEST_CASE("config errors exit 3 with one json line") {
  std::ofstream(kDir / "broken.json") << R"({"enclosure": {"side_length_m": 1}})";
  const auto r = cli("simulate --scenario " + tmp("broken.json") + " --out-trajectory " +
                     tmp("x.csv") + " --out-metrics " + tmp("x.json"));
  CHECK(r.code == 3);
  CHECK(r.err.find("\"error\":\"config\"") != std::string::npos);
  CHECK(r.err.find("broken.json") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK(cli("simulate --scenario /nonexistent.json --out-trajectory " + tmp("x.csv") +
            " --out-metrics " + tmp("x.json")).code == 3);
}

TEST_CASE("trace gaps exit 4") {
  std::string sc = read_file(data("scenarios/base_station.json"));
  const std::string key = "\"duration_h\": 24";
  REQUIRE(sc.find(key) != std::string::npos);
  sc.replace(sc.find(key), key.size(), "\"duration_h\": 48");
  for (auto pos = sc.find("../traces/"); pos != std::string::npos; pos = sc.find("../traces/")) {
    sc.replace(pos, 10, data("traces") + "/");
  }
  std::ofstream(kDir / "long.json") << sc;
  const auto r = cli("simulate --scenario " + tmp("long.json") + " --out-trajectory " +
                     tmp("x.csv") + " --out-metrics " + tmp("x.json"));
  CHECK(r.code == 4);
  CHECK(r.err.find("\"error\":\"trace\"") != std::string::npos);
}

TEST_CASE("design writes the sweep and the selection") {
  const auto r = cli("design --scenario " + data("scenarios/edge_datacenter.json") + " --space " +
                     data("design/seasons_space.json") + " --objective " +
                     data("design/availability_objective.json") + " --out " + tmp("sweep.csv"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"feasible\":true") != std::string::npos);
  const auto rows = thermosim::parse_sweep(read_file(tmp("sweep.csv")));
  CHECK(rows.size() == 90);
  CHECK(fs::exists(tmp("sweep.selection.json")));
  const auto none = cli("design --scenario " + data("scenarios/edge_datacenter.json") +
                        " --space " + data("design/seasons_space.json") + " --objective " +
                        data("design/unsatisfiable_objective.json") + " --out " + tmp("none.csv"));
  CHECK(none.code == 0);
  CHECK(none.out.find("\"feasible\":false") != std::string::npos);
}

TEST_CASE("schedule and validate-model") {
  const auto r = cli("schedule --scenario " + data("scenarios/nano_node.json") + " --horizon " +
                     data("horizons/day_night.json") + " --out-plan " + tmp("plan.csv") +
                     " --compare-naive");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("gain_percent") != std::string::npos);
  CHECK(thermosim::parse_plan(read_file(tmp("plan.csv"))).utilization.size() == 24);
  REQUIRE(cli("validate-model --preset fig6c --out " + tmp("fig6c.csv")).code == 0);
  CHECK(read_file(tmp("fig6c.csv")).rfind("series,time_s,t_enc_c\n", 0) == 0);
}
