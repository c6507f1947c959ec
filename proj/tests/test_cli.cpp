#include "dtnmule/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dtnmule/report_io.hpp"

using namespace dtnmule;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(DTNMULE_CONFIG_DIR) + "/" + name; }
std::string fixture(const std::string& name) {
  return std::string(DTNMULE_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST(Cli, UnknownSubcommandIsValidationError) {
  EXPECT_EQ(cli({"frobnicate"}).code, kExitValidation);
  EXPECT_EQ(cli({}).code, kExitValidation);
}

TEST(Cli, BadOutputFormat) {
  EXPECT_EQ(cli({"--config", config("reference.cfg"), "--output", "xml", "analyze"}).code,
            kExitValidation);
}

TEST(Cli, MissingConfigFileIsIoError) {
  const CliRun r = cli({"--config", "/nonexistent/dir/x.cfg", "analyze"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(Cli, AnalyzeRequiresConfig) { EXPECT_EQ(cli({"analyze"}).code, kExitValidation); }

TEST(Cli, InvalidConfigIsValidationError) {
  const auto path = std::filesystem::temp_directory_path() / "dtnmule_bad.cfg";
  std::ofstream(path) << "[route]\nc1 = 5\nc2 = 3\nt_min = 1\nmean_delay = 1\nlink_rate = 1\n";
  EXPECT_EQ(cli({"--config", path.string(), "analyze"}).code, kExitValidation);
  std::filesystem::remove(path);
}

TEST(Cli, AnalyzeIsByteStable) {
  const CliRun a = cli({"--config", config("reference.cfg"), "analyze"});
  const CliRun b = cli({"--config", config("reference.cfg"), "analyze"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  ASSERT_EQ(doc["routes"].size(), 1u);
  EXPECT_EQ(doc["routes"][0]["reports"].size(), 20u);
  EXPECT_DOUBLE_EQ(doc["routes"][0]["reports"][19]["approx_mpaoi"].get<double>(), 136.4);
}

TEST(Cli, SweepNDefaultsToCsv) {
  const CliRun r = cli({"--config", config("reference.cfg"), "sweep-n"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream is(r.out);
  EXPECT_EQ(read_metrics_csv(is).size(), 20u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), kMetricsCsvHeader);
}

TEST(Cli, MultiRouteCsvHasBanners) {
  const CliRun r = cli({"--config", config("addis_ababa.cfg"), "sweep-n"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("# route: tulu_dimtu\n"), std::string::npos);
  EXPECT_NE(r.out.find("# route: route5\n"), std::string::npos);
  std::istringstream is(r.out);
  EXPECT_EQ(read_metrics_csv(is).size(), 100u);
}

TEST(Cli, SimulateWithSeedOverride) {
  const CliRun a = cli({"--config", fixture("clockwork.cfg"), "--seed", "7", "simulate"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const auto doc = nlohmann::json::parse(a.out);
  const auto& report = doc["routes"][0]["reports"][0];
  EXPECT_DOUBLE_EQ(report["simulated_mpaoi"].get<double>(), 36.0);
  EXPECT_EQ(report["replication"]["seeds"], nlohmann::json({7, 8, 9}));
}

TEST(Cli, SweepRoundTrip) {
  const CliRun r = cli({"--config", config("round_trip.cfg"), "sweep-rtt"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), kRoundTripCsvHeader);
  EXPECT_NE(r.out.find("\n120,1,6000,"), std::string::npos);
}

TEST(Cli, OptimizeReference) {
  const CliRun r = cli({"--config", config("reference.cfg"), "optimize"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& route = doc["routes"][0];
  EXPECT_EQ(route["plan"]["n_opt"], 7);
  EXPECT_EQ(route["plan"]["total_cost"], 3700.0);
  EXPECT_EQ(route["scan_check"], 7);
}

TEST(Cli, InfeasibleOptimizeStillSucceeds) {
  const CliRun r = cli({"--config", config("infeasible.cfg"), "optimize"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["routes"][0]["plan"]["feasible"], false);
  EXPECT_TRUE(doc["routes"][0]["scan_check"].is_null());
}

TEST(Cli, OptimizeNeedsThresholds) {
  EXPECT_EQ(cli({"--config", config("round_trip.cfg"), "optimize"}).code, kExitValidation);
}

TEST(Cli, IngestFromFileAndStdin) {
  const CliRun file = cli({"ingest", "--input", fixture("nouakchott_trips.csv")});
  ASSERT_EQ(file.code, kExitOk) << file.err;
  const auto doc = nlohmann::json::parse(file.out);
  EXPECT_EQ(doc["routes"][0]["fitted_t_min"], 30.0);
  EXPECT_EQ(doc["routes"][0]["fitted_mean_delay"], 29.0);

  std::ifstream in(fixture("addis_route5_trips.csv"));
  std::stringstream text;
  text << in.rdbuf();
  const CliRun piped = cli({"--output", "csv", "ingest"}, text.str());
  ASSERT_EQ(piped.code, kExitOk);
  EXPECT_NE(piped.out.find("ADD-5,8,26,26,26,0\n"), std::string::npos);
  EXPECT_NE(piped.err.find("ADD-X"), std::string::npos);
}

TEST(Cli, IngestErrors) {
  EXPECT_EQ(cli({"ingest", "--input", fixture("malformed_trips.csv")}).code, kExitValidation);
  EXPECT_EQ(cli({"ingest", "--input", fixture("missing.csv")}).code, kExitIo);
}

TEST(Cli, OutFileAndUnwritableTarget) {
  const auto path = std::filesystem::temp_directory_path() / "dtnmule_out.json";
  const CliRun r = cli({"--config", config("reference.cfg"), "--out", path.string(), "analyze"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_NO_THROW(nlohmann::json::parse(in));
  std::filesystem::remove(path);
  EXPECT_EQ(cli({"--config", config("reference.cfg"), "--out", "/nonexistent/dir/o.json",
                 "analyze"})
                .code,
            kExitIo);
}

TEST(Cli, TrafficBlock) {
  const CliRun r = cli({"--config", config("nouakchott.cfg"), "analyze"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["traffic"]["total"], 500000.0);
}
