#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nhnet/scenario.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("nhnet_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "nhnet");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return nhnet::cli_main(static_cast<int>(argv.size()), argv.data());
}

fs::path write_config(const fs::path& dir, const json& doc) {
  const auto path = dir / "config.json";
  std::ofstream(path) << doc.dump(2);
  return path;
}

json defect_config() {
  return {{"schema_version", 1},
          {"scenario", "defect"},
          {"parameters", {{"u_values", {-5.0, -40.0}}, {"n_q", 200}}}};
}

}  // namespace

TEST_CASE("defect scenario writes its artifacts deterministically") {
  const auto dir = scratch("determinism");
  const auto cfg = write_config(dir, defect_config());
  REQUIRE(invoke({"defect", "--config", cfg.string(), "--out", (dir / "a").string()}) == 0);
  REQUIRE(invoke({"defect", "--config", cfg.string(), "--out", (dir / "b").string(), "--seedless"}) == 0);
  for (const char* name : {"transmission.csv", "bound_states.csv", "summary.json", "transmission.svg"}) {
    REQUIRE(fs::exists(dir / "a" / name));
    CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));
  }
  const auto csv = slurp(dir / "a" / "transmission.csv");
  CHECK(csv.rfind("U_over_kappa,E_over_kappa,abs_t_sq,arg_t,abs_r_sq\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);

  const auto manifest = slurp(dir / "a" / "manifest.txt");
  CHECK(manifest.find("tool: nhnet 0.1.0") != std::string::npos);
  CHECK(manifest.find("theta = 0.2  (default)") != std::string::npos);
  CHECK(manifest.find("n_q = 200\n") != std::string::npos);
  CHECK(manifest.find("runtime_seconds:") != std::string::npos);

  const auto summary = json::parse(slurp(dir / "a" / "summary.json"));
  CHECK(summary["curves"].size() == 2);
  CHECK(summary["curves"][0]["bound_states"].size() == 1);
}

TEST_CASE("format selection limits the outputs") {
  const auto dir = scratch("formats");
  const auto cfg = write_config(dir, defect_config());
  REQUIRE(invoke({"defect", "--config", cfg.string(), "--out", (dir / "o").string(), "--format", "json"}) == 0);
  CHECK(fs::exists(dir / "o" / "summary.json"));
  CHECK(fs::exists(dir / "o" / "manifest.txt"));
  CHECK_FALSE(fs::exists(dir / "o" / "transmission.csv"));
  CHECK_FALSE(fs::exists(dir / "o" / "transmission.svg"));
  CHECK(invoke({"defect", "--config", cfg.string(), "--out", (dir / "p").string(), "--format", "png"}) == 2);
}

TEST_CASE("configuration errors exit with status 2") {
  const auto dir = scratch("invalid");
  const auto out = (dir / "o").string();

  auto unknown = defect_config();
  unknown["parameters"]["thetta"] = 0.3;
  CHECK(invoke({"defect", "--config", write_config(dir, unknown).string(), "--out", out}) == 2);

  auto top = defect_config();
  top["seed"] = 4;
  CHECK(invoke({"defect", "--config", write_config(dir, top).string(), "--out", out}) == 2);

  auto wrong_type = defect_config();
  wrong_type["parameters"]["n_q"] = 20.5;
  CHECK(invoke({"defect", "--config", write_config(dir, wrong_type).string(), "--out", out}) == 2);

  auto version = defect_config();
  version["schema_version"] = 2;
  CHECK(invoke({"defect", "--config", write_config(dir, version).string(), "--out", out}) == 2);

  CHECK(invoke({"lee", "--config", write_config(dir, defect_config()).string(), "--out", out}) == 2);
  CHECK(invoke({"nonsense", "--config", write_config(dir, defect_config()).string(), "--out", out}) == 2);
  CHECK(invoke({"defect", "--config", (dir / "missing.json").string(), "--out", out}) == 2);
  CHECK(invoke({"defect", "--out", out}) == 2);

  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(invoke({"defect", "--config", (dir / "broken.json").string(), "--out", out}) == 2);
  CHECK_FALSE(fs::exists(dir / "o" / "summary.json"));
}

TEST_CASE("numerical failures exit with status 3") {
  const auto dir = scratch("numeric");
  auto doc = defect_config();
  doc["parameters"]["u_values"] = {5.0};
  CHECK(invoke({"defect", "--config", write_config(dir, doc).string(), "--out", (dir / "o").string()}) == 3);

  json lee{{"schema_version", 1}, {"parameters", {{"n_trunc", 20}, {"t_max", 30.0}}}};
  CHECK(invoke({"lee", "--config", write_config(dir, lee).string(), "--out", (dir / "o").string()}) == 3);
}

TEST_CASE("reduce scenario evaluates an inline network") {
  const auto dir = scratch("reduce");
  const json network{{"schema_version", 1},
                     {"n_sys", 1},
                     {"m_aux", 1},
                     {"h_s", json::array()},
                     {"h_a", {{0, 0, 0.0, -2.0}}},
                     {"rho", {{0, 0, 0.5, 0.0}}}};
  const json doc{{"schema_version", 1}, {"parameters", {{"mode", "markov"}, {"network", network}}}};
  REQUIRE(invoke({"reduce", "--config", write_config(dir, doc).string(), "--out", (dir / "o").string()}) == 0);
  const auto summary = json::parse(slurp(dir / "o" / "summary.json"));
  REQUIRE(summary["entries"].size() == 1);
  CHECK(summary["entries"][0][3].get<double>() == doctest::Approx(-0.125));

  auto bad = doc;
  bad["parameters"]["network"]["h_s"] = {{3, 3, 1.0, 0.0}};
  CHECK(invoke({"reduce", "--config", write_config(dir, bad).string(), "--out", (dir / "p").string()}) == 2);
  auto mode = doc;
  mode["parameters"]["mode"] = "adiabatic";
  CHECK(invoke({"reduce", "--config", write_config(dir, mode).string(), "--out", (dir / "p").string()}) == 2);
}

TEST_CASE("parse_config fills defaults and records them") {
  const auto cfg = nhnet::parse_config("lee", json{{"schema_version", 1}, {"parameters", {{"sigma", 4}}}}, "x");
  CHECK(cfg.parameters["sigma"].is_number_float());
  CHECK(cfg.parameters["sigma"].get<double>() == 4.0);
  CHECK_FALSE(cfg.defaulted.contains("sigma"));
  CHECK(cfg.defaulted.contains("omega"));
  CHECK(cfg.parameters["n_trunc"].get<int>() == 300);
}
