// End-to-end tests of the command-line front end: output schemas, exit
// codes, batch determinism, cache byte-identity, and row isolation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef LSW_CLI_PATH
#error "LSW_CLI_PATH must point at the built lambda_sw binary"
#endif

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "lsw_cli_test";
  fs::create_directories(dir);
  static int counter = 0;
  const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string(LSW_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  res.out = slurp(out);
  res.err = slurp(err);
  return res;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "lsw_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream out(p, std::ios::trunc);
  out << content;
  return p;
}

const char* kCorpusCsv =
    "name,type,payload,strands\n"
    "unknot,seifert,[],\n"
    "trefoil,braid,1 1 1,2\n"
    "figure8,seifert,\"[[1,1],[0,-1]]\",\n";

}  // namespace

TEST_CASE("alex: outputs and exit codes") {
  const auto trefoil = run_cli("alex --braid \"1 1 1\" --strands 2");
  CHECK(trefoil.exit_code == 0);
  CHECK(trefoil.out == "{\"coeffs\":{\"-1\":\"1\",\"0\":\"-1\",\"1\":\"1\"}}\n");

  const auto empty = write_temp("empty.json", "[]");
  const auto unknot = run_cli("alex --seifert " + empty.string());
  CHECK(unknot.exit_code == 0);
  CHECK(unknot.out == "{\"coeffs\":{\"0\":\"1\"}}\n");

  const auto twocomp = run_cli("alex --braid \"1 1\" --strands 2");
  CHECK(twocomp.exit_code == 2);
  CHECK(twocomp.err.find("closure has 2 components") != std::string::npos);

  const auto missing = run_cli("alex");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("lambda: report values") {
  const auto trefoil = run_cli("lambda --braid \"1 1 1\" --strands 2 --name trefoil");
  CHECK(trefoil.exit_code == 0);
  const Json rep = Json::parse(trefoil.out);
  CHECK(rep["lambda_sw"] == "1");
  CHECK(rep["omega"] == "0");
  CHECK(rep["sw_sum"] == 1);
  CHECK(rep["theorem1"]["delta_second_at_1"] == "2");
  CHECK(rep["theorem1"]["matches"]["half"] == true);
  CHECK(rep["theorem1"]["matches"]["full"] == false);
  CHECK(rep["conjecture_check"]["applicable"] == false);

  const auto fig8 = run_cli("lambda --seifert " +
                            write_temp("fig8.json", "[[1,1],[0,-1]]").string() +
                            " --hd 2");
  CHECK(Json::parse(fig8.out)["lambda_sw"] == "0");
}

TEST_CASE("omega and eta spot values") {
  const auto omega = run_cli("omega --l 1 --chi 0 --r 1");
  const Json j = Json::parse(omega.out);
  CHECK(j["eta_dirac"] == "1/3");
  CHECK(j["eta_sign"] == "-4/3");
  CHECK(j["omega"] == "0");
  CHECK(j["closed_form_check"] == true);
  CHECK(j["regime_caveat"] == "formula stated for small r");

  const auto bad = run_cli("omega --l 0");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify suites exit zero") {
  CHECK(run_cli("verify sw-identity --corpus builtin").exit_code == 0);
  CHECK(run_cli("verify correction-r-independence").exit_code == 0);
  CHECK(run_cli("verify eq1-torsion").exit_code == 0);
  CHECK(run_cli("verify dirac-path").exit_code == 0);
  CHECK(run_cli("verify transgression --seed 7 --trials 6").exit_code == 0);
  const auto unknown = run_cli("verify no-such-suite");
  CHECK(unknown.exit_code != 0);
}

TEST_CASE("verify spectral accepts a grid file") {
  const auto grid = write_temp("grid.json", R"({
    "lambda0": "1/2",
    "samples": [
      {"lambda_ir": "1", "lambda": "0", "R": "2"},
      {"lambda_ir": "3", "lambda": "5", "R": "1/10"}
    ]
  })");
  const auto res = run_cli("verify spectral --precision 40 --grid-file " + grid.string());
  CHECK(res.exit_code == 0);
  const Json out = Json::parse(res.out);
  CHECK(out["samples"].size() == 2);
  CHECK(out["all_hold"] == true);

  const auto sw_report = run_cli("sw --braid \"1 1 1\" --strands 2 --name trefoil");
  CHECK(sw_report.exit_code == 0);
  const Json sw = Json::parse(sw_report.out);
  CHECK(sw["knot"] == "trefoil");
  CHECK(sw["sw_sum"] == 1);
  CHECK(sw["delta_second_at_1"] == "2");
  CHECK(sw["sw_zero"]["0"] == 1);
  CHECK(sw["sw_minus"]["2"] == 2);
}

TEST_CASE("batch: determinism, cache byte-identity, row isolation") {
  const fs::path dir = fs::temp_directory_path() / "lsw_cli_test";
  const auto corpus = write_temp("corpus.csv", kCorpusCsv);
  const fs::path cache = dir / "cache";
  fs::remove_all(cache);
  const fs::path out1 = dir / "batch1.jsonl", out2 = dir / "batch2.jsonl",
                 out3 = dir / "batch3.jsonl";

  const auto first = run_cli("batch --input " + corpus.string() + " --out " +
                             out1.string() + " --cache " + cache.string());
  CHECK(first.exit_code == 0);
  CHECK(first.err.find("3 computed") != std::string::npos);

  const auto second = run_cli("batch --input " + corpus.string() + " --out " +
                              out2.string() + " --cache " + cache.string());
  CHECK(second.exit_code == 0);
  CHECK(second.err.find("3 cache hits") != std::string::npos);
  CHECK(second.err.find("0 computed") != std::string::npos);

  // cached run is byte-identical to the fresh one, and to a cacheless run
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const auto no_cache = run_cli("batch --input " + corpus.string() + " --out " +
                                out3.string());
  CHECK(no_cache.exit_code == 0);
  const std::string b1 = slurp(out1);
  CHECK(b1 == slurp(out2));
  CHECK(b1 == slurp(out3));

  // expected values per row
  std::istringstream lines(b1);
  std::string line;
  std::vector<std::string> lambdas;
  while (std::getline(lines, line)) lambdas.push_back(Json::parse(line)["lambda_sw"]);
  CHECK(lambdas == std::vector<std::string>{"0", "1", "-1"});

  // malformed row changes only its own output
  const auto broken = write_temp("broken.csv",
                                 "name,type,payload,strands\n"
                                 "unknot,seifert,[],\n"
                                 "bad,seifert,\"[[1,0],[0,1]]\",\n"
                                 "figure8,seifert,\"[[1,1],[0,-1]]\",\n");
  const fs::path out4 = dir / "batch4.jsonl";
  const auto mixed = run_cli("batch --input " + broken.string() + " --out " +
                             out4.string());
  CHECK(mixed.exit_code == 0);
  std::istringstream mixed_lines(slurp(out4));
  std::vector<Json> rows;
  while (std::getline(mixed_lines, line)) rows.push_back(Json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["lambda_sw"] == "0");
  CHECK(rows[1].contains("error"));
  CHECK(rows[1]["knot"] == "bad");
  CHECK(rows[2]["lambda_sw"] == "-1");

  // env var overrides the cache directory
  const fs::path env_cache = dir / "env_cache";
  fs::remove_all(env_cache);
  ::setenv("LAMBDA_SW_CACHE", env_cache.c_str(), 1);
  const fs::path out5 = dir / "batch5.jsonl";
  const auto env_run = run_cli("batch --input " + corpus.string() + " --out " +
                               out5.string() + " --cache " + cache.string());
  ::unsetenv("LAMBDA_SW_CACHE");
  CHECK(env_run.exit_code == 0);
  CHECK(fs::exists(env_cache));
  CHECK(env_run.err.find("3 computed") != std::string::npos);
}

TEST_CASE("batch: per-row option overrides") {
  const auto corpus = write_temp("override.csv",
                                 "name,type,payload,strands,h_dirac,h_half,r,chi\n"
                                 "fig8_hd2,seifert,\"[[1,1],[0,-1]]\",,2,,,\n"
                                 "trefoil_hh1,seifert,\"[[-1,1],[0,-1]]\",,,1,1/2,-2\n");
  const fs::path out = fs::temp_directory_path() / "lsw_cli_test" / "override.jsonl";
  const auto res = run_cli("batch --input " + corpus.string() + " --out " + out.string());
  CHECK(res.exit_code == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(Json::parse(line)["lambda_sw"] == "0");  // -1 - (-1)
  std::getline(in, line);
  CHECK(Json::parse(line)["lambda_sw"] == "0");  // 1 - 1
}
