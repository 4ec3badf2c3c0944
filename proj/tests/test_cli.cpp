#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GEOCURV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data_file(const std::string& name) {
  return std::string(GEOCURV_TEST_DATA_DIR) + "/" + name;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate against the golden tables") {
  RunResult r = run("validate --preset morris-thorne");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "9/9 equation groups PASS"));
  CHECK(contains(r.output, "PASS  christoffel"));
  CHECK(contains(r.output, "PASS  curvature"));
  CHECK_FALSE(contains(r.output, "FAIL"));
}

TEST_CASE("validate rejects other models") {
  CHECK(run("validate --preset no-such").exit_code == 2);
}

TEST_CASE("report flags the published deviations") {
  RunResult r = run("report --preset morris-thorne");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "PASS  I.1"));
  CHECK(contains(r.output, "PASS  VI"));
  CHECK(contains(r.output, "FAIL  III.2"));
  CHECK(contains(r.output, "FAIL  VII"));
  // byte-identical across runs
  CHECK(run("report --preset morris-thorne").output == r.output);
}

TEST_CASE("report tree output is machine-readable") {
  RunResult r = run("report --preset morris-thorne --format tree");
  CHECK(r.exit_code == 1);
  nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["all_match"] == false);
  REQUIRE(doc["items"].size() == 13);
  bool saw = false;
  for (const auto& item : doc["items"])
    if (item["id"] == "I.3") {
      saw = true;
      CHECK(item["factor"] == "b^2/(3*(b^2 + X2^2)^2)");
      CHECK(item["matches"] == true);
    }
  CHECK(saw);
}

TEST_CASE("compute prints nonzero components") {
  RunResult r = run("compute --preset morris-thorne --tensor ricci");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "Ric[2,2] = 2*b^2/(b^2 + X2^2)^2\n");
  RunResult k = run("compute --preset morris-thorne --tensor kk");
  CHECK(k.exit_code == 0);
  CHECK(k.output == "(K.K): all components zero\n");
  RunResult s = run("compute --preset morris-thorne --tensor scalar");
  CHECK(s.exit_code == 0);
  CHECK(s.output == "kappa = 2*b^2/(b^2 + X2^2)^2\n");
}

TEST_CASE("compute tree output") {
  RunResult r =
      run("compute --preset morris-thorne --tensor ricci --format tree");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["kind"] == "component-table");
  REQUIRE(doc["tensors"]["ricci"].size() == 1);
  CHECK(doc["tensors"]["ricci"][0]["index"] == nlohmann::json({2, 2}));
  CHECK(doc["tensors"]["ricci"][0]["value"] == "2*b^2/(b^2 + X2^2)^2");
}

TEST_CASE("compute from a manifest file") {
  RunResult r =
      run("compute --manifest " + data_file("flat3.txt") + " --tensor riemann");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "R: all components zero\n");
}

TEST_CASE("argument and input errors") {
  CHECK(run("compute --preset morris-thorne --tensor no-such-tensor")
            .exit_code == 2);
  // exactly one model source
  CHECK(run("compute --tensor ricci").exit_code == 2);
  CHECK(run("compute --preset morris-thorne --manifest x --tensor ricci")
            .exit_code != 0);
  RunResult bad =
      run("compute --manifest " + data_file("bad.txt") + " --tensor ricci");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "line 3"));
  // a conformal tensor needs four dimensions
  CHECK(run("compute --manifest " + data_file("flat3.txt") + " --tensor weyl")
            .exit_code == 3);
}

TEST_CASE("output redirection") {
  std::string path = "/tmp/geocurv_cli_out.txt";
  std::remove(path.c_str());
  RunResult r =
      run("compute --preset morris-thorne --tensor ricci --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "Ric[2,2] = 2*b^2/(b^2 + X2^2)^2\n");
  std::remove(path.c_str());
}
