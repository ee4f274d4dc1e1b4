#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs a shell command with stderr silenced and captures stdout.
RunResult run_shell(const std::string& command_base) {
  std::string command = command_base + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    r.output.append(buffer, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(CLUSTEREXP_CLI_PATH) + " " + args);
}

}  // namespace

TEST_CASE("expand tabulates the fan numerators") {
  RunResult r = run_cli("expand --orientation FF");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["n"] == 3);
  REQUIRE(j["variables"].size() == 6);
  bool found = false;
  for (const Json& v : j["variables"])
    if (v["interval"] == Json::array({1, 2})) {
      found = true;
      CHECK(v["text"] == "x1*x4*x7 + x2*x3*x5 + x3*x4*x6");
      CHECK(v["numerator"]["vars"] == 9);
      CHECK(v["numerator"]["terms"].size() == 3);
    }
  CHECK(found);
}

TEST_CASE("expand handles the square without an orientation") {
  RunResult r = run_cli("expand --n 1");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  REQUIRE(j["variables"].size() == 1);
  CHECK(j["variables"][0]["text"] == "x2*x4 + x3*x5");
}

TEST_CASE("expand rejects incomplete or contradictory sources") {
  CHECK(run_cli("expand --n 2").exit_code == 2);
  CHECK(run_cli("expand").exit_code == 2);
  CHECK(run_cli("expand --orientation FX").exit_code == 2);
  CHECK(run_cli("expand --orientation FF --n 4").exit_code == 2);
  CHECK(run_cli("expand --orientation FF --input foo.json").exit_code == 2);
}

TEST_CASE("expand reads a triangulation from standard input") {
  RunResult r = run_shell("echo '{\"orientation\": \"FF\"}' | " +
                          std::string(CLUSTEREXP_CLI_PATH) +
                          " expand --input -");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["variables"].size() == 6);
}

TEST_CASE("expand honors the seed limit") {
  CHECK(run_cli("expand --orientation FF --seed-limit 3").exit_code == 2);
}

TEST_CASE("expand writes to a file") {
  std::string path = "/tmp/clusterexp_cli_test_expand.json";
  std::remove(path.c_str());
  RunResult r = run_cli("expand --n 1 --output " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string text;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, f)) > 0)
    text.append(buffer, got);
  std::fclose(f);
  CHECK(Json::parse(text)["variables"].size() == 1);
  std::remove(path.c_str());
}

TEST_CASE("verify a single triangulation") {
  RunResult r = run_cli("verify --orientation FF");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("6 intervals") != std::string::npos);
  CHECK(r.output.find("ok   ") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify all small orientations") {
  RunResult r = run_cli("verify --all --max-n 3");
  CHECK(r.exit_code == 0);
  // n=1 once, n=2 twice, n=3 four times.
  CHECK(r.output.find("7 triangulations") != std::string::npos);
  CHECK(run_cli("verify --all --max-n 2 --orientation F").exit_code == 2);
}

TEST_CASE("export the ice quiver as DOT") {
  RunResult r = run_cli("export --orientation FF --what ice --format dot");
  REQUIRE(r.exit_code == 0);
  int arrow_count = 0;
  for (std::size_t pos = r.output.find(" -> "); pos != std::string::npos;
       pos = r.output.find(" -> ", pos + 4))
    ++arrow_count;
  CHECK(arrow_count == 10);
  int box_count = 0;
  for (std::size_t pos = r.output.find("shape=box"); pos != std::string::npos;
       pos = r.output.find("shape=box", pos + 9))
    ++box_count;
  CHECK(box_count == 6);
}

TEST_CASE("export a snake graph as JSON") {
  RunResult r = run_cli(
      "export --orientation FF --what snake --interval 1,2 --format json");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["vertices"].size() == 6);
  int boundary = 0;
  for (const Json& e : j["edges"]) boundary += e["kind"] == "boundary";
  CHECK(boundary == 7);
}

TEST_CASE("export the quiver with potential as JSON") {
  RunResult r = run_cli("export --orientation FF --what qp --format json");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["arrows"].size() == 16);
  CHECK(j["cycles"].size() == 8);
}

TEST_CASE("export validates its flags") {
  CHECK(run_cli("export --orientation FF --what triangulation --format dot")
            .exit_code == 2);
  CHECK(run_cli("export --orientation FF --what nonsense").exit_code == 2);
  CHECK(run_cli("export --orientation FF --what ice --format xml").exit_code ==
        2);
  CHECK(run_cli("export --orientation FF --what snake --interval 3,1")
            .exit_code == 2);
}

TEST_CASE("help and bad subcommands") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}
