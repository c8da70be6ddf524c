#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CERESA3_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("klein-verify passes", "[cli]") {
  const auto r = run("klein-verify");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["command"] == "klein-verify");
  for (const auto& c : j["checks"]) {
    CHECK(!c.contains("runtime_seconds"));
    const std::string p = c["expected"]["provenance"];
    CHECK((p == "published" || p == "derived" || p == "identity"));
  }
}

TEST_CASE("coho-verify is byte-identical across runs", "[cli]") {
  const auto a = run("coho-verify --seed 7");
  const auto b = run("coho-verify --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto text = run("--format text coho-verify");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("corrupted generators fail with a closure error", "[cli]") {
  std::ifstream in(std::string(CERESA3_DATA) + "/klein_generators.json");
  auto doc = nlohmann::json::parse(in);
  doc[2][0][0] = nlohmann::json::array({"1", "1", "0", "0", "0", "0"});
  const auto path = temp_file("ceresa3_bad_generators.json", doc.dump());
  const auto r = run("klein-verify --generators " + path.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("closure") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("invalid period matrices exit with code 2", "[cli]") {
  const auto path = temp_file("ceresa3_bad_tau.json",
                              R"({"re": [[0,0,0],[0,0,0],[0,0,0]], "im": [[1,0,0],[0,-1,0],[0,0,1]]})");
  CHECK(run("chi18 --tau " + path.string()).exit_code == 2);
  CHECK(run("--eps -1 qc --klein").exit_code == 2);
  CHECK(run("group-invariants").exit_code != 0);
  std::filesystem::remove(path);
}

TEST_CASE("single-purpose commands", "[cli]") {
  const auto qc = nlohmann::json::parse(run("qc --klein").out);
  CHECK(qc["rank"] == 6);
  CHECK(qc["det"] == "-1/4096");
  const auto order = run("group-order");
  CHECK(order.exit_code == 0);
  CHECK(order.out.find("168") != std::string::npos);
  const auto theta = run("theta --preset diag");
  CHECK(theta.exit_code == 0);
  CHECK(theta.out.find("1.2823") != std::string::npos);
}

TEST_CASE("precision override is echoed", "[cli]") {
  const auto r = run("--precision 40 coho-verify --trials 1");
  CHECK(nlohmann::json::parse(r.out)["config"]["precision_source"] == "flag");
}
