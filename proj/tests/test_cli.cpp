#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(CRL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expected_status = 0) {
  const Run r = run("--json " + args);
  CHECK(r.status == expected_status);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("degree") {
  const auto j = run_json("degree 3,2");
  CHECK(j["command"] == "degree");
  CHECK(j["schema_version"] == 1);
  CHECK(j["partition"] == nlohmann::json::array({3, 2}));
  CHECK(j["results"]["crl_degree"]["value"] == 12);
  CHECK(j["results"]["de_jonquieres_degree"]["value"] == 12);
  CHECK(j.contains("certified"));
  CHECK_FALSE(j.contains("timing"));
  CHECK(run_json("--timing degree 3,2").contains("timing"));
}

TEST_CASE("JSON output is byte-identical across runs") {
  for (const char* args : {"degree 1,2,2,2,3,3,4", "singular 1,2,2,2,3,3,4", "ideal 3,2 4", "ideal 3,3 3 --gens-up-to 4",
                           "covariants 5 3,2", "char pleth 2 5"}) {
    CAPTURE(args);
    const Run a = run(std::string("--json ") + args);
    const Run b = run(std::string("--json ") + args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("ideal reports both methods") {
  const auto j = run_json("ideal 3,2 4");
  CHECK(j["results"]["kernel"]["method"] == "linear-algebra");
  CHECK(j["results"]["prediction"]["method"] == "complex-prediction");
  CHECK(j["results"]["kernel"]["character"]["text"] == "s12 + s8 + s4 + s0");
  CHECK(j["results"]["agreement"]["agree"] == true);
  CHECK(j["certified"] == true);
  const auto k = run_json("ideal 3,2 4 --method kernel");
  CHECK_FALSE(k["results"].contains("prediction"));
}

TEST_CASE("unknown D falls back to the kernel with a warning") {
  const auto j = run_json("ideal 2,2 3");
  REQUIRE(j["warnings"].size() == 1);
  CHECK(j["warnings"][0].get<std::string>().find("unknown D") != std::string::npos);
  CHECK(j["results"]["kernel"]["character"]["text"] == "s6");
  CHECK_FALSE(j["results"].contains("prediction"));
}

TEST_CASE("exit codes") {
  CHECK(run("degree 3,0").status == 2);
  CHECK(run("--json degree 3,x").status == 2);
  CHECK(run("ideal 3,2 0").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("ideal 3,2 4", "CRL_MAX_DIM=10").status == 3);
  CHECK(run("ideal 3,2 4 --max-dim 10").status == 3);
  const Run e = run("--json degree 3,0");
  CHECK(nlohmann::json::parse(e.out).contains("error"));
}

TEST_CASE("covariants and character operations") {
  const auto j = run_json("covariants 5 3,2 --calibrate 'H^2' 'i*F^2'");
  CHECK(j["command"] == "covariants");
  CHECK(j["results"]["calibration"]["relations"] == nlohmann::json::array({nlohmann::json::array({25, -6})}));
  const auto c = run_json("char pleth 2 5");
  CHECK(c["results"]["character"]["text"] == "s10 + s6 + s2");
  CHECK(run("char cg 2").status == 2);
  const Run text = run("char wedge 2 3");
  CHECK(text.status == 0);
  CHECK(text.out.find("s4 + s0") != std::string::npos);
}
