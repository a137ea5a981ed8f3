#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dessinry::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell; stdout only.
Result run_binary(const std::string& args) {
  std::string cmd = std::string(DESSINRY_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t k = 0;
  for (std::size_t p = 0; (p = s.find(needle, p)) != std::string::npos; p += needle.size()) ++k;
  return k;
}

}  // namespace

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--n", "3", "--d", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "dessinry/1");
  CHECK(j["classes"].size() == 3);
  auto t = run({"enumerate", "--n", "4", "--d", "2"});
  CHECK(t.code == 0);
  CHECK(t.out.find("classes=7") != std::string::npos);
}

TEST_CASE("table1") {
  auto r = run({"table1", "--rows", "1,2,3", "--check"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "PASS") == 3);
  CHECK(count(r.out, "FAIL") == 0);
  auto j = nlohmann::json::parse(run({"table1", "--rows", "58", "--json"}).out);
  CHECK(j["schema"] == "dessinry/1");
}

TEST_CASE("hurwitz") {
  auto r = run({"hurwitz", "--a", "2", "--lift", "L3", "--emit", "dessin"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["d"] == 4);
  CHECK(j["profile"] == nlohmann::json::parse("[[4],[2,1,1],[2,1,1],[2,1,1]]"));
  CHECK(j["genus"] == 0);
  auto o = run({"hurwitz", "--a", "2", "--lift", "L4", "--emit", "origami"});
  CHECK(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["m"] == 4);
  auto d = run({"hurwitz", "--a", "2", "--lift", "L1", "--emit", "dot"});
  CHECK(d.out.rfind("graph", 0) == 0);
}

TEST_CASE("monodromy") {
  auto r = run({"monodromy", "--poly", "[0,0,6.75,-6.75]", "--branch-points", "[0,1]"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["profile"] == nlohmann::json::parse("[[3],[2,1],[2,1]]"));
  CHECK(j["genus"] == 0);
}

TEST_CASE("modular commands") {
  auto ls = run({"lambda-star", "--tau", "0,1", "--json"});
  REQUIRE(ls.code == 0);
  auto j = nlohmann::json::parse(ls.out);
  CHECK(std::abs(j["value"][0].get<double>() - 2.0) < 1e-14);
  auto a = nlohmann::json::parse(run({"ap", "--t", "1", "--json"}).out);
  CHECK(std::abs(a["value"][0].get<double>() - 2.0) < 1e-14);
  auto q = nlohmann::json::parse(run({"qseries", "--order", "2", "--json"}).out);
  CHECK(q["coefficients"] == nlohmann::json::parse(R"(["1","16","128"])"));
}

TEST_CASE("origami commands") {
  std::string path = "cli_pillow.json";
  std::ofstream(path) << R"({"m":1,"R":[0],"L":[0],"U":[0],"D":[0]})";
  auto r = run({"origami", "to-dessin", "--input", path});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["perms"] == nlohmann::json::parse("[[0],[0],[0],[0]]"));
  CHECK(run({"origami", "delta", "--op", "ver", "--input", path}).code == 0);
  CHECK(run({"origami", "orbit", "--input", path, "--format", "json"}).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("orbit") {
  auto r = run({"orbit", "--n", "4", "--d", "2", "--gens", "preset:gamma2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "dessinry/1");
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"enumerate", "--n", "3"}).code == 2);
  CHECK(run({"enumerate", "--n", "3", "--d", "2", "--bogus"}).code == 2);
  CHECK(run({"enumerate", "--n", "3", "--d", "2", "--format", "xml"}).code == 2);
  auto e = run({"hurwitz", "--a", "0.5", "--lift", "L1"});
  CHECK(e.code == 1);
  CHECK(e.err.find("no-such-lift") != std::string::npos);
  CHECK(run({"enumerate", "--n", "3", "--d", "20"}).code == 1);
  CHECK(run({"monodromy", "--poly", "[0,", "--branch-points", "[0]"}).code == 2);
}

TEST_CASE("binary is deterministic") {
  for (std::string args : {"enumerate --n 4 --d 3 --format json --jobs 4", "orbit --n 4 --d 3 --gens preset:pure",
                           "hurwitz --a 3 --lift L1", "table1 --check"}) {
    auto a = run_binary(args), b = run_binary(args);
    CHECK(a.code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
  CHECK(run_binary("enumerate --n 3 --d 4 --jobs 1").out == run_binary("enumerate --n 3 --d 4 --jobs 3").out);
  CHECK(run_binary("nonsense").code == 2);
}

TEST_CASE("tolerance override") {
  setenv("DESSINRY_TOL", "1e-30", 1);
  auto r = run({"table1", "--rows", "1", "--check"});
  unsetenv("DESSINRY_TOL");
  // a tolerance below the evaluation accuracy makes the check fail or the evaluation refuse
  CHECK(r.code == 1);
}
