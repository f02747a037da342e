#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "loccstar/io.hpp"

using namespace loccstar;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(LOCCSTAR_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("loccstar_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kAlg = R"({"model":"finite","fibers":[{"label":"a1","dim":2},{"label":"a2","dim":1}]})";
const char* kIdentity =
    R"({"components":{"a1":[[[1,0],[0,0]],[[0,0],[1,0]]],"a2":[[[1,0]]]}})";
const char* kNonPositive =
    R"({"components":{"a1":[[[1,0],[0,0]],[[0,0],[-1,0]]],"a2":[[[1,0]]]}})";

}  // namespace

TEST_CASE("seminorm of the identity prints 1") {
  std::string alg = write_file("alg.json", kAlg);
  std::string elem = write_file("e.json", kIdentity);
  auto r = run_cli("seminorm --alg " + alg + " --elem " + elem + " --index a1");
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["result"].get<double>() == 1.0);
  CHECK(j["exact"].get<bool>());
  CHECK(j.contains("tolerance"));
}

TEST_CASE("sqrt of a non-positive element exits 1 with NotPositive") {
  std::string alg = write_file("alg.json", kAlg);
  std::string elem = write_file("np.json", kNonPositive);
  auto r = run_cli("sqrt --alg " + alg + " --elem " + elem);
  CHECK(r.status == 1);
  Json j = Json::parse(r.out);
  CHECK(j["error"] == "NotPositive");
}

TEST_CASE("unknown index exits 1 with UnknownIndex") {
  std::string alg = write_file("alg.json", kAlg);
  std::string elem = write_file("e.json", kIdentity);
  auto r = run_cli("seminorm --alg " + alg + " --elem " + elem + " --index zz");
  CHECK(r.status == 1);
  CHECK(Json::parse(r.out)["error"] == "UnknownIndex");
}

TEST_CASE("malformed json exits 2") {
  std::string broken = write_file("broken.json", "{nope");
  std::string alg = write_file("alg.json", kAlg);
  auto r = run_cli("seminorm --alg " + alg + " --elem " + broken + " --index a1");
  CHECK(r.status == 2);
  Json j = Json::parse(r.out);
  CHECK(j["error"] == "ParseError");

  std::string badschema = write_file("bad.json", R"({"components":{}})");
  auto r2 = run_cli("sup-norm --alg " + alg + " --elem " + badschema);
  CHECK(r2.status == 2);
  CHECK(Json::parse(r2.out)["error"] == "InvalidSpec");
}

TEST_CASE("unknown flags are rejected") {
  auto r = run_cli("seminorm --no-such-flag 1");
  CHECK(r.status == 2);
}

TEST_CASE("spectrum and is-positive report exactness") {
  std::string alg = write_file("talg.json", R"({"model":"tail","dim":1,"prefix_len":2})");
  std::string grow = write_file("grow.json",
      R"({"components":{"1":[[[1,0]]],"2":[[[1,0]]]},"tail":{"coeffs":[[[[1,0]]],[[[1,0]]]]}})");
  auto r = run_cli("is-positive --alg " + alg + " --elem " + grow);
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["result"].get<bool>());
  CHECK_FALSE(j["exact"].get<bool>());

  auto rs = run_cli("spectrum --alg " + alg + " --elem " + grow + " --horizon 8");
  Json js = Json::parse(rs.out);
  CHECK_FALSE(js["exact"].get<bool>());
}

TEST_CASE("sup-norm prints Unbounded for growing tails") {
  std::string alg = write_file("talg.json", R"({"model":"tail","dim":1,"prefix_len":2})");
  std::string grow = write_file("grow.json",
      R"({"components":{"1":[[[0,0]]],"2":[[[0,0]]]},"tail":{"coeffs":[[[[0,0]]],[[[2,0]]]]}})");
  auto r = run_cli("sup-norm --alg " + alg + " --elem " + grow);
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["result"] == "Unbounded");
}

TEST_CASE("element-level inner product via --elem/--elem2") {
  std::string alg = write_file("alg.json", kAlg);
  std::string e = write_file("e.json", kIdentity);
  auto r = run_cli("inner --alg " + alg + " --elem " + e + " --elem2 " + e);
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["result"]["components"]["a2"][0][0][0].get<double>() == 1.0);
}

TEST_CASE("gen emits parseable instances and is seed-deterministic") {
  auto r1 = run_cli("gen --kind element --seed 7");
  auto r2 = run_cli("gen --kind element --seed 7");
  CHECK(r1.status == 0);
  CHECK(r1.out == r2.out);
  Json j = Json::parse(r1.out);
  LocalAlgebra a = algebra_from_json(j["result"]["algebra"]);
  LocalElement e = element_from_json(j["result"]["element"], a);
  (void)e;

  std::string alg = write_file("alg.json", kAlg);
  auto r3 = run_cli("gen --kind positive-operator --seed 3 --alg " + alg);
  CHECK(r3.status == 0);
  Json j3 = Json::parse(r3.out);
  LocalAlgebra a2 = algebra_from_json(Json::parse(std::string(kAlg)));
  ModuleOperator t = operator_from_json(j3["result"]["operator"], a2);
  CHECK(op_is_positive(t).value);
}

TEST_CASE("verify exits 0 on pass, 3 on failure, byte-identical output") {
  auto r1 = run_cli("verify --seed 42 --trials 5");
  CHECK(r1.status == 0);
  auto r2 = run_cli("verify --seed 42 --trials 5");
  CHECK(r1.out == r2.out);
  Json j = Json::parse(r1.out);
  CHECK(j["result"].is_array());
  CHECK(j["result"].size() == 32);

  auto rt = run_cli("verify --seed 42 --trials 2 --format text");
  CHECK(rt.status == 0);
  CHECK(rt.out.find("PASS") != std::string::npos);

  auto rf = run_cli("verify --seed 1 --trials 3 --tol 0");
  CHECK(rf.status == 3);
}

TEST_CASE("sqrt output round-trips through inverse consumption") {
  std::string alg = write_file("alg.json", kAlg);
  std::string four = write_file("four.json",
      R"({"components":{"a1":[[[4,0],[0,0]],[[0,0],[4,0]]],"a2":[[[9,0]]]}})");
  auto r = run_cli("sqrt --alg " + alg + " --elem " + four);
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  std::string rootfile = write_file("root.json", dump_json(j["result"]));
  auto r2 = run_cli("seminorm --alg " + alg + " --elem " + rootfile + " --index a2");
  CHECK(r2.status == 0);
  CHECK(Json::parse(r2.out)["result"].get<double>() == doctest::Approx(3.0));
}
