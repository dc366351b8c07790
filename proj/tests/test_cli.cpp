#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dimkac/cli.hpp"

using namespace dimkac;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("kac command") {
  auto a = run({"kac", "--N", "1", "--level", "2", "--symbolic"});
  CHECK(a.code == 0);
  auto j = parse(a);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["symbolic_equal"] == true);
  CHECK(j.contains("timestamp"));
  CHECK(j.contains("seconds"));

  auto b = run({"kac", "--N", "2", "--level", "3", "--trials", "20", "--seed", "42"});
  CHECK(b.code == 0);
  auto jb = parse(b);
  CHECK(jb["backend"] == "modular");
  CHECK(jb["points"].size() == 20);
  CHECK(jb["points"][0].contains("assignment"));

  auto c = run({"kac", "--N", "0", "--level", "1"});
  CHECK(c.code == 2);
  CHECK(c.out.empty());
  CHECK(c.err.find("--N") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"kac", "--N", "2", "--level", "1", "--bogus"}).code == 2);
  CHECK(run({"kac", "--N", "two", "--level", "1"}).code == 2);
  CHECK(run({"kac", "--N", "2"}).code == 2);
  CHECK(run({"kac", "--N", "2", "--level", "1", "--trials", "0"}).code == 2);
  CHECK(run({"kac", "--N", "2", "--level", "1", "--format", "xml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"singular", "--N", "2", "--r", "1,", "--s", "1"}).code == 2);
  CHECK(run({"singular", "--N", "3", "--r", "1", "--s", "1"}).code == 2);
  CHECK(run({"project", "--N", "3", "--r", "2,1", "--s", "1,1"}).code == 2);
  CHECK(run({"gmac", "--N", "2", "--tuple", "1"}).code == 2);
  CHECK(run({"singular", "--N", "2", "--r", "1", "--s", "1", "--backend", "exact"}).code == 2);
  CHECK(run({"gmac", "--N", "2", "--tuple", "1|", "--format", "csv"}).code == 2);
}

TEST_CASE("gmac command") {
  auto a = run({"gmac", "--N", "2", "--tuple", "|1"});
  CHECK(a.code == 0);
  auto j = parse(a);
  CHECK(j["expansion"]["|1"] == "1");
  CHECK(j["eigenvalue"] == "(s^2*t^2*u2-s^2*t*u2+t*u1+u2)/(t)");
  auto b = parse(run({"gmac", "--N", "1", "--tuple", "2"}));
  CHECK(b["expansion"] == nlohmann::json{{"2", "1"}});
  auto c = run({"gmac", "--N", "2", "--tuple", "1,1,"});
  CHECK(c.code == 2);
  auto d = parse(run({"gmac", "--N", "2", "--tuple", "1|1", "--backend", "modular", "--seed", "3"}));
  CHECK(d["kernel_dim"] == 1);
  CHECK(d["expansion"]["1|1"] == "1");
}

TEST_CASE("singular, project, count") {
  auto a = run({"singular", "--N", "2", "--r", "1", "--s", "1", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(parse(a)["verdict"] == "PASS");
  auto b = run({"project", "--N", "2", "--r", "1", "--s", "2", "--seed", "7"});
  CHECK(b.code == 0);
  auto jb = parse(b);
  CHECK(jb["verdict"] == "PASS");
  CHECK(jb.contains("ratio"));
  auto c = run({"count", "--N", "3", "--level", "4"});
  CHECK(c.code == 0);
  CHECK(parse(c)["count"] == 51);
  auto d = run({"count", "--N", "2", "--level", "2", "--format", "csv"});
  CHECK(d.out == "level,count,enumerated\n0,1,1\n1,2,2\n2,5,5\n");
  auto e = run({"count", "--N", "3", "--level", "4", "--format", "pretty"});
  CHECK(e.out == "51\n");
}

TEST_CASE("kac csv is the Gram matrix") {
  auto a = run({"kac", "--N", "1", "--level", "1", "--symbolic", "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == "row\\col,1\n1,(s^2*t^2*u1^2-s^2*t*u1^2-t*u1^2+u1^2)/(t)\n");
}

TEST_CASE("paper parameter dictionary") {
  auto a = run({"--paper-params"});
  CHECK(a.code == 0);
  CHECK(parse(a)["q"] == "s^2*t");
  auto b = parse(run({"count", "--N", "1", "--level", "1", "--paper-params"}));
  CHECK(b["parameters"]["p"] == "s^2");
}

TEST_CASE("reproducible output and --out") {
  const std::vector<std::string> args = {"singular", "--N", "3", "--r", "2,1", "--s", "1,1", "--seed", "5", "--reproducible"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("timestamp") == std::string::npos);
  auto k1 = run({"kac", "--N", "2", "--level", "2", "--seed", "9", "--reproducible"});
  auto k2 = run({"kac", "--N", "2", "--level", "2", "--seed", "9", "--reproducible"});
  CHECK(k1.out == k2.out);
  CHECK(k1.out.find("seconds") == std::string::npos);
  auto k3 = run({"kac", "--N", "2", "--level", "2", "--seed", "10", "--reproducible"});
  CHECK(k1.out != k3.out);

  const std::string path = "test_cli_out.json";
  std::remove(path.c_str());
  auto c = run({"count", "--N", "2", "--level", "3", "--out", path, "--reproducible"});
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["count"] == 10);
  std::remove(path.c_str());
}
