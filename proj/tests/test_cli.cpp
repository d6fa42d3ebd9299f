#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zk/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = zk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("zk_test_" + std::to_string(std::rand()) + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = path / name;
    std::ofstream f(p);
    f << content;
    return p.string();
  }
};

}  // namespace

TEST_CASE("decision commands mirror booleans in the exit code") {
  auto t = run({"unimodular", "--vars", "X", "--ideal", "[]", "--fs", "[\"X\", \"1 - X\"]"});
  CHECK(t.code == 0);
  CHECK(t.doc()["result"]["unimodular"] == true);
  CHECK(t.doc()["schema"] == "1");

  auto f = run({"unimodular", "--vars", "X,Y", "--ideal", "[]", "--fs", "[\"X\", \"Y\"]"});
  CHECK(f.code == 1);
  CHECK(f.doc()["result"]["unimodular"] == false);

  auto m = run({"member", "--vars", "X", "--ideal", "[\"X^2\"]", "--f", "X"});
  CHECK(m.code == 1);
  auto r = run({"radical-member", "--vars", "X", "--ideal", "[\"X^2\"]", "--f", "X"});
  CHECK(r.code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"member", "--vars", "X"}).code == 2);          // missing flags
  CHECK(run({"no-such-command"}).code == 2);                // unknown subcommand
  CHECK(run({"member", "--vars", "X", "--ideal", "oops", "--f", "X"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("computation errors exit with 3 and name the module error") {
  auto r = run({"classify-unit", "--laurent", "X + X^2"});
  CHECK(r.code == 3);
  CHECK(r.doc()["error"]["code"] == "not_a_unit");
}

TEST_CASE("kdim reports the appendix gap pair") {
  auto four = run({"kdim", "--vars", "x,y", "--ideal", "[\"x^2\", \"y^2\"]"});
  CHECK(four.doc()["result"]["kdim"] == 4);
  auto three = run({"kdim", "--vars", "x,y", "--ideal", "[\"x^2\", \"x y\", \"y^2\"]"});
  CHECK(three.doc()["result"]["kdim"] == 3);
  auto inf = run({"kdim", "--vars", "x", "--ideal", "[]"});
  CHECK(inf.doc()["result"]["kdim"] == "infinite");
}

TEST_CASE("pn-cohomology reports dims, oracle and a transcript") {
  auto r = run({"pn-cohomology", "--n", "1", "--d", "0"});
  CHECK(r.code == 0);
  json res = r.doc()["result"];
  CHECK(res["dims"] == json::array({1, 0}));
  CHECK(res["match"] == true);
  CHECK_FALSE(r.doc()["verification"].empty());
}

TEST_CASE("gb output is canonical and reparses") {
  auto r = run({"gb", "--vars", "X,Y", "--ideal", "[\"X - Y\", \"Y\"]"});
  CHECK(r.code == 0);
  json basis = r.doc()["result"]["basis"];
  REQUIRE(basis.size() == 2);
  // polynomials re-parse to equal values: X and Y in some order
  CHECK(basis[0].contains("terms"));
}

TEST_CASE("algebra files round-trip through the CLI") {
  TempDir tmp;
  std::string path = (tmp.path / "a.json").string();
  auto mk = run({"algebra", "new", "--names", "x", "--relations", "[\"x^2\"]", "--out", path});
  CHECK(mk.code == 0);
  auto show = run({"algebra", "show", "--algebra", path});
  CHECK(show.code == 0);
  CHECK(show.doc()["result"]["kdim"] == 2);
  CHECK(show.doc()["result"]["trivial"] == false);

  auto pts = run({"--field", "Fp:3", "spec-points", "--algebra", path});
  CHECK(pts.code == 0);
  CHECK(pts.doc()["result"]["count"] == 1);  // only x = 0
}

TEST_CASE("hom verification through the CLI") {
  TempDir tmp;
  std::string a = tmp.file("a.json", R"({"field":"Q","n":1,"names":["x"],
    "relations":[{"terms":[{"coeff":"1","exps":[2]}]}]})");
  std::string b = tmp.file("b.json", R"({"field":"Q","n":0,"names":[],"relations":[]})");
  auto bad = run({"hom", "--source", a, "--target", b, "--images", "[\"1\"]"});
  CHECK(bad.code == 3);
  CHECK(bad.doc()["error"]["code"] == "well_definedness");
  auto good = run({"hom", "--source", a, "--target", b, "--images", "[\"0\"]"});
  CHECK(good.code == 0);
}

TEST_CASE("split-cocycle on the worked example emits a passing transcript") {
  TempDir tmp;
  std::string input = tmp.file("cocycle.json", R"({
    "field": "Q", "n": 1, "names": ["X"], "relations": [],
    "cover": [{"terms":[{"coeff":"1","exps":[1]}]},
              {"terms":[{"coeff":"1","exps":[0]},{"coeff":"-1","exps":[1]}]}],
    "rank": 1,
    "s": {"0,1": {"num": [{"terms":[{"coeff":"1","exps":[0]}]}], "k": 1}}
  })");
  auto r = run({"split-cocycle", "--input", input});
  CHECK(r.code == 0);
  json doc = r.doc();
  REQUIRE(doc.contains("verification"));
  for (const auto& check : doc["verification"]) CHECK(check["pass"] == true);
  CHECK(doc["result"]["u"].size() == 2);
}

TEST_CASE("reports are byte-identical across runs and parallelism degrees") {
  auto a1 = run({"pn-cohomology", "--n", "2", "--d", "-3"});
  auto a2 = run({"pn-cohomology", "--n", "2", "--d", "-3"});
  CHECK(a1.out == a2.out);
  auto p1 = run({"--jobs", "1", "pn-cohomology", "--n", "2", "--d", "4"});
  auto p2 = run({"--jobs", "2", "pn-cohomology", "--n", "2", "--d", "4"});
  CHECK(p1.out == p2.out);

  auto s1 = run({"--field", "Fp:5", "spec-points", "--algebra", "/dev/null"});
  CHECK(s1.code == 2);  // not valid JSON: usage error, not a crash
}

TEST_CASE("environment variables configure the field") {
  setenv("ZK_FIELD", "Fp:5", 1);
  auto r = run({"classify-unit", "--laurent", "7 X^2"});
  unsetenv("ZK_FIELD");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"]["alpha"] == "2");  // 7 = 2 mod 5
  CHECK(r.doc()["result"]["n"] == 2);
}

TEST_CASE("flags win over environment") {
  setenv("ZK_FIELD", "Fp:5", 1);
  auto r = run({"--field", "Q", "classify-unit", "--laurent", "7 X^2"});
  unsetenv("ZK_FIELD");
  CHECK(r.doc()["result"]["alpha"] == "7");
}

TEST_CASE("twist arithmetic through the CLI") {
  auto r = run({"twist", "--d", "-1"});
  CHECK(r.doc()["result"]["degree"] == -1);
  auto t = run({"twist", "--tensor", "1,1"});
  CHECK(t.doc()["result"]["degree"] == 2);
  auto z = run({"twist", "--tensor", "3,-3"});
  CHECK(z.doc()["result"]["degree"] == 0);
}

TEST_CASE("shipped corpus passes end to end") {
  auto r = run({"corpus", ZK_CORPUS_DIR});
  INFO(r.out);
  CHECK(r.code == 0);
  json doc = r.doc();
  CHECK(doc["result"]["failed"] == 0);
  CHECK(doc["result"]["total"].get<int>() > 10);
}

TEST_CASE("a perturbed corpus expectation yields exactly one failure") {
  TempDir tmp;
  tmp.file("ok.json", R"({"argv":["kdim","--vars","x","--ideal","[\"x^3\"]"],
                          "expect":{"kdim":3}})");
  tmp.file("perturbed.json", R"({"argv":["kdim","--vars","x","--ideal","[\"x^3\"]"],
                                 "expect":{"kdim":4}})");
  auto r = run({"corpus", tmp.path.string()});
  CHECK(r.code == 1);
  CHECK(r.doc()["result"]["failed"] == 1);
  CHECK(r.doc()["result"]["passed"] == 1);
}

TEST_CASE("an empty corpus directory is a passing run") {
  TempDir tmp;
  auto r = run({"corpus", tmp.path.string()});
  CHECK(r.code == 0);
  CHECK(r.doc()["result"]["total"] == 0);
}

TEST_CASE("malformed corpus cases are reported but do not stop the run") {
  TempDir tmp;
  tmp.file("bad.json", "{ not json");
  tmp.file("good.json", R"({"argv":["kdim","--vars","x","--ideal","[\"x^2\"]"],
                            "expect":{"kdim":2}})");
  auto r = run({"corpus", tmp.path.string()});
  CHECK(r.code == 1);
  CHECK(r.doc()["result"]["failed"] == 1);
  CHECK(r.doc()["result"]["passed"] == 1);
}
