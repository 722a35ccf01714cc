#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "skein/cli.hpp"
#include "skein/json_io.hpp"

using namespace skein;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("text commands") {
  CHECK(run({"qint", "2"}).out == "s + s^-1\n");
  CHECK(run({"pm", "2"}).out == "2*x^-1*A2 - (s - s^-1)*A1^2\n");
  CHECK(run({"alpha", "2,1"}).out == "s^2 + 1 + s^-2\n");
  CHECK(run({"lr", "1", "1"}).out == "(2) + (1,1)\n");
  CHECK(run({"adams", "2", "--as-cpoly"}).out == "c1^2 - 2*c2\n");
  CHECK(run({"adams", "2", "--as-diagrams"}).out == "(2) - (1,1)\n");
  CHECK(run({"adams", "2"}).out == "c1^2 - 2*c2\n(2) - (1,1)\n");
  CHECK(run({"theta", "c1"}).out == "A1\n");
  CHECK(run({"q", "1"}).out == "A1\n");
  CHECK(run({"closure", "1 2", "--strands", "3"}).out == "A3\n");
  CHECK(run({"closure", "1", "--strands", "3"}).out == "A2*A1\n");
  CHECK(run({"psi-chords", "1-3,2-4", "2"}).out == "8 1-2,3-4\n8 1-3,2-4\n");
  CHECK(run({"torus", "2", "3", "--normalize", "--sl", "2", "--h-order", "0"}).out == "2\n");
  CHECK(Scalar::parse(run({"torus", "2", "1", "--normalize"}).out) == delta());
  CHECK(Scalar::parse(run({"torus", "2", "-3"}).out) == torus_invariant(2, -3, false));
}

TEST_CASE("verify command") {
  const Run r = run({"verify", "--suite", "xbiff", "--max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS xbiff m=1\nPASS xbiff m=2\nPASS xbiff m=3\nPASS xbiff m=4\n");
  CHECK(r.err.empty());
  const Run all1 = run({"verify", "--suite", "all", "--max", "4"});
  const Run all2 = run({"verify", "--suite", "all", "--max", "4"});
  CHECK(all1.code == 0);
  CHECK(all1.out == all2.out);
  CHECK(all1.out.find("FAIL") == std::string::npos);
  const Run big = run({"verify", "--suite", "chords", "--max", "4"});
  CHECK(big.code == 0);
  CHECK(big.err.find("warning") != std::string::npos);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"qint"}).code == 2);
  CHECK(run({"qint", "-1"}).code == 2);
  const Run bad = run({"alpha", "4,,2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 2") != std::string::npos);
  const Run word = run({"closure", "1 y"});
  CHECK(word.code == 2);
  CHECK(word.err.find("position 2") != std::string::npos);
  CHECK(run({"closure", "3", "--strands", "2"}).code == 2);
  CHECK(run({"torus", "2", "4"}).code == 2);
  CHECK(run({"torus", "2", "3", "--h-order", "2"}).code == 2);
  CHECK(run({"psi-chords", "1-2,2-3", "2"}).code == 2);
  CHECK(run({"solve-pattern", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"--format", "yaml", "qint", "2"}).code == 2);
  CHECK(run({"adams", "2", "--as-cpoly", "--as-diagrams"}).code == 2);
}

TEST_CASE("json output round-trips") {
  CHECK(laurent_from_json(json_of({"qint", "3"})) == quantum_int(3));
  CHECK(laurent_from_json(json_of({"alpha", "3,1"})) == alpha({3, 1}));
  CHECK(diagram_vector_from_json(json_of({"lr", "2,1", "1"})) == phi(CPoly::parse("c1*c1*c2 - c1*c3")));
  const Json adams = json_of({"adams", "3"});
  CHECK(cpoly_from_json(adams["cpoly"]) == psi(3).first);
  CHECK(diagram_vector_from_json(adams["diagrams"]) == psi(3).second);
  CHECK(cpoly_from_json(json_of({"adams", "3", "--as-cpoly"})) == psi(3).first);
  CHECK(annulus_from_json(json_of({"theta", "c1^2 - c2"})) == Q({2}));
  CHECK(annulus_from_json(json_of({"q", "2,2"})) == Q({2, 2}));
  CHECK(annulus_from_json(json_of({"closure", "1 1 1"})) == closure(HeckeElement::from_word(BraidWord::parse("1 1 1"))));
  CHECK(annulus_from_json(json_of({"pm", "3"})) == P(3));
  CHECK(scalar_from_json(json_of({"torus", "2", "3"})) == torus_invariant(2, 3, false));
  CHECK(tfraction_from_json(json_of({"torus", "2", "3", "--sl", "3"})) == torus_invariant_slN(2, 3, 3, false));
  const Json h = json_of({"torus", "2", "3", "--normalize", "--sl", "2", "--h-order", "2"});
  CHECK(rational_from_json(h[0]) == 2);
  CHECK(chord_counts_from_json(json_of({"psi-chords", "1-2", "3"})).begin()->second == 9);
  const Json v = json_of({"verify", "--suite", "cd", "--max", "3"});
  CHECK(v["passed"] == true);
}

TEST_CASE("solve-pattern command") {
  const std::string path = "cli_pattern_test.json";
  {
    std::ofstream f(path);
    f << R"js({"target": {"theta": "(4) - (2,1,1) + (2,2)"},
             "patterns": [{"word": "1", "strands": 2, "decoration": [1,1]},
                          {"word": "-1", "strands": 2, "decoration": [1,1]}]})js";
  }
  const Run r = run({"solve-pattern", path});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("inconsistent\n", 0) == 0);
  const Json j = json_of({"solve-pattern", path});
  CHECK(j["status"] == "inconsistent");
  CHECK(j["first"]["equations"].size() == 2);
  {
    std::ofstream f(path);
    f << R"({"target": "2*x^-1*A2 - (s - s^-1)*A1^2", "patterns": [{"word": "1"}, {"word": "-1"}]})";
  }
  const Run ok = run({"solve-pattern", path});
  CHECK(ok.out == "solution\nu0 = x^-1\nu1 = x\n");
  {
    std::ofstream f(path);
    f << "{\"target\": ";
  }
  const Run broken = run({"solve-pattern", path});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("position") != std::string::npos);
  std::remove(path.c_str());
}
