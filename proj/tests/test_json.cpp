#include <doctest.h>

#include "oracles.hpp"
#include "skein/json_io.hpp"

using namespace skein;
using oracle::S;

TEST_CASE("laurent and scalar records") {
  const LaurentPoly p = LaurentPoly::monomial(1, -2, 3, Rational(-3, 4)) + var_s(-1);
  const Json j = to_json(p);
  CHECK(j == Json::parse(R"([[0,0,-1,"1"],[1,-2,3,"-3/4"]])"));
  CHECK(laurent_from_json(j) == p);
  std::mt19937 rng(41);
  for (int t = 0; t < 20; ++t) {
    const Scalar c = oracle::random_scalar(rng);
    CHECK(scalar_from_json(to_json(c)) == c);
    CHECK(scalar_from_json(Json::parse(to_json(c).dump())) == c);
  }
  CHECK(scalar_from_json(Json::parse(R"([[0,0,1,"1"]])")) == S("s"));
  CHECK(laurent_from_json(Json::parse(R"([[0,0,0,"2"],[0,0,0,"-2"]])")).is_zero());
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"([[0,0,"1"]])")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"([[0,0,0,"1/0"]])")), std::invalid_argument);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"num":[],"den":[]})")), std::invalid_argument);
}

TEST_CASE("combination records") {
  CHECK(to_json(Partition{4, 2, 1}) == Json::parse("[4,2,1]"));
  CHECK(partition_from_json(Json::parse("[]")) == Partition());
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), std::invalid_argument);
  const auto [cp, dv] = psi(4);
  CHECK(cpoly_from_json(to_json(cp)) == cp);
  CHECK(diagram_vector_from_json(to_json(dv)) == dv);
  const AnnulusElement e = Q({2, 1});
  CHECK(annulus_from_json(to_json(e)) == e);
  CHECK(annulus_from_json(Json::parse(R"([[[1,2],[[0,0,0,"1"]]]])")) == AnnulusElement::parse("A2*A1"));
  const HeckeElement h = e_lambda({2, 1});
  CHECK(hecke_from_json(to_json(h)) == h);
  CHECK_THROWS_AS(hecke_from_json(Json::parse(R"({"strands":2,"terms":[[[1,1],[]]]})")), std::invalid_argument);
}

TEST_CASE("univariate and chord records") {
  const TFraction f = torus_invariant_slN(2, 3, 3, true);
  CHECK(tfraction_from_json(to_json(f)) == f);
  const ChordCounts counts = psi_chords(ChordDiagram::parse("1-3,2-4"), 2);
  CHECK(to_json(counts) == Json::parse(R"([["1-2,3-4",8],["1-3,2-4",8]])"));
  CHECK(chord_counts_from_json(to_json(counts)) == counts);
}

TEST_CASE("reports and pattern results") {
  Report r;
  r.add(true, "xbiff", "m=1");
  r.add(false, "xbiff", "m=2", "bad");
  const Json j = to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["failures"] == 1);
  CHECK(j["checks"][1]["detail"] == "bad");
  const Json sol = to_json(solve_pattern({P(2), {closure(HeckeElement::from_word(BraidWord::parse("1"))),
                                                 closure(HeckeElement::from_word(BraidWord::parse("-1")))}}));
  CHECK(sol["status"] == "solution");
  CHECK(scalar_from_json(sol["coefficients"][0]) == S("x^-1"));
}

TEST_CASE("pattern files") {
  const Json file = Json::parse(R"js({
    "target": {"theta": "(4) - (2,1,1) + (2,2)"},
    "patterns": [
      {"word": "1", "strands": 2, "decoration": [1, 1]},
      {"word": "-1", "strands": 2, "decoration": "1,1"}
    ]
  })js");
  const PatternSystem sys = pattern_system_from_json(file);
  CHECK(sys.target == Q({4}) - Q({2, 1, 1}) + Q({2, 2}));
  REQUIRE(sys.patterns.size() == 2);
  CHECK(sys.patterns[0] == closure(decorate(BraidWord::parse("1", 2), {1, 1})));
  CHECK(std::holds_alternative<PatternInconsistency>(solve_pattern(sys)));

  const Json simple = Json::parse(R"({"target": "2*x^-1*A2 - (s - s^-1)*A1^2",
                                      "patterns": [{"word": "1"}, [[[2],[[-2,0,0,"1"]]],[[1,1],[[-1,0,1,"-1"],[-1,0,-1,"1"]]]]]})");
  const PatternSystem s2 = pattern_system_from_json(simple);
  CHECK(s2.patterns[1] == closure(HeckeElement::from_word(BraidWord::parse("-1"))));
  CHECK_THROWS_AS(pattern_system_from_json(Json::parse(R"({"target": "A1"})")), std::invalid_argument);
  CHECK_THROWS_AS(annulus_from_input(Json::parse(R"({"word": 3})")), std::invalid_argument);
}
