#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "brauer/json_io.hpp"
#include "brauer/sampling.hpp"
#include "brauer/tikz.hpp"

using namespace brauer;
using nlohmann::json;

namespace {

// Serialize, push through text, parse back.
template <typename T, typename Parse>
T cycle(const T& value, Parse parse) {
  return parse(json::parse(to_json(value).dump()));
}

}  // namespace

TEST_CASE("diagram json shape") {
  const ColoredDiagram t1 =
      make_diagram(2, {{top(1), bottom(1), 1}, {top(2), bottom(2), 0}});
  const json expected = json::parse(R"({
    "n": 2,
    "strands": [
      {"from": "T1", "to": "B1", "label": 1},
      {"from": "T2", "to": "B2", "label": 0}
    ]
  })");
  CHECK(to_json(t1) == expected);
  CHECK(diagram_from_json(expected) == t1);
}

TEST_CASE("diagram json accepts non-canonical input") {
  // Strands may arrive in any order and orientation; parsing normalizes
  // exactly like the in-memory constructor.
  const json scrambled = json::parse(R"({
    "n": 2,
    "strands": [
      {"from": "B2", "to": "T2", "label": 7},
      {"from": "B1", "to": "T1", "label": 0}
    ]
  })");
  CHECK(diagram_from_json(scrambled) ==
        make_diagram(2, {{top(1), bottom(1), 0}, {top(2), bottom(2), -7}}));
}

TEST_CASE("diagram json roundtrips") {
  for (const ColoredDiagram& d : enumerate_colored(2, 1))
    CHECK(cycle(d, diagram_from_json) == d);
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const ColoredDiagram d = random_diagram(rng, 1 + trial % 5, 4);
    CHECK(cycle(d, diagram_from_json) == d);
  }
}

TEST_CASE("element json roundtrips") {
  const json sample = json::parse(R"({
    "n": 2,
    "terms": [
      {"coeff": "d0",
       "diagram": {"n": 2, "strands": [
         {"from": "T1", "to": "T2", "label": 0},
         {"from": "B2", "to": "B1", "label": 0}]}}
    ]
  })");
  const AlgebraElement e1 = AlgebraElement::from_diagram(
      make_diagram(2, {{top(1), top(2), 0}, {bottom(1), bottom(2), 0}}));
  CHECK(element_from_json(sample) == delta(0) * e1);

  CHECK(cycle(AlgebraElement(3), element_from_json) == AlgebraElement(3));
  Rng rng(73);
  for (int trial = 0; trial < 150; ++trial) {
    const AlgebraElement a = random_element(rng, 1 + trial % 4, 4, 3);
    CHECK(cycle(a, element_from_json) == a);
  }
}

TEST_CASE("dangle json") {
  const json sample = json::parse(R"({
    "n": 4, "k": 2,
    "singletons": [2, 4],
    "pairs": [{"ends": [1, 3], "label": -1}]
  })");
  const Dangle d = Dangle::make(4, {2, 4}, {{1, 3, -1}});
  CHECK(dangle_from_json(sample) == d);
  CHECK(to_json(d) == sample);
  CHECK(cycle(d, dangle_from_json) == d);

  // "k" is redundant on input but must agree when present.
  json no_k = sample;
  no_k.erase("k");
  CHECK(dangle_from_json(no_k) == d);
  json bad_k = sample;
  bad_k["k"] = 4;
  CHECK_THROWS_AS(dangle_from_json(bad_k), NotAMatching);
}

TEST_CASE("wreath and group algebra json") {
  const WreathElem w = WreathElem::make({2, 1, 3}, {1, 0, -2});
  CHECK(to_json(w) == json::parse(R"({"perm": [2, 1, 3], "colors": [1, 0, -2]})"));
  CHECK(cycle(w, wreath_from_json) == w);
  CHECK(cycle(WreathElem::identity(0), wreath_from_json) ==
        WreathElem::identity(0));

  GroupAlgebraElem a(2);
  a.add_term(WreathElem::make({2, 1}, {3, -1}),
             delta(1) * delta(1) - RingElem(4));
  a.add_term(WreathElem::identity(2), RingElem(7));
  CHECK(cycle(a, group_algebra_from_json) == a);
  CHECK(cycle(GroupAlgebraElem::unit(0), group_algebra_from_json) ==
        GroupAlgebraElem::unit(0));
}

TEST_CASE("json parse failures surface as typed errors") {
  CHECK_THROWS_AS(diagram_from_json(json::parse(R"({"strands": []})")),
                  json::exception);
  CHECK_THROWS_AS(
      diagram_from_json(json::parse(
          R"({"n": 1, "strands": [{"from": "X1", "to": "B1", "label": 0}]})")),
      ParseError);
  CHECK_THROWS_AS(
      element_from_json(json::parse(
          R"({"n": 1, "terms": [{"coeff": "d", "diagram":
              {"n": 1, "strands": [{"from": "T1", "to": "B1", "label": 0}]}}]})")),
      ParseError);
  CHECK_THROWS_AS(
      diagram_from_json(json::parse(
          R"({"n": 1, "strands": [{"from": "T1", "to": "T1", "label": 0}]})")),
      NotAMatching);
}

TEST_CASE("tikz rendering") {
  const ColoredDiagram t1 = make_diagram(1, {{top(1), bottom(1), 1}});
  const std::string pic = render_tikz(t1);
  CHECK(pic.find("\\begin{tikzpicture}") == 0);
  CHECK(pic.find("\\end{tikzpicture}") != std::string::npos);
  CHECK(pic.find("\\draw[->] (1,1) -- (1,0)") != std::string::npos);
  CHECK(pic.find("{$1$}") != std::string::npos);
  CHECK(render_tikz(t1) == pic);  // deterministic

  // Unlabeled strands carry no midway node.
  const std::string plain = render_tikz(identity_diagram(2));
  CHECK(plain.find("midway") == std::string::npos);

  // Arcs render as curves, top ones sagging and bottom ones rising.
  const std::string arcs = render_tikz(
      make_diagram(2, {{top(1), top(2), 0}, {bottom(1), bottom(2), 0}}));
  CHECK(arcs.find(".. controls (1,0.55) and (2,0.55) ..") != std::string::npos);
  // Bottom arcs run right-to-left in canonical orientation.
  CHECK(arcs.find(".. controls (2,0.45) and (1,0.45) ..") != std::string::npos);
}
