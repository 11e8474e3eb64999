#include "brauer/json_io.hpp"

namespace brauer {

using nlohmann::json;

json to_json(const ColoredDiagram& d) {
  json strands = json::array();
  for (const Strand& s : d.strands())
    strands.push_back({{"from", s.lo.str()},
                       {"to", s.hi.str()},
                       {"label", s.label}});
  return json{{"n", d.n()}, {"strands", std::move(strands)}};
}

ColoredDiagram diagram_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<RawStrand> raw;
  for (const json& s : j.at("strands")) {
    raw.push_back({Node::parse(s.at("from").get<std::string>()),
                   Node::parse(s.at("to").get<std::string>()),
                   s.at("label").get<Label>()});
  }
  return ColoredDiagram::make(n, raw);
}

json to_json(const AlgebraElement& a) {
  json terms = json::array();
  for (const auto& [d, c] : a.terms())
    terms.push_back({{"coeff", c.str()}, {"diagram", to_json(d)}});
  return json{{"n", a.n()}, {"terms", std::move(terms)}};
}

AlgebraElement element_from_json(const json& j) {
  AlgebraElement a(j.at("n").get<int>());
  for (const json& t : j.at("terms"))
    a.add_term(diagram_from_json(t.at("diagram")),
               RingElem::parse(t.at("coeff").get<std::string>()));
  return a;
}

json to_json(const Dangle& d) {
  json pairs = json::array();
  for (const DanglePair& p : d.pairs())
    pairs.push_back({{"ends", {p.a, p.b}}, {"label", p.label}});
  return json{{"n", d.n()},
              {"k", d.k()},
              {"singletons", d.singletons()},
              {"pairs", std::move(pairs)}};
}

Dangle dangle_from_json(const json& j) {
  std::vector<DanglePair> pairs;
  for (const json& p : j.at("pairs")) {
    const auto& ends = p.at("ends");
    pairs.push_back({ends.at(0).get<int>(), ends.at(1).get<int>(),
                     p.at("label").get<Label>()});
  }
  Dangle d = Dangle::make(j.at("n").get<int>(),
                          j.at("singletons").get<std::vector<int>>(),
                          std::move(pairs));
  if (j.contains("k") && j.at("k").get<int>() != d.k())
    throw NotAMatching("stated k=" + j.at("k").dump() +
                       " does not match the singleton count");
  return d;
}

json to_json(const WreathElem& w) {
  return json{{"perm", w.perm}, {"colors", w.colors}};
}

WreathElem wreath_from_json(const json& j) {
  return WreathElem::make(j.at("perm").get<std::vector<int>>(),
                          j.at("colors").get<std::vector<Label>>());
}

json to_json(const GroupAlgebraElem& a) {
  json terms = json::array();
  for (const auto& [w, c] : a.terms())
    terms.push_back({{"coeff", c.str()}, {"elem", to_json(w)}});
  return json{{"k", a.k()}, {"terms", std::move(terms)}};
}

GroupAlgebraElem group_algebra_from_json(const json& j) {
  GroupAlgebraElem a(j.at("k").get<int>());
  for (const json& t : j.at("terms"))
    a.add_term(wreath_from_json(t.at("elem")),
               RingElem::parse(t.at("coeff").get<std::string>()));
  return a;
}

}  // namespace brauer
