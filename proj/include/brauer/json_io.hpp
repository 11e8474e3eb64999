// JSON serialization for every exposed value type. Printers emit canonical
// order only; parsers run the same validation as the in-memory constructors,
// so parse(print(x)) == x exactly.
#ifndef BRAUER_JSON_IO_HPP
#define BRAUER_JSON_IO_HPP

#include <json.hpp>

#include "brauer/algebra.hpp"
#include "brauer/cellular.hpp"
#include "brauer/diagram.hpp"
#include "brauer/wreath.hpp"

namespace brauer {

// {"n": 3, "strands": [{"from": "T1", "to": "B2", "label": 2}, ...]}
nlohmann::json to_json(const ColoredDiagram& d);
ColoredDiagram diagram_from_json(const nlohmann::json& j);

// {"n": 2, "terms": [{"coeff": "d0", "diagram": {...}}, ...]}
nlohmann::json to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const nlohmann::json& j);

// {"n": 4, "k": 2, "singletons": [2, 4],
//  "pairs": [{"ends": [1, 3], "label": -1}]}
nlohmann::json to_json(const Dangle& d);
Dangle dangle_from_json(const nlohmann::json& j);

// {"perm": [2, 1, 3], "colors": [1, 0, -2]}
nlohmann::json to_json(const WreathElem& w);
WreathElem wreath_from_json(const nlohmann::json& j);

// {"k": 3, "terms": [{"coeff": "d1", "elem": {...}}, ...]}
nlohmann::json to_json(const GroupAlgebraElem& a);
GroupAlgebraElem group_algebra_from_json(const nlohmann::json& j);

}  // namespace brauer

#endif  // BRAUER_JSON_IO_HPP
