// Concatenation of colored diagrams: stack x above y, identify x's bottom
// row with y's top row, trace composite strands summing labels with
// orientation signs, and strip closed loops.
#ifndef BRAUER_CONCAT_HPP
#define BRAUER_CONCAT_HPP

#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/ring.hpp"

namespace brauer {

struct ConcatResult {
  ColoredDiagram diagram;       // the loop-free composite
  std::vector<Label> loop_labels;  // one |label| per removed loop, sorted
};

// Requires x.n == y.n. Open traced paths become strands of the result;
// closed paths are removed, each contributing the absolute value of its
// accumulated label (its coefficient depends only on that).
ConcatResult concatenate(const ColoredDiagram& x, const ColoredDiagram& y);

// The ring coefficient a removed loop of accumulated label l contributes.
inline RingElem loop_coefficient(Label l) {
  return delta(static_cast<unsigned>(l < 0 ? -l : l));
}

}  // namespace brauer

#endif  // BRAUER_CONCAT_HPP
