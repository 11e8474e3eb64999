// TikZ rendering of diagrams (write-only presentation output).
#ifndef BRAUER_TIKZ_HPP
#define BRAUER_TIKZ_HPP

#include <string>

#include "brauer/diagram.hpp"

namespace brauer {

// One tikzpicture: top row at y=1 positions 1..n, bottom row at y=0, one
// arrow per strand along its canonical orientation, label printed at the
// midpoint unless zero. Output is deterministic.
std::string render_tikz(const ColoredDiagram& d);

}  // namespace brauer

#endif  // BRAUER_TIKZ_HPP
