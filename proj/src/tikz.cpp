#include "brauer/tikz.hpp"

namespace brauer {

namespace {

std::string coord(Node v) {
  return "(" + std::to_string(v.pos) + "," +
         (v.row == Row::Top ? "1" : "0") + ")";
}

}  // namespace

std::string render_tikz(const ColoredDiagram& d) {
  std::string out = "\\begin{tikzpicture}[scale=1.2]\n";
  for (int p = 1; p <= d.n(); ++p) {
    out += "  \\filldraw (" + std::to_string(p) + ",1) circle (1.5pt) node[above] {" +
           std::to_string(p) + "};\n";
    out += "  \\filldraw (" + std::to_string(p) + ",0) circle (1.5pt) node[below] {" +
           std::to_string(p) + "'};\n";
  }
  for (const Strand& s : d.strands()) {
    const std::string label_opt =
        s.label == 0 ? std::string()
                     : " node[midway, fill=white, inner sep=1pt] {$" +
                           std::to_string(s.label) + "$}";
    if (s.is_through()) {
      out += "  \\draw[->] " + coord(s.lo) + " -- " + coord(s.hi) + label_opt +
             ";\n";
    } else {
      // Arcs bow into the frame: top arcs sag, bottom arcs rise.
      const std::string dip = s.lo.row == Row::Top ? "0.55" : "0.45";
      out += "  \\draw[->] " + coord(s.lo) + " .. controls (" +
             std::to_string(s.lo.pos) + "," + dip + ") and (" +
             std::to_string(s.hi.pos) + "," + dip + ") .. " + coord(s.hi) +
             label_opt + ";\n";
    }
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

}  // namespace brauer
