// The filtration machinery: dangles (half-diagrams), the cut into
// top half / bottom half / wreath part, the bilinear form phi valued in the
// wreath group algebra, the through-count filtration, and executable
// checkers for the multiplication congruence, the ideal property and the
// involution compatibility.
#ifndef BRAUER_CELLULAR_HPP
#define BRAUER_CELLULAR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/diagram.hpp"
#include "brauer/wreath.hpp"

namespace brauer {

// Arc of a dangle: positions a < b, label read left-to-right (a -> b).
struct DanglePair {
  int a;
  int b;
  Label label;

  friend bool operator==(const DanglePair& x, const DanglePair& y) {
    return x.a == y.a && x.b == y.b && x.label == y.label;
  }
  friend bool operator<(const DanglePair& x, const DanglePair& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.label < y.label;
  }
};

// Half of a cut diagram: k loose strands and (n-k)/2 labeled arcs
// partitioning the positions 1..n.
class Dangle {
 public:
  // Validates the partition; sorts singletons and arcs, flips arc labels
  // onto the left-to-right orientation if given reversed.
  static Dangle make(int n, std::vector<int> singletons,
                     std::vector<DanglePair> pairs);

  int n() const { return n_; }
  int k() const { return static_cast<int>(singletons_.size()); }
  const std::vector<int>& singletons() const { return singletons_; }
  const std::vector<DanglePair>& pairs() const { return pairs_; }

  friend bool operator==(const Dangle& x, const Dangle& y) {
    return x.n_ == y.n_ && x.singletons_ == y.singletons_ &&
           x.pairs_ == y.pairs_;
  }
  friend bool operator!=(const Dangle& x, const Dangle& y) {
    return !(x == y);
  }
  friend bool operator<(const Dangle& x, const Dangle& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    if (x.singletons_ != y.singletons_) return x.singletons_ < y.singletons_;
    return x.pairs_ < y.pairs_;
  }

  std::string str() const;  // "{2 4 | 1-3:-1}"

 private:
  Dangle() = default;
  int n_ = 0;
  std::vector<int> singletons_;   // increasing
  std::vector<DanglePair> pairs_; // sorted
};

// d cut into top-row arcs, bottom-row arcs, and the through part.
struct DecompositionTriple {
  Dangle top_half;     // arcs of the top row, dangling downward
  Dangle bottom_half;  // arcs of the bottom row, the mirror copy
  WreathElem wreath;   // permutation and colors of the through strands
};

// Cuts all through strands: top arcs keep their stored labels, bottom arcs
// flip sign (their canonical orientation runs right-to-left), the through
// part maps the a-th free top position to the matching free bottom position
// (both rows read left-to-right) with colors read downward.
DecompositionTriple decompose(const ColoredDiagram& d);

// Inverse of decompose; throws InconsistentTriple on mismatched n or k.
ColoredDiagram reconstruct(const DecompositionTriple& triple);

// The pairing of an upward dangle over a downward dangle, valued in the
// wreath group algebra: concatenating them either keeps all k loose strands
// through (giving a wreath element scaled by one delta per closed loop) or
// drops below k (giving zero).
GroupAlgebraElem phi(const Dangle& up, const Dangle& down);

// Splits by through count: (terms with t <= k, terms with t > k).
// k may be negative (everything lands above).
std::pair<AlgebraElement, AlgebraElement> filtration_project(
    const AlgebraElement& a, int k);

// Checks, for diagrams c and d with t(c) = t(d) = k, that c.d agrees with
// the reconstruction of wreath(c) * phi(bottom(c), top(d)) * wreath(d)
// sandwiched between top(c) and bottom(d), modulo terms with fewer than k
// through strands.
bool check_lemma42(const ColoredDiagram& c, const ColoredDiagram& d);

// Absorption of the span of low-through diagrams under random products,
// plus the stronger obligation behind the ideal property: the layer-k part
// of d.c depends on the wreath factor of c only by right multiplication.
bool check_ideal(int n, int k, int samples, std::uint64_t seed = 20260816,
                 int label_window = 3);

// Reflection compatibility: (1) cutting the flipped diagram swaps the two
// halves and inverts the wreath part; (2) phi intertwines the group
// inversion with swapping its arguments.
bool check_lemma45(const ColoredDiagram& c, const ColoredDiagram& d);

// All label-zero dangles for this (n, k), canonical order; empty when k has
// the wrong parity or is out of range.
std::vector<Dangle> enumerate_flat_dangles(int n, int k, int max_n = 8);

}  // namespace brauer

#endif  // BRAUER_CELLULAR_HPP
