// Colored Brauer diagrams: perfect matchings on two rows of n nodes, each
// strand carrying an integer label that negates under orientation reversal.
// Diagrams are stored fully canonical — one representation per diagram — so
// equality is plain structural comparison.
#ifndef BRAUER_DIAGRAM_HPP
#define BRAUER_DIAGRAM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "brauer/error.hpp"

namespace brauer {

using Label = long long;

enum class Row : unsigned char { Top, Bottom };

// One endpoint: Top k or Bottom k, positions 1..n. The total order runs
// Top 1 < ... < Top n < Bottom n < ... < Bottom 1 (clockwise around the
// frame), and is independent of n.
struct Node {
  Row row;
  int pos;

  friend bool operator==(Node a, Node b) {
    return a.row == b.row && a.pos == b.pos;
  }
  friend bool operator!=(Node a, Node b) { return !(a == b); }
  friend bool operator<(Node a, Node b) {
    if (a.row != b.row) return a.row == Row::Top;
    if (a.row == Row::Top) return a.pos < b.pos;
    return a.pos > b.pos;  // bottom row runs right-to-left
  }

  std::string str() const;         // "T3" or "B1"
  static Node parse(std::string_view text);
};

inline Node top(int pos) { return Node{Row::Top, pos}; }
inline Node bottom(int pos) { return Node{Row::Bottom, pos}; }

// Zero-based rank of a node in the order above; needs n for the bottom row.
inline int node_ordinal(Node v, int n) {
  return v.row == Row::Top ? v.pos - 1 : 2 * n - v.pos;
}
Node node_from_ordinal(int ordinal, int n);

// Strand as supplied by callers: oriented from -> to with a label read in
// that direction. Normalized on diagram construction.
struct RawStrand {
  Node from;
  Node to;
  Label label = 0;
};

// Canonical strand: lo < hi in the node order, label read lo -> hi.
struct Strand {
  Node lo;
  Node hi;
  Label label;

  bool is_through() const { return lo.row == Row::Top && hi.row == Row::Bottom; }
  friend bool operator==(const Strand& a, const Strand& b) {
    return a.lo == b.lo && a.hi == b.hi && a.label == b.label;
  }
  friend bool operator<(const Strand& a, const Strand& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.label < b.label;
  }
};

class ColoredDiagram {
 public:
  // Normalizes and validates: every node covered exactly once, positions in
  // range, labels flipped onto the canonical orientation.
  static ColoredDiagram make(int n, const std::vector<RawStrand>& raw);
  static ColoredDiagram identity(int n);

  int n() const { return n_; }
  const std::vector<Strand>& strands() const { return strands_; }
  int through_count() const;

  // Reflection through the horizontal axis (Top k <-> Bottom k).
  ColoredDiagram flip() const;

  friend bool operator==(const ColoredDiagram& a, const ColoredDiagram& b) {
    return a.n_ == b.n_ && a.strands_ == b.strands_;
  }
  friend bool operator!=(const ColoredDiagram& a, const ColoredDiagram& b) {
    return !(a == b);
  }
  friend bool operator<(const ColoredDiagram& a, const ColoredDiagram& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.strands_ < b.strands_;
  }

  // "[T1-B2:1 T2-B1:0]" — strands in canonical order, label after the colon.
  std::string str() const;

 private:
  ColoredDiagram() = default;
  int n_ = 0;
  std::vector<Strand> strands_;  // sorted, one per node pair
};

inline ColoredDiagram make_diagram(int n, const std::vector<RawStrand>& raw) {
  return ColoredDiagram::make(n, raw);
}
inline ColoredDiagram identity_diagram(int n) {
  return ColoredDiagram::identity(n);
}
inline int through_count(const ColoredDiagram& d) { return d.through_count(); }
inline ColoredDiagram flip(const ColoredDiagram& d) { return d.flip(); }

// Injective canonical byte string; the sort key for bases and golden files.
std::string diagram_key(const ColoredDiagram& d);

// All (2n-1)!! label-zero diagrams in lexicographic order of their sorted
// strand lists. Guarded by a size bound (n > max_n throws).
std::vector<ColoredDiagram> enumerate_flat(int n, int max_n = 8);

}  // namespace brauer

#endif  // BRAUER_DIAGRAM_HPP
