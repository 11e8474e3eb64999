#include "brauer/concat.hpp"

#include <algorithm>

namespace brauer {

namespace {

// Per-diagram adjacency over node ordinals 0..2n-1: partner of each node and
// the label as read when leaving that node toward its partner.
struct Half {
  std::vector<int> partner;
  std::vector<Label> label_from;
  std::vector<char> visited;

  explicit Half(const ColoredDiagram& d) {
    const int size = 2 * d.n();
    partner.assign(size, -1);
    label_from.assign(size, 0);
    visited.assign(size, 0);
    for (const Strand& s : d.strands()) {
      const int lo = node_ordinal(s.lo, d.n());
      const int hi = node_ordinal(s.hi, d.n());
      partner[lo] = hi;
      partner[hi] = lo;
      label_from[lo] = s.label;   // along canonical orientation
      label_from[hi] = -s.label;  // against it
    }
  }
};

}  // namespace

ConcatResult concatenate(const ColoredDiagram& x, const ColoredDiagram& y) {
  if (x.n() != y.n())
    throw DimensionMismatch("cannot concatenate diagrams with n=" +
                            std::to_string(x.n()) + " and n=" +
                            std::to_string(y.n()));
  const int n = x.n();
  Half halves[2] = {Half(x), Half(y)};

  // Crossing the identified middle row: x's Bottom k (ordinal 2n-k) meets
  // y's Top k (ordinal k-1); both directions are ordinal -> 2n-1-ordinal.
  auto cross = [n](int ordinal) { return 2 * n - 1 - ordinal; };
  auto is_outer = [n](int layer, int ordinal) {
    return layer == 0 ? ordinal < n : ordinal >= n;
  };

  std::vector<RawStrand> raw;
  raw.reserve(n);

  // Open paths: start from each unvisited outer node (x's top row, y's
  // bottom row) and follow strands across the middle until surfacing again.
  auto trace_open = [&](int start_layer, int start_ord) {
    if (halves[start_layer].visited[start_ord]) return;
    int layer = start_layer;
    int cur = start_ord;
    Label acc = 0;
    for (;;) {
      Half& h = halves[layer];
      const int p = h.partner[cur];
      acc += h.label_from[cur];
      h.visited[cur] = h.visited[p] = 1;
      if (is_outer(layer, p)) {
        // Outer ordinals name final-frame nodes directly: x's top row keeps
        // its positions, y's bottom row keeps its.
        raw.push_back(
            {node_from_ordinal(start_ord, n), node_from_ordinal(p, n), acc});
        return;
      }
      cur = cross(p);
      layer ^= 1;
    }
  };
  for (int o = 0; o < n; ++o) trace_open(0, o);
  for (int o = n; o < 2 * n; ++o) trace_open(1, o);

  // What remains in the middle are closed loops alternating between x's
  // bottom arcs and y's top arcs.
  std::vector<Label> loops;
  for (int start = n; start < 2 * n; ++start) {
    if (halves[0].visited[start]) continue;
    int layer = 0;
    int cur = start;
    Label acc = 0;
    do {
      Half& h = halves[layer];
      const int p = h.partner[cur];
      acc += h.label_from[cur];
      h.visited[cur] = h.visited[p] = 1;
      cur = cross(p);
      layer ^= 1;
    } while (layer != 0 || cur != start);
    loops.push_back(acc < 0 ? -acc : acc);
  }
  std::sort(loops.begin(), loops.end());

  return ConcatResult{ColoredDiagram::make(n, raw), std::move(loops)};
}

}  // namespace brauer
