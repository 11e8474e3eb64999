#include "brauer/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace brauer {

namespace {

// Pairs up the given positions of one row into arcs with random labels.
void pair_randomly(Rng& rng, std::vector<int>& positions, Row row,
                   int label_window, std::vector<RawStrand>& raw) {
  rng.shuffle(positions);
  for (std::size_t i = 0; i + 1 < positions.size(); i += 2) {
    Node a{row, positions[i]};
    Node b{row, positions[i + 1]};
    raw.push_back({a, b, rng.label(label_window)});
  }
}

}  // namespace

ColoredDiagram random_diagram_with_through(Rng& rng, int n, int through,
                                           int label_window) {
  if (through < 0 || through > n || (n - through) % 2 != 0)
    throw PositionOutOfRange("invalid through count " +
                             std::to_string(through) + " for n=" +
                             std::to_string(n));
  std::vector<int> tops(n), bottoms(n);
  std::iota(tops.begin(), tops.end(), 1);
  std::iota(bottoms.begin(), bottoms.end(), 1);
  rng.shuffle(tops);
  rng.shuffle(bottoms);

  std::vector<RawStrand> raw;
  raw.reserve(n);
  for (int a = 0; a < through; ++a)
    raw.push_back({top(tops[a]), bottom(bottoms[a]), rng.label(label_window)});

  std::vector<int> top_rest(tops.begin() + through, tops.end());
  std::vector<int> bottom_rest(bottoms.begin() + through, bottoms.end());
  pair_randomly(rng, top_rest, Row::Top, label_window, raw);
  pair_randomly(rng, bottom_rest, Row::Bottom, label_window, raw);
  return ColoredDiagram::make(n, raw);
}

ColoredDiagram random_diagram(Rng& rng, int n, int label_window) {
  const int parity = n % 2;
  const int choices = n / 2 + 1;  // through counts parity, parity+2, ..., n
  const int through = parity + 2 * rng.uniform(0, choices - 1);
  return random_diagram_with_through(rng, n, through, label_window);
}

WreathElem random_wreath(Rng& rng, int k, int color_window) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  rng.shuffle(perm);
  std::vector<Label> colors(k);
  for (Label& c : colors) c = rng.label(color_window);
  return WreathElem::make(std::move(perm), std::move(colors));
}

AlgebraElement random_element(Rng& rng, int n, int max_terms,
                              int label_window) {
  AlgebraElement out(n);
  const int terms = rng.uniform(1, max_terms);
  for (int i = 0; i < terms; ++i) {
    int scalar = 0;
    while (scalar == 0) scalar = rng.uniform(-3, 3);
    RingElem coeff = RingElem(scalar);
    if (rng.uniform(0, 2) == 0)
      coeff *= delta(static_cast<unsigned>(rng.uniform(0, 2)));
    out.add_term(random_diagram(rng, n, label_window), std::move(coeff));
  }
  return out;
}

std::vector<ColoredDiagram> enumerate_colored(int n, int window, int max_n) {
  std::vector<ColoredDiagram> out;
  const int span = 2 * window + 1;
  for (const ColoredDiagram& flat : enumerate_flat(n, max_n)) {
    // Odometer over one label choice per strand.
    std::vector<int> digits(n, 0);
    for (;;) {
      std::vector<RawStrand> raw;
      raw.reserve(n);
      for (int i = 0; i < n; ++i) {
        const Strand& s = flat.strands()[i];
        raw.push_back({s.lo, s.hi, digits[i] - window});
      }
      out.push_back(ColoredDiagram::make(n, raw));
      // Least-significant digit last, so labels ascend lexicographically.
      int place = n - 1;
      while (place >= 0 && ++digits[place] == span) digits[place--] = 0;
      if (place < 0) break;
    }
  }
  return out;
}

std::vector<WreathElem> enumerate_wreath(int k, int window) {
  std::vector<WreathElem> out;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  const int span = 2 * window + 1;
  do {
    std::vector<int> digits(k, 0);
    for (;;) {
      std::vector<Label> colors(k);
      for (int i = 0; i < k; ++i) colors[i] = digits[i] - window;
      out.push_back(WreathElem::make(perm, std::move(colors)));
      int place = k - 1;
      while (place >= 0 && ++digits[place] == span) digits[place--] = 0;
      if (place < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace brauer
