// Seeded random generators for diagrams, dangles, wreath elements and
// algebra elements, plus small exhaustive enumerators over finite label
// windows. Everything is deterministic in the seed.
#ifndef BRAUER_SAMPLING_HPP
#define BRAUER_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/diagram.hpp"
#include "brauer/wreath.hpp"

namespace brauer {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  Label label(int window) { return uniform(-window, window); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), gen_);
  }

 private:
  std::mt19937_64 gen_;
};

// Uniform over matchings with the given through count; labels uniform in
// [-label_window, label_window]. through must satisfy through <= n and
// through == n (mod 2).
ColoredDiagram random_diagram_with_through(Rng& rng, int n, int through,
                                           int label_window);

// Through count chosen uniformly among the valid values for this n.
ColoredDiagram random_diagram(Rng& rng, int n, int label_window);

WreathElem random_wreath(Rng& rng, int k, int color_window);

// Sum of up to max_terms random diagrams with small random coefficients
// (integers, occasionally times a delta variable).
AlgebraElement random_element(Rng& rng, int n, int max_terms,
                              int label_window);

// Every colored diagram on n nodes with all labels in [-window, window]:
// (2n-1)!! * (2*window+1)^n values, matchings in enumeration order with
// ascending label tuples within each matching.
std::vector<ColoredDiagram> enumerate_colored(int n, int window,
                                              int max_n = 5);

// Every wreath element with colors in [-window, window], in increasing
// canonical order: k! * (2*window+1)^k values.
std::vector<WreathElem> enumerate_wreath(int k, int window);

}  // namespace brauer

#endif  // BRAUER_SAMPLING_HPP
