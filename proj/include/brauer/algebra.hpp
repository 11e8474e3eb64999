// R-linear combinations of colored diagrams, the concatenation product, the
// reflection involution, the standard generators with their defining
// relations, and the label-zero (classical) specialization.
#ifndef BRAUER_ALGEBRA_HPP
#define BRAUER_ALGEBRA_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/concat.hpp"
#include "brauer/diagram.hpp"
#include "brauer/ring.hpp"

namespace brauer {

// Finite sum of diagrams with nonzero ring coefficients. All diagrams share
// one n; a freshly constructed element is zero.
class AlgebraElement {
 public:
  explicit AlgebraElement(int n);
  static AlgebraElement unit(int n);
  static AlgebraElement from_diagram(const ColoredDiagram& d,
                                     RingElem coeff = RingElem(1));

  int n() const { return n_; }
  const std::map<ColoredDiagram, RingElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Accumulates coeff onto d's coefficient, pruning zeros.
  void add_term(const ColoredDiagram& d, RingElem coeff);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  AlgebraElement operator-() const;
  AlgebraElement scaled(const RingElem& c) const;
  friend AlgebraElement operator*(const RingElem& c, const AlgebraElement& a) {
    return a.scaled(c);
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

  // "d0 * [T1-T2:0 B2-B1:0] + [T1-B1:0 T2-B2:0]", terms in canonical order.
  std::string str() const;

 private:
  int n_;
  std::map<ColoredDiagram, RingElem> terms_;
};

// Bilinear extension of: x . y = (prod over removed loops of delta_|l|) * z
// with (z, loops) = concatenate(x, y).
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a,
                                const AlgebraElement& b) {
  return multiply(a, b);
}

// Linear extension of the horizontal reflection; an anti-automorphism.
AlgebraElement involution_i(const AlgebraElement& a);

// Same product restricted to label-zero elements (throws NonzeroLabel
// otherwise); coefficients land in Z[d0], the classical Brauer algebra.
AlgebraElement classical_multiply(const AlgebraElement& a,
                                  const AlgebraElement& b);

// Generator of the presentation: s_i and e_i for 1 <= i <= n-1, t_j (with an
// integer power) for 1 <= j <= n.
struct GeneratorName {
  char kind;       // 's', 'e' or 't'
  int index;
  Label power = 1;  // meaningful for 't' only

  std::string str() const;  // "s1", "e2", "t3^-2"
};

AlgebraElement generator(const GeneratorName& g, int n);
AlgebraElement evaluate_word(const std::vector<GeneratorName>& word, int n);

// Word grammar: whitespace-separated "s1 e2 t3^-2 t1".
std::vector<GeneratorName> parse_word(std::string_view text);

// One evaluated instance of a defining relation.
struct RelationResult {
  char family;           // 'a'..'o'
  std::string instance;  // e.g. "i=2" or "i=1,j=3" or "i=1,a=2"
  bool pass;
};

struct RelationReport {
  int n;
  int a_max;
  std::vector<RelationResult> results;  // deterministic order

  bool all_pass() const;

  struct FamilyCount {
    char family;
    int instances;
    int failures;
  };
  // All fifteen families 'a'..'o', including those with zero instances at
  // this n (vacuously passing).
  std::vector<FamilyCount> families() const;
};

// Evaluates both sides of every instance of the fifteen defining relations
// over all valid indices for this n, with the exponent in the
// e_i t_i^a e_i = delta_a e_i family running over 0..a_max.
RelationReport check_relations(int n, int a_max);

}  // namespace brauer

#endif  // BRAUER_ALGEBRA_HPP
