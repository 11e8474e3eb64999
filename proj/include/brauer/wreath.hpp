// The wreath product of Z with the symmetric group on k letters, and its
// group algebra over the coefficient ring. A wreath element is a permutation
// plus an integer color per slot; the multiplication convention is the one
// under which full-through diagram concatenation matches wreath_mul (the
// top-layer isomorphism test pins it against the concat engine).
#ifndef BRAUER_WREATH_HPP
#define BRAUER_WREATH_HPP

#include <map>
#include <string>
#include <vector>

#include "brauer/diagram.hpp"  // Label
#include "brauer/error.hpp"
#include "brauer/ring.hpp"

namespace brauer {

struct WreathElem {
  std::vector<int> perm;     // one-line notation, 1-based: perm[a-1] = u(a)
  std::vector<Label> colors; // colors[a-1], read at slot a from the top down

  int k() const { return static_cast<int>(perm.size()); }

  static WreathElem identity(int k);
  // Validates that perm is a bijection on 1..k and sizes agree.
  static WreathElem make(std::vector<int> perm, std::vector<Label> colors);

  friend bool operator==(const WreathElem& a, const WreathElem& b) {
    return a.perm == b.perm && a.colors == b.colors;
  }
  friend bool operator!=(const WreathElem& a, const WreathElem& b) {
    return !(a == b);
  }
  friend bool operator<(const WreathElem& a, const WreathElem& b) {
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.colors < b.colors;
  }

  std::string str() const;  // "[2 1 3 | 1,0,-2]"
};

// (u.v)(a) = v(u(a)); color picked up at slot a, then at slot u(a).
WreathElem wreath_mul(const WreathElem& u, const WreathElem& v);
WreathElem wreath_inverse(const WreathElem& u);

// The involution w -> w^{-1} on the group.
inline WreathElem sigma(const WreathElem& w) { return wreath_inverse(w); }

// R-linear combinations of wreath elements: the algebra A_k.
class GroupAlgebraElem {
 public:
  explicit GroupAlgebraElem(int k);
  static GroupAlgebraElem unit(int k);
  static GroupAlgebraElem from_elem(const WreathElem& w,
                                    RingElem coeff = RingElem(1));

  int k() const { return k_; }
  const std::map<WreathElem, RingElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const WreathElem& w, RingElem coeff);

  GroupAlgebraElem& operator+=(const GroupAlgebraElem& rhs);
  GroupAlgebraElem& operator-=(const GroupAlgebraElem& rhs);
  friend GroupAlgebraElem operator+(GroupAlgebraElem a,
                                    const GroupAlgebraElem& b) {
    return a += b;
  }
  friend GroupAlgebraElem operator-(GroupAlgebraElem a,
                                    const GroupAlgebraElem& b) {
    return a -= b;
  }
  GroupAlgebraElem scaled(const RingElem& c) const;
  friend GroupAlgebraElem operator*(const RingElem& c,
                                    const GroupAlgebraElem& a) {
    return a.scaled(c);
  }

  friend bool operator==(const GroupAlgebraElem& a,
                         const GroupAlgebraElem& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupAlgebraElem& a,
                         const GroupAlgebraElem& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  int k_;
  std::map<WreathElem, RingElem> terms_;
};

// Bilinear extension of wreath_mul.
GroupAlgebraElem group_algebra_mul(const GroupAlgebraElem& a,
                                   const GroupAlgebraElem& b);
inline GroupAlgebraElem operator*(const GroupAlgebraElem& a,
                                  const GroupAlgebraElem& b) {
  return group_algebra_mul(a, b);
}

// Linear extension of the group involution; an anti-automorphism fixing
// coefficients.
GroupAlgebraElem sigma(const GroupAlgebraElem& a);

}  // namespace brauer

#endif  // BRAUER_WREATH_HPP
