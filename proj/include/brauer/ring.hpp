// Exact arithmetic in Z[d0, d1, d2, ...]: sparse polynomials over a
// lazily-infinite family of variables, with arbitrary-precision integer
// coefficients. Values are immutable once built; every operation is pure.
#ifndef BRAUER_RING_HPP
#define BRAUER_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauer/error.hpp"

namespace brauer {

using Int = boost::multiprecision::cpp_int;

// Product of variables d_i^e_i, stored as a sorted (index, exponent) list
// with every exponent > 0. The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(unsigned index, unsigned exponent = 1);

  Monomial& operator*=(const Monomial& rhs);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool is_one() const { return exps_.empty(); }
  std::uint64_t total_degree() const;
  const std::vector<std::pair<unsigned, unsigned>>& exponents() const {
    return exps_;
  }

  // Canonical order: total degree first, then lexicographic on the
  // (index, exponent) sequence. Drives term ordering and serialization.
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  std::vector<std::pair<unsigned, unsigned>> exps_;
};

// Element of Z[d0, d1, ...]. Term map keyed by canonical monomials; no
// stored coefficient is zero.
class RingElem {
 public:
  RingElem() = default;  // zero
  RingElem(long long value);
  static RingElem constant(Int value);
  static RingElem variable(unsigned index);

  RingElem& operator+=(const RingElem& rhs);
  RingElem& operator-=(const RingElem& rhs);
  RingElem& operator*=(const RingElem& rhs);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const RingElem& a, const RingElem& b) {
    return !(a == b);
  }

  const std::map<Monomial, Int>& terms() const { return terms_; }

  // Evaluates at the given variable assignment. Every variable occurring in
  // the polynomial must be assigned.
  Int eval(const std::map<unsigned, Int>& assignment) const;

  // Canonical text form, e.g. "3*d0^2*d1 + d2 - 1". Parses back bit-exactly.
  std::string str() const;
  static RingElem parse(std::string_view text);

  // Representation invariants: no zero coefficients, no zero exponents,
  // strictly increasing variable indices inside each monomial.
  void check_invariants() const;

 private:
  std::map<Monomial, Int> terms_;
};

// The coefficient ring's distinguished generators d_i.
inline RingElem delta(unsigned index) { return RingElem::variable(index); }

}  // namespace brauer

#endif  // BRAUER_RING_HPP
