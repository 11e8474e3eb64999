#ifndef BRAUER_ERROR_HPP
#define BRAUER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brauer {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strand list does not form a perfect matching (node missing or repeated).
class NotAMatching : public Error {
 public:
  using Error::Error;
};

// Node position outside 1..n.
class PositionOutOfRange : public Error {
 public:
  using Error::Error;
};

// Generator index outside the valid range for the given n.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Enumeration request above the configured size cap.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Polynomial evaluation with an unassigned variable.
class MissingVariable : public Error {
 public:
  using Error::Error;
};

// Operands live in algebras of different rank n (or k).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Decomposition triple with inconsistent n/k across its parts.
class InconsistentTriple : public Error {
 public:
  using Error::Error;
};

// Classical product applied to a diagram with a nonzero strand label.
class NonzeroLabel : public Error {
 public:
  using Error::Error;
};

// Lemma checkers require equal through-string counts.
class ThroughCountMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (column " + std::to_string(offset + 1) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace brauer

#endif  // BRAUER_ERROR_HPP
