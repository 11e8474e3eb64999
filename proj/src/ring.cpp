#include "brauer/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace brauer {

Monomial Monomial::variable(unsigned index, unsigned exponent) {
  Monomial m;
  if (exponent != 0) m.exps_.emplace_back(index, exponent);
  return m;
}

Monomial& Monomial::operator*=(const Monomial& rhs) {
  // Merge two sorted exponent lists, adding exponents on shared indices.
  std::vector<std::pair<unsigned, unsigned>> merged;
  merged.reserve(exps_.size() + rhs.exps_.size());
  auto a = exps_.begin();
  auto b = rhs.exps_.begin();
  while (a != exps_.end() && b != rhs.exps_.end()) {
    if (a->first < b->first) {
      merged.push_back(*a++);
    } else if (b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), a, exps_.end());
  merged.insert(merged.end(), b, rhs.exps_.end());
  exps_ = std::move(merged);
  return *this;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t deg = 0;
  for (const auto& [index, exp] : exps_) deg += exp;
  return deg;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  return a.exps_ < b.exps_;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [index, exp] : exps_) {
    if (!out.empty()) out += '*';
    out += 'd';
    out += std::to_string(index);
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
  }
  return out;
}

RingElem::RingElem(long long value) {
  if (value != 0) terms_.emplace(Monomial{}, Int(value));
}

RingElem RingElem::constant(Int value) {
  RingElem p;
  if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
  return p;
}

RingElem RingElem::variable(unsigned index) {
  RingElem p;
  p.terms_.emplace(Monomial::variable(index), Int(1));
  return p;
}

RingElem& RingElem::operator+=(const RingElem& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) {
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(mono, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) {
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(mono, -coeff);
    } else {
      it->second -= coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  RingElem out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      auto it = out.terms_.find(m);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(m), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

RingElem& RingElem::operator*=(const RingElem& rhs) {
  *this = *this * rhs;
  return *this;
}

RingElem RingElem::operator-() const {
  RingElem out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

bool RingElem::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second == 1;
}

Int RingElem::eval(const std::map<unsigned, Int>& assignment) const {
  Int total = 0;
  for (const auto& [mono, coeff] : terms_) {
    Int value = coeff;
    for (const auto& [index, exp] : mono.exponents()) {
      auto it = assignment.find(index);
      if (it == assignment.end())
        throw MissingVariable("unassigned variable d" + std::to_string(index) +
                              " in evaluation");
      for (unsigned r = 0; r < exp; ++r) value *= it->second;
    }
    total += value;
  }
  return total;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  // Highest-degree term first: walk the canonical map in reverse.
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    const bool negative = coeff < 0;
    Int magnitude = negative ? Int(-coeff) : coeff;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.is_one()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) {
        out += magnitude.str();
        out += '*';
      }
      out += mono.str();
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for the canonical grammar:
//   poly  := ['-'] term (('+' | '-') term)*
//   term  := factor ('*' factor)*
//   factor:= integer | 'd' integer ['^' integer]
// Whitespace is free between tokens.
class RingParser {
 public:
  explicit RingParser(std::string_view text) : text_(text) {}

  RingElem parse() {
    RingElem acc;
    skip_space();
    bool negate = consume_sign();
    acc += signed_term(negate);
    skip_space();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c != '+' && c != '-')
        throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      acc += signed_term(c == '-');
      skip_space();
    }
    return acc;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume_sign() {
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (pos_ < text_.size() && text_[pos_] == '+') ++pos_;
    return false;
  }

  Int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError("expected a number", start);
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  RingElem factor() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == 'd') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == start) throw ParseError("expected variable index", start);
      unsigned index = static_cast<unsigned>(
          std::stoul(std::string(text_.substr(start, pos_ - start))));
      unsigned exp = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        std::size_t estart = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
        if (pos_ == estart) throw ParseError("expected exponent", estart);
        exp = static_cast<unsigned>(
            std::stoul(std::string(text_.substr(estart, pos_ - estart))));
        if (exp == 0) throw ParseError("zero exponent not allowed", estart);
      }
      return from_monomial(Monomial::variable(index, exp));
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return RingElem::constant(integer());
    throw ParseError("expected a number or a variable", pos_);
  }

  static RingElem from_monomial(const Monomial& m) {
    RingElem p = RingElem::constant(1);
    for (const auto& [index, exp] : m.exponents())
      for (unsigned r = 0; r < exp; ++r) p *= RingElem::variable(index);
    return p;
  }

  RingElem signed_term(bool negate) {
    RingElem product = factor();
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      product *= factor();
      skip_space();
    }
    return negate ? -product : product;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElem RingElem::parse(std::string_view text) {
  RingParser parser(text);
  RingElem result = parser.parse();
  result.check_invariants();
  return result;
}

void RingElem::check_invariants() const {
  for (const auto& [mono, coeff] : terms_) {
    if (coeff == 0) throw Error("ring invariant violated: zero coefficient");
    unsigned prev = 0;
    bool first = true;
    for (const auto& [index, exp] : mono.exponents()) {
      if (exp == 0) throw Error("ring invariant violated: zero exponent");
      if (!first && index <= prev)
        throw Error("ring invariant violated: unsorted monomial");
      prev = index;
      first = false;
    }
  }
}

}  // namespace brauer
