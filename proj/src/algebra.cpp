#include "brauer/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace brauer {

AlgebraElement::AlgebraElement(int n) : n_(n) {
  if (n <= 0) throw PositionOutOfRange("algebra size must be positive");
}

AlgebraElement AlgebraElement::unit(int n) {
  AlgebraElement a(n);
  a.add_term(ColoredDiagram::identity(n), RingElem(1));
  return a;
}

AlgebraElement AlgebraElement::from_diagram(const ColoredDiagram& d,
                                            RingElem coeff) {
  AlgebraElement a(d.n());
  a.add_term(d, std::move(coeff));
  return a;
}

void AlgebraElement::add_term(const ColoredDiagram& d, RingElem coeff) {
  if (d.n() != n_)
    throw DimensionMismatch("term has n=" + std::to_string(d.n()) +
                            ", element has n=" + std::to_string(n_));
  if (coeff.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  if (rhs.n_ != n_)
    throw DimensionMismatch("adding elements with n=" + std::to_string(n_) +
                            " and n=" + std::to_string(rhs.n_));
  for (const auto& [d, c] : rhs.terms_) add_term(d, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  if (rhs.n_ != n_)
    throw DimensionMismatch("subtracting elements with n=" +
                            std::to_string(n_) + " and n=" +
                            std::to_string(rhs.n_));
  for (const auto& [d, c] : rhs.terms_) add_term(d, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(n_);
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
  return out;
}

AlgebraElement AlgebraElement::scaled(const RingElem& c) const {
  AlgebraElement out(n_);
  for (const auto& [d, coeff] : terms_) out.add_term(d, c * coeff);
  return out;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c.is_one()) {
      out += d.str();
    } else if (c.terms().size() == 1) {
      out += c.str() + " * " + d.str();
    } else {
      out += "(" + c.str() + ") * " + d.str();
    }
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n())
    throw DimensionMismatch("multiplying elements with n=" +
                            std::to_string(a.n()) + " and n=" +
                            std::to_string(b.n()));
  AlgebraElement out(a.n());
  for (const auto& [dx, cx] : a.terms()) {
    for (const auto& [dy, cy] : b.terms()) {
      ConcatResult r = concatenate(dx, dy);
      RingElem coeff = cx * cy;
      for (Label l : r.loop_labels) coeff *= loop_coefficient(l);
      out.add_term(r.diagram, std::move(coeff));
    }
  }
  return out;
}

AlgebraElement involution_i(const AlgebraElement& a) {
  AlgebraElement out(a.n());
  for (const auto& [d, c] : a.terms()) out.add_term(d.flip(), c);
  return out;
}

AlgebraElement classical_multiply(const AlgebraElement& a,
                                  const AlgebraElement& b) {
  auto require_flat = [](const AlgebraElement& x) {
    for (const auto& [d, c] : x.terms())
      for (const Strand& s : d.strands())
        if (s.label != 0)
          throw NonzeroLabel("classical product requires all labels zero, "
                             "found " + d.str());
  };
  require_flat(a);
  require_flat(b);
  return multiply(a, b);
}

std::string GeneratorName::str() const {
  std::string out(1, kind);
  out += std::to_string(index);
  if (kind == 't' && power != 1) out += "^" + std::to_string(power);
  return out;
}

AlgebraElement generator(const GeneratorName& g, int n) {
  std::vector<RawStrand> raw;
  raw.reserve(n);
  auto vertical_except = [&](int skip_lo, int skip_hi) {
    for (int k = 1; k <= n; ++k)
      if (k != skip_lo && k != skip_hi) raw.push_back({top(k), bottom(k), 0});
  };
  switch (g.kind) {
    case 's': {
      if (g.index < 1 || g.index >= n)
        throw IndexOutOfRange("s" + std::to_string(g.index) +
                              " needs 1 <= i <= " + std::to_string(n - 1));
      const int i = g.index;
      raw.push_back({top(i), bottom(i + 1), 0});
      raw.push_back({top(i + 1), bottom(i), 0});
      vertical_except(i, i + 1);
      break;
    }
    case 'e': {
      if (g.index < 1 || g.index >= n)
        throw IndexOutOfRange("e" + std::to_string(g.index) +
                              " needs 1 <= i <= " + std::to_string(n - 1));
      const int i = g.index;
      raw.push_back({top(i), top(i + 1), 0});
      raw.push_back({bottom(i), bottom(i + 1), 0});
      vertical_except(i, i + 1);
      break;
    }
    case 't': {
      if (g.index < 1 || g.index > n)
        throw IndexOutOfRange("t" + std::to_string(g.index) +
                              " needs 1 <= j <= " + std::to_string(n));
      const int j = g.index;
      // Label read Top j -> Bottom j is the power; that direction is the
      // canonical orientation, so it is stored as-is.
      raw.push_back({top(j), bottom(j), g.power});
      vertical_except(j, j);
      break;
    }
    default:
      throw IndexOutOfRange(std::string("unknown generator kind '") + g.kind +
                            "'");
  }
  return AlgebraElement::from_diagram(ColoredDiagram::make(n, raw));
}

AlgebraElement evaluate_word(const std::vector<GeneratorName>& word, int n) {
  AlgebraElement acc = AlgebraElement::unit(n);
  for (const GeneratorName& g : word) acc = multiply(acc, generator(g, n));
  return acc;
}

std::vector<GeneratorName> parse_word(std::string_view text) {
  std::vector<GeneratorName> word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const char kind = text[pos];
    if (kind != 's' && kind != 'e' && kind != 't')
      throw ParseError("expected generator s, e or t", pos);
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected generator index", start);
    GeneratorName g{kind,
                    std::atoi(std::string(text.substr(start, pos - start)).c_str()),
                    1};
    if (pos < text.size() && text[pos] == '^') {
      if (kind != 't')
        throw ParseError("only t generators take powers", pos);
      ++pos;
      std::size_t pstart = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == pstart || (text[pstart] == '-' && pos == pstart + 1))
        throw ParseError("expected integer power", pstart);
      g.power = std::atoll(std::string(text.substr(pstart, pos - pstart)).c_str());
    }
    if (pos < text.size() &&
        !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("unexpected character in word", pos);
    word.push_back(g);
  }
  return word;
}

namespace {

// Shorthand used by the relation checker.
AlgebraElement gen(char kind, int index, int n, Label power = 1) {
  return generator(GeneratorName{kind, index, power}, n);
}

std::string inst_i(int i) { return "i=" + std::to_string(i); }
std::string inst_ij(int i, int j) {
  return "i=" + std::to_string(i) + ",j=" + std::to_string(j);
}

}  // namespace

bool RelationReport::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const RelationResult& r) { return r.pass; });
}

std::vector<RelationReport::FamilyCount> RelationReport::families() const {
  std::vector<FamilyCount> out;
  for (char f = 'a'; f <= 'o'; ++f) out.push_back({f, 0, 0});
  for (const RelationResult& r : results) {
    FamilyCount& fc = out[r.family - 'a'];
    ++fc.instances;
    if (!r.pass) ++fc.failures;
  }
  return out;
}

RelationReport check_relations(int n, int a_max) {
  RelationReport report{n, a_max, {}};
  auto check = [&](char family, std::string instance,
                   const AlgebraElement& lhs, const AlgebraElement& rhs) {
    report.results.push_back({family, std::move(instance), lhs == rhs});
  };
  const AlgebraElement one = AlgebraElement::unit(n);

  // (a) s_i^2 = 1
  for (int i = 1; i <= n - 1; ++i)
    check('a', inst_i(i), gen('s', i, n) * gen('s', i, n), one);
  // (b) s_i s_j = s_j s_i for |i-j| > 1 (unordered pairs)
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      check('b', inst_ij(i, j), gen('s', i, n) * gen('s', j, n),
            gen('s', j, n) * gen('s', i, n));
  // (c) s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
  for (int i = 1; i <= n - 2; ++i)
    check('c', inst_i(i),
          gen('s', i, n) * gen('s', i + 1, n) * gen('s', i, n),
          gen('s', i + 1, n) * gen('s', i, n) * gen('s', i + 1, n));
  // (d) s_i t_j = t_j s_i for j != i, i+1
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      check('d', inst_ij(i, j), gen('s', i, n) * gen('t', j, n),
            gen('t', j, n) * gen('s', i, n));
    }
  // (e) s_i e_j = e_j s_i for |i-j| > 1
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) <= 1) continue;
      check('e', inst_ij(i, j), gen('s', i, n) * gen('e', j, n),
            gen('e', j, n) * gen('s', i, n));
    }
  // (f) e_i e_j = e_j e_i for |i-j| > 1 (unordered pairs)
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      check('f', inst_ij(i, j), gen('e', i, n) * gen('e', j, n),
            gen('e', j, n) * gen('e', i, n));
  // (g) e_i t_j = t_j e_i for j != i, i+1
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      check('g', inst_ij(i, j), gen('e', i, n) * gen('t', j, n),
            gen('t', j, n) * gen('e', i, n));
    }
  // (h) t_i t_j = t_j t_i (unordered pairs; i = j is syntactically trivial)
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      check('h', inst_ij(i, j), gen('t', i, n) * gen('t', j, n),
            gen('t', j, n) * gen('t', i, n));
  // (i) s_i t_i = t_{i+1} s_i
  for (int i = 1; i <= n - 1; ++i)
    check('i', inst_i(i), gen('s', i, n) * gen('t', i, n),
          gen('t', i + 1, n) * gen('s', i, n));
  // (j) e_i s_i = e_i = s_i e_i
  for (int i = 1; i <= n - 1; ++i) {
    check('j', inst_i(i) + ",es", gen('e', i, n) * gen('s', i, n),
          gen('e', i, n));
    check('j', inst_i(i) + ",se", gen('s', i, n) * gen('e', i, n),
          gen('e', i, n));
  }
  // (k) s_i e_{i+1} e_i = s_{i+1} e_i
  for (int i = 1; i <= n - 2; ++i)
    check('k', inst_i(i),
          gen('s', i, n) * gen('e', i + 1, n) * gen('e', i, n),
          gen('s', i + 1, n) * gen('e', i, n));
  // (l) e_{i+1} e_i s_{i+1} = e_{i+1} s_i
  for (int i = 1; i <= n - 2; ++i)
    check('l', inst_i(i),
          gen('e', i + 1, n) * gen('e', i, n) * gen('s', i + 1, n),
          gen('e', i + 1, n) * gen('s', i, n));
  // (m) e_i e_j e_i = e_i for |i-j| = 1 (both ordered neighbours)
  for (int i = 1; i <= n - 1; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j > n - 1) continue;
      check('m', inst_ij(i, j),
            gen('e', i, n) * gen('e', j, n) * gen('e', i, n), gen('e', i, n));
    }
  // (n) e_i t_i t_{i+1} = e_i = t_i t_{i+1} e_i
  for (int i = 1; i <= n - 1; ++i) {
    check('n', inst_i(i) + ",ett",
          gen('e', i, n) * gen('t', i, n) * gen('t', i + 1, n),
          gen('e', i, n));
    check('n', inst_i(i) + ",tte",
          gen('t', i, n) * gen('t', i + 1, n) * gen('e', i, n),
          gen('e', i, n));
  }
  // (o) e_i t_i^a e_i = delta_a e_i for a = 0..a_max
  for (int i = 1; i <= n - 1; ++i)
    for (int a = 0; a <= a_max; ++a)
      check('o', inst_i(i) + ",a=" + std::to_string(a),
            gen('e', i, n) * gen('t', i, n, a) * gen('e', i, n),
            delta(static_cast<unsigned>(a)) * gen('e', i, n));
  return report;
}

}  // namespace brauer
