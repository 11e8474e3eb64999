#include "brauer/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace brauer {

std::string Node::str() const {
  return (row == Row::Top ? "T" : "B") + std::to_string(pos);
}

Node Node::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'T' && text[0] != 'B'))
    throw ParseError("node must look like T3 or B1", 0);
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("node position must be a number", i);
  int pos = std::atoi(std::string(text.substr(1)).c_str());
  if (pos <= 0) throw ParseError("node position must be positive", 1);
  return Node{text[0] == 'T' ? Row::Top : Row::Bottom, pos};
}

Node node_from_ordinal(int ordinal, int n) {
  if (ordinal < n) return top(ordinal + 1);
  return bottom(2 * n - ordinal);
}

ColoredDiagram ColoredDiagram::make(int n, const std::vector<RawStrand>& raw) {
  if (n <= 0) throw PositionOutOfRange("diagram size must be positive");
  ColoredDiagram d;
  d.n_ = n;
  std::vector<bool> seen(2 * static_cast<std::size_t>(n), false);
  auto touch = [&](Node v) {
    if (v.pos < 1 || v.pos > n)
      throw PositionOutOfRange("node " + v.str() + " outside 1.." +
                               std::to_string(n));
    int ord = node_ordinal(v, n);
    if (seen[ord])
      throw NotAMatching("node " + v.str() + " used more than once");
    seen[ord] = true;
  };
  d.strands_.reserve(raw.size());
  for (const RawStrand& s : raw) {
    touch(s.from);
    touch(s.to);
    if (s.from == s.to)
      throw NotAMatching("strand endpoints must be distinct");
    // Canonical orientation runs from the smaller endpoint; traversing the
    // other way negates the label.
    if (s.from < s.to)
      d.strands_.push_back(Strand{s.from, s.to, s.label});
    else
      d.strands_.push_back(Strand{s.to, s.from, -s.label});
  }
  if (static_cast<int>(raw.size()) != n)
    throw NotAMatching("expected " + std::to_string(n) + " strands, got " +
                       std::to_string(raw.size()));
  std::sort(d.strands_.begin(), d.strands_.end());
  return d;
}

ColoredDiagram ColoredDiagram::identity(int n) {
  std::vector<RawStrand> raw;
  raw.reserve(n);
  for (int k = 1; k <= n; ++k) raw.push_back({top(k), bottom(k), 0});
  return make(n, raw);
}

int ColoredDiagram::through_count() const {
  int t = 0;
  for (const Strand& s : strands_)
    if (s.is_through()) ++t;
  return t;
}

ColoredDiagram ColoredDiagram::flip() const {
  auto mirror = [](Node v) {
    return Node{v.row == Row::Top ? Row::Bottom : Row::Top, v.pos};
  };
  std::vector<RawStrand> raw;
  raw.reserve(strands_.size());
  // Reading the reflected strand in the same direction keeps its label; the
  // constructor re-canonicalizes against the new endpoint order.
  for (const Strand& s : strands_)
    raw.push_back({mirror(s.lo), mirror(s.hi), s.label});
  return make(n_, raw);
}

std::string ColoredDiagram::str() const {
  std::string out = "[";
  for (const Strand& s : strands_) {
    if (out.size() > 1) out += ' ';
    out += s.lo.str();
    out += '-';
    out += s.hi.str();
    out += ':';
    out += std::to_string(s.label);
  }
  out += ']';
  return out;
}

std::string diagram_key(const ColoredDiagram& d) {
  return std::to_string(d.n()) + ":" + d.str();
}

namespace {

// Lowest-free-node recursion: pairing the smallest unmatched node with each
// larger free node in increasing order yields matchings in lexicographic
// order of their sorted strand lists.
void extend_matching(int n, std::vector<int>& partner,
                     std::vector<std::pair<int, int>>& current,
                     std::vector<ColoredDiagram>& out) {
  int lo = -1;
  for (int v = 0; v < 2 * n; ++v)
    if (partner[v] < 0) {
      lo = v;
      break;
    }
  if (lo < 0) {
    std::vector<RawStrand> raw;
    raw.reserve(current.size());
    for (auto [a, b] : current)
      raw.push_back({node_from_ordinal(a, n), node_from_ordinal(b, n), 0});
    out.push_back(ColoredDiagram::make(n, raw));
    return;
  }
  for (int hi = lo + 1; hi < 2 * n; ++hi) {
    if (partner[hi] >= 0) continue;
    partner[lo] = hi;
    partner[hi] = lo;
    current.emplace_back(lo, hi);
    extend_matching(n, partner, current, out);
    current.pop_back();
    partner[lo] = -1;
    partner[hi] = -1;
  }
}

}  // namespace

std::vector<ColoredDiagram> enumerate_flat(int n, int max_n) {
  if (n <= 0) throw PositionOutOfRange("diagram size must be positive");
  if (n > max_n)
    throw BoundExceeded("enumeration bound " + std::to_string(max_n) +
                        " exceeded by n=" + std::to_string(n));
  std::vector<ColoredDiagram> out;
  std::vector<int> partner(2 * static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> current;
  extend_matching(n, partner, current, out);
  return out;
}

}  // namespace brauer
