#include "brauer/wreath.hpp"

#include <numeric>

namespace brauer {

WreathElem WreathElem::identity(int k) {
  if (k < 0) throw PositionOutOfRange("wreath size must be nonnegative");
  WreathElem w;
  w.perm.resize(k);
  std::iota(w.perm.begin(), w.perm.end(), 1);
  w.colors.assign(k, 0);
  return w;
}

WreathElem WreathElem::make(std::vector<int> perm, std::vector<Label> colors) {
  if (perm.size() != colors.size())
    throw DimensionMismatch("permutation and color vector sizes differ");
  const int k = static_cast<int>(perm.size());
  std::vector<bool> hit(k, false);
  for (int image : perm) {
    if (image < 1 || image > k || hit[image - 1])
      throw NotAMatching("not a permutation of 1.." + std::to_string(k));
    hit[image - 1] = true;
  }
  WreathElem w;
  w.perm = std::move(perm);
  w.colors = std::move(colors);
  return w;
}

std::string WreathElem::str() const {
  std::string out = "[";
  for (std::size_t a = 0; a < perm.size(); ++a) {
    if (a) out += ' ';
    out += std::to_string(perm[a]);
  }
  out += " | ";
  for (std::size_t a = 0; a < colors.size(); ++a) {
    if (a) out += ',';
    out += std::to_string(colors[a]);
  }
  out += ']';
  return out;
}

WreathElem wreath_mul(const WreathElem& u, const WreathElem& v) {
  if (u.k() != v.k())
    throw DimensionMismatch("wreath sizes differ: " + std::to_string(u.k()) +
                            " vs " + std::to_string(v.k()));
  const int k = u.k();
  WreathElem w;
  w.perm.resize(k);
  w.colors.resize(k);
  for (int a = 1; a <= k; ++a) {
    const int mid = u.perm[a - 1];
    w.perm[a - 1] = v.perm[mid - 1];
    w.colors[a - 1] = u.colors[a - 1] + v.colors[mid - 1];
  }
  return w;
}

WreathElem wreath_inverse(const WreathElem& u) {
  const int k = u.k();
  WreathElem w;
  w.perm.resize(k);
  w.colors.resize(k);
  for (int a = 1; a <= k; ++a) w.perm[u.perm[a - 1] - 1] = a;
  for (int b = 1; b <= k; ++b) w.colors[b - 1] = -u.colors[w.perm[b - 1] - 1];
  return w;
}

GroupAlgebraElem::GroupAlgebraElem(int k) : k_(k) {
  if (k < 0) throw PositionOutOfRange("wreath size must be nonnegative");
}

GroupAlgebraElem GroupAlgebraElem::unit(int k) {
  return from_elem(WreathElem::identity(k));
}

GroupAlgebraElem GroupAlgebraElem::from_elem(const WreathElem& w,
                                             RingElem coeff) {
  GroupAlgebraElem a(w.k());
  a.add_term(w, std::move(coeff));
  return a;
}

void GroupAlgebraElem::add_term(const WreathElem& w, RingElem coeff) {
  if (w.k() != k_)
    throw DimensionMismatch("term has k=" + std::to_string(w.k()) +
                            ", element has k=" + std::to_string(k_));
  if (coeff.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElem& GroupAlgebraElem::operator+=(const GroupAlgebraElem& rhs) {
  if (rhs.k_ != k_)
    throw DimensionMismatch("adding elements with k=" + std::to_string(k_) +
                            " and k=" + std::to_string(rhs.k_));
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

GroupAlgebraElem& GroupAlgebraElem::operator-=(const GroupAlgebraElem& rhs) {
  if (rhs.k_ != k_)
    throw DimensionMismatch("subtracting elements with k=" +
                            std::to_string(k_) + " and k=" +
                            std::to_string(rhs.k_));
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

GroupAlgebraElem GroupAlgebraElem::scaled(const RingElem& c) const {
  GroupAlgebraElem out(k_);
  for (const auto& [w, coeff] : terms_) out.add_term(w, c * coeff);
  return out;
}

std::string GroupAlgebraElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c.is_one()) {
      out += w.str();
    } else if (c.terms().size() == 1) {
      out += c.str() + " * " + w.str();
    } else {
      out += "(" + c.str() + ") * " + w.str();
    }
  }
  return out;
}

GroupAlgebraElem group_algebra_mul(const GroupAlgebraElem& a,
                                   const GroupAlgebraElem& b) {
  if (a.k() != b.k())
    throw DimensionMismatch("multiplying elements with k=" +
                            std::to_string(a.k()) + " and k=" +
                            std::to_string(b.k()));
  GroupAlgebraElem out(a.k());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms())
      out.add_term(wreath_mul(u, v), cu * cv);
  return out;
}

GroupAlgebraElem sigma(const GroupAlgebraElem& a) {
  GroupAlgebraElem out(a.k());
  for (const auto& [w, c] : a.terms()) out.add_term(sigma(w), c);
  return out;
}

}  // namespace brauer
