#include "arbzeta/tree_sum.hpp"

#include <algorithm>

namespace arbzeta {

void add_term(TreeSum& s, const PlanarForest& f, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = s.emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

TreeSum& operator+=(TreeSum& a, const TreeSum& b) {
  for (const auto& [f, c] : b) add_term(a, f, c);
  return a;
}

TreeSum operator+(TreeSum a, const TreeSum& b) {
  a += b;
  return a;
}

TreeSum operator-(const TreeSum& a, const TreeSum& b) {
  TreeSum out = a;
  for (const auto& [f, c] : b) add_term(out, f, -c);
  return out;
}

TreeSum operator*(const Rat& c, const TreeSum& s) {
  TreeSum out;
  if (c == 0) return out;
  for (const auto& [f, q] : s) out.emplace(f, c * q);
  return out;
}

std::string format_tree_sum(const TreeSum& s) {
  if (s.empty()) return "0";
  std::vector<std::pair<std::string, const Rat*>> terms;
  terms.reserve(s.size());
  for (const auto& [f, c] : s)
    terms.emplace_back(f.empty() ? "1" : format_forest(f), &c);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += format_rat(*terms[i].second) + "*" + terms[i].first;
  }
  return out;
}

TreeSum tree_sum(const PlanarTree& t) { return TreeSum{{PlanarForest{{t}}, Rat(1)}}; }

TreeSum tree_sum(const PlanarForest& f) { return TreeSum{{f, Rat(1)}}; }

TreeSum multiply_forests(const TreeSum& a, const TreeSum& b) {
  TreeSum out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) {
      if (!fa.empty() && !fb.empty() && alphabet_of(fa) != alphabet_of(fb))
        throw std::invalid_argument("alphabet mismatch in forest product");
      PlanarForest f = fa;
      f.trees.insert(f.trees.end(), fb.trees.begin(), fb.trees.end());
      add_term(out, f, ca * cb);
    }
  return out;
}

TreeSum canonicalize(const TreeSum& s) {
  TreeSum out;
  for (const auto& [f, c] : s) add_term(out, canonicalize(f), c);
  return out;
}

}  // namespace arbzeta
