#include "arbzeta/tree.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace arbzeta {

bool operator<(const PlanarTree& a, const PlanarTree& b) {
  if (a.decoration != b.decoration) return a.decoration < b.decoration;
  return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                      b.children.begin(), b.children.end(),
                                      [](const PlanarTree& x, const PlanarTree& y) { return x < y; });
}

bool operator<(const PlanarForest& a, const PlanarForest& b) {
  return std::lexicographical_compare(a.trees.begin(), a.trees.end(),
                                      b.trees.begin(), b.trees.end(),
                                      [](const PlanarTree& x, const PlanarTree& y) { return x < y; });
}

std::string format_tree(const PlanarTree& t) {
  std::string out = t.decoration.str();
  if (!t.children.empty()) {
    out += '[';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) out += ',';
      out += format_tree(t.children[i]);
    }
    out += ']';
  }
  return out;
}

std::string format_forest(const PlanarForest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ' ';
    out += format_tree(f.trees[i]);
  }
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  std::optional<Alphabet> required;
  std::optional<Alphabet> seen;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

  Letter letter() {
    if (pos >= text.size()) fail("expected letter");
    char c = text[pos];
    Alphabet a;
    if (c == 'x') a = Alphabet::X;
    else if (c == 'y') a = Alphabet::Y;
    else fail("expected 'x' or 'y'");
    if (required && a != *required) fail("alphabet mismatch");
    if (seen && a != *seen) fail("mixed alphabets in one forest");
    seen = a;
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits after letter");
    long v = std::stol(text.substr(start, pos - start));
    if (a == Alphabet::X) {
      if (v != 0 && v != 1) { pos = start; fail("x-letter must be x0 or x1"); }
      return Letter::x(static_cast<int>(v));
    }
    if (v < 1) { pos = start; fail("y-index must be >= 1"); }
    return Letter::y(static_cast<int>(v));
  }

  PlanarTree tree() {
    PlanarTree t{letter(), {}};
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      skip_ws();
      t.children.push_back(tree());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
        t.children.push_back(tree());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != ']') fail("expected ',' or ']'");
      ++pos;
    }
    return t;
  }

  PlanarForest forest() {
    PlanarForest f;
    skip_ws();
    if (pos >= text.size()) fail("empty input");
    f.trees.push_back(tree());
    skip_ws();
    while (pos < text.size()) {
      f.trees.push_back(tree());
      skip_ws();
    }
    return f;
  }
};

}  // namespace

PlanarForest parse_forest(const std::string& text, Alphabet alphabet) {
  Parser p{text};
  p.required = alphabet;
  return p.forest();
}

PlanarForest parse_forest(const std::string& text) {
  Parser p{text};
  return p.forest();
}

PlanarTree parse_tree(const std::string& text, Alphabet alphabet) {
  PlanarForest f = parse_forest(text, alphabet);
  if (f.trees.size() != 1) throw parse_error("expected a single tree", 0);
  return f.trees[0];
}

PlanarTree parse_tree(const std::string& text) {
  PlanarForest f = parse_forest(text);
  if (f.trees.size() != 1) throw parse_error("expected a single tree", 0);
  return f.trees[0];
}

Alphabet alphabet_of(const PlanarTree& t) { return t.decoration.alphabet; }

Alphabet alphabet_of(const PlanarForest& f) {
  if (f.empty()) throw std::invalid_argument("empty forest has no alphabet");
  return alphabet_of(f.trees.front());
}

PlanarTree graft(const Letter& d, const PlanarForest& f) {
  for (const auto& t : f.trees)
    if (t.decoration.alphabet != d.alphabet) throw std::invalid_argument("alphabet mismatch in graft");
  return PlanarTree{d, f.trees};
}

PlanarForest prune(const PlanarTree& t) { return PlanarForest{t.children}; }

const PlanarTree& node_at(const PlanarTree& t, const VertexPath& path) {
  const PlanarTree* cur = &t;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->children.size())
      throw std::out_of_range("invalid vertex path");
    cur = &cur->children[i];
  }
  return *cur;
}

int depth(const PlanarTree& t, const VertexPath& path) {
  node_at(t, path);
  return static_cast<int>(path.size());
}

bool opposite_leq(const PlanarTree& t, const VertexPath& u, const VertexPath& v) {
  node_at(t, u);
  node_at(t, v);
  if (v.size() > u.size()) return false;
  return std::equal(v.begin(), v.end(), u.begin());
}

namespace {
void collect_leaves(const PlanarTree& t, VertexPath& path, std::vector<VertexPath>& out) {
  if (t.children.empty()) {
    out.push_back(path);
    return;
  }
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_leaves(t.children[i], path, out);
    path.pop_back();
  }
}
}  // namespace

std::vector<VertexPath> leaves(const PlanarTree& t) {
  std::vector<VertexPath> out;
  VertexPath path;
  collect_leaves(t, path, out);
  return out;
}

bool is_ladder(const PlanarTree& t) {
  const PlanarTree* cur = &t;
  while (!cur->children.empty()) {
    if (cur->children.size() > 1) return false;
    cur = &cur->children[0];
  }
  return true;
}

bool is_ladder(const PlanarForest& f) {
  return std::all_of(f.trees.begin(), f.trees.end(), [](const PlanarTree& t) { return is_ladder(t); });
}

int vertex_count(const PlanarTree& t) {
  int n = 1;
  for (const auto& c : t.children) n += vertex_count(c);
  return n;
}

int vertex_count(const PlanarForest& f) {
  int n = 0;
  for (const auto& t : f.trees) n += vertex_count(t);
  return n;
}

std::vector<VertexPath> breadth_first_order(const PlanarTree& t) {
  std::vector<VertexPath> order;
  std::deque<VertexPath> queue{{}};
  while (!queue.empty()) {
    VertexPath p = queue.front();
    queue.pop_front();
    const PlanarTree& node = node_at(t, p);
    order.push_back(p);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      VertexPath q = p;
      q.push_back(static_cast<int>(i));
      queue.push_back(std::move(q));
    }
  }
  return order;
}

std::optional<std::pair<VertexPath, VertexPath>> minimal_incomparable_pair(const PlanarTree& t) {
  std::vector<VertexPath> order = breadth_first_order(t);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (!opposite_leq(t, order[i], order[j]) && !opposite_leq(t, order[j], order[i]))
        return std::make_pair(order[i], order[j]);
  return std::nullopt;
}

int incomparable_pair_count(const PlanarTree& t) {
  auto order = breadth_first_order(t);
  int count = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (!opposite_leq(t, order[i], order[j]) && !opposite_leq(t, order[j], order[i])) ++count;
  return count;
}

Decomposition branch_decompose(const PlanarTree& t) {
  if (is_ladder(t)) throw std::invalid_argument("branch_decompose: ladder input");
  std::vector<Letter> chain;
  const PlanarTree* cur = &t;
  while (cur->children.size() == 1) {
    chain.push_back(cur->decoration);
    cur = &cur->children[0];
  }
  chain.push_back(cur->decoration);  // the branching vertex
  const auto& kids = cur->children;
  PlanarForest rest{std::vector<PlanarTree>(kids.begin() + 2, kids.end())};
  return Decomposition{std::move(chain), kids[0].decoration, prune(kids[0]),
                       kids[1].decoration, prune(kids[1]), std::move(rest)};
}

PlanarTree rebuild_chain(const std::vector<Letter>& chain, const PlanarForest& at_branch) {
  PlanarTree t = graft(chain.back(), at_branch);
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it)
    t = graft(*it, PlanarForest{{std::move(t)}});
  return t;
}

PlanarTree canonicalize(const PlanarTree& t) {
  PlanarTree out{t.decoration, {}};
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(canonicalize(c));
  std::sort(out.children.begin(), out.children.end(),
            [](const PlanarTree& a, const PlanarTree& b) { return format_tree(a) < format_tree(b); });
  return out;
}

PlanarForest canonicalize(const PlanarForest& f) {
  PlanarForest out;
  out.trees.reserve(f.trees.size());
  for (const auto& t : f.trees) out.trees.push_back(canonicalize(t));
  std::sort(out.trees.begin(), out.trees.end(),
            [](const PlanarTree& a, const PlanarTree& b) { return format_tree(a) < format_tree(b); });
  return out;
}

std::vector<PlanarTree> enumerate_orderings(const PlanarTree& t) {
  std::size_t k = t.children.size();
  std::vector<std::vector<PlanarTree>> child_orderings;
  child_orderings.reserve(k);
  for (const auto& c : t.children) child_orderings.push_back(enumerate_orderings(c));

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PlanarTree> out;
  do {
    // cartesian product over the chosen orderings of each child, mixed-radix
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      PlanarTree variant{t.decoration, {}};
      variant.children.reserve(k);
      for (std::size_t i = 0; i < k; ++i) variant.children.push_back(child_orderings[perm[i]][idx[perm[i]]]);
      out.push_back(std::move(variant));
      std::size_t j = 0;
      for (; j < k; ++j) {
        if (++idx[j] < child_orderings[j].size()) break;
        idx[j] = 0;
      }
      if (j == k) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace arbzeta
