#include <doctest.h>

#include "arbzeta/verify.hpp"

using namespace arbzeta;

namespace {
TreeSum term(const std::string& text, const Rat& c = 1) {
  return {{parse_forest(text, Alphabet::Y), c}};
}
TreeSum term_x(const std::string& text, const Rat& c = 1) {
  return {{parse_forest(text, Alphabet::X), c}};
}
}  // namespace

TEST_CASE("word substitution map") {
  CHECK(word_s(parse_word("y1y2"), Convention::Reduced).str() == "x1x1x0");
  CHECK(word_s(parse_word("y1y2"), Convention::Full).str() == "x1x0x1x0x0");
  CHECK(word_s(Word{}, Convention::Full).empty());
  CHECK(word_s(Word{}, Convention::Reduced).empty());
}

TEST_CASE("vertex-to-chain substitution") {
  CHECK(format_tree(s_pn(parse_tree("y1"), Convention::Full)) == "x0[x1]");
  CHECK(format_tree(s_pn(parse_tree("y1"), Convention::Reduced)) == "x1");
  CHECK(format_tree(s_pn(parse_tree("y2[y1]"), Convention::Reduced)) == "x0[x1[x1]]");
  CHECK(format_tree(s_pn(parse_tree("y1[y1,y1]"), Convention::Full)) ==
        "x0[x1[x0[x1],x0[x1]]]");
  CHECK(format_tree(s_pn(parse_tree("y1[y1,y1]"), Convention::Reduced)) == "x1[x1,x1]");
}

TEST_CASE("error term") {
  CHECK(error_term(parse_tree("y2[y1]")).empty());
  CHECK(error_term(parse_tree("y1[y2,y2]")) == term("y1[y4]") - term("y1[y3[y1]]", 4));
  CHECK(error_term(parse_tree("y1[y1,y1]")) == term("y1[y2]"));
}

TEST_CASE("reduction triple") {
  ReductionTriple r = reduction_triple(parse_tree("y1[y2,y3]"));
  CHECK(format_tree(r.merged) == "y1[y5]");
  CHECK(format_tree(r.nest_b_under_a) == "y1[y2[y3]]");
  CHECK(format_tree(r.nest_a_under_b) == "y1[y3[y2]]");

  ReductionTriple s = reduction_triple(parse_tree("y1[y2,y2]"));
  CHECK(format_tree(s.merged) == "y1[y4]");
  CHECK(format_tree(s.nest_b_under_a) == "y1[y2[y2]]");
  CHECK(s.nest_a_under_b == s.nest_b_under_a);

  // chain [y2,y3] and the trailing subtree block are preserved
  ReductionTriple u = reduction_triple(parse_tree("y2[y3[y1,y1[y1],y2]]"));
  CHECK(format_tree(u.merged) == "y2[y3[y2[y1],y2]]");
  CHECK(format_tree(u.nest_b_under_a) == "y2[y3[y1[y1[y1]],y2]]");
  CHECK(format_tree(u.nest_a_under_b) == "y2[y3[y1[y1,y1],y2]]");

  CHECK_THROWS(reduction_triple(parse_tree("y2[y1]")));
}

TEST_CASE("process tree") {
  ProcessTree leaf = process_tree(parse_tree("y2[y1]"));
  CHECK(leaf.children.empty());
  CHECK(format_tree(leaf.decoration) == "y2[y1]");

  ProcessTree p = process_tree(parse_tree("y1[y2,y2]"));
  CHECK(format_tree(p.decoration) == "y1[y2,y2]");
  REQUIRE(p.children.size() == 3);
  CHECK(format_tree(p.children[0].decoration) == "y1[y4]");
  CHECK(format_tree(p.children[1].decoration) == "y1[y2[y2]]");
  CHECK(format_tree(p.children[2].decoration) == "y1[y2[y2]]");
  for (const auto& c : p.children) CHECK(c.children.empty());
  CHECK(process_tree_size(p) == 4);

  // deeper recursion: some children are themselves non-ladders
  ProcessTree q = process_tree(parse_tree("y1[y1,y1,y1]"));
  REQUIRE(q.children.size() == 3);
  bool has_deep_child = false;
  for (const auto& c : q.children) has_deep_child |= !c.children.empty();
  CHECK(has_deep_child);
  std::vector<const ProcessTree*> stack{&q};
  while (!stack.empty()) {
    const ProcessTree* n = stack.back();
    stack.pop_back();
    if (n->children.empty()) CHECK(is_ladder(n->decoration));
    for (const auto& c : n->children) stack.push_back(&c);
  }
}

TEST_CASE("termination measure strictly decreases") {
  for (const auto& t : enumerate_trees(CorpusSpec{5, 2, Alphabet::Y})) {
    if (is_ladder(t)) continue;
    ReductionTriple r = reduction_triple(t);
    int n = incomparable_pair_count(t);
    CHECK(incomparable_pair_count(r.merged) < n);
    CHECK(incomparable_pair_count(r.nest_b_under_a) < n);
    CHECK(incomparable_pair_count(r.nest_a_under_b) < n);
  }
}

TEST_CASE("phi") {
  CHECK(phi(parse_tree("y3[y2[y1]]")) == term("y3[y2[y1]]"));
  CHECK(phi(parse_tree("y1[y1,y1]")) == term("y1[y1,y1]") + term("y1[y2]"));
  CHECK(phi(parse_tree("y1[y2,y2]")) ==
        term("y1[y2,y2]") + term("y1[y4]") - term("y1[y3[y1]]", 4));
}

TEST_CASE("planar composite map") {
  CHECK(s_pt(term("y2[y1]"), Convention::Full) == term_x("x0[x0[x1[x0[x1]]]]"));
  TreeSum expected = TreeSum{{PlanarForest{{s_pn(parse_tree("y1[y1,y1]"), Convention::Full)}}, Rat(1)}} +
                     TreeSum{{PlanarForest{{s_pn(parse_tree("y1[y2]"), Convention::Full)}}, Rat(1)}};
  CHECK(s_pt(term("y1[y1,y1]"), Convention::Full) == expected);
  CHECK(s_pt(TreeSum{}, Convention::Full).empty());
}

TEST_CASE("beta section") {
  CHECK(beta_section(parse_tree("y1[y2,y3]")) ==
        term("y1[y2,y3]", Rat(1, 2)) + term("y1[y3,y2]", Rat(1, 2)));
  CHECK(beta_section(parse_tree("y1[y2,y2]")) == term("y1[y2,y2]"));
  CHECK(beta_section(parse_tree("y2[y1]")) == term("y2[y1]"));
}

TEST_CASE("nonplanar composite map") {
  CHECK(s_t(term("y2[y1]"), Convention::Full) == term_x("x0[x0[x1[x0[x1]]]]"));
  CHECK(s_t(TreeSum{}, Convention::Reduced).empty());
  // image of a canonical tree is canonical
  TreeSum img = s_t(term("y1[y2,y2]"), Convention::Reduced);
  CHECK(canonicalize(img) == img);
}

TEST_CASE("ladder fixpoints") {
  for (const auto& t : enumerate_trees(CorpusSpec{5, 2, Alphabet::Y})) {
    if (!is_ladder(t)) continue;
    CHECK(phi(t) == tree_sum(t));
    CHECK(process_tree(t).children.empty());
    CHECK(error_term(t).empty());
  }
}
