#include <doctest.h>

#include <cmath>

#include "arbzeta/verify.hpp"

using namespace arbzeta;

TEST_CASE("truncated word sums over Y") {
  CHECK(zeta_word_y(parse_word("y2"), 3, true).exact_value == Rat(49, 36));
  CHECK(zeta_word_y(parse_word("y1y2"), 2, true).exact_value == Rat(1, 4));
  TruncatedValue z3 = zeta_word_y(parse_word("y1y2"), 2000, false);
  // Euler: sum_{m<n} 1/(m n^2) = zeta(3)
  CHECK(std::abs(z3.approx - 1.2020569031595942854) < z3.tail_bound + 1e-12);
  CHECK(z3.tail_bound < 1e-2);
  CHECK_THROWS(zeta_word_y(parse_word("y2"), 0, true));
}

TEST_CASE("tail bound diverges for index-1 tails") {
  CHECK(zeta_word_y(parse_word("y2y1"), 100, false).tail_bound ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("first-kind tree values") {
  for (long n : {1L, 2L, 5L, 20L})
    CHECK(zeta_tree_first_kind(parse_forest("y2[y1]"), n, true).exact_value ==
          zeta_word_y(parse_word("y1y2"), n, true).exact_value);
  // (1/2)*1^2 + (1/3)*(1 + 1/4)^2 = 49/48
  CHECK(zeta_tree_first_kind(parse_forest("y1[y2,y2]"), 3, true).exact_value == Rat(49, 48));
  CHECK(zeta_tree_first_kind(PlanarForest{}, 5, true).exact_value == 1);
}

TEST_CASE("first kind equals the contracted word expansion") {
  for (const auto& f : enumerate_forests(CorpusSpec{4, 3, Alphabet::Y})) {
    std::vector<Rat> lhs = zeta_forest_first_kind_profile(f, 12);
    std::vector<Rat> rhs(13, Rat(0));
    rhs[0] = 1;
    for (long n = 1; n <= 12; ++n)
      for (const auto& [w, c] : arborify_contracting(f))
        rhs[n] += c * zeta_word_y_profile(w, n)[n];
    rhs[0] = lhs[0];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("truncated stuffle homomorphism") {
  for (const char* a : {"y1", "y2", "y1y2", "y3y1", "y1y1y1"})
    for (const char* b : {"y2", "y2y1", "y1y3"}) {
      Word u = parse_word(a), v = parse_word(b);
      for (long n : {1L, 7L, 20L}) {
        Rat lhs = zeta_word_y(u, n, true).exact_value * zeta_word_y(v, n, true).exact_value;
        Rat rhs = 0;
        for (const auto& [w, c] : stuffle(u, v)) rhs += c * zeta_word_y(w, n, true).exact_value;
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("monotone in the cap") {
  std::vector<Rat> p = zeta_word_y_profile(parse_word("y1y2"), 20);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i] >= p[i - 1]);
}

TEST_CASE("dictionary between the alphabets") {
  CHECK(x_word_to_y(parse_word("x1x0")).str() == "y2");
  CHECK(x_word_to_y(parse_word("x1x1x0")).str() == "y1y2");
  CHECK(x_word_to_y(parse_word("x1x0x0x1x0")).str() == "y3y2");
  CHECK_THROWS(x_word_to_y(parse_word("x0x1")));
  CHECK_THROWS(x_word_to_y(parse_word("x1x0x1")));

  CHECK(zeta_word_x(parse_word("x1x0"), 50, true).exact_value ==
        zeta_word_y(parse_word("y2"), 50, true).exact_value);

  // reduced substitution inverts the dictionary exactly
  for (const char* text : {"y2", "y1y2", "y3y1y2", "y2y2"}) {
    Word w = parse_word(text);
    Word back = word_s(w, Convention::Reduced);
    CHECK(x_word_to_y(back) == w);
    CHECK(zeta_word_x(back, 20, true).exact_value == zeta_word_y(w, 20, true).exact_value);
  }
}

TEST_CASE("second-kind evaluation") {
  CHECK(zeta_tree_second_kind(parse_forest("x0[x1]"), 30, true).exact_value ==
        zeta_word_y(parse_word("y2"), 30, true).exact_value);
  // wedge tree: two linear extensions of x1-x0-x1
  CHECK(zeta_tree_second_kind(parse_forest("x0[x1,x1]"), 30, true).exact_value ==
        Rat(2) * zeta_word_y(parse_word("y1y2"), 30, true).exact_value);
  CHECK_THROWS(zeta_tree_second_kind(parse_forest("x1[x0]"), 10, true));
  CHECK_THROWS(zeta_tree_second_kind(parse_forest("x0[x0]"), 10, true));
}

TEST_CASE("convergence predicates") {
  CHECK(first_kind_convergent(parse_forest("y2[y1] y3")));
  CHECK_FALSE(first_kind_convergent(parse_forest("y1[y2]")));
  CHECK(second_kind_convergent(parse_forest("x0[x1,x1]")));
  CHECK_FALSE(second_kind_convergent(parse_forest("x0[x1,x0]")));
}

TEST_CASE("truncated comparison of the two evaluations") {
  CHECK(clavier_compare(parse_forest("y2[y1]"), 2000).verdict ==
        ClavierVerdict::EqualWithinTolerance);
  CHECK(clavier_compare(parse_forest("y2[y1,y1]"), 2000).verdict == ClavierVerdict::StrictLess);
  CHECK(clavier_compare(parse_forest("y2[y2,y2]"), 2000).verdict == ClavierVerdict::StrictLess);
  CHECK_THROWS(clavier_compare(parse_forest("y1[y2]"), 100));
}
