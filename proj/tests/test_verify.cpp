#include <doctest.h>

#include <algorithm>

#include "arbzeta/verify.hpp"

using namespace arbzeta;

TEST_CASE("corpus enumeration counts") {
  auto two = enumerate_trees(CorpusSpec{2, 2, Alphabet::Y});
  CHECK(two.size() == 6);  // 2 singletons + 4 two-vertex ladders

  auto three = enumerate_trees(CorpusSpec{3, 1, Alphabet::Y});
  long exactly_three = std::count_if(three.begin(), three.end(),
                                     [](const PlanarTree& t) { return vertex_count(t) == 3; });
  CHECK(exactly_three == 2);  // two planar shapes, one decoration each

  CHECK(enumerate_trees(CorpusSpec{1, 3, Alphabet::Y}).size() == 3);

  // Catalan shape counts times decoration assignments
  auto five = enumerate_trees(CorpusSpec{5, 2, Alphabet::Y});
  long exactly_five = std::count_if(five.begin(), five.end(),
                                    [](const PlanarTree& t) { return vertex_count(t) == 5; });
  CHECK(exactly_five == 14 * 32);

  auto forests = enumerate_forests(CorpusSpec{3, 1, Alphabet::Y});
  CHECK(forests.size() == 1 + 2 + 5);  // Catalan(1..3) shapes, single decoration

  // duplicate-free
  std::vector<std::string> keys;
  for (const auto& t : five) keys.push_back(format_tree(t));
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("exchange suite clean on a small corpus") {
  CHECK(check_exchange(CorpusSpec{5, 3, Alphabet::Y}).ok());
  CHECK(check_exchange(CorpusSpec{5, 3, Alphabet::X}).ok());
}

TEST_CASE("oracle suite clean on a small corpus") {
  CHECK(check_oracles(CorpusSpec{5, 3, Alphabet::Y}).ok());
  CHECK(check_oracles(CorpusSpec{5, 3, Alphabet::X}).ok());
}

TEST_CASE("convention-sensitive suites pass under reduced") {
  CorpusSpec spec{5, 2, Alphabet::Y};
  CHECK(check_formula_42(spec, Convention::Reduced).ok());
  CHECK(check_error_cancellation(spec, Convention::Reduced).ok());
  CHECK(check_main_diagram(spec, Convention::Reduced).ok());
}

TEST_CASE("full convention fails the branching identities") {
  CorpusSpec spec{4, 2, Alphabet::Y};
  Report r = check_formula_42(spec, Convention::Full);
  CHECK(r.cases > 0);
  CHECK(r.failure_count == r.cases);
  // ladders still satisfy their diagram under full, branching trees do not
  Report d = check_main_diagram(spec, Convention::Full);
  CHECK_FALSE(d.ok());
  CHECK(d.failure_count < d.cases);
  CHECK(d.failure_count > 0);
}

TEST_CASE("sections and orderings suites") {
  CHECK(check_sections(CorpusSpec{4, 2, Alphabet::Y}).ok());
  Report r = check_orderings(CorpusSpec{5, 3, Alphabet::Y});
  CHECK(r.ok());
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("disagrees") != std::string::npos);
}

TEST_CASE("report serialization") {
  Report r = check_oracles(CorpusSpec{2, 1, Alphabet::Y});
  std::string j = r.json();
  CHECK(j.find("\"suite\": \"oracles\"") != std::string::npos);
  CHECK(j.find("\"total\": 3") != std::string::npos);
  CHECK(j.find("\"failures\": []") != std::string::npos);
  CHECK(r.summary().find("failures=0") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  CorpusSpec spec{4, 2, Alphabet::Y};
  Report a = check_exchange(spec);
  Report b = check_exchange(spec);
  CHECK(a.cases == b.cases);
  CHECK(a.failure_count == b.failure_count);
}
