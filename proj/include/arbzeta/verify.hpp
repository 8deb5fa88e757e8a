#pragma once

#include <string>
#include <vector>

#include "arbzeta/zeta.hpp"

namespace arbzeta {

/// Exhaustive corpus bounds: every decorated planar tree/forest with at most
/// max_vertices vertices, Y-indices at most max_index (ignored over X).
struct CorpusSpec {
  int max_vertices = 6;
  int max_index = 3;
  Alphabet alphabet = Alphabet::Y;
};

struct Failure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string suite;
  std::string convention;  // "full", "reduced", or "-" for convention-free suites
  long cases = 0;
  long failure_count = 0;
  std::vector<Failure> failures;  // details for the first few failures only
  std::vector<std::string> notes;
  double ms = 0.0;

  bool ok() const { return failure_count == 0; }
  std::string summary() const;
  std::string json() const;
};

std::vector<PlanarTree> enumerate_trees(const CorpusSpec& spec);
std::vector<PlanarForest> enumerate_forests(const CorpusSpec& spec);

/// Exchange identities at the minimal incomparable pair (two-term over X,
/// three-term over Y) plus the forest-level two/three-term product identity.
Report check_exchange(const CorpusSpec& spec);

/// The binomial double-sum expansion of a(s^PN(Y)) at the branch pair.
Report check_formula_42(const CorpusSpec& spec, Convention conv);

/// a(s^PN(Y) + s^PN(Y^e)) = a(s^PN(Y_{a+b} + Y_b^a + Y_a^b)).
Report check_error_cancellation(const CorpusSpec& spec, Convention conv);

/// The commuting diagram: a_PX . s^PT = s . a_PY on the planar corpus, the
/// ladder diagrams for s^PN and s^PT (words of length <= 4), and the
/// corollary a_X . s^T = s . a_Y on canonical trees (capped at 5 vertices).
Report check_main_diagram(const CorpusSpec& spec, Convention conv);

/// arborify vs the independent linear-extension / strict-surjection oracles,
/// over all corpus forests.
Report check_oracles(const CorpusSpec& spec);

/// Section properties: arborify . ladder_section = id on words (length and
/// index bounds taken from the spec fields), and canonicalize . beta = id on
/// canonical trees (vertex bound capped at 6).
Report check_sections(const CorpusSpec& spec);

/// |enumerate_orderings| vs the filter-all-total-orders oracle vs prod c_v!,
/// per tree shape; the factorial-free deg-product count is compared in the
/// notes.
Report check_orderings(const CorpusSpec& spec);

}  // namespace arbzeta
