#pragma once

#include "arbzeta/tree_maps.hpp"

namespace arbzeta {

/// Truncated nested-sum value: exact rational, or floating with a tail bound
/// on the discarded part of the (convergent) series.
struct TruncatedValue {
  bool exact;
  Rat exact_value;       // exact mode only
  double approx;         // float mode only
  long cap;
  double tail_bound;     // float mode; +inf when the series shape diverges

  std::string str() const;
};

/// zeta_N(y_{k1}...y_{kd}) = sum over 0 < n1 < ... < nd <= N of prod ni^-ki.
TruncatedValue zeta_word_y(const Word& w, long cap, bool exact);

/// First-kind arborified MZV truncation: strictly increasing towards the root.
/// Forests multiply; the empty forest evaluates to 1.
TruncatedValue zeta_tree_first_kind(const PlanarForest& f, long cap, bool exact);

/// Dictionary: leaf-to-root word x1 x0^{a1} ... x1 x0^{at} (a_t >= 1) maps to
/// the MZV with exponents (a1+1, ..., at+1).
TruncatedValue zeta_word_x(const Word& w, long cap, bool exact);
Word x_word_to_y(const Word& w);  // throws on divergent word shapes

/// Second-kind (Yamamoto-integral) truncation, evaluated exactly by the
/// linear-extension expansion: sum of coeff * zeta_word_x over arborify_simple.
TruncatedValue zeta_tree_second_kind(const PlanarForest& f, long cap, bool exact);

/// Exact truncations at every cap 0..N in a single pass (index i = cap i);
/// used by identity checks quantified over all caps at once.
std::vector<Rat> zeta_word_y_profile(const Word& w, long cap);
std::vector<Rat> zeta_forest_first_kind_profile(const PlanarForest& f, long cap);

bool first_kind_convergent(const PlanarForest& f);   // each component root index >= 2
bool second_kind_convergent(const PlanarForest& f);  // roots x0, leaves x1

enum class ClavierVerdict { StrictLess, EqualWithinTolerance, Violation };

struct ClavierComparison {
  TruncatedValue lhs;  // zeta(s^N(F)), second kind, REDUCED convention
  TruncatedValue rhs;  // zeta(F), first kind
  double tolerance;
  ClavierVerdict verdict;
};

ClavierComparison clavier_compare(const PlanarForest& f, long cap);

}  // namespace arbzeta
