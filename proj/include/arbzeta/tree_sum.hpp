#pragma once

#include <map>

#include "arbzeta/tree.hpp"
#include "arbzeta/word.hpp"

namespace arbzeta {

/// Rational linear combination of planar forests (the NBCK algebra as a
/// vector space); zero coefficients are never stored.
using TreeSum = std::map<PlanarForest, Rat>;

void add_term(TreeSum& s, const PlanarForest& f, const Rat& c);
TreeSum& operator+=(TreeSum& a, const TreeSum& b);
TreeSum operator+(TreeSum a, const TreeSum& b);
TreeSum operator-(const TreeSum& a, const TreeSum& b);
TreeSum operator*(const Rat& c, const TreeSum& s);
std::string format_tree_sum(const TreeSum& s);

TreeSum tree_sum(const PlanarTree& t);    // 1 * (t)
TreeSum tree_sum(const PlanarForest& f);  // 1 * f

/// Bilinear extension of forest concatenation (the NBCK product).
TreeSum multiply_forests(const TreeSum& a, const TreeSum& b);

TreeSum canonicalize(const TreeSum& s);

}  // namespace arbzeta
