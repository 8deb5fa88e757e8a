#pragma once

#include "arbzeta/arborify.hpp"
#include "arbzeta/tree_sum.hpp"

namespace arbzeta {

/// x0-chain length used when a y_n vertex is expanded: FULL uses n, REDUCED
/// uses n-1 (the standard weight-n MZV word).
enum class Convention { Full, Reduced };

/// s: y_{n1}...y_{nd} -> x1 x0^{n1-1} ... x1 x0^{nd-1} (REDUCED) or
/// x1 x0^{n1} ... x1 x0^{nd} (FULL).  Leaf-to-root reading, linear on sums.
Word word_s(const Word& w, Convention c);
WordSum word_s(const WordSum& s, Convention c);

/// s^PN: vertex-to-chain substitution, y_n -> chain of x0's over an x1 whose
/// children are the images of the children; componentwise on forests.
PlanarTree s_pn(const PlanarTree& t, Convention c);
PlanarForest s_pn(const PlanarForest& f, Convention c);
TreeSum s_pn(const TreeSum& s, Convention c);

/// s^N = canonicalize . s^PN.
TreeSum s_n(const TreeSum& s, Convention c);

/// Binomial-weighted correction at the minimal incomparable pair; zero on ladders.
TreeSum error_term(const PlanarTree& t);

/// (Y_{a+b}, Y_b^a, Y_a^b): roots merged, b-branch nested under a, a-branch
/// nested under b; chain and remaining subtrees preserved.
struct ReductionTriple {
  PlanarTree merged;
  PlanarTree nest_b_under_a;
  PlanarTree nest_a_under_b;
};
ReductionTriple reduction_triple(const PlanarTree& t);  // throws on ladder input

/// pr(Y): ladder leaf, or root Y over (pr(Y_{a+b}), pr(Y_b^a), pr(Y_a^b)).
struct ProcessTree {
  PlanarTree decoration;
  std::vector<ProcessTree> children;
};
ProcessTree process_tree(const PlanarTree& t);
int process_tree_size(const ProcessTree& p);
std::string format_process_tree(const ProcessTree& p);

/// phi(Y) = Y + sum of error terms over all process-tree vertex decorations;
/// on forests, componentwise with products re-expanded.
TreeSum phi(const PlanarTree& t);
TreeSum phi(const TreeSum& s);

/// s^PT = s^PN . phi.
TreeSum s_pt(const TreeSum& s, Convention c);

/// beta: averages over all planar realizations; a section of canonicalize.
TreeSum beta_section(const PlanarTree& t);  // input taken as non-planar (canonicalized)
TreeSum beta_section(const TreeSum& s);     // componentwise on forests

/// s^T = canonicalize . s^PT . beta.
TreeSum s_t(const TreeSum& s, Convention c);

}  // namespace arbzeta
