#pragma once

#include "arbzeta/tree_sum.hpp"
#include "arbzeta/word.hpp"

namespace arbzeta {

/// Simple arborification over X: a(1) = 1, a(B+^d(G)) = L^d(a(G)),
/// a(T1...Tk) = a(T1) sh ... sh a(Tk).  Words read leaf-to-root.
WordSum arborify_simple(const PlanarForest& f);
WordSum arborify_simple(const TreeSum& s);  // linear extension

/// Contracting arborification over Y: same recursion with the stuffle.
WordSum arborify_contracting(const PlanarForest& f);
WordSum arborify_contracting(const TreeSum& s);

/// Dispatches on the forest's alphabet; the empty forest maps to the empty word.
WordSum arborify(const PlanarForest& f);
WordSum arborify(const TreeSum& s);

/// The ladder with the word's first letter at the leaf and last letter at the
/// root, so arborify(ladder_section(w)) = w.
PlanarTree ladder_section(const Word& w);  // throws on the empty word
TreeSum ladder_section(const WordSum& s);  // linear; empty word maps to the empty forest

/// Independent oracle: sum over linear extensions of the forest poset
/// (leaves first), each contributing its decoration word.
WordSum oracle_simple(const PlanarForest& f);

/// Independent oracle: sum over surjections V -> {1..k} strictly increasing
/// along the opposite tree order; letter i is y_{sum of block i's indices}.
WordSum oracle_contracting(const PlanarForest& f);

}  // namespace arbzeta
