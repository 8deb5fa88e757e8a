#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbzeta/letter.hpp"

namespace arbzeta {

/// Thrown by the forest parser; `pos` is the byte offset of the offending token.
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
  std::size_t pos;
};

/// Decorated planar rooted tree; children are kept in left-to-right planar order.
struct PlanarTree {
  Letter decoration;
  std::vector<PlanarTree> children;

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

/// Ordered sequence of trees; the empty forest is the algebra unit.
struct PlanarForest {
  std::vector<PlanarTree> trees;

  bool empty() const { return trees.empty(); }
  friend bool operator==(const PlanarForest&, const PlanarForest&) = default;
};

// Structural strict weak order, used as the map key order for linear combinations.
// Printed term order is decided separately (lexicographic on serializations).
bool operator<(const PlanarTree& a, const PlanarTree& b);
bool operator<(const PlanarForest& a, const PlanarForest& b);

/// Names a vertex by the child indices on the path from the root; empty = root.
using VertexPath = std::vector<int>;

std::string format_tree(const PlanarTree& t);
std::string format_forest(const PlanarForest& f);

/// Grammar: forest := tree (SP tree)*; tree := letter ('[' tree (',' tree)* ']')?;
/// letter := 'x0' | 'x1' | 'y' INT.  Whitespace-insensitive except as separator.
PlanarForest parse_forest(const std::string& text, Alphabet alphabet);
PlanarForest parse_forest(const std::string& text);  // alphabet inferred
PlanarTree parse_tree(const std::string& text, Alphabet alphabet);
PlanarTree parse_tree(const std::string& text);

Alphabet alphabet_of(const PlanarTree& t);
Alphabet alphabet_of(const PlanarForest& f);

/// B+^d: grafts all components of `f` onto a common root decorated by `d`.
PlanarTree graft(const Letter& d, const PlanarForest& f);
/// B-: removes the root, leaving the forest of its subtrees.
PlanarForest prune(const PlanarTree& t);

const PlanarTree& node_at(const PlanarTree& t, const VertexPath& path);
int depth(const PlanarTree& t, const VertexPath& path);  // validates the path
/// Opposite tree order: u <= v iff v lies on the path from the root to u.
bool opposite_leq(const PlanarTree& t, const VertexPath& u, const VertexPath& v);
std::vector<VertexPath> leaves(const PlanarTree& t);
bool is_ladder(const PlanarTree& t);
bool is_ladder(const PlanarForest& f);
int vertex_count(const PlanarTree& t);
int vertex_count(const PlanarForest& f);

/// Vertices in the planar total order alpha_T: by depth, then left-to-right.
std::vector<VertexPath> breadth_first_order(const PlanarTree& t);

/// Lexicographically least (under alpha_T) pair of mutually incomparable
/// vertices; nullopt iff the tree is a ladder.  Always the first two children
/// of the first branching vertex below the root chain.
std::optional<std::pair<VertexPath, VertexPath>> minimal_incomparable_pair(const PlanarTree& t);

/// Number of mutually incomparable vertex pairs; the termination measure of
/// the process-tree recursion.
int incomparable_pair_count(const PlanarTree& t);

/// T = B+^{d_1} o ... o B+^{d_s}( B+^{d_a}(F_a) B+^{d_b}(F_b) F ), root-first
/// chain ending at the branching vertex.
struct Decomposition {
  std::vector<Letter> chain;  // d_1 ... d_s, d_s decorates the branching vertex
  Letter d_a;
  PlanarForest f_a;
  Letter d_b;
  PlanarForest f_b;
  PlanarForest rest;  // the remaining subtrees at the branch, in order
};

Decomposition branch_decompose(const PlanarTree& t);  // throws on ladder input

/// Rebuilds the tree of a Decomposition with the branch forest replaced by `at_branch`.
PlanarTree rebuild_chain(const std::vector<Letter>& chain, const PlanarForest& at_branch);

/// Canonical representative of the planar-order quotient: recursively sorts all
/// child lists (and the top-level tree list) by serialization.  Idempotent.
PlanarTree canonicalize(const PlanarTree& t);
PlanarForest canonicalize(const PlanarForest& f);

/// All planar realizations of a non-planar tree (canonicalize first): one tree
/// per tuple of child-list permutations, duplicates kept with multiplicity.
std::vector<PlanarTree> enumerate_orderings(const PlanarTree& t);

}  // namespace arbzeta
