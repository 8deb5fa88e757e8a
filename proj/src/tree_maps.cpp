#include "arbzeta/tree_maps.hpp"

#include <mutex>
#include <unordered_map>

namespace arbzeta {

namespace {

int chain_length(int n, Convention c) { return c == Convention::Full ? n : n - 1; }

Rat binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(out);
}

}  // namespace

Word word_s(const Word& w, Convention c) {
  if (!w.empty() && alphabet_of(w) != Alphabet::Y)
    throw std::invalid_argument("word_s expects a Y-word");
  Word out;
  for (const auto& l : w.letters) {
    out.letters.push_back(Letter::x(1));
    for (int i = 0; i < chain_length(l.value, c); ++i) out.letters.push_back(Letter::x(0));
  }
  return out;
}

WordSum word_s(const WordSum& s, Convention c) {
  WordSum out;
  for (const auto& [w, q] : s) add_term(out, word_s(w, c), q);
  return out;
}

PlanarTree s_pn(const PlanarTree& t, Convention c) {
  if (t.decoration.alphabet != Alphabet::Y) throw std::invalid_argument("s_pn expects the Y alphabet");
  PlanarTree x1{Letter::x(1), s_pn(prune(t), c).trees};
  PlanarTree out = std::move(x1);
  for (int i = 0; i < chain_length(t.decoration.value, c); ++i)
    out = PlanarTree{Letter::x(0), {std::move(out)}};
  return out;
}

PlanarForest s_pn(const PlanarForest& f, Convention c) {
  PlanarForest out;
  out.trees.reserve(f.trees.size());
  for (const auto& t : f.trees) out.trees.push_back(s_pn(t, c));
  return out;
}

TreeSum s_pn(const TreeSum& s, Convention c) {
  TreeSum out;
  for (const auto& [f, q] : s) add_term(out, s_pn(f, c), q);
  return out;
}

TreeSum s_n(const TreeSum& s, Convention c) { return canonicalize(s_pn(s, c)); }

TreeSum error_term(const PlanarTree& t) {
  if (t.decoration.alphabet != Alphabet::Y)
    throw std::invalid_argument("error_term expects the Y alphabet");
  if (is_ladder(t)) return {};
  Decomposition d = branch_decompose(t);
  const int na = d.d_a.value, nb = d.d_b.value;
  // The chain below ends at the branching vertex; the branch forest is replaced.
  auto with_branch = [&](PlanarForest branch) {
    branch.trees.insert(branch.trees.end(), d.rest.trees.begin(), d.rest.trees.end());
    std::vector<Letter> outer(d.chain.begin(), d.chain.end());
    return rebuild_chain(outer, branch);
  };

  TreeSum out;
  PlanarForest merged_forest = d.f_a;
  merged_forest.trees.insert(merged_forest.trees.end(), d.f_b.trees.begin(), d.f_b.trees.end());
  add_term(out, PlanarForest{{with_branch(PlanarForest{{graft(Letter::y(na + nb), merged_forest)}})}}, 1);

  for (int i = 1; i <= na - 1; ++i) {
    PlanarForest inner{{graft(Letter::y(i), d.f_a)}};
    inner.trees.insert(inner.trees.end(), d.f_b.trees.begin(), d.f_b.trees.end());
    add_term(out, PlanarForest{{with_branch(PlanarForest{{graft(Letter::y(na + nb - i), inner)}})}},
             -binom(na - i + nb - 1, nb - 1));
  }
  for (int i = 1; i <= nb - 1; ++i) {
    PlanarForest inner{{graft(Letter::y(i), d.f_b)}};
    inner.trees.insert(inner.trees.end(), d.f_a.trees.begin(), d.f_a.trees.end());
    add_term(out, PlanarForest{{with_branch(PlanarForest{{graft(Letter::y(na + nb - i), inner)}})}},
             -binom(nb - i + na - 1, na - 1));
  }
  return out;
}

ReductionTriple reduction_triple(const PlanarTree& t) {
  Decomposition d = branch_decompose(t);
  auto with_branch = [&](PlanarTree branch_tree) {
    PlanarForest branch{{std::move(branch_tree)}};
    branch.trees.insert(branch.trees.end(), d.rest.trees.begin(), d.rest.trees.end());
    return rebuild_chain(d.chain, branch);
  };

  PlanarForest merged_forest = d.f_a;
  merged_forest.trees.insert(merged_forest.trees.end(), d.f_b.trees.begin(), d.f_b.trees.end());
  PlanarTree merged = with_branch(graft(Letter::y(d.d_a.value + d.d_b.value), merged_forest));

  PlanarForest under_a{{graft(d.d_b, d.f_b)}};
  under_a.trees.insert(under_a.trees.end(), d.f_a.trees.begin(), d.f_a.trees.end());
  PlanarTree nest_b_under_a = with_branch(graft(d.d_a, under_a));

  PlanarForest under_b{{graft(d.d_a, d.f_a)}};
  under_b.trees.insert(under_b.trees.end(), d.f_b.trees.begin(), d.f_b.trees.end());
  PlanarTree nest_a_under_b = with_branch(graft(d.d_b, under_b));

  return ReductionTriple{std::move(merged), std::move(nest_b_under_a), std::move(nest_a_under_b)};
}

namespace {

constexpr int kProcessDepthGuard = 256;

ProcessTree process_tree_impl(const PlanarTree& t, int depth_left) {
  if (depth_left == 0)
    throw std::logic_error("process_tree recursion-depth guard exceeded");
  if (is_ladder(t)) return ProcessTree{t, {}};
  ReductionTriple r = reduction_triple(t);
  ProcessTree out{t, {}};
  out.children.push_back(process_tree_impl(r.merged, depth_left - 1));
  out.children.push_back(process_tree_impl(r.nest_b_under_a, depth_left - 1));
  out.children.push_back(process_tree_impl(r.nest_a_under_b, depth_left - 1));
  return out;
}

// psi(Y) = sum of error terms over all process-tree vertex decorations.
// Memoized; visits each distinct tree in the reduction closure once.
TreeSum psi(const PlanarTree& t) {
  if (is_ladder(t)) return {};

  static std::unordered_map<std::string, TreeSum> cache;
  static std::mutex cache_mutex;
  const std::string key = format_tree(t);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  ReductionTriple r = reduction_triple(t);
  TreeSum result = error_term(t);
  result += psi(r.merged);
  result += psi(r.nest_b_under_a);
  result += psi(r.nest_a_under_b);

  std::lock_guard lock(cache_mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace

ProcessTree process_tree(const PlanarTree& t) {
  if (t.decoration.alphabet != Alphabet::Y)
    throw std::invalid_argument("process_tree expects the Y alphabet");
  return process_tree_impl(t, kProcessDepthGuard);
}

int process_tree_size(const ProcessTree& p) {
  int n = 1;
  for (const auto& c : p.children) n += process_tree_size(c);
  return n;
}

std::string format_process_tree(const ProcessTree& p) {
  std::string out = "(" + format_tree(p.decoration) + ")";
  if (!p.children.empty()) {
    out += '[';
    for (std::size_t i = 0; i < p.children.size(); ++i) {
      if (i) out += ',';
      out += format_process_tree(p.children[i]);
    }
    out += ']';
  }
  return out;
}

TreeSum phi(const PlanarTree& t) { return tree_sum(t) + psi(t); }

TreeSum phi(const TreeSum& s) {
  TreeSum out;
  for (const auto& [f, c] : s) {
    TreeSum product{{PlanarForest{}, Rat(1)}};
    for (const auto& t : f.trees) product = multiply_forests(product, phi(t));
    out += c * product;
  }
  return out;
}

TreeSum s_pt(const TreeSum& s, Convention c) { return s_pn(phi(s), c); }

TreeSum beta_section(const PlanarTree& t) {
  std::vector<PlanarTree> orderings = enumerate_orderings(canonicalize(t));
  Rat weight(1, static_cast<unsigned long>(orderings.size()));
  TreeSum out;
  for (const auto& o : orderings) add_term(out, PlanarForest{{o}}, weight);
  return out;
}

TreeSum beta_section(const TreeSum& s) {
  TreeSum out;
  for (const auto& [f, c] : s) {
    TreeSum product{{PlanarForest{}, Rat(1)}};
    for (const auto& t : f.trees) product = multiply_forests(product, beta_section(t));
    out += c * product;
  }
  return out;
}

TreeSum s_t(const TreeSum& s, Convention c) { return canonicalize(s_pt(beta_section(s), c)); }

}  // namespace arbzeta
