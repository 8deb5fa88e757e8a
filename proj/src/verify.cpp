#include "arbzeta/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

#include "json.hpp"

namespace arbzeta {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string convention_name(Convention c) { return c == Convention::Full ? "full" : "reduced"; }

// ---- corpus enumeration ------------------------------------------------

// All planar tree shapes with exactly n vertices (Catalan(n-1) of them),
// decorated with a placeholder letter.
const std::vector<PlanarTree>& tree_shapes(int n);

const std::vector<PlanarForest>& forest_shapes(int n) {
  static std::vector<std::vector<PlanarForest>> cache{{PlanarForest{}}};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    std::vector<PlanarForest> out;
    // first tree takes k vertices, the rest form a forest on m - k
    for (int k = 1; k <= m; ++k)
      for (const auto& t : tree_shapes(k))
        for (const auto& rest : cache[m - k]) {
          PlanarForest f{{t}};
          f.trees.insert(f.trees.end(), rest.trees.begin(), rest.trees.end());
          out.push_back(std::move(f));
        }
    cache.push_back(std::move(out));
  }
  return cache[n];
}

const std::vector<PlanarTree>& tree_shapes(int n) {
  static std::vector<std::vector<PlanarTree>> cache{{}};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    std::vector<PlanarTree> out;
    for (const auto& f : forest_shapes(m - 1)) out.push_back(PlanarTree{Letter::y(1), f.trees});
    cache.push_back(std::move(out));
  }
  return cache[n];
}

std::vector<Letter> letter_pool(const CorpusSpec& spec) {
  std::vector<Letter> pool;
  if (spec.alphabet == Alphabet::X) {
    pool = {Letter::x(0), Letter::x(1)};
  } else {
    for (int i = 1; i <= spec.max_index; ++i) pool.push_back(Letter::y(i));
  }
  return pool;
}

void assign_preorder(PlanarTree& t, const std::vector<Letter>& pool, long& code) {
  t.decoration = pool[code % pool.size()];
  code /= static_cast<long>(pool.size());
  for (auto& c : t.children) assign_preorder(c, pool, code);
}

template <typename Shape>
std::vector<Shape> decorate_all(const Shape& shape, int vertices, const CorpusSpec& spec) {
  std::vector<Letter> pool = letter_pool(spec);
  long total = 1;
  for (int i = 0; i < vertices; ++i) total *= static_cast<long>(pool.size());
  std::vector<Shape> out;
  out.reserve(total);
  for (long code = 0; code < total; ++code) {
    Shape s = shape;
    long c = code;
    if constexpr (std::is_same_v<Shape, PlanarTree>) {
      assign_preorder(s, pool, c);
    } else {
      for (auto& t : s.trees) assign_preorder(t, pool, c);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// ---- parallel corpus sweep with deterministic merge ---------------------

// Failure details are capped per report to keep memory bounded on sweeps
// where every case fails with a very large word sum; counts stay exact.
constexpr std::size_t kFailureDetailLimit = 25;

template <typename Item, typename Check>
void sweep(const std::vector<Item>& items, Report& report, Check&& check) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, 8);
  std::vector<std::vector<Failure>> partial(workers);
  std::vector<long> counts(workers, 0);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < items.size(); i += workers)
        if (auto f = check(items[i])) {
          ++counts[w];
          if (partial[w].size() < kFailureDetailLimit) partial[w].push_back(std::move(*f));
        }
    });
  for (auto& t : threads) t.join();
  report.cases += static_cast<long>(items.size());
  std::vector<Failure> merged;
  for (unsigned w = 0; w < workers; ++w) {
    report.failure_count += counts[w];
    merged.insert(merged.end(), partial[w].begin(), partial[w].end());
  }
  std::sort(merged.begin(), merged.end(),
            [](const Failure& a, const Failure& b) { return a.input < b.input; });
  if (merged.size() > kFailureDetailLimit) merged.resize(kFailureDetailLimit);
  for (auto& f : merged)
    if (report.failures.size() < kFailureDetailLimit) report.failures.push_back(std::move(f));
}

std::optional<Failure> compare(const std::string& input, const WordSum& lhs, const WordSum& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Failure{input, format_word_sum(lhs), format_word_sum(rhs)};
}

Rat binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(out);
}

std::vector<Word> all_words(Alphabet a, int max_len, int max_index) {
  std::vector<Letter> pool;
  if (a == Alphabet::X) pool = {Letter::x(0), Letter::x(1)};
  else
    for (int i = 1; i <= max_index; ++i) pool.push_back(Letter::y(i));
  std::vector<Word> out, level{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (const auto& l : pool) next.push_back(append_letter(w, l));
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(const CorpusSpec& spec) {
  std::vector<PlanarTree> out;
  for (int n = 1; n <= spec.max_vertices; ++n)
    for (const auto& shape : tree_shapes(n))
      for (auto& t : decorate_all(shape, n, spec)) out.push_back(std::move(t));
  return out;
}

std::vector<PlanarForest> enumerate_forests(const CorpusSpec& spec) {
  std::vector<PlanarForest> out;
  for (int n = 1; n <= spec.max_vertices; ++n)
    for (const auto& shape : forest_shapes(n))
      for (auto& f : decorate_all(shape, n, spec)) out.push_back(std::move(f));
  return out;
}

Report check_exchange(const CorpusSpec& spec) {
  auto start = Clock::now();
  Report report{"exchange", "-"};
  const bool simple = spec.alphabet == Alphabet::X;
  std::vector<PlanarTree> corpus = enumerate_trees(spec);

  // tree-level identity at the minimal incomparable pair
  std::vector<PlanarTree> branching;
  for (auto& t : corpus)
    if (!is_ladder(t)) branching.push_back(t);
  sweep(branching, report, [&](const PlanarTree& t) -> std::optional<Failure> {
    WordSum lhs = arborify(PlanarForest{{t}});
    WordSum rhs;
    if (simple) {
      // the merged term does not exist over X, so build the two nestings directly
      Decomposition d = branch_decompose(t);
      auto with_branch = [&](PlanarTree branch_tree) {
        PlanarForest branch{{std::move(branch_tree)}};
        branch.trees.insert(branch.trees.end(), d.rest.trees.begin(), d.rest.trees.end());
        return rebuild_chain(d.chain, branch);
      };
      PlanarForest under_a{{graft(d.d_b, d.f_b)}};
      under_a.trees.insert(under_a.trees.end(), d.f_a.trees.begin(), d.f_a.trees.end());
      PlanarForest under_b{{graft(d.d_a, d.f_a)}};
      under_b.trees.insert(under_b.trees.end(), d.f_b.trees.begin(), d.f_b.trees.end());
      rhs = arborify(PlanarForest{{with_branch(graft(d.d_a, under_a))}}) +
            arborify(PlanarForest{{with_branch(graft(d.d_b, under_b))}});
    } else {
      ReductionTriple r = reduction_triple(t);
      rhs = arborify(PlanarForest{{r.nest_b_under_a}}) +
            arborify(PlanarForest{{r.nest_a_under_b}}) + arborify(PlanarForest{{r.merged}});
    }
    return compare(format_tree(t), lhs, rhs);
  });

  // forest-level product identity over all tree pairs within the vertex budget
  std::vector<std::pair<PlanarTree, PlanarTree>> pairs;
  for (const auto& t1 : corpus)
    for (const auto& t2 : corpus)
      if (vertex_count(t1) + vertex_count(t2) <= spec.max_vertices)
        pairs.emplace_back(t1, t2);
  sweep(pairs, report, [&](const auto& p) -> std::optional<Failure> {
    const auto& [t1, t2] = p;
    WordSum lhs = arborify(PlanarForest{{t1, t2}});
    PlanarForest swapped{{t2}};
    swapped.trees.insert(swapped.trees.end(), t1.children.begin(), t1.children.end());
    PlanarForest kept{{t1}};
    kept.trees.insert(kept.trees.end(), t2.children.begin(), t2.children.end());
    WordSum rhs = append_letter(arborify(swapped), t1.decoration) +
                  append_letter(arborify(kept), t2.decoration);
    if (!simple) {
      PlanarForest pruned = prune(t1);
      pruned.trees.insert(pruned.trees.end(), t2.children.begin(), t2.children.end());
      rhs += append_letter(arborify(pruned),
                           Letter::y(t1.decoration.value + t2.decoration.value));
    }
    return compare(format_forest(PlanarForest{{t1, t2}}), lhs, rhs);
  });

  report.ms = elapsed_ms(start);
  return report;
}

Report check_formula_42(const CorpusSpec& spec, Convention conv) {
  auto start = Clock::now();
  Report report{"lemma42", convention_name(conv)};
  std::vector<PlanarTree> corpus;
  for (auto& t : enumerate_trees(spec))
    if (!is_ladder(t)) corpus.push_back(std::move(t));
  sweep(corpus, report, [&](const PlanarTree& t) -> std::optional<Failure> {
    Decomposition d = branch_decompose(t);
    const int na = d.d_a.value, nb = d.d_b.value;
    auto with_branch = [&](PlanarForest branch) {
      branch.trees.insert(branch.trees.end(), d.rest.trees.begin(), d.rest.trees.end());
      return rebuild_chain(d.chain, branch);
    };
    WordSum lhs = arborify_simple(PlanarForest{{s_pn(t, conv)}});
    WordSum rhs;
    for (int i = 1; i <= na; ++i) {
      PlanarForest inner{{graft(Letter::y(i), d.f_a)}};
      inner.trees.insert(inner.trees.end(), d.f_b.trees.begin(), d.f_b.trees.end());
      PlanarTree term = with_branch(PlanarForest{{graft(Letter::y(na + nb - i), inner)}});
      rhs += binom(na - i + nb - 1, nb - 1) * arborify_simple(PlanarForest{{s_pn(term, conv)}});
    }
    for (int i = 1; i <= nb; ++i) {
      PlanarForest inner{{graft(Letter::y(i), d.f_b)}};
      inner.trees.insert(inner.trees.end(), d.f_a.trees.begin(), d.f_a.trees.end());
      PlanarTree term = with_branch(PlanarForest{{graft(Letter::y(na + nb - i), inner)}});
      rhs += binom(nb - i + na - 1, na - 1) * arborify_simple(PlanarForest{{s_pn(term, conv)}});
    }
    return compare(format_tree(t), lhs, rhs);
  });
  report.ms = elapsed_ms(start);
  return report;
}

Report check_error_cancellation(const CorpusSpec& spec, Convention conv) {
  auto start = Clock::now();
  Report report{"cancel", convention_name(conv)};
  std::vector<PlanarTree> corpus;
  for (auto& t : enumerate_trees(spec))
    if (!is_ladder(t)) corpus.push_back(std::move(t));
  sweep(corpus, report, [&](const PlanarTree& t) -> std::optional<Failure> {
    ReductionTriple r = reduction_triple(t);
    WordSum lhs = arborify_simple(s_pn(tree_sum(t) + error_term(t), conv));
    WordSum rhs = arborify_simple(
        s_pn(tree_sum(r.merged) + tree_sum(r.nest_b_under_a) + tree_sum(r.nest_a_under_b), conv));
    return compare(format_tree(t), lhs, rhs);
  });
  report.ms = elapsed_ms(start);
  return report;
}

Report check_main_diagram(const CorpusSpec& spec, Convention conv) {
  auto start = Clock::now();
  Report report{"diagram", convention_name(conv)};

  // planar square: a_PX . s^PT = s . a_PY
  std::vector<PlanarTree> corpus = enumerate_trees(spec);
  sweep(corpus, report, [&](const PlanarTree& t) -> std::optional<Failure> {
    WordSum lhs = arborify_simple(s_pt(tree_sum(t), conv));
    WordSum rhs = word_s(arborify_contracting(PlanarForest{{t}}), conv);
    return compare(format_tree(t), lhs, rhs);
  });

  // ladder diagrams for s^PN and s^PT
  std::vector<Word> words = all_words(Alphabet::Y, 4, std::min(3, spec.max_index));
  sweep(words, report, [&](const Word& w) -> std::optional<Failure> {
    Word expected = word_s(w, conv);
    PlanarTree ladder = ladder_section(w);
    WordSum via_pn = arborify_simple(PlanarForest{{s_pn(ladder, conv)}});
    WordSum via_pt = arborify_simple(s_pt(tree_sum(ladder), conv));
    WordSum target{{expected, Rat(1)}};
    if (auto f = compare("ladder:" + w.str(), via_pn, target)) return f;
    return compare("ladder-pt:" + w.str(), via_pt, target);
  });

  // corollary on canonical trees (capped at 5 vertices)
  CorpusSpec canonical_spec = spec;
  canonical_spec.max_vertices = std::min(spec.max_vertices, 5);
  std::vector<PlanarTree> canonical;
  {
    std::vector<std::string> seen;
    for (const auto& t : enumerate_trees(canonical_spec)) {
      PlanarTree c = canonicalize(t);
      std::string key = format_tree(c);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        canonical.push_back(std::move(c));
      }
    }
  }
  sweep(canonical, report, [&](const PlanarTree& t) -> std::optional<Failure> {
    WordSum lhs = arborify_simple(s_t(tree_sum(t), conv));
    WordSum rhs = word_s(arborify_contracting(PlanarForest{{t}}), conv);
    return compare("canonical:" + format_tree(t), lhs, rhs);
  });

  report.ms = elapsed_ms(start);
  return report;
}

Report check_oracles(const CorpusSpec& spec) {
  auto start = Clock::now();
  Report report{"oracles", "-"};
  const bool simple = spec.alphabet == Alphabet::X;
  std::vector<PlanarForest> corpus = enumerate_forests(spec);
  sweep(corpus, report, [&](const PlanarForest& f) -> std::optional<Failure> {
    WordSum lhs = simple ? arborify_simple(f) : arborify_contracting(f);
    WordSum rhs = simple ? oracle_simple(f) : oracle_contracting(f);
    return compare(format_forest(f), lhs, rhs);
  });
  report.ms = elapsed_ms(start);
  return report;
}

Report check_sections(const CorpusSpec& spec) {
  auto start = Clock::now();
  Report report{"sections", "-"};

  // arborify . ladder_section = id, word length read from max_vertices
  for (Alphabet a : {Alphabet::X, Alphabet::Y}) {
    std::vector<Word> words = all_words(a, spec.max_vertices, spec.max_index);
    sweep(words, report, [&](const Word& w) -> std::optional<Failure> {
      WordSum got = arborify(PlanarForest{{ladder_section(w)}});
      return compare("word:" + w.str(), got, WordSum{{w, Rat(1)}});
    });
  }

  // canonicalize . beta = id on canonical trees (capped at 6 vertices)
  CorpusSpec tree_spec = spec;
  tree_spec.max_vertices = std::min(spec.max_vertices, 6);
  std::vector<PlanarTree> canonical;
  {
    std::vector<std::string> seen;
    for (const auto& t : enumerate_trees(tree_spec)) {
      PlanarTree c = canonicalize(t);
      std::string key = format_tree(c);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        canonical.push_back(std::move(c));
      }
    }
  }
  sweep(canonical, report, [&](const PlanarTree& t) -> std::optional<Failure> {
    TreeSum projected = canonicalize(beta_section(t));
    TreeSum expected = tree_sum(t);
    if (projected == expected) return std::nullopt;
    return Failure{"beta:" + format_tree(t), format_tree_sum(projected), format_tree_sum(expected)};
  });

  report.ms = elapsed_ms(start);
  return report;
}

namespace {

long factorial(int n) {
  long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

long child_factorial_product(const PlanarTree& t) {
  long out = factorial(static_cast<int>(t.children.size()));
  for (const auto& c : t.children) out *= child_factorial_product(c);
  return out;
}

// Factorial-free variant sometimes quoted for this count: the product of
// child counts over non-leaf vertices.  Correct only when every vertex has
// at most two children.
long deg_product_count(const PlanarTree& t) {
  long out = t.children.empty() ? 1 : static_cast<long>(t.children.size());
  for (const auto& c : t.children) out *= deg_product_count(c);
  return out;
}

// Counts total orders on V(T) satisfying the planarity conditions: depth-
// monotone, and for edges (u,v),(x,y) one level down, u before x forces v
// before y.  Read strictly (distinct parents), so sibling order is free.
long filter_total_orders(const PlanarTree& t) {
  std::vector<VertexPath> vertices = breadth_first_order(t);
  const std::size_t n = vertices.size();
  std::vector<int> depths(n);
  std::vector<int> parents(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    depths[i] = static_cast<int>(vertices[i].size());
    if (!vertices[i].empty()) {
      VertexPath pp(vertices[i].begin(), vertices[i].end() - 1);
      parents[i] = static_cast<int>(std::find(vertices.begin(), vertices.end(), pp) - vertices.begin());
    }
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = static_cast<int>(i);
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = 0; v < n && ok; ++v)
        if (depths[u] < depths[v] && pos[u] > pos[v]) ok = false;
    for (std::size_t v = 0; v < n && ok; ++v)
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (parents[v] < 0 || parents[y] < 0 || v == y) continue;
        if (depths[v] != depths[y] || parents[v] == parents[y]) continue;
        if (pos[parents[v]] < pos[parents[y]] && pos[v] > pos[y]) ok = false;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

Report check_orderings(const CorpusSpec& spec) {
  auto start = Clock::now();
  Report report{"orderings", "-"};
  std::vector<PlanarTree> shapes;  // decorations do not affect the counts
  for (int n = 1; n <= spec.max_vertices; ++n)
    for (const auto& s : tree_shapes(n)) shapes.push_back(s);

  long degprod_agrees = 0, degprod_disagrees = 0;
  for (const auto& t : shapes) {
    ++report.cases;
    long enumerated = static_cast<long>(enumerate_orderings(canonicalize(t)).size());
    long oracle = filter_total_orders(t);
    long formula = child_factorial_product(t);
    if (enumerated != oracle || enumerated != formula) {
      ++report.failure_count;
      if (report.failures.size() < kFailureDetailLimit)
        report.failures.push_back(Failure{format_tree(t),
                                          std::to_string(enumerated) + " (enumerated)",
                                          std::to_string(oracle) + " (oracle), " +
                                              std::to_string(formula) + " (prod c_v!)"});
    }
    (deg_product_count(t) == enumerated ? degprod_agrees : degprod_disagrees)++;
  }
  report.notes.push_back("factorial-free deg-product count: agrees on " +
                         std::to_string(degprod_agrees) + " shapes, disagrees on " +
                         std::to_string(degprod_disagrees) +
                         " (every disagreement has a vertex with >= 3 children)");
  report.ms = elapsed_ms(start);
  return report;
}

std::string Report::summary() const {
  std::string out = "suite=" + suite + " conv=" + convention + " cases=" +
                    std::to_string(cases) + " failures=" + std::to_string(failure_count) +
                    " ms=" + std::to_string(static_cast<long>(ms));
  for (const auto& n : notes) out += "\n  note: " + n;
  return out;
}

std::string Report::json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["conv"] = convention;
  j["total"] = cases;
  j["failure_count"] = failure_count;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  if (failure_count > static_cast<long>(failures.size()))
    j["failures_truncated"] = true;
  if (!notes.empty()) j["notes"] = notes;
  j["ms"] = ms;
  return j.dump(2);
}

}  // namespace arbzeta
