#include "arbzeta/arborify.hpp"

#include <functional>
#include <mutex>
#include <unordered_map>

namespace arbzeta {

namespace {

// Memoized recursion; the cache behaves as if absent (idempotent fill).
// Only small forests are cached: they account for nearly all repetition
// (shared subtrees, ladders), while the word sums of large forests are big
// enough that caching them across a corpus sweep exhausts memory.
constexpr int kCacheVertexLimit = 10;

WordSum arborify_impl(const PlanarForest& f) {
  if (f.empty()) return WordSum{{Word{}, Rat(1)}};

  static std::unordered_map<std::string, WordSum> cache;
  static std::mutex cache_mutex;
  const bool cacheable = vertex_count(f) <= kCacheVertexLimit;
  const std::string key = cacheable ? format_forest(f) : std::string{};
  if (cacheable) {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  WordSum result;
  if (f.trees.size() == 1) {
    const PlanarTree& t = f.trees[0];
    result = append_letter(arborify_impl(prune(t)), t.decoration);
  } else {
    const bool simple = alphabet_of(f) == Alphabet::X;
    result = arborify_impl(PlanarForest{{f.trees[0]}});
    for (std::size_t i = 1; i < f.trees.size(); ++i) {
      WordSum next = arborify_impl(PlanarForest{{f.trees[i]}});
      result = simple ? shuffle(result, next) : stuffle(result, next);
    }
  }

  if (!cacheable) return result;
  std::lock_guard lock(cache_mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace

WordSum arborify(const PlanarForest& f) { return arborify_impl(f); }

WordSum arborify(const TreeSum& s) {
  WordSum out;
  for (const auto& [f, c] : s) out += c * arborify_impl(f);
  return out;
}

WordSum arborify_simple(const PlanarForest& f) {
  if (!f.empty() && alphabet_of(f) != Alphabet::X)
    throw std::invalid_argument("arborify_simple expects the X alphabet");
  return arborify_impl(f);
}

WordSum arborify_simple(const TreeSum& s) {
  WordSum out;
  for (const auto& [f, c] : s) out += c * arborify_simple(f);
  return out;
}

WordSum arborify_contracting(const PlanarForest& f) {
  if (!f.empty() && alphabet_of(f) != Alphabet::Y)
    throw std::invalid_argument("arborify_contracting expects the Y alphabet");
  return arborify_impl(f);
}

WordSum arborify_contracting(const TreeSum& s) {
  WordSum out;
  for (const auto& [f, c] : s) out += c * arborify_contracting(f);
  return out;
}

PlanarTree ladder_section(const Word& w) {
  if (w.empty()) throw std::invalid_argument("ladder_section: empty word");
  PlanarTree t{w.letters.front(), {}};
  for (std::size_t i = 1; i < w.size(); ++i) t = graft(w.letters[i], PlanarForest{{std::move(t)}});
  return t;
}

TreeSum ladder_section(const WordSum& s) {
  TreeSum out;
  for (const auto& [w, c] : s)
    add_term(out, w.empty() ? PlanarForest{} : PlanarForest{{ladder_section(w)}}, c);
  return out;
}

namespace {

// Flat view of a forest's poset: children must be emitted before their parent.
struct FlatForest {
  std::vector<Letter> decoration;
  std::vector<int> parent;          // -1 for roots
  std::vector<int> pending;         // children not yet emitted
  std::vector<bool> emitted;

  explicit FlatForest(const PlanarForest& f) {
    std::function<void(const PlanarTree&, int)> add = [&](const PlanarTree& t, int par) {
      int id = static_cast<int>(decoration.size());
      decoration.push_back(t.decoration);
      parent.push_back(par);
      pending.push_back(static_cast<int>(t.children.size()));
      emitted.push_back(false);
      for (const auto& c : t.children) add(c, id);
    };
    for (const auto& t : f.trees) add(t, -1);
  }

  std::vector<int> available() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < decoration.size(); ++v)
      if (!emitted[v] && pending[v] == 0) out.push_back(static_cast<int>(v));
    return out;
  }
};

void linear_extensions(FlatForest& ff, int remaining, Word& word, WordSum& out) {
  if (remaining == 0) {
    add_term(out, word, 1);
    return;
  }
  for (int v : ff.available()) {
    ff.emitted[v] = true;
    if (ff.parent[v] >= 0) --ff.pending[ff.parent[v]];
    word.letters.push_back(ff.decoration[v]);
    linear_extensions(ff, remaining - 1, word, out);
    word.letters.pop_back();
    if (ff.parent[v] >= 0) ++ff.pending[ff.parent[v]];
    ff.emitted[v] = false;
  }
}

// Ordered set partitions compatible with the poset: each step emits a nonempty
// set of currently-minimal vertices as one contracted letter.
void strict_surjections(FlatForest& ff, int remaining, Word& word, WordSum& out) {
  if (remaining == 0) {
    add_term(out, word, 1);
    return;
  }
  std::vector<int> avail = ff.available();
  const std::size_t m = avail.size();
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    int index_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ul << i)) {
        int v = avail[i];
        ff.emitted[v] = true;
        if (ff.parent[v] >= 0) --ff.pending[ff.parent[v]];
        index_sum += ff.decoration[v].value;
      }
    word.letters.push_back(Letter::y(index_sum));
    strict_surjections(ff, remaining - static_cast<int>(__builtin_popcountl(mask)), word, out);
    word.letters.pop_back();
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ul << i)) {
        int v = avail[i];
        ff.emitted[v] = false;
        if (ff.parent[v] >= 0) ++ff.pending[ff.parent[v]];
      }
  }
}

}  // namespace

WordSum oracle_simple(const PlanarForest& f) {
  if (f.empty()) return WordSum{{Word{}, Rat(1)}};
  if (alphabet_of(f) != Alphabet::X)
    throw std::invalid_argument("oracle_simple expects the X alphabet");
  FlatForest ff(f);
  Word word;
  WordSum out;
  linear_extensions(ff, static_cast<int>(ff.decoration.size()), word, out);
  return out;
}

WordSum oracle_contracting(const PlanarForest& f) {
  if (f.empty()) return WordSum{{Word{}, Rat(1)}};
  if (alphabet_of(f) != Alphabet::Y)
    throw std::invalid_argument("oracle_contracting expects the Y alphabet");
  FlatForest ff(f);
  Word word;
  WordSum out;
  strict_surjections(ff, static_cast<int>(ff.decoration.size()), word, out);
  return out;
}

}  // namespace arbzeta
