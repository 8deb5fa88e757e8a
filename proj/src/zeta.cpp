#include "arbzeta/zeta.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace arbzeta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Values of a word/tree truncation at every cap 0..N, one DP pass.
template <typename Num>
std::vector<Num> word_y_profile(const Word& w, long cap) {
  std::vector<Num> acc(cap + 1, Num(1));
  for (const auto& l : w.letters) {
    std::vector<Num> next(cap + 1, Num(0));
    for (long n = 1; n <= cap; ++n) {
      Num term = acc[n - 1];
      for (int e = 0; e < l.value; ++e) term /= Num(n);
      next[n] = next[n - 1] + term;
    }
    acc = std::move(next);
  }
  return acc;
}

// Valid majorant of the discarded tail sum_{n>N} P(n-1)/n^{kd}, where P is
// the (possibly divergent) prefix partial sum.  Drop the ordering constraint:
// P(m) <= prod over prefix letters of their single-index partial sums, bound
// each index>=2 factor by 1 + 1/(k-1) and each index-1 factor by 1 + ln m.
// With j index-1 letters and a = kd - 1, integral comparison gives
//   sum_{n>N} (1+ln n)^j / n^{kd}
//     <= N^{-a} * sum_{i=0..j} j!/(j-i)! * (1+ln N)^{j-i} / a^{i+1}.
double word_y_tail_bound(const Word& w, long cap) {
  if (w.empty()) return 0.0;
  int kd = w.letters.back().value;
  if (kd < 2) return kInf;
  double factor = 1.0;
  int ones = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int k = w.letters[i].value;
    if (k == 1) ++ones;
    else
      factor *= 1.0 + 1.0 / (k - 1);
  }
  const double a = kd - 1;
  const double log_term = 1.0 + std::log(static_cast<double>(cap));
  double series = 0.0, falling = 1.0;  // j!/(j-i)! built incrementally
  for (int i = 0; i <= ones; ++i) {
    series += falling * std::pow(log_term, ones - i) / std::pow(a, i + 1);
    falling *= ones - i;
  }
  return factor * series * std::pow(static_cast<double>(cap), -a);
}

template <typename Num>
std::vector<Num> tree_y_profile(const PlanarTree& t, long cap,
                                std::map<std::string, std::vector<Num>>& memo) {
  const std::string key = format_tree(t);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<std::vector<Num>> child_profiles;
  child_profiles.reserve(t.children.size());
  for (const auto& c : t.children) child_profiles.push_back(tree_y_profile<Num>(c, cap, memo));
  std::vector<Num> out(cap + 1, Num(0));
  for (long n = 1; n <= cap; ++n) {
    Num term(1);
    for (int e = 0; e < t.decoration.value; ++e) term /= Num(n);
    for (const auto& cp : child_profiles) term *= cp[n - 1];
    out[n] = out[n - 1] + term;
  }
  memo.emplace(key, out);
  return out;
}

template <typename Num>
Num forest_y_value(const PlanarForest& f, long cap) {
  std::map<std::string, std::vector<Num>> memo;
  Num out(1);
  for (const auto& t : f.trees) out *= tree_y_profile<Num>(t, cap, memo)[cap];
  return out;
}

void check_cap(long cap) {
  if (cap < 1) throw std::invalid_argument("truncation cap must be positive");
}

}  // namespace

std::string TruncatedValue::str() const {
  if (exact) return format_rat(exact_value);
  std::ostringstream out;
  out.precision(15);
  out << approx << " (tail <= " << tail_bound << ")";
  return out.str();
}

TruncatedValue zeta_word_y(const Word& w, long cap, bool exact) {
  check_cap(cap);
  if (!w.empty() && alphabet_of(w) != Alphabet::Y)
    throw std::invalid_argument("zeta_word_y expects a Y-word");
  TruncatedValue v{exact, Rat(0), 0.0, cap, 0.0};
  if (exact) {
    v.exact_value = word_y_profile<Rat>(w, cap)[cap];
  } else {
    v.approx = word_y_profile<double>(w, cap)[cap];
    v.tail_bound = word_y_tail_bound(w, cap);
  }
  return v;
}

TruncatedValue zeta_tree_first_kind(const PlanarForest& f, long cap, bool exact) {
  check_cap(cap);
  if (!f.empty() && alphabet_of(f) != Alphabet::Y)
    throw std::invalid_argument("zeta_tree_first_kind expects the Y alphabet");
  TruncatedValue v{exact, Rat(0), 0.0, cap, 0.0};
  if (exact) {
    v.exact_value = forest_y_value<Rat>(f, cap);
    return v;
  }
  v.approx = forest_y_value<double>(f, cap);
  if (!first_kind_convergent(f)) {
    v.tail_bound = kInf;
    return v;
  }
  // tail via the contracting-arborification word expansion (coefficients > 0)
  for (const auto& [w, c] : arborify_contracting(f))
    v.tail_bound += c.get_d() * word_y_tail_bound(w, cap);
  return v;
}

Word x_word_to_y(const Word& w) {
  if (w.empty() || alphabet_of(w) != Alphabet::X)
    throw std::invalid_argument("expected a nonempty X-word");
  if (w.letters.front().value != 1 || w.letters.back().value != 0)
    throw std::invalid_argument("divergent word shape: must read x1...x0 leaf-to-root");
  Word out;
  int zeros = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i == w.size() || w.letters[i].value == 1) {
      out.letters.push_back(Letter::y(zeros + 1));
      zeros = 0;
    } else {
      ++zeros;
    }
  }
  return out;
}

TruncatedValue zeta_word_x(const Word& w, long cap, bool exact) {
  return zeta_word_y(x_word_to_y(w), cap, exact);
}

TruncatedValue zeta_tree_second_kind(const PlanarForest& f, long cap, bool exact) {
  check_cap(cap);
  if (!second_kind_convergent(f))
    throw std::invalid_argument("second-kind convergence requires x0 roots and x1 leaves");
  TruncatedValue v{exact, Rat(0), 0.0, cap, 0.0};
  for (const auto& [w, c] : arborify_simple(f)) {
    Word y = x_word_to_y(w);
    if (exact) {
      v.exact_value += c * word_y_profile<Rat>(y, cap)[cap];
    } else {
      v.approx += c.get_d() * word_y_profile<double>(y, cap)[cap];
      v.tail_bound += c.get_d() * word_y_tail_bound(y, cap);
    }
  }
  return v;
}

std::vector<Rat> zeta_word_y_profile(const Word& w, long cap) {
  check_cap(cap);
  return word_y_profile<Rat>(w, cap);
}

std::vector<Rat> zeta_forest_first_kind_profile(const PlanarForest& f, long cap) {
  check_cap(cap);
  std::map<std::string, std::vector<Rat>> memo;
  std::vector<Rat> out(cap + 1, Rat(1));
  for (const auto& t : f.trees) {
    std::vector<Rat> p = tree_y_profile<Rat>(t, cap, memo);
    for (long n = 0; n <= cap; ++n) out[n] *= p[n];
  }
  return out;
}

bool first_kind_convergent(const PlanarForest& f) {
  if (!f.empty() && alphabet_of(f) != Alphabet::Y) return false;
  for (const auto& t : f.trees)
    if (t.decoration.value < 2) return false;
  return true;
}

bool second_kind_convergent(const PlanarForest& f) {
  if (f.empty()) return true;
  if (alphabet_of(f) != Alphabet::X) return false;
  for (const auto& t : f.trees) {
    if (t.decoration.value != 0) return false;
    for (const auto& leaf_path : leaves(t))
      if (node_at(t, leaf_path).decoration.value != 1) return false;
  }
  return true;
}

ClavierComparison clavier_compare(const PlanarForest& f, long cap) {
  if (!first_kind_convergent(f))
    throw std::invalid_argument("clavier_compare requires component root indices >= 2");
  ClavierComparison out{
      zeta_tree_second_kind(s_pn(f, Convention::Reduced), cap, false),
      zeta_tree_first_kind(f, cap, false),
      0.0,
      ClavierVerdict::EqualWithinTolerance,
  };
  out.tolerance = out.lhs.tail_bound + out.rhs.tail_bound + 1e-9;
  double diff = out.rhs.approx - out.lhs.approx;
  if (diff > out.tolerance) out.verdict = ClavierVerdict::StrictLess;
  else if (diff >= -out.tolerance) out.verdict = ClavierVerdict::EqualWithinTolerance;
  else out.verdict = ClavierVerdict::Violation;
  return out;
}

}  // namespace arbzeta
