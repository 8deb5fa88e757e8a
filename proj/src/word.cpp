#include "arbzeta/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace arbzeta {

std::string format_rat(const Rat& q) { return q.get_str(); }

std::string Word::str() const {
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& l : letters) out += l.str();
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) { ++pos; continue; }
    Alphabet a;
    if (c == 'x') a = Alphabet::X;
    else if (c == 'y') a = Alphabet::Y;
    else throw std::invalid_argument("bad letter in word at position " + std::to_string(pos));
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected digits at position " + std::to_string(pos));
    long v = std::stol(text.substr(start, pos - start));
    w.letters.push_back(a == Alphabet::X ? Letter::x(static_cast<int>(v))
                                         : Letter::y(static_cast<int>(v)));
  }
  for (const auto& l : w.letters)
    if (l.alphabet != w.letters.front().alphabet)
      throw std::invalid_argument("mixed alphabets in word");
  return w;
}

Alphabet alphabet_of(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word has no alphabet");
  return w.letters.front().alphabet;
}

void add_term(WordSum& s, const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = s.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

WordSum& operator+=(WordSum& a, const WordSum& b) {
  for (const auto& [w, c] : b) add_term(a, w, c);
  return a;
}

WordSum operator+(WordSum a, const WordSum& b) {
  a += b;
  return a;
}

WordSum operator-(const WordSum& a, const WordSum& b) {
  WordSum out = a;
  for (const auto& [w, c] : b) add_term(out, w, -c);
  return out;
}

WordSum operator*(const Rat& c, const WordSum& s) {
  WordSum out;
  if (c == 0) return out;
  for (const auto& [w, q] : s) out.emplace(w, c * q);
  return out;
}

std::string format_word_sum(const WordSum& s) {
  if (s.empty()) return "0";
  std::vector<std::pair<std::string, const Rat*>> terms;
  terms.reserve(s.size());
  for (const auto& [w, c] : s) terms.emplace_back(w.str(), &c);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    // the empty word is the unit: print the bare coefficient
    out += terms[i].first == "1" ? format_rat(*terms[i].second)
                                 : format_rat(*terms[i].second) + "*" + terms[i].first;
  }
  return out;
}

namespace {

void check_same_alphabet(const Word& u, const Word& v) {
  if (!u.empty() && !v.empty() && alphabet_of(u) != alphabet_of(v))
    throw std::invalid_argument("alphabet mismatch");
}

}  // namespace

WordSum shuffle(const Word& u, const Word& v) {
  check_same_alphabet(u, v);
  std::size_t p = u.size(), q = v.size();
  // table[i][j] = shuffle of the first i letters of u with the first j of v
  std::vector<std::vector<WordSum>> table(p + 1, std::vector<WordSum>(q + 1));
  table[0][0].emplace(Word{}, 1);
  for (std::size_t i = 0; i <= p; ++i)
    for (std::size_t j = 0; j <= q; ++j) {
      if (i == 0 && j == 0) continue;
      WordSum& cell = table[i][j];
      if (i > 0)
        for (const auto& [w, c] : table[i - 1][j]) add_term(cell, append_letter(w, u.letters[i - 1]), c);
      if (j > 0)
        for (const auto& [w, c] : table[i][j - 1]) add_term(cell, append_letter(w, v.letters[j - 1]), c);
    }
  return std::move(table[p][q]);
}

WordSum stuffle(const Word& u, const Word& v) {
  check_same_alphabet(u, v);
  if (!u.empty() && alphabet_of(u) != Alphabet::Y)
    throw std::invalid_argument("stuffle is defined over Y");
  if (!v.empty() && alphabet_of(v) != Alphabet::Y)
    throw std::invalid_argument("stuffle is defined over Y");
  std::size_t p = u.size(), q = v.size();
  std::vector<std::vector<WordSum>> table(p + 1, std::vector<WordSum>(q + 1));
  table[0][0].emplace(Word{}, 1);
  for (std::size_t i = 0; i <= p; ++i)
    for (std::size_t j = 0; j <= q; ++j) {
      if (i == 0 && j == 0) continue;
      WordSum& cell = table[i][j];
      if (i > 0)
        for (const auto& [w, c] : table[i - 1][j]) add_term(cell, append_letter(w, u.letters[i - 1]), c);
      if (j > 0)
        for (const auto& [w, c] : table[i][j - 1]) add_term(cell, append_letter(w, v.letters[j - 1]), c);
      if (i > 0 && j > 0) {
        Letter merged = Letter::y(u.letters[i - 1].value + v.letters[j - 1].value);
        for (const auto& [w, c] : table[i - 1][j - 1]) add_term(cell, append_letter(w, merged), c);
      }
    }
  return std::move(table[p][q]);
}

WordSum shuffle(const WordSum& u, const WordSum& v) {
  WordSum out;
  for (const auto& [wu, cu] : u)
    for (const auto& [wv, cv] : v) out += (cu * cv) * shuffle(wu, wv);
  return out;
}

WordSum stuffle(const WordSum& u, const WordSum& v) {
  WordSum out;
  for (const auto& [wu, cu] : u)
    for (const auto& [wv, cv] : v) out += (cu * cv) * stuffle(wu, wv);
  return out;
}

Word append_letter(const Word& w, const Letter& d) {
  if (!w.empty() && alphabet_of(w) != d.alphabet) throw std::invalid_argument("alphabet mismatch");
  Word out = w;
  out.letters.push_back(d);
  return out;
}

WordSum append_letter(const WordSum& s, const Letter& d) {
  WordSum out;
  for (const auto& [w, c] : s) out.emplace(append_letter(w, d), c);
  return out;
}

}  // namespace arbzeta
