#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "arbzeta/letter.hpp"

namespace arbzeta {

using Rat = mpq_class;

std::string format_rat(const Rat& q);

/// Word over a single alphabet; the empty word is the unit.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                        b.letters.begin(), b.letters.end());
  }
};

Word parse_word(const std::string& text);
Alphabet alphabet_of(const Word& w);  // throws on the empty word

/// Rational linear combination of words; zero coefficients are never stored.
using WordSum = std::map<Word, Rat>;

void add_term(WordSum& s, const Word& w, const Rat& c);
WordSum& operator+=(WordSum& a, const WordSum& b);
WordSum operator+(WordSum a, const WordSum& b);
WordSum operator-(const WordSum& a, const WordSum& b);
WordSum operator*(const Rat& c, const WordSum& s);
std::string format_word_sum(const WordSum& s);

/// Shuffle product: sum over order-preserving interleavings.
WordSum shuffle(const Word& u, const Word& v);
WordSum shuffle(const WordSum& u, const WordSum& v);

/// Quasi-shuffle (stuffle) product over Y, with contraction y_a,y_b -> y_{a+b};
/// last-letter recursion, matching right-append L^d.
WordSum stuffle(const Word& u, const Word& v);
WordSum stuffle(const WordSum& u, const WordSum& v);

/// The one-cocycle L^d: appends d at the right end.
Word append_letter(const Word& w, const Letter& d);
WordSum append_letter(const WordSum& s, const Letter& d);

}  // namespace arbzeta
