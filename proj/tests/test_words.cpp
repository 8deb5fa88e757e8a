#include <doctest.h>

#include "arbzeta/word.hpp"

using namespace arbzeta;

namespace {

WordSum one(const std::string& text, const Rat& c = 1) { return {{parse_word(text), c}}; }

std::vector<Word> words_up_to(Alphabet a, int max_len, int max_index) {
  std::vector<Letter> pool;
  if (a == Alphabet::X) pool = {Letter::x(0), Letter::x(1)};
  else
    for (int i = 1; i <= max_index; ++i) pool.push_back(Letter::y(i));
  std::vector<Word> out{Word{}}, level{Word{}};
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

TEST_CASE("word parsing and printing") {
  CHECK(parse_word("y1y2").str() == "y1y2");
  CHECK(parse_word("x1x0x0").str() == "x1x0x0");
  CHECK(parse_word("").empty());
  CHECK_THROWS(parse_word("y0"));
  CHECK_THROWS(parse_word("x1y2"));
}

TEST_CASE("shuffle examples") {
  CHECK(shuffle(parse_word("x0"), parse_word("x1")) == one("x0x1") + one("x1x0"));
  CHECK(shuffle(parse_word("x1"), parse_word("x1x0")) == one("x1x1x0", 2) + one("x1x0x1"));
  Word w = parse_word("x1x0x0");
  CHECK(shuffle(Word{}, w) == WordSum{{w, Rat(1)}});
}

TEST_CASE("stuffle examples") {
  CHECK(stuffle(parse_word("y1"), parse_word("y2")) == one("y1y2") + one("y2y1") + one("y3"));
  CHECK(stuffle(parse_word("y1"), parse_word("y1")) == one("y1y1", 2) + one("y2"));
  CHECK(stuffle(parse_word("y1"), parse_word("y1y2")) ==
        one("y1y1y2", 2) + one("y1y2y1") + one("y2y2") + one("y1y3"));
  CHECK_THROWS(stuffle(parse_word("x0"), parse_word("x1")));
}

TEST_CASE("append letter") {
  CHECK(append_letter(parse_word("y1y2"), Letter::y(3)).str() == "y1y2y3");
  CHECK(append_letter(Word{}, Letter::x(0)).str() == "x0");
  CHECK(append_letter(parse_word("x1x0"), Letter::x(1)).str() == "x1x0x1");
}

TEST_CASE("shuffle coefficient mass is binomial(|u|+|v|, |u|)") {
  auto mass = [](const WordSum& s) {
    Rat total = 0;
    for (const auto& [w, c] : s) total += c;
    return total;
  };
  for (const auto& u : words_up_to(Alphabet::X, 3, 0))
    for (const auto& v : words_up_to(Alphabet::X, 3, 0)) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(u.size() + v.size()),
                   static_cast<unsigned long>(u.size()));
      CHECK(mass(shuffle(u, v)) == Rat(b));
    }
}

TEST_CASE("shuffle and stuffle are commutative and associative") {
  auto wordsX = words_up_to(Alphabet::X, 2, 0);
  for (const auto& u : wordsX)
    for (const auto& v : wordsX) {
      CHECK(shuffle(u, v) == shuffle(v, u));
      for (const auto& w : wordsX)
        CHECK(shuffle(shuffle(u, v), WordSum{{w, Rat(1)}}) ==
              shuffle(WordSum{{u, Rat(1)}}, shuffle(v, w)));
    }
  auto wordsY = words_up_to(Alphabet::Y, 2, 2);
  for (const auto& u : wordsY)
    for (const auto& v : wordsY) {
      CHECK(stuffle(u, v) == stuffle(v, u));
      for (const auto& w : wordsY)
        CHECK(stuffle(stuffle(u, v), WordSum{{w, Rat(1)}}) ==
              stuffle(WordSum{{u, Rat(1)}}, stuffle(v, w)));
    }
}

TEST_CASE("word sum arithmetic and printing") {
  WordSum s = one("y1y2", Rat(1, 2)) + one("y3", 2);
  CHECK(format_word_sum(s) == "1/2*y1y2 + 2*y3");
  CHECK(format_word_sum(s - s) == "0");
  CHECK(Rat(2) * s == one("y1y2") + one("y3", 4));
  CHECK(format_word_sum(WordSum{{Word{}, Rat(1)}}) == "1");
}
