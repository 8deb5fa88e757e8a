#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace arbzeta {

enum class Alphabet { X, Y };

/// A vertex decoration / word letter: x0, x1 over X, or y_n (n >= 1) over Y.
struct Letter {
  Alphabet alphabet;
  int value;  // X: 0 or 1; Y: the index n >= 1

  static Letter x(int m) {
    if (m != 0 && m != 1) throw std::invalid_argument("x-letter must be x0 or x1");
    return {Alphabet::X, m};
  }
  static Letter y(int n) {
    if (n < 1) throw std::invalid_argument("y-index must be >= 1");
    return {Alphabet::Y, n};
  }

  std::string str() const {
    return (alphabet == Alphabet::X ? "x" : "y") + std::to_string(value);
  }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

}  // namespace arbzeta
