#pragma once

#include "hopfchain/rational.hpp"

#include <string>
#include <vector>

namespace hopfchain::golden {

using Table = std::vector<std::vector<std::string>>;

// Rock-breaking at a = 2, states 1^n, ..., (n).
inline const Table& rock_matrix(int n) {
  static const Table m2{{"1", "0"}, {"1/2", "1/2"}};
  static const Table m3{{"1", "0", "0"}, {"1/2", "1/2", "0"}, {"0", "3/4", "1/4"}};
  static const Table m4{{"1", "0", "0", "0", "0"},
                        {"1/2", "1/2", "0", "0", "0"},
                        {"1/4", "1/2", "1/4", "0", "0"},
                        {"0", "3/4", "0", "1/4", "0"},
                        {"0", "0", "3/8", "1/2", "1/8"}};
  return n == 2 ? m2 : n == 3 ? m3 : m4;
}

// Right eigenfunctions: entry [λ][μ] = f_μ(λ).
inline const Table& rock_right(int n) {
  static const Table r2{{"1", "0"}, {"1", "1"}};
  static const Table r3{{"1", "0", "0"}, {"1", "1", "0"}, {"1", "3", "1"}};
  static const Table r4{{"1", "0", "0", "0", "0"},
                        {"1", "1", "0", "0", "0"},
                        {"1", "2", "1", "0", "0"},
                        {"1", "3", "0", "1", "0"},
                        {"1", "6", "3", "4", "1"}};
  return n == 2 ? r2 : n == 3 ? r3 : r4;
}

// Left eigenfunctions: entry [λ][μ] = g_λ(μ).
inline const Table& rock_left(int n) {
  static const Table l2{{"1", "0"}, {"-1", "1"}};
  static const Table l3{{"1", "0", "0"}, {"-1", "1", "0"}, {"2", "-3", "1"}};
  static const Table l4{{"1", "0", "0", "0", "0"},
                        {"-1", "1", "0", "0", "0"},
                        {"1", "-2", "1", "0", "0"},
                        {"2", "-3", "0", "1", "0"},
                        {"-6", "12", "-3", "-4", "1"}};
  return n == 2 ? l2 : n == 3 ? l3 : l4;
}

// Three-card a-shuffle: entry = binom(a + 2 - t, 3) / a^3, rows and columns
// in the order 123, 132, 213, 231, 312, 321.
inline const std::vector<std::vector<int>>& shuffle3_offsets() {
  static const std::vector<std::vector<int>> t{{0, 1, 1, 1, 1, 2}, {1, 0, 1, 2, 1, 1},
                                               {1, 1, 0, 1, 2, 1}, {1, 2, 1, 0, 1, 1},
                                               {1, 1, 2, 1, 0, 1}, {2, 1, 1, 1, 1, 0}};
  return t;
}

inline Rational at(const Table& t, std::size_t i, std::size_t j) {
  return hopfchain::parse_rational(t[i][j]);
}

}  // namespace hopfchain::golden
