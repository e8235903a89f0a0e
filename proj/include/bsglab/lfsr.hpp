#pragma once

#include <string>
#include <vector>

#include "bsglab/seq.hpp"

namespace bsglab {

inline constexpr int kMaxDegree = 24;  // cycle-walk verification ceiling

// Fibonacci LFSR over GF(2): s[n] = XOR over t in taps of s[n - degree + t].
// taps hold the feedback-polynomial exponents below the degree; the constant
// term (exponent 0) must be present or the state update is not invertible.
struct LfsrConfig {
  int degree = 0;
  std::vector<int> taps;
  BitSeq seed;  // length == degree, not all zero

  void validate() const;
};

BitSeq lfsr_bits(const LfsrConfig& c, std::size_t n);

// True iff the state cycle through the all-. . .01 state has length
// 2^degree - 1, i.e. it visits every nonzero state.
bool is_maximal(int degree, const std::vector<int>& taps);

std::vector<int> primitive_taps(int degree);                   // built-in table, 2..24
std::vector<std::vector<int>> all_primitive_taps(int degree);  // exhaustive search

struct Poly {
  int degree = 0;
  std::vector<int> taps;
};

// Accepts "x^3+x+1" and "3,1,0"; requires the leading power and the
// constant term.
Poly parse_poly(const std::string& text);
std::string poly_str(int degree, const std::vector<int>& taps);

}  // namespace bsglab
