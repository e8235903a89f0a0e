#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsglab {

using Bit = std::uint8_t;
using BitSeq = std::vector<Bit>;

// Three-valued search state. Empty marks the positions where an output bit
// is emitted; the numeric codes are fixed because hot loops index tables
// with them.
enum class Sym : std::uint8_t { Empty = 0, Zero = 1, One = 2 };

using StateSeq = std::vector<Sym>;

inline char to_char(Sym s) { return "-01"[static_cast<int>(s)]; }
inline Sym sym_of(Bit b) { return b ? Sym::One : Sym::Zero; }

BitSeq parse_bits(const std::string& text);  // '0'/'1', whitespace ignored
std::string to_string(const BitSeq& s);
std::string to_string(const StateSeq& s);    // Empty rendered as '-'

// Cyclic left rotation by k: (s[k], ..., s[n-1], s[0], ..., s[k-1]).
template <class T>
std::vector<T> rotated(const std::vector<T>& s, std::size_t k) {
  if (s.empty()) throw std::invalid_argument("empty-sequence");
  const std::size_t n = s.size();
  k %= n;
  std::vector<T> out;
  out.reserve(n);
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(k), s.end());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

template <class T>
std::size_t count_symbol(const std::vector<T>& s, T v) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), v));
}

// Least p with s[i] == s[(i+p) mod n] for all i; always divides n.
template <class T>
std::size_t least_period(const std::vector<T>& s) {
  if (s.empty()) throw std::invalid_argument("empty-sequence");
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = (s[i] == s[i - d]);
    if (ok) return d;
  }
  return n;
}

std::size_t linear_run_count(const BitSeq& s);  // maximal equal-bit blocks
std::size_t cyclic_run_count(const BitSeq& s);  // runs of the cycle; 1 for constant

}  // namespace bsglab
