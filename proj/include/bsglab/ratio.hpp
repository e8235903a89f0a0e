#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bsglab {

// Exact fraction in canonical form: den > 0, gcd(|num|, den) == 1.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Ratio() = default;
  Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

inline bool operator<(const Ratio& a, const Ratio& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }

}  // namespace bsglab
