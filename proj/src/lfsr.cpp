#include "bsglab/lfsr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <set>

namespace bsglab {

namespace {

void check_degree_taps(int degree, const std::vector<int>& taps) {
  if (degree < 2) throw std::invalid_argument("degree must be at least 2");
  if (degree > kMaxDegree) throw std::domain_error("L-too-large: degree above generation ceiling");
  if (taps.empty()) throw std::invalid_argument("empty tap set");
  std::set<int> seen;
  bool has_const = false;
  for (int t : taps) {
    if (t < 0 || t >= degree) throw std::invalid_argument("tap exponent out of range");
    if (!seen.insert(t).second) throw std::invalid_argument("duplicate tap exponent");
    has_const |= (t == 0);
  }
  if (!has_const) throw std::invalid_argument("feedback polynomial needs the constant term");
}

std::uint32_t tap_mask(const std::vector<int>& taps) {
  std::uint32_t m = 0;
  for (int t : taps) m |= 1u << t;
  return m;
}

}  // namespace

void LfsrConfig::validate() const {
  check_degree_taps(degree, taps);
  if (seed.size() != static_cast<std::size_t>(degree))
    throw std::invalid_argument("seed length must equal the degree");
  bool nonzero = false;
  for (Bit b : seed) {
    if (b > 1) throw std::invalid_argument("bit out of range");
    nonzero |= (b != 0);
  }
  if (!nonzero) throw std::invalid_argument("degenerate-state: all-zero seed");
}

BitSeq lfsr_bits(const LfsrConfig& c, std::size_t n) {
  c.validate();
  BitSeq s(c.seed);
  if (n <= s.size()) {
    s.resize(n);
    return s;
  }
  s.reserve(n);
  const std::size_t L = static_cast<std::size_t>(c.degree);
  for (std::size_t i = L; i < n; ++i) {
    Bit b = 0;
    for (int t : c.taps) b ^= s[i - L + static_cast<std::size_t>(t)];
    s.push_back(b);
  }
  return s;
}

bool is_maximal(int degree, const std::vector<int>& taps) {
  check_degree_taps(degree, taps);
  const std::uint32_t mask = tap_mask(taps);
  const std::uint64_t full = (std::uint64_t(1) << degree) - 1;
  // window bit i holds s[n+i]; one step drops s[n] and appends the feedback
  std::uint32_t w = 1;
  std::uint64_t steps = 0;
  do {
    const std::uint32_t b = static_cast<std::uint32_t>(std::popcount(w & mask) & 1);
    w = (w >> 1) | (b << (degree - 1));
    ++steps;
  } while (w != 1 && steps <= full);
  return steps == full;
}

std::vector<int> primitive_taps(int degree) {
  switch (degree) {
    case 2: return {1, 0};
    case 3: return {1, 0};
    case 4: return {1, 0};
    case 5: return {2, 0};
    case 6: return {1, 0};
    case 7: return {1, 0};
    case 8: return {6, 5, 4, 0};
    case 9: return {4, 0};
    case 10: return {3, 0};
    case 11: return {2, 0};
    case 12: return {6, 4, 1, 0};
    case 13: return {4, 3, 1, 0};
    case 14: return {10, 6, 1, 0};
    case 15: return {1, 0};
    case 16: return {12, 3, 1, 0};
    case 17: return {3, 0};
    case 18: return {7, 0};
    case 19: return {5, 2, 1, 0};
    case 20: return {3, 0};
    case 21: return {2, 0};
    case 22: return {1, 0};
    case 23: return {5, 0};
    case 24: return {7, 2, 1, 0};
    default:
      throw std::domain_error("no built-in primitive polynomial for this degree");
  }
}

std::vector<std::vector<int>> all_primitive_taps(int degree) {
  if (degree < 2) throw std::invalid_argument("degree must be at least 2");
  if (degree > kMaxDegree) throw std::domain_error("L-too-large: degree above generation ceiling");
  std::vector<std::vector<int>> out;
  const std::uint32_t middle = 1u << (degree - 1);  // free exponents 1..degree-1
  for (std::uint32_t m = 0; m < middle; ++m) {
    std::vector<int> taps{0};
    for (int t = 1; t < degree; ++t)
      if (m & (1u << (t - 1))) taps.push_back(t);
    std::sort(taps.rbegin(), taps.rend());
    if (is_maximal(degree, taps)) out.push_back(std::move(taps));
  }
  return out;
}

Poly parse_poly(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  std::vector<int> exps;
  if (s.find(',') != std::string::npos) {
    // "3,1,0" form
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const std::size_t comma = s.find(',', pos);
      const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad polynomial token '" + tok + "'");
      exps.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    // "x^3+x+1" form
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t plus = s.find('+', pos);
      if (plus == std::string::npos) plus = s.size();
      const std::string tok = s.substr(pos, plus - pos);
      if (tok == "1") {
        exps.push_back(0);
      } else if (tok == "x") {
        exps.push_back(1);
      } else if (tok.size() > 2 && tok[0] == 'x' && tok[1] == '^' &&
                 tok.find_first_not_of("0123456789", 2) == std::string::npos) {
        exps.push_back(std::stoi(tok.substr(2)));
      } else {
        throw std::invalid_argument("bad polynomial token '" + tok + "'");
      }
      pos = plus + 1;
    }
    if (s.back() == '+') throw std::invalid_argument("bad polynomial token ''");
  }

  std::set<int> uniq(exps.begin(), exps.end());
  if (uniq.size() != exps.size()) throw std::invalid_argument("duplicate polynomial term");
  const int degree = *uniq.rbegin();
  if (degree < 1) throw std::invalid_argument("polynomial degree must be positive");
  if (uniq.count(0) == 0) throw std::invalid_argument("polynomial needs the constant term");
  std::vector<int> taps(uniq.rbegin(), uniq.rend());
  taps.erase(taps.begin());  // drop the leading power; it is implied by degree
  return Poly{degree, taps};
}

std::string poly_str(int degree, const std::vector<int>& taps) {
  std::vector<int> exps(taps);
  exps.push_back(degree);
  std::sort(exps.rbegin(), exps.rend());
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += '+';
    if (exps[i] == 0)
      out += '1';
    else if (exps[i] == 1)
      out += 'x';
    else
      out += "x^" + std::to_string(exps[i]);
  }
  return out;
}

}  // namespace bsglab
