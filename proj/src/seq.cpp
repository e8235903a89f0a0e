#include "bsglab/seq.hpp"

#include <cctype>

namespace bsglab {

BitSeq parse_bits(const std::string& text) {
  BitSeq out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<Bit>(c - '0'));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
    }
  }
  return out;
}

std::string to_string(const BitSeq& s) {
  std::string out(s.size(), '0');
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = static_cast<char>('0' + s[i]);
  return out;
}

std::string to_string(const StateSeq& s) {
  std::string out(s.size(), '-');
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = to_char(s[i]);
  return out;
}

std::size_t linear_run_count(const BitSeq& s) {
  if (s.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < s.size(); ++i) runs += (s[i] != s[i - 1]);
  return runs;
}

std::size_t cyclic_run_count(const BitSeq& s) {
  if (s.empty()) return 0;
  const std::size_t n = s.size();
  std::size_t boundaries = 0;
  for (std::size_t i = 0; i < n; ++i) boundaries += (s[i] != s[(i + 1) % n]);
  return boundaries ? boundaries : 1;
}

}  // namespace bsglab
