#pragma once

#include <cstdint>

namespace bsglab {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; stateless avalanche mix
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// xorshift64* word source; period 2^64 - 1 over nonzero states
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) : s_(seed ? seed : kGolden) {}

  std::uint64_t next() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545F4914F6CDD1Dull;
  }

  // uniform in [0,1), 53 bits
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t s_;
};

// Decorrelated substream for one trial of a seeded run. Results depend only
// on (seed, trial), never on how trials are batched across workers.
inline XorShift64Star trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return XorShift64Star(mix64(mix64(seed) ^ (trial + kGolden)));
}

// LSB-first bits of successive words
class BitStream {
 public:
  explicit BitStream(XorShift64Star g) : g_(g) {}

  std::uint8_t next_bit() {
    if (left_ == 0) {
      word_ = g_.next();
      left_ = 64;
    }
    const std::uint8_t b = static_cast<std::uint8_t>(word_ & 1);
    word_ >>= 1;
    --left_;
    return b;
  }

 private:
  XorShift64Star g_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

}  // namespace bsglab
