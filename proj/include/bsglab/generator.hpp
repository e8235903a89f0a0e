#pragma once

#include <array>

#include "bsglab/seq.hpp"

namespace bsglab {

// One search step. Rows are the current state, columns the input bit:
//   Empty -> Zero/One (remember the bit), Zero/One -> Empty on the bit that
//   closes the block, else keep searching.
inline constexpr Sym kStepTable[3][2] = {
    {Sym::Zero, Sym::One},    // from Empty
    {Sym::Empty, Sym::Zero},  // from Zero
    {Sym::One, Sym::Empty},   // from One
};

inline Sym step(Sym y, Bit x) {
  if (x > 1) throw std::invalid_argument("bit out of range");
  return kStepTable[static_cast<int>(y)][x];
}

// Full state trace y_1..y_n from the fixed start y_0 = Empty.
StateSeq run_states(const BitSeq& x);

Sym iterate_step(Sym y0, const BitSeq& x);

// Output maps over a state trace. Emission happens exactly at Empty states;
// the bit depends on the state two steps back (y_0 = Empty applies at the
// left edge). A trace is malformed if it starts Empty or repeats Empty on
// consecutive positions.
BitSeq bsg_from_states(const StateSeq& y);
BitSeq absg_from_states(const StateSeq& y);

// Single-pass block-parse forms: scan self-delimiting blocks (v, ~v..., v)
// and emit one bit per complete block. A trailing incomplete block emits
// nothing.
BitSeq bsg(const BitSeq& x);   // first XOR second block bit
BitSeq absg(const BitSeq& x);  // second block bit

// Ordered triple of pairwise distinct states.
using StateTriple = std::array<Sym, 3>;
inline constexpr StateTriple kRefTriple = {Sym::Empty, Sym::Zero, Sym::One};

StateTriple map_triple(const StateTriple& s, const BitSeq& x);

// Bijection on {Empty, Zero, One} induced by feeding an input block; an
// element of the symmetric group on three letters.
class Perm3 {
 public:
  Perm3() : map_(kRefTriple) {}

  static Perm3 from_input(const BitSeq& x);

  Sym apply(Sym s) const { return map_[static_cast<int>(s)]; }

  // apply this first, then g
  Perm3 then(const Perm3& g) const {
    Perm3 out;
    for (int i = 0; i < 3; ++i) out.map_[i] = g.apply(map_[i]);
    return out;
  }

  int order() const;
  bool odd() const { return order() == 2; }  // transpositions are the odd elements

  friend bool operator==(const Perm3&, const Perm3&) = default;

 private:
  std::array<Sym, 3> map_;  // image of Empty, Zero, One in that order
};

}  // namespace bsglab
