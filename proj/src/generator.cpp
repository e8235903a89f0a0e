#include "bsglab/generator.hpp"

namespace bsglab {

namespace {

void check_trace(const StateSeq& y) {
  if (!y.empty() && y[0] == Sym::Empty)
    throw std::invalid_argument("invalid-state-sequence: starts with an emission state");
  for (std::size_t j = 1; j < y.size(); ++j)
    if (y[j] == Sym::Empty && y[j - 1] == Sym::Empty)
      throw std::invalid_argument("invalid-state-sequence: consecutive emission states");
}

}  // namespace

StateSeq run_states(const BitSeq& x) {
  StateSeq y(x.size(), Sym::Empty);
  Sym s = Sym::Empty;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s = step(s, x[i]);
    y[i] = s;
  }
  return y;
}

Sym iterate_step(Sym y0, const BitSeq& x) {
  Sym s = y0;
  for (Bit b : x) s = step(s, b);
  return s;
}

BitSeq bsg_from_states(const StateSeq& y) {
  check_trace(y);
  BitSeq z;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] != Sym::Empty) continue;
    const bool prev_empty = (j < 2) || (y[j - 2] == Sym::Empty);
    z.push_back(prev_empty ? 0 : 1);
  }
  return z;
}

BitSeq absg_from_states(const StateSeq& y) {
  check_trace(y);
  BitSeq z;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] != Sym::Empty) continue;
    const bool prev_empty = (j < 2) || (y[j - 2] == Sym::Empty);
    const Bit b = (y[j - 1] == Sym::One) ? 1 : 0;  // j >= 1: traces never start Empty
    z.push_back(prev_empty ? b : static_cast<Bit>(1 - b));
  }
  return z;
}

BitSeq bsg(const BitSeq& x) {
  BitSeq z;
  std::size_t p = 0;
  while (p + 1 < x.size()) {
    const Bit v = x[p];
    std::size_t q = p + 1;
    while (q < x.size() && x[q] != v) ++q;
    if (q == x.size()) break;
    z.push_back(static_cast<Bit>(v ^ x[p + 1]));
    p = q + 1;
  }
  return z;
}

BitSeq absg(const BitSeq& x) {
  BitSeq z;
  std::size_t p = 0;
  while (p + 1 < x.size()) {
    const Bit v = x[p];
    std::size_t q = p + 1;
    while (q < x.size() && x[q] != v) ++q;
    if (q == x.size()) break;
    z.push_back(x[p + 1]);
    p = q + 1;
  }
  return z;
}

StateTriple map_triple(const StateTriple& s, const BitSeq& x) {
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
    throw std::invalid_argument("state triple entries must be pairwise distinct");
  StateTriple out;
  for (int i = 0; i < 3; ++i) out[i] = iterate_step(s[i], x);
  return out;
}

Perm3 Perm3::from_input(const BitSeq& x) {
  Perm3 p;
  const StateTriple img = map_triple(kRefTriple, x);
  p.map_ = {img[0], img[1], img[2]};
  // probe recovered from the reference triple; confirm the same symbol map
  // acts componentwise on every ordering
  static constexpr int kOrderings[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& o : kOrderings) {
    const StateTriple t = {static_cast<Sym>(o[0]), static_cast<Sym>(o[1]),
                           static_cast<Sym>(o[2])};
    const StateTriple m = map_triple(t, x);
    for (int i = 0; i < 3; ++i)
      if (m[i] != p.apply(t[i])) throw std::logic_error("permutation probe mismatch");
  }
  return p;
}

int Perm3::order() const {
  const Perm3 id;
  if (*this == id) return 1;
  if (this->then(*this) == id) return 2;
  return 3;
}

}  // namespace bsglab
