#include "bsglab/lfsr.hpp"

#include "doctest.h"

using namespace bsglab;

namespace {

LfsrConfig cfg(int degree, std::vector<int> taps, BitSeq seed) {
  return LfsrConfig{degree, std::move(taps), std::move(seed)};
}

}  // namespace

TEST_CASE("bit generation") {
  CHECK(lfsr_bits(cfg(3, {1, 0}, {1, 0, 0}), 7) == BitSeq{1, 0, 0, 1, 0, 1, 1});
  CHECK(lfsr_bits(cfg(2, {1, 0}, {1, 0}), 3) == BitSeq{1, 0, 1});
  CHECK(lfsr_bits(cfg(3, {1, 0}, {1, 0, 0}), 2) == BitSeq{1, 0});
  CHECK(lfsr_bits(cfg(3, {1, 0}, {1, 0, 0}), 0) == BitSeq{});
}

TEST_CASE("sequence period matches the state cycle") {
  for (int L : {3, 5, 8, 10}) {
    const auto taps = primitive_taps(L);
    const std::size_t T = (std::size_t(1) << L) - 1;
    BitSeq seed(static_cast<std::size_t>(L), 0);
    seed[0] = 1;
    const BitSeq two = lfsr_bits(cfg(L, taps, seed), 2 * T);
    const BitSeq one = lfsr_bits(cfg(L, taps, seed), T);
    CHECK(least_period(one) == T);
    for (std::size_t i = 0; i < T; ++i) REQUIRE(two[i] == two[T + i]);
  }
}

TEST_CASE("maximality walk") {
  for (int L = 2; L <= kMaxDegree; ++L) CHECK(is_maximal(L, primitive_taps(L)));
  CHECK_FALSE(is_maximal(4, {2, 0}));        // (x^2+x+1)^2
  CHECK_FALSE(is_maximal(4, {3, 2, 1, 0}));  // divides x^5 + 1
  CHECK_THROWS_AS(is_maximal(4, {2, 1}), std::invalid_argument);  // no constant term
}

TEST_CASE("balance and run structure of full periods") {
  for (int L : {3, 4, 6, 9}) {
    const auto taps = primitive_taps(L);
    BitSeq seed(static_cast<std::size_t>(L), 0);
    seed.back() = 1;
    const std::size_t T = (std::size_t(1) << L) - 1;
    const BitSeq x = lfsr_bits(cfg(L, taps, seed), T);
    CHECK(count_symbol(x, Bit{1}) == (T + 1) / 2);
    CHECK(cyclic_run_count(x) == std::size_t(1) << (L - 1));
  }
}

TEST_CASE("seed advanced by j steps rotates the period") {
  const int L = 5;
  const auto taps = primitive_taps(L);
  const BitSeq seed{1, 1, 0, 1, 0};
  const std::size_t T = (std::size_t(1) << L) - 1;
  const BitSeq x = lfsr_bits(cfg(L, taps, seed), T + static_cast<std::size_t>(L));
  for (std::size_t j : {std::size_t(1), std::size_t(7), std::size_t(30)}) {
    BitSeq seed2(x.begin() + static_cast<std::ptrdiff_t>(j),
                 x.begin() + static_cast<std::ptrdiff_t>(j + L));
    const BitSeq y = lfsr_bits(cfg(L, taps, seed2), T);
    CHECK(y == rotated(BitSeq(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(T)), j));
  }
}

TEST_CASE("exhaustive primitive search") {
  const auto deg3 = all_primitive_taps(3);
  REQUIRE(deg3.size() == 2);
  CHECK(deg3[0] == std::vector<int>{1, 0});
  CHECK(deg3[1] == std::vector<int>{2, 0});
  CHECK(all_primitive_taps(5).size() == 6);
  CHECK(all_primitive_taps(8).size() == 16);
  for (const auto& taps : all_primitive_taps(6)) CHECK(is_maximal(6, taps));
}

TEST_CASE("polynomial text") {
  const Poly a = parse_poly("x^3+x+1");
  CHECK(a.degree == 3);
  CHECK(a.taps == std::vector<int>{1, 0});
  const Poly b = parse_poly("3,1,0");
  CHECK(b.degree == a.degree);
  CHECK(b.taps == a.taps);
  CHECK(parse_poly(" x^12 + x^6 + x^4 + x + 1 ").taps == std::vector<int>{6, 4, 1, 0});
  CHECK(poly_str(3, {1, 0}) == "x^3+x+1");
  CHECK(poly_str(12, {6, 4, 1, 0}) == "x^12+x^6+x^4+x+1");

  CHECK_THROWS_WITH_AS(parse_poly("x^3+y+1"), doctest::Contains("'y'"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x^3+x"), std::invalid_argument);   // no constant term
  CHECK_THROWS_AS(parse_poly("x^3+x+1+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("3,,0"), std::invalid_argument);
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_WITH_AS(lfsr_bits(cfg(3, {1, 0}, {0, 0, 0}), 5),
                       doctest::Contains("degenerate-state"), std::invalid_argument);
  CHECK_THROWS_AS(lfsr_bits(cfg(3, {1}, {1, 0, 0}), 5), std::invalid_argument);
  CHECK_THROWS_AS(lfsr_bits(cfg(3, {1, 0}, {1, 0}), 5), std::invalid_argument);
  CHECK_THROWS_WITH_AS(lfsr_bits(cfg(25, {1, 0}, BitSeq(25, 1)), 5),
                       doctest::Contains("L-too-large"), std::domain_error);
  CHECK_THROWS_AS(primitive_taps(25), std::domain_error);
}
