#include <doctest.h>

#include "sheaflab/chern.hpp"
#include "sheaflab/random.hpp"

using namespace sheaflab;

namespace {

ChernData3 random_chern(Rng& rng) {
  auto v = [&](int span) { return static_cast<long long>(rng.below(2 * span + 1)) - span; };
  return {static_cast<long long>(rng.below(6)), v(6), v(20), v(30)};
}

ChernData3 with_parity(ChernData3 c) {
  if (!parity_check(c)) c.c3 += 1;
  return c;
}

long long binomial_oracle(long long n, int k) {
  if (n < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("twist3 examples") {
  CHECK(twist3({3, -1, 3, -3}, 2) == ChernData3{3, 5, 11, 7});
  CHECK(twist3({3, -1, 4, -4}, 2) == ChernData3{3, 5, 12, 8});
  CHECK(twist3({4, 2, 7, -3}, 0) == ChernData3{4, 2, 7, -3});
}

TEST_CASE("chi3 examples") {
  CHECK(chi3({2, 0, 3, 0}, 0) == -4);
  for (int d = -6; d <= 6; ++d) {
    long long expected = binom(d + 3, 3);
    if (d >= 0) CHECK(expected == binomial_oracle(d + 3, 3));
    CHECK(chi3({1, 0, 0, 0}, d) == expected);
  }
  CHECK(chi3({3, -1, 2, 0}, 0) == -1);
  CHECK_THROWS_AS(chi3({3, 5, 11, 6}, 0), ParityViolation);
}

TEST_CASE("line bundle chi matches sections for every twist") {
  // h0(O(d)) for d >= 0, -h3(O(d)) = -h0(O(-4-d)) for d <= -4, zero between.
  for (int a = -4; a <= 4; ++a) {
    for (int l = -8; l <= 6; ++l) {
      long long d = a + l;
      long long expected = d >= 0 ? binomial_oracle(d + 3, 3) : (d <= -4 ? -binomial_oracle(-d - 1, 3) : 0);
      CHECK(chi3(line_bundle(a), l) == expected);
    }
  }
}

TEST_CASE("ideal_chern examples") {
  CHECK(ideal_chern(0, {1, 1}) == ChernData3{1, 0, 1, 2});
  CHECK(ideal_chern(5, {0, 0}) == ChernData3{1, 5, 0, 0});
  CHECK(ideal_chern(3, {3, 1}) == ChernData3{1, 3, 3, 1});
}

TEST_CASE("whitney_solve examples") {
  auto two_minus = split_bundle({-1, -1});
  auto three_plus = split_bundle({1, 1, 1});
  auto eight = split_bundle(std::vector<int>(8, 0));
  CHECK(monad_chern(two_minus, eight, three_plus) == ChernData3{3, -1, 3, -3});

  ChernData3 c{2, 1, 4, 2};
  ChernData3 o = line_bundle(0);
  CHECK(whitney_solve(o, direct_sum(o, c), {}, WhitneySlot::C) == c);
  CHECK(whitney_solve(line_bundle(-1), split_bundle({0, 0, 0, 0}), {}, WhitneySlot::C) == ChernData3{3, 1, 1, 1});
  CHECK_THROWS_AS(whitney_solve(split_bundle({0, 0}), split_bundle({0}), {}, WhitneySlot::C), ChernError);
}

TEST_CASE("whitney_solve plugged back satisfies multiplicativity") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    ChernData3 a = random_chern(rng);
    ChernData3 c = random_chern(rng);
    ChernData3 b = whitney_solve(a, {}, c, WhitneySlot::B);
    CHECK(total(b) == total(a) * total(c));
    CHECK(whitney_solve({}, b, c, WhitneySlot::A) == a);
    CHECK(whitney_solve(a, b, {}, WhitneySlot::C) == c);
  }
}

TEST_CASE("p_bundle examples") {
  CHECK(p_bundle({3, 5, 12, 8}, 8) == ChernData3{5, 5, 13, 13});
  CHECK(p_bundle({4, 0, 0, 0}, 5) == ChernData3{1, 0, 0, 0});
  CHECK(p_bundle({3, 5, 12, 6}, 8) == ChernData3{5, 5, 13, 11});
  CHECK_THROWS_AS(p_bundle({3, 5, 12, 6}, 3), ChernError);
}

TEST_CASE("parity examples") {
  CHECK(parity_check({3, 5, 11, 7}));
  CHECK_FALSE(parity_check({3, 5, 11, 6}));
  CHECK(parity_check({2, 5, 12, 0}));
}

TEST_CASE("c2 from a plane") {
  CHECK(c2_from_plane(5, 4) == 11);
  CHECK(c2_from_plane(1, 1) == 0);
  CHECK(c2_from_plane(0, 0) == 0);
  // Agrees with chi2 on random plane data.
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    ChernData2 c{static_cast<long long>(1 + rng.below(5)), static_cast<long long>(rng.below(11)) - 5,
                 static_cast<long long>(rng.below(21)) - 10};
    CHECK(c2_from_plane(c.c1, chi2(c, -1)) == c.c2);
  }
}

TEST_CASE("twist composition, dual involution and chi shift") {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    ChernData3 c = with_parity(random_chern(rng));
    long long s = static_cast<long long>(rng.below(9)) - 4;
    long long t = static_cast<long long>(rng.below(9)) - 4;
    CHECK(twist3(twist3(c, s), t) == twist3(c, s + t));
    CHECK(twist3(c, 0) == c);
    CHECK(dual3(dual3(c)) == c);
    CHECK(dual3(twist3(c, t)) == twist3(dual3(c), -t));
    CHECK(chi3(twist3(c, t), s) == chi3(c, s + t));
    CHECK(restrict_to_plane(twist3(c, t)) == twist2(restrict_to_plane(c), t));
  }
}

TEST_CASE("chi3 is additive on direct sums") {
  Rng rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    ChernData3 a = with_parity(random_chern(rng));
    ChernData3 b = with_parity(random_chern(rng));
    ChernData3 s = direct_sum(a, b);
    if (!parity_check(s)) continue;
    for (int l = -5; l <= 3; ++l) CHECK(chi3(s, l) == chi3(a, l) + chi3(b, l));
  }
}

TEST_CASE("total Chern class inverse") {
  Rng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = total(random_chern(rng));
    CHECK(c * inverse(c) == TotalChern{1, 0, 0, 0});
  }
}

TEST_CASE("binomial extension") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(-1, 3) == -1);
  CHECK(binom(-2, 2) == 3);
  CHECK(binom(2, 3) == 0);
}
