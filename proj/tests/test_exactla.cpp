#include <doctest.h>

#include "sheaflab/matrix.hpp"
#include "sheaflab/random.hpp"

using namespace sheaflab;

namespace {

ScalarMatrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, Rng& rng) {
  MatrixBuilder b(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) b.set(i, j, rng.scalar(f));
  }
  return std::move(b).build();
}

// Rank from the size of the kernel, counted by enumerating F_p^n.
std::size_t brute_force_rank(const ScalarMatrix& m, std::uint32_t p) {
  const std::size_t n = m.cols();
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= p;
  std::size_t zeros = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<long long> v(n);
    std::size_t c = code;
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = static_cast<long long>(c % p);
      c /= p;
    }
    bool in_kernel = true;
    for (std::size_t i = 0; i < m.rows() && in_kernel; ++i) {
      long long acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += static_cast<long long>(m.at(i, j).residue_value()) * v[j];
      in_kernel = acc % p == 0;
    }
    if (in_kernel) ++zeros;
  }
  std::size_t dim = 0;
  while (zeros > 1) {
    zeros /= p;
    ++dim;
  }
  return n - dim;
}

bool annihilates(const ScalarMatrix& m, const ScalarVector& v) {
  for (const auto& x : sheaflab::apply(m, v)) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("field arithmetic") {
  auto f7 = FieldSpec::prime(7);
  auto a = Scalar::from_int(f7, 3);
  CHECK((a * a.inverse()).is_one());
  CHECK((a - a).is_zero());
  CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
  CHECK(Scalar::from_int(f7, 6).to_string() == "-1");
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(8), FieldError);
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("101").characteristic() == 101);

  auto q = FieldSpec::rationals();
  auto half = Scalar::from_int(q, 1) / Scalar::from_int(q, 2);
  CHECK(half.to_string() == "1/2");
  CHECK((half + half).is_one());
}

TEST_CASE("rank examples") {
  auto f = FieldSpec::prime(101);
  CHECK(rank(ScalarMatrix::identity(f, 3)) == 3);
  CHECK(rank(ScalarMatrix(f, 2, 2)) == 0);
  CHECK(rank(ScalarMatrix::from_ints(FieldSpec::rationals(), {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  auto f = FieldSpec::prime(101);
  CHECK(kernel_basis(ScalarMatrix::identity(f, 4)).empty());
  CHECK(kernel_basis(ScalarMatrix(f, 2, 3)).size() == 3);
  auto f7 = FieldSpec::prime(7);
  auto row = ScalarMatrix::from_ints(f7, {{1, 1, 0}});
  auto k = kernel_basis(row);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(annihilates(row, v));
}

TEST_CASE("solve examples") {
  auto f = FieldSpec::prime(101);
  ScalarVector b{Scalar::from_int(f, 4), Scalar::from_int(f, -2)};
  CHECK(*solve(ScalarMatrix::identity(f, 2), b) == b);
  CHECK_FALSE(solve(ScalarMatrix(f, 2, 2), b).has_value());
  auto f5 = FieldSpec::prime(5);
  auto x = solve(ScalarMatrix::from_ints(f5, {{1, 1}, {0, 1}}), {Scalar::from_int(f5, 3), Scalar::from_int(f5, 2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar::from_int(f5, 1));
  CHECK((*x)[1] == Scalar::from_int(f5, 2));
}

TEST_CASE("dimension mismatches throw") {
  auto f = FieldSpec::prime(101);
  CHECK_THROWS_AS(ScalarMatrix(f, 2, 3) * ScalarMatrix(f, 2, 3), DimensionError);
  CHECK_THROWS_AS(solve(ScalarMatrix(f, 2, 2), ScalarVector(3, Scalar::zero(f))), DimensionError);
}

TEST_CASE("rank agrees with kernel enumeration over small fields") {
  Rng rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = FieldSpec::prime(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng.below(4);
      std::size_t c = 1 + rng.below(p == 5 ? 4 : 5);
      auto m = random_matrix(f, r, c, rng);
      CHECK(rank(m) == brute_force_rank(m, p));
    }
  }
}

TEST_CASE("rank-nullity and kernel correctness") {
  Rng rng(12);
  for (auto f : {FieldSpec::prime(101), FieldSpec::prime(7), FieldSpec::rationals()}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t r = 1 + rng.below(6);
      std::size_t c = 1 + rng.below(6);
      // Low rank products exercise the degenerate paths.
      auto m = random_matrix(f, r, 2, rng) * random_matrix(f, 2, c, rng);
      auto k = kernel_basis(m);
      CHECK(rank(m) + k.size() == c);
      for (const auto& v : k) CHECK(annihilates(m, v));
      if (!k.empty()) CHECK(rank(ScalarMatrix::from_columns(f, c, k)) == k.size());
    }
  }
}

TEST_CASE("solve returns a solution whenever b is in the image") {
  Rng rng(13);
  for (auto f : {FieldSpec::prime(101), FieldSpec::rationals()}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto m = random_matrix(f, 4, 3, rng) * random_matrix(f, 3, 5, rng);
      ScalarVector x0;
      for (int j = 0; j < 5; ++j) x0.push_back(rng.scalar(f));
      ScalarVector b = sheaflab::apply(m, x0);
      auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(sheaflab::apply(m, *x) == b);
    }
  }
}

TEST_CASE("complement columns extend the span") {
  auto f = FieldSpec::prime(101);
  auto sub = ScalarMatrix::from_ints(f, {{1}, {0}, {0}});
  auto cand = ScalarMatrix::from_ints(f, {{2, 0, 1}, {0, 0, 1}, {0, 3, 0}});
  auto picked = complement_columns(sub, cand);
  CHECK(picked == std::vector<std::size_t>{1, 2});
  CHECK(transpose(transpose(cand)) == cand);
  CHECK(hstack(sub, cand).cols() == 4);
  CHECK(vstack(cand, cand).rows() == 6);
}

TEST_CASE("random streams are reproducible and distinct") {
  Rng a(42, 1);
  Rng b(42, 1);
  Rng c(42, 2);
  auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(split_seed(42, 1) != split_seed(42, 2));
}
