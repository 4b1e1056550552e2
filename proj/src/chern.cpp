#include "sheaflab/chern.hpp"

namespace sheaflab {

std::string ChernData3::to_string() const {
  return "(" + std::to_string(rank) + "; " + std::to_string(c1) + ", " + std::to_string(c2) + ", " +
         std::to_string(c3) + ")";
}

std::string ChernData2::to_string() const {
  return "(" + std::to_string(rank) + "; " + std::to_string(c1) + ", " + std::to_string(c2) + ")";
}

long long binom(long long x, int k) {
  if (k < 0) return 0;
  // Exact: each partial product of i consecutive integers is divisible by i!.
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
  return r;
}

TotalChern total(const ChernData3& c) { return {1, c.c1, c.c2, c.c3}; }

TotalChern operator*(const TotalChern& a, const TotalChern& b) {
  TotalChern r{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TotalChern inverse(const TotalChern& a) {
  if (a[0] != 1) throw ChernError("total Chern class must start with 1");
  TotalChern r{1, 0, 0, 0};
  for (int k = 1; k < 4; ++k) {
    long long s = 0;
    for (int i = 1; i <= k; ++i) s += a[i] * r[k - i];
    r[k] = -s;
  }
  return r;
}

namespace {

ChernData3 from_total(long long rank, const TotalChern& t) { return {rank, t[1], t[2], t[3]}; }

}  // namespace

ChernData3 line_bundle(long long d) { return {1, d, 0, 0}; }

ChernData3 direct_sum(const ChernData3& a, const ChernData3& b) {
  return from_total(a.rank + b.rank, total(a) * total(b));
}

ChernData3 split_bundle(const std::vector<int>& twists) {
  ChernData3 c{0, 0, 0, 0};
  for (int d : twists) c = direct_sum(c, line_bundle(d));
  return c;
}

ChernData3 twist3(const ChernData3& c, long long t) {
  const long long r = c.rank;
  std::array<long long, 4> in{1, c.c1, c.c2, c.c3};
  std::array<long long, 4> out{1, 0, 0, 0};
  long long tp[4] = {1, t, t * t, t * t * t};
  for (int k = 1; k < 4; ++k) {
    long long s = 0;
    for (int i = 0; i <= k; ++i) s += binom(r - i, k - i) * in[i] * tp[k - i];
    out[k] = s;
  }
  return {r, out[1], out[2], out[3]};
}

ChernData2 twist2(const ChernData2& c, long long t) {
  ChernData3 lifted = twist3({c.rank, c.c1, c.c2, 0}, t);
  return {lifted.rank, lifted.c1, lifted.c2};
}

ChernData3 dual3(const ChernData3& c) { return {c.rank, -c.c1, c.c2, -c.c3}; }

ChernData2 restrict_to_plane(const ChernData3& c) { return {c.rank, c.c1, c.c2}; }

long long chi3(const ChernData3& c, long long l) {
  long long odd = c.c3 - c.c1 * c.c2;
  if (odd % 2 != 0) {
    throw ParityViolation("c3 - c1*c2 is odd for " + c.to_string());
  }
  return (c.rank - 1) * binom(l + 3, 3) + binom(c.c1 + l + 3, 3) - (l + 2) * c.c2 + odd / 2;
}

long long chi2(const ChernData2& c, long long l) {
  return (c.rank - 1) * binom(l + 2, 2) + binom(c.c1 + l + 2, 2) - c.c2;
}

ChernData3 ideal_chern(long long t, const CurveData& z) {
  if (z.deg < 0) throw ChernError("curve degree must be non-negative");
  return {1, t, z.deg, (4 - t) * z.deg - 2 * z.chi};
}

ChernData3 whitney_solve(const ChernData3& a, const ChernData3& b, const ChernData3& c, WhitneySlot unknown) {
  switch (unknown) {
    case WhitneySlot::B:
      return from_total(a.rank + c.rank, total(a) * total(c));
    case WhitneySlot::A:
      if (b.rank < c.rank) throw ChernError("inconsistent ranks: rank B < rank C");
      return from_total(b.rank - c.rank, total(b) * inverse(total(c)));
    case WhitneySlot::C:
      if (b.rank < a.rank) throw ChernError("inconsistent ranks: rank B < rank A");
      return from_total(b.rank - a.rank, total(b) * inverse(total(a)));
  }
  throw ChernError("unknown Whitney slot");
}

ChernData3 monad_chern(const ChernData3& a, const ChernData3& b, const ChernData3& c) {
  ChernData3 kernel = whitney_solve(ChernData3{}, b, c, WhitneySlot::A);
  return whitney_solve(a, kernel, ChernData3{}, WhitneySlot::C);
}

ChernData3 p_bundle(const ChernData3& c, long long h0) {
  if (h0 < c.rank + 1) throw ChernError("h0 must exceed the rank by at least one");
  return {h0 - c.rank, c.c1, c.c1 * c.c1 - c.c2, c.c3 + c.c1 * (c.c1 * c.c1 - 2 * c.c2)};
}

bool parity_check(const ChernData3& c) { return (c.c3 - c.c1 * c.c2) % 2 == 0; }

long long c2_from_plane(long long c1, long long chi_minus1) { return binom(c1 + 1, 2) - chi_minus1; }

}  // namespace sheaflab
