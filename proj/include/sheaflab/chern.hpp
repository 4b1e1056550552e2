#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace sheaflab {

class ParityViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ChernError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ChernData3 {
  long long rank = 0;
  long long c1 = 0;
  long long c2 = 0;
  long long c3 = 0;
  std::string to_string() const;
  friend bool operator==(const ChernData3&, const ChernData3&) = default;
};

struct ChernData2 {
  long long rank = 0;
  long long c1 = 0;
  long long c2 = 0;
  std::string to_string() const;
  friend bool operator==(const ChernData2&, const ChernData2&) = default;
};

struct CurveData {
  long long deg = 0;
  long long chi = 0;
  friend bool operator==(const CurveData&, const CurveData&) = default;
};

// Total Chern class truncated mod h^4: coefficients of 1, h, h^2, h^3.
using TotalChern = std::array<long long, 4>;

TotalChern total(const ChernData3& c);
TotalChern operator*(const TotalChern& a, const TotalChern& b);
TotalChern inverse(const TotalChern& a);

// Generalized binomial x(x-1)...(x-k+1)/k!, valid for negative x.
long long binom(long long x, int k);

ChernData3 line_bundle(long long d);
// Chern data of a direct sum of line bundles O(d_i).
ChernData3 split_bundle(const std::vector<int>& twists);
ChernData3 direct_sum(const ChernData3& a, const ChernData3& b);

ChernData3 twist3(const ChernData3& c, long long t);
ChernData2 twist2(const ChernData2& c, long long t);
ChernData3 dual3(const ChernData3& c);
ChernData2 restrict_to_plane(const ChernData3& c);

long long chi3(const ChernData3& c, long long l);
long long chi2(const ChernData2& c, long long l);

ChernData3 ideal_chern(long long t, const CurveData& z);

enum class WhitneySlot { A, B, C };
// Solves c(B) = c(A) c(C) mod h^4 for the unknown slot of 0 -> A -> B -> C -> 0.
ChernData3 whitney_solve(const ChernData3& a, const ChernData3& b, const ChernData3& c, WhitneySlot unknown);
// Cohomology of a monad A -> B -> C: c(B) / (c(A) c(C)).
ChernData3 monad_chern(const ChernData3& a, const ChernData3& b, const ChernData3& c);

ChernData3 p_bundle(const ChernData3& c, long long h0);
bool parity_check(const ChernData3& c);
long long c2_from_plane(long long c1, long long chi_minus1);

}  // namespace sheaflab
