#pragma once

#include <string>
#include <vector>

#include "sheaflab/complex.hpp"

namespace sheaflab {

class CohomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// h^i(E(t)) for t in [t_lo, t_hi] and i in 0..n.
class CohTable {
 public:
  // rows[k][i] = h^i(E(t_lo + k)); euler[k] is the expected alternating sum.
  CohTable(int n, int t_lo, std::vector<std::vector<long long>> rows, const std::vector<long long>& euler);

  int n() const { return n_; }
  int t_lo() const { return t_lo_; }
  int t_hi() const { return t_lo_ + static_cast<int>(rows_.size()) - 1; }
  bool contains(int t) const { return t >= t_lo_ && t <= t_hi(); }
  long long h(int i, int t) const;
  long long chi(int t) const;
  // One line per twist: "t  h0 h1 h2 h3".
  std::string to_text() const;
  static CohTable parse(std::string_view text);

  friend bool operator==(const CohTable&, const CohTable&) = default;

 private:
  int n_;
  int t_lo_;
  std::vector<std::vector<long long>> rows_;
};

struct SectionBasis {
  int t = 0;
  // Untwisted cohomology-position term; summand j contributes one block of
  // degree (twist_j + t) monomial coefficients.
  FreeTerm term;
  std::vector<ScalarVector> representatives;
};

CohTable h_table(const FreeComplex& c, int t_lo, int t_hi);
SectionBasis sections(const FreeComplex& c, int t);
// h^i(E(t)) = h^{n-i}(E^dual(-n-1-t)) over the range, using dualize.
bool serre_dual_check(const FreeComplex& c, int t_lo, int t_hi);

}  // namespace sheaflab
