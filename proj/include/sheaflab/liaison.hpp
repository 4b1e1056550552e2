#pragma once

#include <vector>

#include "sheaflab/complex.hpp"

namespace sheaflab {

class LiftFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolution A2 -> A1 -> A0 of an ideal sheaf, cohomology at A0 (position 0),
// together with the generators f_i: A0 -> O, deg f_i = -twist_i(A0).
class CurveResolution {
 public:
  CurveResolution(FreeComplex resolution, std::vector<Poly> generators);
  const FreeComplex& resolution() const { return resolution_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const FreeTerm& a0() const { return resolution_.term(0); }

 private:
  FreeComplex resolution_;
  std::vector<Poly> generators_;
};

// Column psi with sum_i generators[i] * psi[i] = f, from the first solution of
// the graded linear system.
std::vector<Poly> lift_to_generators(const CurveResolution& r, const Poly& f);

FreeComplex ferrand_transfer(const CurveResolution& r, int a, int b, const Poly& f, const Poly& g);

// B^{-1} -> B^0 + A -> B^1 with maps (d^{-1}; phi) and (d^0, 0).
FreeComplex attach_extension(const FreeComplex& m, const FreeTerm& a, const GradedMap& phi);

// Data of the curve linked to `linked` by a complete intersection of type (a, b).
CurveData liaison_curve_data(const CurveData& linked, int a, int b);

}  // namespace sheaflab
