#pragma once

#include <optional>
#include <string>

#include "sheaflab/cohom.hpp"

namespace sheaflab {

class FiberJump : public std::runtime_error {
 public:
  FiberJump(const ProjPoint& x, long long got, long long expected);
  const ProjPoint& point() const { return point_; }

 private:
  ProjPoint point_;
};

// E_x = ker d^{cp}(x) / im d^{cp-1}(x).
struct Fiber {
  ScalarMatrix incoming;  // columns span im d^{cp-1}(x)
  std::size_t incoming_rank = 0;
  std::vector<ScalarVector> basis;  // complement of the image inside the kernel
  std::size_t dim() const { return basis.size(); }
};

Fiber fiber(const FreeComplex& c, const ProjPoint& x);

struct GgVerdict {
  enum class Outcome { certified_not_gg, gg_at_all_sampled, gg_over_Fp_exhaustive };
  Outcome outcome = Outcome::gg_at_all_sampled;
  std::optional<ProjPoint> witness;
  long long corank = 0;
  std::size_t points = 0;
  std::uint64_t seed = 0;
  std::uint32_t p = 0;
  bool positive() const { return outcome != Outcome::certified_not_gg; }
  std::string to_string() const;
};

// Value of each section representative in the fiber coordinates at x.
ScalarMatrix evaluate_sections(const FreeComplex& c, const SectionBasis& s, const ProjPoint& x);
// Codimension of the span of the evaluated sections inside E_x.
long long evaluation_corank(const FreeComplex& c, const SectionBasis& s, const ProjPoint& x);

GgVerdict is_globally_generated(const FreeComplex& c, int t, const SamplingConfig& cfg);
bool section_eval_welldef_check(const FreeComplex& c, int t, const ProjPoint& x, int n_trials, std::uint64_t seed = 42);

}  // namespace sheaflab
