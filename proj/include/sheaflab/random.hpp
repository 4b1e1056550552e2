#pragma once

#include <cstdint>
#include <random>

#include "sheaflab/field.hpp"

namespace sheaflab {

// splitmix64 finalizer; derives independent per-task seeds from a user seed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(split_seed(seed, stream)) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  // Uniform residue for prime fields, integer in [-20, 20] for the rationals.
  Scalar scalar(const FieldSpec& f);
  Scalar nonzero_scalar(const FieldSpec& f);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sheaflab
