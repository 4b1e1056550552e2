#include "sheaflab/random.hpp"

namespace sheaflab {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Scalar Rng::scalar(const FieldSpec& f) {
  if (f.is_prime()) return Scalar::residue(static_cast<std::uint32_t>(below(f.characteristic())), f.characteristic());
  return Scalar::from_int(f, static_cast<long long>(below(41)) - 20);
}

Scalar Rng::nonzero_scalar(const FieldSpec& f) {
  for (;;) {
    Scalar s = scalar(f);
    if (!s.is_zero()) return s;
  }
}

}  // namespace sheaflab
