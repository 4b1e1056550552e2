#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sheaflab/complex.hpp"

namespace sheaflab {

class SpectrumError : public std::runtime_error {
 public:
  enum class Kind { NegativeMultiplicity, TotalMismatch, NonMonotoneTails, WindowTooNarrow };
  SpectrumError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Non-increasing integer sequence k_1 >= ... >= k_c, c >= 1.
class Spectrum {
 public:
  // Sorts into non-increasing order.
  explicit Spectrum(std::vector<int> values);
  const std::vector<int>& values() const { return values_; }
  int c() const { return static_cast<int>(values_.size()); }
  long long sum() const;
  int multiplicity(int v) const;
  std::string to_string() const;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<int> values_;
};

// h1_low: l -> h^1(F(l)) for l <= -1; h2_high: l -> h^2(F(l)) for l >= -2.
struct SpectrumTables {
  int c = 0;
  std::map<int, long long> h1_low;
  std::map<int, long long> h2_high;
  friend bool operator==(const SpectrumTables&, const SpectrumTables&) = default;
};

SpectrumTables forward(const Spectrum& s);
Spectrum recover(const SpectrumTables& t);

struct SpectrumViolation {
  std::string property;  // "iii", "iv", "v" or "vi"
  std::string message;
};
std::vector<SpectrumViolation> validate_spectrum(const Spectrum& s, std::optional<long long> c3);

struct SpectrumReport {
  Spectrum spectrum;
  // The two vanishings a stable bundle needs: h0(F) and h3(F(-3)).
  bool h0_vanishes = false;
  bool h3_vanishes = false;
  std::string label() const;
};

// Requires chern_of(c) of rank 3 with c1 = -1.
SpectrumReport spectrum_of(const FreeComplex& c);
// Tables read off a presentation on the windows used by spectrum_of.
SpectrumTables tables_of(const FreeComplex& c, int count);

// All non-increasing sequences of length 1..max_c with values in [lo, hi].
std::vector<Spectrum> enumerate_spectra(int max_c, int lo, int hi);

}  // namespace sheaflab
