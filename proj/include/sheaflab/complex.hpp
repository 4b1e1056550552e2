#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sheaflab/chern.hpp"
#include "sheaflab/poly.hpp"

namespace sheaflab {

class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SpanTooLarge : public ComplexError {
 public:
  using ComplexError::ComplexError;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Direct sum of line bundles O(b_1) + ... + O(b_m), kept in the given order.
class FreeTerm {
 public:
  FreeTerm() = default;
  explicit FreeTerm(std::vector<int> twists) : twists_(std::move(twists)) {}
  // m copies of O(b).
  static FreeTerm repeated(int m, int b) { return FreeTerm(std::vector<int>(static_cast<std::size_t>(m), b)); }

  std::size_t rank() const { return twists_.size(); }
  bool empty() const { return twists_.empty(); }
  const std::vector<int>& twists() const { return twists_; }
  int operator[](std::size_t i) const { return twists_[i]; }
  FreeTerm twisted(int t) const;
  FreeTerm negated() const;
  FreeTerm without(std::size_t i) const;
  friend FreeTerm operator+(const FreeTerm& a, const FreeTerm& b);
  // Sorted multiset view, e.g. "3O(1) + O(2)".
  std::string shape() const;
  // Multiset equality.
  bool same_shape(const FreeTerm& o) const;
  friend bool operator==(const FreeTerm&, const FreeTerm&) = default;

 private:
  std::vector<int> twists_;
};

// Matrix of forms between free terms; entry (i,j) has degree target[i] - source[j].
class GradedMap {
 public:
  GradedMap(FieldSpec f, int nvars, FreeTerm source, FreeTerm target);
  GradedMap(FreeTerm source, FreeTerm target, std::vector<Poly> entries, FieldSpec f, int nvars);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  const FreeTerm& source() const { return source_; }
  const FreeTerm& target() const { return target_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  const Poly& entry(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  const std::vector<Poly>& entries() const { return entries_; }
  int required_degree(std::size_t i, std::size_t j) const { return target_[i] - source_[j]; }
  bool is_zero() const;

  // Maps between graded pieces: ⊕ S_{b_j+t} -> ⊕ S_{a_i+t}.
  ScalarMatrix graded_piece(int t) const;
  ScalarMatrix evaluate(const ProjPoint& x) const;
  // Dual map between the dual terms.
  GradedMap transpose() const;
  GradedMap twisted(int t) const;
  GradedMap restricted(const ScalarVector& plane) const;

  friend GradedMap operator*(const GradedMap& after, const GradedMap& before);
  friend bool operator==(const GradedMap&, const GradedMap&) = default;

 private:
  FieldSpec field_;
  int nvars_;
  FreeTerm source_;
  FreeTerm target_;
  std::vector<Poly> entries_;
};

// Stacks maps with a common source: rows of `top` then rows of `bottom`.
GradedMap stack_rows(const GradedMap& top, const GradedMap& bottom);
// Joins maps with a common target: columns of `left` then columns of `right`.
GradedMap stack_cols(const GradedMap& left, const GradedMap& right);
GradedMap zero_map(const FieldSpec& f, int nvars, const FreeTerm& source, const FreeTerm& target);

// Bounded complex of free terms at positions pmin..pmax; the sheaf is the
// cohomology at coh_pos. Composition zero is checked by validate, not here.
class FreeComplex {
 public:
  // maps[k] goes from terms[k] to terms[k+1].
  FreeComplex(FieldSpec f, int nvars, int pmin, std::vector<FreeTerm> terms, std::vector<GradedMap> maps, int coh_pos);
  // One-term complex.
  static FreeComplex single(const FieldSpec& f, int nvars, FreeTerm term);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  int pmin() const { return pmin_; }
  int pmax() const { return pmin_ + static_cast<int>(terms_.size()) - 1; }
  int coh_pos() const { return coh_pos_; }
  const FreeTerm& term(int pos) const;
  // Map from position pos to pos+1.
  const GradedMap& map(int pos) const;
  const std::vector<FreeTerm>& terms() const { return terms_; }
  const std::vector<GradedMap>& maps() const { return maps_; }
  // Alternating sum of ranks relative to coh_pos.
  long long rank() const;
  std::string shape() const;

  friend bool operator==(const FreeComplex&, const FreeComplex&) = default;

 private:
  FieldSpec field_;
  int nvars_;
  int pmin_;
  std::vector<FreeTerm> terms_;
  std::vector<GradedMap> maps_;
  int coh_pos_;
};

enum class Exactness { certified_yes, certified_no, probable_yes };

struct SamplingConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 64;
  bool exhaustive = false;
};

struct PositionCheck {
  int position = 0;
  Exactness status = Exactness::probable_yes;
  std::optional<ProjPoint> witness;
  // Dimension of fiber homology at the witness.
  std::size_t defect = 0;
};

struct ValidityReport {
  bool is_complex = false;
  std::vector<PositionCheck> positions;
  bool exhaustive = false;
  std::size_t points = 0;
  std::uint64_t seed = 0;
  std::uint32_t p = 0;
  // Complex, and no position certified non-exact.
  bool ok() const;
  std::string to_string() const;
};

// Points to test: all points over F_p in exhaustive mode, otherwise `samples`
// distinct points: the coordinate points, then random points derived from
// (seed, stream).
std::vector<ProjPoint> sample_points(const FieldSpec& f, int nvars, const SamplingConfig& cfg, std::uint64_t stream = 0);
std::vector<ProjPoint> all_points(const FieldSpec& f, int nvars);

ValidityReport validate(const FreeComplex& c, const SamplingConfig& cfg);
FreeComplex dualize(const FreeComplex& c);
FreeComplex twist_complex(const FreeComplex& c, int t);
FreeComplex restrict_plane(const FreeComplex& c, const ScalarVector& plane);
// Removes a constant nonzero entry (row, col) of the map at `pos` by Gaussian
// elimination on the complex; the result is homotopy equivalent.
FreeComplex cancel_unit(const FreeComplex& c, int pos, std::size_t row, std::size_t col);
// Drops empty end terms that are not the cohomology position.
FreeComplex trim(const FreeComplex& c);

ChernData3 chern_of(const FreeComplex& c);
ChernData2 chern_of_p2(const FreeComplex& c);
// χ(E(t)) as the alternating sum over the terms.
long long euler_characteristic(const FreeComplex& c, int t);

std::string format_complex(const FreeComplex& c);
FreeComplex parse_complex(std::string_view text);
FreeComplex read_complex_file(const std::string& path);
void write_complex_file(const std::string& path, const FreeComplex& c);

}  // namespace sheaflab
