#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sheaflab/ggcheck.hpp"
#include "sheaflab/liaison.hpp"
#include "sheaflab/spectrum.hpp"

namespace sheaflab {

// Random constructions that keep failing validation.
class GenericityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownItem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// h^i(E(t)) = value.
struct HClaim {
  int i = 0;
  int t = 0;
  long long value = 0;
};

struct CatalogEntry {
  std::string id;
  std::string item;
  std::string anchor;
  // Chern data of E itself (c1 = 5 throughout).
  ChernData3 chern;
  // The built complex presents E(presented_twist); empty for Chern-only entries.
  std::optional<int> presented_twist;
  std::vector<HClaim> h_claims;
  // Spectrum of F = E'(-2).
  std::optional<Spectrum> spectrum;
  bool gg_claim = false;
  // The construction does not depend on the field, so gg is certified over F_5.
  bool gg_exhaustive = false;
  bool general = false;
  bool exploratory = false;
  std::string skip_reason;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view id);

// Seeded construction, resampled until validate passes (bounded retries).
FreeComplex build(std::string_view id, const FieldSpec& f, std::uint64_t seed);

enum class ClaimStatus { pass, fail, skip };

struct ClaimResult {
  std::string name;
  ClaimStatus status = ClaimStatus::pass;
  std::string details;
};

struct VerifyReport {
  std::string id;
  FieldSpec field = FieldSpec::prime(101);
  std::uint64_t seed = 0;
  std::vector<ClaimResult> claims;
  double seconds = 0;
  bool passed() const;
  const ClaimResult* find(std::string_view name) const;
  // Header comments plus one `CLAIM <id> <name> PASS|FAIL|SKIP <details>` line per claim.
  // Runtime is left out so the text is golden-file stable.
  std::string to_text() const;
};

VerifyReport verify(std::string_view id, const FieldSpec& f, std::uint64_t seed, std::size_t samples = 64);

// Fixtures outside the catalog.

// T(-1) as the cokernel of O(-1) -> 4O.
FreeComplex euler_tangent(const FieldSpec& f);
// ker((x0,x1,x2,x3^2): 3O(1) + O -> O(2)); at t = 0 its sections all vanish at (0:0:0:1).
FreeComplex planted_witness(const FieldSpec& f);
ProjPoint planted_point(const FieldSpec& f);

struct LiaisonInput {
  CurveResolution resolution;
  int a = 0;
  int b = 0;
  Poly f;
  Poly g;
  CurveData linked;  // degree and chi of the curve Y' resolved by `resolution`
  std::string expected_shape;
};

// 1: a plane cubic plus a line through a Hilbert-Burch matrix; 2: the rational quartic.
LiaisonInput liaison_input(int which, const FieldSpec& f, std::uint64_t seed);

}  // namespace sheaflab
