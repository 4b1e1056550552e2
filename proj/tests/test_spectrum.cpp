#include <doctest.h>

#include "sheaflab/catalog.hpp"
#include "sheaflab/spectrum.hpp"

using namespace sheaflab;

namespace {

const FieldSpec F101 = FieldSpec::prime(101);

bool admissible(const Spectrum& s) { return validate_spectrum(s, std::nullopt).empty(); }

SpectrumError::Kind error_kind(const SpectrumTables& t) {
  try {
    recover(t);
  } catch (const SpectrumError& e) {
    return e.kind();
  }
  FAIL("recover accepted inconsistent tables");
  return SpectrumError::Kind::TotalMismatch;
}

}  // namespace

TEST_CASE("forward examples") {
  SpectrumTables a = forward(Spectrum({0, -1}));
  CHECK(a.h1_low.at(-1) == 1);
  CHECK(a.h1_low.at(-2) == 0);
  CHECK(a.h2_high.at(-2) == 1);
  CHECK(a.h2_high.at(-1) == 0);

  SpectrumTables b = forward(Spectrum({-1, -1}));
  for (const auto& [l, v] : b.h1_low) CHECK(v == 0);
  CHECK(b.h2_high.at(-2) == 2);
  CHECK(b.h2_high.at(-1) == 0);

  SpectrumTables c = forward(Spectrum({1, 0, -1, -2}));
  CHECK(c.h1_low.at(-2) == 1);
  CHECK(c.h1_low.at(-1) == 3);
  CHECK(c.h2_high.at(-1) == 1);
  CHECK(c.h2_high.at(-2) == 3);
}

TEST_CASE("forward matches the termwise sums") {
  for (const auto& s : enumerate_spectra(4, -3, 2)) {
    SpectrumTables t = forward(s);
    for (const auto& [l, v] : t.h1_low) {
      long long h = 0;
      for (int k : s.values()) h += std::max(0, k + l + 2);
      CHECK(v == h);
    }
    for (const auto& [l, v] : t.h2_high) {
      long long h = 0;
      for (int k : s.values()) h += std::max(0, -k - l - 2);
      CHECK(v == h);
    }
  }
}

TEST_CASE("recover examples") {
  CHECK(recover(forward(Spectrum({0, -1}))) == Spectrum({0, -1}));
  CHECK(recover(forward(Spectrum({1, 0, -1, -2}))) == Spectrum({1, 0, -1, -2}));
  CHECK(recover(forward(Spectrum({-1, -1}))) == Spectrum({-1, -1}));
  SpectrumTables silent{2, {{-5, 0}, {-4, 0}, {-3, 0}, {-2, 0}, {-1, 0}}, {{-2, 0}, {-1, 0}, {0, 0}, {1, 0}}};
  CHECK(error_kind(silent) == SpectrumError::Kind::TotalMismatch);
}

TEST_CASE("recover rejects inconsistent tables") {
  SpectrumTables t = forward(Spectrum({0, 0, -1}));
  SpectrumTables wrong_c = t;
  wrong_c.c = 4;
  CHECK(error_kind(wrong_c) == SpectrumError::Kind::TotalMismatch);

  SpectrumTables dip = forward(Spectrum({2, 1, 0}));
  dip.h1_low[-2] = dip.h1_low[-1] + 1;
  CHECK(error_kind(dip) == SpectrumError::Kind::NonMonotoneTails);

  SpectrumTables concave = forward(Spectrum({1, 0}));
  // h1 = 0,0,0,1,3 on l = -5..-1; raising the middle value breaks convexity.
  concave.h1_low[-2] = 2;
  CHECK(error_kind(concave) == SpectrumError::Kind::NegativeMultiplicity);

  SpectrumTables narrow = forward(Spectrum({1, 0}));
  narrow.h1_low.erase(narrow.h1_low.begin());
  narrow.h1_low.erase(narrow.h1_low.begin());
  narrow.h1_low.erase(narrow.h1_low.begin());
  CHECK(error_kind(narrow) == SpectrumError::Kind::WindowTooNarrow);

  SpectrumTables negative = forward(Spectrum({0, -1}));
  negative.h2_high[0] = -1;
  CHECK(error_kind(negative) == SpectrumError::Kind::NegativeMultiplicity);
}

TEST_CASE("roundtrip over all admissible spectra with c <= 6 and values in [-3, 2]") {
  std::size_t checked = 0;
  for (const auto& s : enumerate_spectra(6, -3, 2)) {
    if (!admissible(s)) continue;
    SpectrumTables t = forward(s);
    CHECK(recover(t) == s);
    CHECK(forward(recover(t)) == t);
    ++checked;
  }
  CHECK(checked == 179);
}

TEST_CASE("roundtrip also holds for non-admissible sequences") {
  auto all = enumerate_spectra(6, -3, 2);
  CHECK(all.size() == 923);
  for (const auto& s : all) CHECK(recover(forward(s)) == s);
}

TEST_CASE("validate_spectrum examples") {
  auto names = [](const Spectrum& s, std::optional<long long> c3) {
    std::vector<std::string> out;
    for (const auto& v : validate_spectrum(s, c3)) out.push_back(v.property);
    return out;
  };
  // 0 is missing, which also leaves -1 with multiplicity one.
  CHECK(names(Spectrum({1, -1}), std::nullopt) == std::vector<std::string>{"iv", "vi"});
  CHECK(names(Spectrum({-2, -2}), std::nullopt) == std::vector<std::string>{"v", "vi"});
  CHECK(names(Spectrum({0, -1, -1, -2}), 4).empty());
  CHECK(names(Spectrum({0, -1, -1, -2}), 2) == std::vector<std::string>{"iii"});
  CHECK(names(Spectrum({0, 0, 0, 0}), -4).empty());
}

TEST_CASE("Spectrum value type") {
  Spectrum s({-1, 0, 1});
  CHECK(s.values() == std::vector<int>{1, 0, -1});
  CHECK(s.to_string() == "(1,0,-1)");
  CHECK(s.sum() == 0);
  CHECK(s.multiplicity(0) == 1);
  CHECK_THROWS(Spectrum({}));
  CHECK(enumerate_spectra(1, -1, 1).size() == 3);
  CHECK(enumerate_spectra(2, 0, 1).size() == 2 + 3);
}

TEST_CASE("spectrum of presented bundles") {
  SpectrumReport xvi = spectrum_of(build("thm-xvi", F101, 42));
  CHECK(xvi.spectrum == Spectrum({0, 0, 0, 0}));
  CHECK(xvi.h0_vanishes);
  CHECK(xvi.h3_vanishes);
  CHECK(xvi.label().find("under stability assumption") != std::string::npos);

  CHECK(spectrum_of(build("thm-viii", F101, 7)).spectrum == Spectrum({0, 0, 0}));

  // Omega(1) = ker(4O -> O(1)).
  FreeComplex omega1 = dualize(euler_tangent(F101));
  REQUIRE(chern_of(omega1) == ChernData3{3, -1, 1, -1});
  SpectrumReport r = spectrum_of(omega1);
  CHECK(r.spectrum == Spectrum({0}));
  CHECK(validate_spectrum(r.spectrum, -1).empty());

  CHECK_THROWS_AS(spectrum_of(FreeComplex::single(F101, 4, FreeTerm::repeated(3, 0))), std::invalid_argument);
}

TEST_CASE("property (iii) holds on every catalog bundle with a spectrum") {
  for (const auto& e : catalog()) {
    if (!e.spectrum || !e.presented_twist) continue;
    FreeComplex c = build(e.id, F101, 42);
    FreeComplex f = twist_complex(c, -2 - *e.presented_twist);
    ChernData3 ch = chern_of(f);
    if (ch.rank != 3) continue;
    Spectrum s = spectrum_of(f).spectrum;
    CHECK(s == *e.spectrum);
    CHECK(-2 * s.sum() == ch.c3 + s.c());
  }
}

TEST_CASE("tables_of agrees with forward on generic monads") {
  SpectrumTables got = tables_of(build("thm-xvi", F101, 42), 4);
  SpectrumTables expected = forward(Spectrum({0, 0, 0, 0}));
  CHECK(recover(got) == Spectrum({0, 0, 0, 0}));
  for (const auto& [l, v] : got.h1_low) CHECK(v == (expected.h1_low.count(l) ? expected.h1_low.at(l) : 0));
  for (const auto& [l, v] : got.h2_high) CHECK(v == (expected.h2_high.count(l) ? expected.h2_high.at(l) : 0));
}
