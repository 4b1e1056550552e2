#include <doctest.h>

#include "sheaflab/catalog.hpp"

using namespace sheaflab;

namespace {

const FieldSpec F101 = FieldSpec::prime(101);

Poly P(const char* text) { return Poly::parse(text, F101, 4); }

// I_L(1) for the line x0 = x1 = 0.
FreeComplex line_ideal() {
  FreeTerm b({-1});
  FreeTerm a({0, 0});
  return FreeComplex(F101, 4, -1, {b, a}, {GradedMap(b, a, {P("x1"), P("-x0")}, F101, 4)}, 0);
}

}  // namespace

TEST_CASE("liaison curve data") {
  CHECK(liaison_curve_data({4, 0}, 4, 4) == CurveData{12, -16});
  CHECK(liaison_curve_data({4, 1}, 4, 4) == CurveData{12, -15});
  CurveData y = liaison_curve_data({4, 0}, 4, 4);
  CHECK(0 - y.chi == 16);
  // Linking back returns the original curve.
  CHECK(liaison_curve_data(y, 4, 4) == CurveData{4, 0});
  CHECK(liaison_curve_data({1, 1}, 1, 1) == CurveData{0, 0});
  CHECK_THROWS(liaison_curve_data({5, 0}, 2, 2));
}

TEST_CASE("transfer reproduces both shapes") {
  for (int which : {1, 2}) {
    for (std::uint64_t seed : {42u, 7u, 1u}) {
      LiaisonInput in = liaison_input(which, F101, seed);
      FreeComplex out = ferrand_transfer(in.resolution, in.a, in.b, in.f, in.g);
      CHECK(out.shape() == in.expected_shape);
      CHECK(chern_of(out) == ideal_chern(in.a + in.b, liaison_curve_data(in.linked, in.a, in.b)));
      ValidityReport r = validate(out, {seed, 64, false});
      CHECK(r.is_complex);
      CHECK(r.ok());
    }
  }
  CHECK(ferrand_transfer(liaison_input(1, F101, 42).resolution, 4, 4, liaison_input(1, F101, 42).f,
                         liaison_input(1, F101, 42).g)
            .shape() == "2O(2) + O(3) -> [O(3) + 3O(4)]");
  CHECK(liaison_input(2, F101, 42).expected_shape == "O(2) + 3O(3) -> [6O(4)] -> O(5)");
}

TEST_CASE("the linked ideal sheaf has the expected cohomology") {
  LiaisonInput in = liaison_input(2, F101, 42);
  FreeComplex out = ferrand_transfer(in.resolution, in.a, in.b, in.f, in.g);
  CurveData y = liaison_curve_data(in.linked, in.a, in.b);
  // I_Y(8): sections of O(8) minus those not vanishing on Y; chi(I_Y(t)) = chi(O(t)) - (deg t + chi).
  CohTable t = h_table(out, -8, 2);
  for (int s = -8; s <= 2; ++s) {
    long long expected = chi3(line_bundle(0), s + 8) - (y.deg * (s + 8) + y.chi);
    CHECK(t.chi(s) == expected);
  }
  CHECK(t.h(0, -8) == 0);
}

TEST_CASE("lifts are correct") {
  for (int which : {1, 2}) {
    LiaisonInput in = liaison_input(which, F101, 42);
    for (const Poly* form : {&in.f, &in.g}) {
      auto psi = lift_to_generators(in.resolution, *form);
      REQUIRE(psi.size() == in.resolution.generators().size());
      Poly sum(F101, 4);
      for (std::size_t i = 0; i < psi.size(); ++i) sum = sum + in.resolution.generators()[i] * psi[i];
      CHECK(sum == *form);
    }
  }
}

TEST_CASE("lifting a form outside the ideal fails") {
  LiaisonInput in = liaison_input(2, F101, 42);
  // (1:0:0:0) lies on the quartic.
  CHECK_THROWS_AS(lift_to_generators(in.resolution, P("x0^4")), LiftFailed);
  CHECK_THROWS_AS(ferrand_transfer(in.resolution, 4, 4, P("x0^4"), in.g), LiftFailed);
  CHECK_THROWS_AS(lift_to_generators(in.resolution, Poly(F101, 4)), LiftFailed);
  CHECK_THROWS_AS(ferrand_transfer(in.resolution, 3, 4, in.f, in.g), ComplexError);
}

TEST_CASE("curve resolutions are checked") {
  FreeComplex r = line_ideal();
  CHECK_NOTHROW(CurveResolution(twist_complex(r, -1), {P("x0"), P("x1")}));
  CHECK_THROWS_AS(CurveResolution(twist_complex(r, -1), {P("x0"), P("x2")}), ComplexError);
  CHECK_THROWS_AS(CurveResolution(twist_complex(r, -1), {P("x0")}), ComplexError);
}

TEST_CASE("transfer of a line through two quadrics") {
  // I_L = (x0, x1); linking by (x0^2, x1^2) gives a curve of degree 3.
  CurveResolution r(twist_complex(line_ideal(), -1), {P("x0"), P("x1")});
  FreeComplex out = ferrand_transfer(r, 2, 2, P("x0^2"), P("x1^2"));
  // The presented ideal sheaf is not locally free along the curve, which
  // contains the coordinate point (0:0:1:0).
  ValidityReport v = validate(out, {42, 64, false});
  CHECK(v.is_complex);
  for (const auto& p : v.positions) {
    if (p.status != Exactness::certified_no) continue;
    CHECK(p.witness->coords()[0].is_zero());
    CHECK(p.witness->coords()[1].is_zero());
  }
  CHECK(chern_of(out) == ideal_chern(4, liaison_curve_data({1, 1}, 2, 2)));
  CHECK(chern_of(out).c2 == 3);
}

TEST_CASE("attach_extension") {
  FreeComplex m = line_ideal();
  CHECK(attach_extension(m, FreeTerm(), GradedMap(F101, 4, FreeTerm({-1}), FreeTerm())) == m);

  FreeTerm a = FreeTerm::repeated(4, 0);
  GradedMap phi(FreeTerm({-1}), a, {P("x0"), P("x1"), P("x2"), P("x3")}, F101, 4);
  FreeComplex e = attach_extension(m, a, phi);
  CHECK(e.shape() == "O(-1) -> [6O]");
  CHECK(chern_of(e).rank == chern_of(m).rank + 4);
  CHECK(chern_of(e).c1 == chern_of(m).c1);
  CHECK(validate(e, {42, 64, false}).ok());

  // A three-term monad keeps its right map, padded with zeros.
  FreeComplex viii = build("thm-viii", F101, 42);
  GradedMap psi(viii.term(-1), FreeTerm({-1}), {P("1"), P("0")}, F101, 4);
  FreeComplex bigger = attach_extension(viii, FreeTerm({-1}), psi);
  CHECK(bigger.term(0).rank() == 9);
  CHECK(validate(bigger, {42, 16, false}).is_complex);
  FreeComplex back = trim(cancel_unit(bigger, -1, 8, 0));
  CHECK(chern_of(back) == chern_of(bigger));
  CHECK(h_table(back, -3, 1) == h_table(bigger, -3, 1));

  CHECK_THROWS_AS(attach_extension(m, a, GradedMap(FreeTerm({0}), a, {P("1"), P("0"), P("0"), P("0")}, F101, 4)),
                  ComplexError);
}

TEST_CASE("attaching a trivial summand and cancelling it") {
  FreeComplex m = line_ideal();
  GradedMap unit(FreeTerm({-1}), FreeTerm({-1}), {P("1")}, F101, 4);
  FreeComplex e = attach_extension(m, FreeTerm({-1}), unit);
  CHECK(e.shape() == "O(-1) -> [O(-1) + 2O]");
  FreeComplex back = trim(cancel_unit(e, -1, 2, 0));
  CHECK(back.shape() == "[2O]");
  CHECK(chern_of(back) == chern_of(e));
}
