#include <doctest.h>

#include <filesystem>

#include "sheaflab/catalog.hpp"
#include "sheaflab/cohom.hpp"

using namespace sheaflab;

namespace {

std::string data(const char* name) { return std::string(SHEAFLAB_TEST_DATA) + "/data/" + name; }

const FieldSpec F101 = FieldSpec::prime(101);

ScalarVector coords(const FieldSpec& f, std::vector<long long> v) {
  ScalarVector out;
  for (auto x : v) out.push_back(Scalar::from_int(f, x));
  return out;
}

GradedMap column_map(const FieldSpec& f, int nvars, const FreeTerm& src, const FreeTerm& dst,
                     std::vector<const char*> entries) {
  std::vector<Poly> polys;
  for (auto e : entries) polys.push_back(Poly::parse(e, f, nvars));
  return GradedMap(src, dst, polys, f, nvars);
}

}  // namespace

TEST_CASE("file format roundtrip is bit exact") {
  for (const char* name : {"omega3.cpx", "trivial.cpx", "euler.cpx", "degenerate.cpx"}) {
    FreeComplex c = read_complex_file(data(name));
    std::string text = format_complex(c);
    CHECK(parse_complex(text) == c);
    CHECK(format_complex(parse_complex(text)) == text);
  }
  for (const char* id : {"thm-viii", "thm-xvi", "thm-vi", "open-12-0"}) {
    FreeComplex c = build(id, F101, 42);
    CHECK(parse_complex(format_complex(c)) == c);
  }
  FreeComplex q = parse_complex("field Q\nnvars 4\npositions 0 1\ncohpos 0\nterm 0 twists 0 0\nterm 1 twists 1\nmap 0\n2*x0; -3*x3\n");
  CHECK(parse_complex(format_complex(q)) == q);
}

TEST_CASE("file writes and reads back") {
  auto path = std::filesystem::temp_directory_path() / "sheaflab_roundtrip.cpx";
  FreeComplex c = build("thm-xiv", F101, 3);
  write_complex_file(path.string(), c);
  CHECK(read_complex_file(path.string()) == c);
  std::filesystem::remove(path);
}

TEST_CASE("malformed input raises FormatError") {
  CHECK_THROWS_AS(read_complex_file(data("bad_degree.cpx")), FormatError);
  CHECK_THROWS_AS(read_complex_file(data("missing.cpx")), FormatError);
  CHECK_THROWS_AS(parse_complex("field 101\nnvars 4\n"), FormatError);
  CHECK_THROWS_AS(parse_complex("field 100\nnvars 4\npositions 0 0\ncohpos 0\nterm 0 twists 0\n"), FormatError);
  CHECK_THROWS_AS(parse_complex("field 101\nnvars 4\npositions 0 1\ncohpos 0\nterm 0 twists 0\nterm 1 twists 1\nmap 0\nx0; x1\n"),
                  FormatError);
  CHECK_THROWS_AS(parse_complex("field 101\nnvars 4\npositions 0 0\ncohpos 0\nterm 0 twists 0\nbogus 1\n"), FormatError);
}

TEST_CASE("span bound") {
  std::vector<FreeTerm> terms(5, FreeTerm::repeated(1, 0));
  std::vector<GradedMap> maps(4, zero_map(F101, 4, FreeTerm::repeated(1, 0), FreeTerm::repeated(1, 0)));
  CHECK_THROWS_AS(FreeComplex(F101, 4, 0, terms, maps, 2), SpanTooLarge);
  terms.pop_back();
  maps.pop_back();
  CHECK_NOTHROW(FreeComplex(F101, 4, 0, terms, maps, 2));
  CHECK_THROWS_AS(FreeComplex(F101, 3, 0, terms, maps, 2), SpanTooLarge);
}

TEST_CASE("validate: Euler complex is exact at every point of P^3(F_5)") {
  FreeComplex c = read_complex_file(data("euler.cpx"));
  ValidityReport r = validate(c, {42, 64, true});
  CHECK(r.is_complex);
  CHECK(r.exhaustive);
  CHECK(r.points == 156);
  CHECK(all_points(c.field(), 4).size() == 156);
  REQUIRE(r.ok());
  for (const auto& p : r.positions) CHECK(p.status == Exactness::certified_yes);
}

TEST_CASE("validate: common zero gives a certified witness") {
  FreeComplex c = read_complex_file(data("degenerate.cpx"));
  ValidityReport r = validate(c, {42, 64, false});
  CHECK(r.is_complex);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (const auto& p : r.positions) {
    if (p.status == Exactness::certified_no) {
      REQUIRE(p.witness.has_value());
      CHECK(*p.witness == ProjPoint(coords(F101, {0, 0, 0, 1})));
      CHECK(p.defect == 1);
      found = true;
    }
  }
  CHECK(found);
  // Sampling may miss one point; exhaustive mode over F_5 cannot.
  FreeComplex small = parse_complex(
      "field 5\nnvars 4\npositions -1 0\ncohpos 0\nterm -1 twists -1\nterm 0 twists 0 0 0 0\nmap -1\nx0\nx1\nx2\n0\n");
  CHECK_FALSE(validate(small, {1, 4, true}).ok());
}

TEST_CASE("validate: nonzero composition is not a complex") {
  FreeComplex c(F101, 4, -1, {FreeTerm({-1}), FreeTerm({0, 0}), FreeTerm({1})},
                {column_map(F101, 4, FreeTerm({-1}), FreeTerm({0, 0}), {"x0", "x1"}),
                 column_map(F101, 4, FreeTerm({0, 0}), FreeTerm({1}), {"x0", "x0"})},
                0);
  ValidityReport r = validate(c, {42, 16, false});
  CHECK_FALSE(r.is_complex);
  CHECK_FALSE(r.ok());
}

TEST_CASE("validate: catalog monad over F_101 with seed 7") {
  ValidityReport r = validate(build("thm-viii", F101, 7), {7, 64, false});
  CHECK(r.ok());
  CHECK(r.points == 64);
  for (const auto& p : r.positions) CHECK(p.status != Exactness::certified_no);
}

TEST_CASE("sample points are distinct and deterministic") {
  auto a = sample_points(F101, 4, {9, 64, false});
  auto b = sample_points(F101, 4, {9, 64, false});
  CHECK(a == b);
  CHECK(a.size() == 64);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK_FALSE(a[i] == a[j]);
  }
  CHECK(sample_points(F101, 4, {10, 64, false}) != a);
  CHECK_THROWS_AS(sample_points(F101, 4, {9, 64, true}), ComplexError);
}

TEST_CASE("dualize") {
  FreeComplex m = build("thm-viii", F101, 42);
  FreeComplex d = dualize(m);
  CHECK(d.terms().front().same_shape(FreeTerm::repeated(3, -1)));
  CHECK(d.terms()[1].same_shape(FreeTerm::repeated(8, 0)));
  CHECK(d.terms().back().same_shape(FreeTerm::repeated(2, 1)));
  CHECK(dualize(d) == m);

  FreeComplex euler = euler_tangent(F101);
  FreeComplex omega = dualize(euler);
  CHECK(chern_of(omega) == ChernData3{3, -1, 1, -1});
  CHECK(omega.map(omega.pmin()).rows() == 1);
  CHECK(omega.map(omega.pmin()).entry(0, 2) == Poly::parse("x2", F101, 4));
}

TEST_CASE("twisting") {
  FreeComplex m = build("thm-xvi", F101, 42);
  CHECK(twist_complex(m, 0) == m);
  FreeComplex t = twist_complex(m, 2);
  CHECK(t.terms()[0] == FreeTerm::repeated(3, 1));
  CHECK(t.terms()[1] == FreeTerm::repeated(10, 2));
  CHECK(t.terms()[2] == FreeTerm::repeated(4, 3));
  for (int s : {-3, 1, 4}) CHECK(dualize(twist_complex(m, s)) == twist_complex(dualize(m), -s));
}

TEST_CASE("plane restriction") {
  FreeComplex euler = euler_tangent(F101);
  FreeComplex r = restrict_plane(euler, coords(F101, {0, 0, 0, 1}));
  CHECK(r.nvars() == 3);
  const GradedMap& koszul = r.map(-1);
  CHECK(koszul.entry(0, 0) == Poly::parse("x0", F101, 3));
  CHECK(koszul.entry(2, 0) == Poly::parse("x2", F101, 3));
  CHECK(koszul.entry(3, 0).is_zero());
  // x0, x1, x2 have no common zero on the plane.
  CHECK(validate(r, {42, 64, false}).ok());

  FreeComplex line = FreeComplex::single(F101, 4, FreeTerm({3}));
  FreeComplex rl = restrict_plane(line, coords(F101, {1, 2, 3, 4}));
  CHECK(rl.nvars() == 3);
  CHECK(rl.terms().front() == FreeTerm({3}));

  Rng rng(5);
  ScalarVector plane;
  for (int i = 0; i < 4; ++i) plane.push_back(rng.nonzero_scalar(F101));
  FreeComplex m = build("thm-viii", F101, 42);
  FreeComplex mh = restrict_plane(m, plane);
  CHECK(validate(mh, {42, 64, false}).ok());
  ChernData3 c = chern_of(m);
  CHECK(chern_of_p2(mh) == ChernData2{c.rank, c.c1, c.c2});
  CHECK_THROWS_AS(restrict_plane(mh, coords(F101, {1, 0, 0})), ComplexError);
}

TEST_CASE("chern_of examples") {
  CHECK(chern_of(build("thm-viii", F101, 42)) == ChernData3{3, -1, 3, -3});
  CHECK(chern_of(FreeComplex::single(F101, 4, FreeTerm::repeated(5, 1))) == ChernData3{5, 5, 10, 10});
  CHECK(chern_of(read_complex_file(data("omega3.cpx"))) == ChernData3{3, 5, 9, 5});
  CHECK(chern_of(read_complex_file(data("trivial.cpx"))) == ChernData3{1, 0, 0, 0});
}

TEST_CASE("chern_of commutes with dual, twist and the monad formula") {
  for (const auto& e : catalog()) {
    if (!e.presented_twist) continue;
    FreeComplex c = build(e.id, F101, 42);
    ChernData3 ch = chern_of(c);
    CHECK(chern_of(dualize(c)) == dual3(ch));
    for (int t : {-2, 3}) CHECK(chern_of(twist_complex(c, t)) == twist3(ch, t));
    for (int t = -3; t <= 3; ++t) {
      if (parity_check(ch)) CHECK(euler_characteristic(c, t) == chi3(ch, t));
    }
  }
}

TEST_CASE("cancel_unit removes a split summand") {
  // Euler complex plus O -> O by 1.
  FreeTerm src({-1, 0});
  FreeTerm dst({0, 0, 0, 0, 0});
  FreeComplex c(F101, 4, -1, {src, dst},
                {column_map(F101, 4, src, dst, {"x0", "0", "x1", "0", "x2", "0", "x3", "0", "0", "1"})}, 0);
  FreeComplex reduced = trim(cancel_unit(c, -1, 4, 1));
  CHECK(reduced.terms()[0] == FreeTerm({-1}));
  CHECK(reduced.terms()[1] == FreeTerm({0, 0, 0, 0}));
  CHECK(chern_of(reduced) == chern_of(c));
  CHECK(h_table(reduced, -4, 2) == h_table(c, -4, 2));
  CHECK_THROWS_AS(cancel_unit(c, -1, 0, 0), ComplexError);
}

TEST_CASE("trim keeps the cohomology position") {
  FreeComplex c(F101, 4, -1, {FreeTerm(), FreeTerm({2}), FreeTerm()},
                {zero_map(F101, 4, FreeTerm(), FreeTerm({2})), zero_map(F101, 4, FreeTerm({2}), FreeTerm())}, 0);
  FreeComplex t = trim(c);
  CHECK(t.pmin() == 0);
  CHECK(t.pmax() == 0);
  CHECK(t.coh_pos() == 0);
  CHECK(t.shape() == "[O(2)]");
}
