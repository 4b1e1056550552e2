#include "sheaflab/catalog.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace sheaflab {

namespace {

constexpr int kVars = 4;
constexpr int kRetries = 8;

using Recipe = std::function<FreeComplex(const FieldSpec&, Rng&)>;

Poly x(const FieldSpec& f, int i) { return Poly::variable(f, kVars, i); }
Poly zero(const FieldSpec& f) { return Poly(f, kVars); }

GradedMap random_map(const FieldSpec& f, const FreeTerm& source, const FreeTerm& target, Rng& rng) {
  std::vector<Poly> entries;
  for (std::size_t i = 0; i < target.rank(); ++i) {
    for (std::size_t j = 0; j < source.rank(); ++j) {
      int d = target[i] - source[j];
      entries.push_back(d >= 0 ? random_form(f, kVars, d, rng) : zero(f));
    }
  }
  return GradedMap(source, target, std::move(entries), f, kVars);
}

// Random alpha: beta.target -> target with alpha * beta = 0; each row is a random
// element of the left kernel of beta in the matching degree.
GradedMap random_annihilator(const GradedMap& beta, const FreeTerm& target, Rng& rng) {
  const FieldSpec& f = beta.field();
  const FreeTerm& mid = beta.target();
  std::vector<Poly> entries;
  for (std::size_t i = 0; i < target.rank(); ++i) {
    int c = target[i];
    auto kernel = kernel_basis(beta.transpose().graded_piece(c));
    if (kernel.empty()) throw GenericityFailure("no forms annihilate the left map in degree " + std::to_string(c));
    ScalarVector row(kernel.front().size(), Scalar::zero(f));
    for (const auto& v : kernel) {
      Scalar w = rng.scalar(f);
      for (std::size_t k = 0; k < row.size(); ++k) row[k] += w * v[k];
    }
    std::size_t off = 0;
    for (std::size_t j = 0; j < mid.rank(); ++j) {
      int d = c - mid[j];
      if (d < 0) {
        entries.push_back(zero(f));
        continue;
      }
      entries.push_back(form_from_vector(f, kVars, d, row, off));
      off += static_cast<std::size_t>(piece_dim(proj_dim(kVars), d));
    }
  }
  return GradedMap(mid, target, std::move(entries), f, kVars);
}

FreeComplex monad(const FieldSpec& f, const FreeTerm& a, const FreeTerm& b, const FreeTerm& c, Rng& rng) {
  GradedMap beta = random_map(f, a, b, rng);
  GradedMap alpha = random_annihilator(beta, c, rng);
  return FreeComplex(f, kVars, -1, {a, b, c}, {beta, alpha}, 0);
}

FreeComplex kernel_of(const FreeTerm& b, const FreeTerm& c, std::vector<Poly> entries, const FieldSpec& f) {
  GradedMap alpha(b, c, std::move(entries), f, kVars);
  return FreeComplex(f, kVars, 0, {b, c}, {alpha}, 0);
}

FreeComplex random_kernel(const FieldSpec& f, const FreeTerm& b, const FreeTerm& c, Rng& rng) {
  return FreeComplex(f, kVars, 0, {b, c}, {random_map(f, b, c, rng)}, 0);
}

FreeTerm terms(std::initializer_list<std::pair<int, int>> blocks) {
  FreeTerm t;
  for (auto [m, b] : blocks) t = t + FreeTerm::repeated(m, b);
  return t;
}

FreeComplex item_vi(const FieldSpec& f, Rng&) {
  auto x0 = x(f, 0), x1 = x(f, 1), x2 = x(f, 2), x3 = x(f, 3), o = zero(f);
  FreeTerm a = terms({{1, -1}});
  FreeTerm b = terms({{5, 0}, {2, -1}});
  FreeTerm c = terms({{2, 1}});
  GradedMap beta(a, b, {-x2, -x3, x0, o, x1, o, o}, f, kVars);
  GradedMap alpha(b, c, {x0, o, x2, x3, o, x1 * x1, o, o, x1, o, x2, x3, o, x0 * x0}, f, kVars);
  return FreeComplex(f, kVars, -1, {a, b, c}, {beta, alpha}, 0);
}

FreeComplex item_ix(const FieldSpec& f, Rng& rng) {
  FreeTerm a = terms({{1, -1}});
  FreeTerm b = terms({{5, 0}});
  GradedMap beta(a, b, {x(f, 0), x(f, 1), x(f, 2), x(f, 3), zero(f)}, f, kVars);
  GradedMap alpha = random_annihilator(beta, terms({{1, 2}}), rng);
  return FreeComplex(f, kVars, -1, {a, b, terms({{1, 2}})}, {beta, alpha}, 0);
}

// 3O(-2) -> 4O + 4O(-1) -> 3O(1) with right map (-b2^T | b1^T) and b1^T b2 symmetric.
FreeComplex open_12_0(const FieldSpec& f, Rng& rng) {
  const FreeTerm a = terms({{3, -2}});
  const FreeTerm quad = terms({{4, 0}});
  const FreeTerm lin = terms({{4, -1}});
  GradedMap b2 = random_map(f, a, lin, rng);
  const auto n2 = static_cast<std::size_t>(piece_dim(3, 2));
  const auto n3 = static_cast<std::size_t>(piece_dim(3, 3));
  // Unknown block (k, i) holds the quadric entry b1[k][i]; one row block per pair p < q.
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}};
  MatrixBuilder sys(f, pairs.size() * n3, 12 * n2);
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    auto [p, q] = pairs[pi];
    for (int k = 0; k < 4; ++k) {
      auto block = [&](int i) { return static_cast<std::size_t>(k * 3 + i) * n2; };
      sys.place(pi * n3, block(p), mult_matrix(b2.entry(static_cast<std::size_t>(k), static_cast<std::size_t>(q)), 1, 2));
      ScalarMatrix neg = mult_matrix(-b2.entry(static_cast<std::size_t>(k), static_cast<std::size_t>(p)), 1, 2);
      sys.place(pi * n3, block(q), neg);
    }
  }
  auto kernel = kernel_basis(std::move(sys).build());
  ScalarVector sol(12 * n2, Scalar::zero(f));
  for (const auto& v : kernel) {
    Scalar w = rng.scalar(f);
    for (std::size_t k = 0; k < sol.size(); ++k) sol[k] += w * v[k];
  }
  std::vector<Poly> b1;
  for (std::size_t k = 0; k < 12; ++k) b1.push_back(form_from_vector(f, kVars, 2, sol, k * n2));
  GradedMap beta = stack_rows(GradedMap(a, quad, b1, f, kVars), b2);
  FreeTerm mid = quad + lin;
  std::vector<Poly> alpha;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 4; ++k) alpha.push_back(-b2.entry(k, i));
    for (std::size_t k = 0; k < 4; ++k) alpha.push_back(b1[k * 3 + i]);
  }
  GradedMap right(mid, terms({{3, 1}}), std::move(alpha), f, kVars);
  return FreeComplex(f, kVars, -1, {a, mid, terms({{3, 1}})}, {beta, right}, 0);
}

ChernData3 instanton(long long k) { return {2, 0, k, 0}; }

struct Recipes {
  std::map<std::string, Recipe, std::less<>> complexes;
  std::map<std::string, std::function<ChernData3()>, std::less<>> chern_models;
};

const Recipes& recipes() {
  static const Recipes r = [] {
    Recipes out;
    auto& c = out.complexes;
    c["thm-ii"] = [](const FieldSpec& f, Rng&) {
      return kernel_of(terms({{4, 2}}), terms({{1, 3}}), {x(f, 0), x(f, 1), x(f, 2), x(f, 3)}, f);
    };
    c["thm-i-c2-10"] = [](const FieldSpec& f, Rng&) { return FreeComplex::single(f, kVars, terms({{5, 1}})); };
    c["prop-c2-10-ii"] = [](const FieldSpec& f, Rng&) {
      FreeTerm b = terms({{1, 1}, {3, 2}, {1, 1}});
      return kernel_of(b, terms({{1, 3}}), {zero(f), x(f, 0), x(f, 1), x(f, 2), x(f, 3) * x(f, 3)}, f);
    };
    c["prop-c2-11-case1"] = [](const FieldSpec& f, Rng&) {
      FreeTerm b = terms({{1, 1}, {2, 2}, {3, 1}});
      auto x2 = x(f, 2), x3 = x(f, 3);
      return kernel_of(b, terms({{1, 3}}), {zero(f), x(f, 0), x(f, 1), x2 * x2, x2 * x3, x3 * x3}, f);
    };
    c["thm-iv"] = [](const FieldSpec& f, Rng& rng) {
      return random_kernel(f, terms({{1, 1}, {3, 0}}), terms({{1, 2}}), rng);
    };
    c["thm-vi"] = item_vi;
    c["thm-viii"] = [](const FieldSpec& f, Rng& rng) {
      return monad(f, terms({{2, -1}}), terms({{8, 0}}), terms({{3, 1}}), rng);
    };
    c["thm-ix"] = item_ix;
    c["thm-xi"] = [](const FieldSpec& f, Rng& rng) {
      return random_kernel(f, terms({{2, 0}, {6, -1}}), terms({{1, 1}, {1, 0}}), rng);
    };
    c["thm-xiii"] = [](const FieldSpec& f, Rng& rng) {
      return monad(f, terms({{1, -1}}), terms({{4, 0}, {4, -1}}), terms({{2, 1}}), rng);
    };
    c["thm-xiv"] = [](const FieldSpec& f, Rng& rng) {
      return monad(f, terms({{2, -1}}), terms({{7, 0}, {2, -1}}), terms({{3, 1}}), rng);
    };
    c["thm-xvi"] = [](const FieldSpec& f, Rng& rng) {
      return monad(f, terms({{3, -1}}), terms({{10, 0}}), terms({{4, 1}}), rng);
    };
    c["thm-xvii"] = [](const FieldSpec& f, Rng& rng) {
      return monad(f, terms({{2, -1}}), terms({{7, 0}}), terms({{1, 2}, {1, 1}}), rng);
    };
    c["open-12-0"] = open_12_0;

    auto& m = out.chern_models;
    m["thm-i"] = [] { return twist3({2, -1, 2, 0}, 3); };
    m["thm-iii"] = [] { return direct_sum(line_bundle(1), twist3(instanton(2), 2)); };
    m["thm-v"] = [] { return twist3({2, -1, 4, 0}, 3); };
    m["thm-vii"] = [] { return direct_sum(twist3(instanton(3), 2), line_bundle(1)); };
    m["thm-x"] = [] {
      // E1^dual(1) is an extension of I_X by O(-1) + O, X two disjoint lines.
      ChernData3 e1 = dual3(twist3(direct_sum(split_bundle({-1, 0}), ideal_chern(0, {2, 2})), -1));
      return whitney_solve(line_bundle(-1), direct_sum(e1, split_bundle({0, 0, 0, 0})), {}, WhitneySlot::C);
    };
    m["thm-xii"] = [] {
      ChernData3 mid = direct_sum(twist3(instanton(3), 2), split_bundle({0, 0, 0, 0}));
      return whitney_solve(line_bundle(-1), mid, {}, WhitneySlot::C);
    };
    m["thm-xv"] = [] { return direct_sum(twist3(instanton(4), 2), line_bundle(1)); };
    return out;
  }();
  return r;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> v;
  auto add = [&v](std::string id, std::string item, std::string anchor, ChernData3 chern) -> CatalogEntry& {
    CatalogEntry e;
    e.id = std::move(id);
    e.item = std::move(item);
    e.anchor = std::move(anchor);
    e.chern = chern;
    v.push_back(std::move(e));
    return v.back();
  };
  const std::string out_of_scope = "construction out of scope";
  auto chern_only = [&](CatalogEntry& e) { e.skip_reason = out_of_scope; };

  chern_only(add("thm-i", "(i)", "E = G(3), G rank 2 with c1 = -1, c2 = 2", {2, 5, 8, 0}));
  {
    auto& e = add("thm-ii", "(ii)", "E is Omega(3); h0(Omega(2)) = 6", {3, 5, 9, 5});
    e.presented_twist = 0;
    e.h_claims = {{0, -1, 6}};
    e.spectrum = Spectrum({0});
    e.gg_claim = true;
    e.gg_exhaustive = true;
  }
  chern_only(add("thm-iii", "(iii)", "extension of G(2) by O(1), G a 2-instanton", {3, 5, 10, 6}));
  {
    auto& e = add("thm-iv", "(iv)", "E(-2) is the kernel of an epimorphism O(1) + 3O -> O(2)", {3, 5, 10, 4});
    e.presented_twist = -2;
    e.spectrum = Spectrum({1, 0});
    e.gg_claim = true;
  }
  chern_only(add("thm-v", "(v)", "E = G(3), G general rank 2 with c1 = -1, c2 = 4", {2, 5, 10, 0}));
  {
    auto& e = add("thm-i-c2-10", "c2 = 10 (i)", "E = 5O(1)", {5, 5, 10, 10});
    e.presented_twist = 0;
    e.spectrum = Spectrum({-1, -1});
    e.gg_claim = true;
    e.gg_exhaustive = true;
  }
  {
    auto& e = add("prop-c2-10-ii", "c2 = 10 (ii)", "E = O(1) + ker((x0,x1,x2,x3^2): 3O(2) + O(1) -> O(3))",
                  {4, 5, 10, 8});
    e.presented_twist = 0;
    e.spectrum = Spectrum({0, -1});
    e.gg_claim = true;
  }
  {
    auto& e = add("thm-vi", "(vi)", "E(-2) is the cohomology of O(-1) -> 5O + 2O(-1) -> 2O(1)", {4, 5, 11, 9});
    e.presented_twist = -2;
    e.spectrum = Spectrum({0, 0, -1});
    e.gg_claim = true;
  }
  chern_only(add("thm-vii", "(vii)", "extension of O(1) by G(2), G a 3-instanton", {3, 5, 11, 7}));
  {
    auto& e = add("thm-viii", "(viii)", "E(-2) is the cohomology of a general monad 2O(-1) -> 8O -> 3O(1)",
                  {3, 5, 11, 7});
    e.presented_twist = -2;
    e.h_claims = {{1, -3, 3}, {1, -2, 4}};
    e.spectrum = Spectrum({0, 0, 0});
    e.gg_claim = true;
    e.general = true;
  }
  {
    auto& e = add("thm-ix", "(ix)", "E(-2) is the kernel of an epimorphism T(-1) + O -> O(2)", {3, 5, 11, 5});
    e.presented_twist = -2;
    e.spectrum = Spectrum({1, 0, 0});
    e.gg_claim = true;
  }
  {
    auto& e = add("prop-c2-11-case1", "c2 = 11, h1(E(-3)) != 0 (i)",
                  "E = O(1) + ker((x0,x1,x2^2,x2x3,x3^2): 2O(2) + 3O(1) -> O(3))", {5, 5, 11, 11});
    e.presented_twist = 0;
    e.spectrum = Spectrum({0, -1, -1});
    e.gg_claim = true;
  }
  chern_only(add("thm-x", "(x)", "O(-1) -> E1 + 4O -> E with E1 built from two disjoint lines", {6, 5, 12, 14}));
  {
    auto& e = add("thm-xi", "(xi)", "E(-2) is the kernel of a general epimorphism 2O + 6O(-1) -> O(1) + O",
                  {6, 5, 12, 14});
    e.presented_twist = -2;
    e.spectrum = Spectrum({0, -1, -1, -1});
    e.gg_claim = true;
    e.general = true;
  }
  chern_only(add("thm-xii", "(xii)", "O(-1) -> G(2) + 4O -> E, G a 3-instanton", {5, 5, 12, 12}));
  {
    auto& e = add("thm-xiii", "(xiii)", "E(-2) is the cohomology of O(-1) -> 4O + 4O(-1) -> 2O(1)", {5, 5, 12, 12});
    e.presented_twist = -2;
    e.spectrum = Spectrum({0, 0, -1, -1});
    e.gg_claim = true;
  }
  {
    auto& e = add("thm-xiv", "(xiv)", "E(-2) is the cohomology of a general monad 2O(-1) -> 7O + 2O(-1) -> 3O(1)",
                  {4, 5, 12, 10});
    e.presented_twist = -2;
    e.spectrum = Spectrum({0, 0, 0, -1});
    e.gg_claim = true;
    e.general = true;
  }
  chern_only(add("thm-xv", "(xv)", "extension of O(1) by G(2), G a 4-instanton", {3, 5, 12, 8}));
  {
    auto& e = add("thm-xvi", "(xvi)", "E(-2) is the cohomology of a general monad 3O(-1) -> 10O -> 4O(1)",
                  {3, 5, 12, 8});
    e.presented_twist = -2;
    e.h_claims = {{1, -3, 4}, {1, -2, 6}};
    e.spectrum = Spectrum({0, 0, 0, 0});
    e.gg_claim = true;
    e.general = true;
  }
  {
    auto& e = add("thm-xvii", "(xvii)", "E(-2) is the cohomology of a general monad 2O(-1) -> 7O -> O(2) + O(1)",
                  {3, 5, 12, 6});
    e.presented_twist = -2;
    e.spectrum = Spectrum({1, 0, 0, 0});
    e.gg_claim = true;
    e.general = true;
  }
  {
    auto& e = add("open-12-0", "open case", "G = E(-3) with anti-selfdual monad 3O(-2) -> 4O + 4O(-1) -> 3O(1); chi(G(3)) = 3",
                  {2, 5, 12, 0});
    e.presented_twist = -3;
    e.exploratory = true;
  }
  return v;
}

std::string status_word(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "PASS";
    case ClaimStatus::fail:
      return "FAIL";
    case ClaimStatus::skip:
      return "SKIP";
  }
  return {};
}

std::string h_name(int i, int t) { return "h" + std::to_string(i) + "(E(" + std::to_string(t) + "))"; }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw UnknownItem("unknown catalog item '" + std::string(id) + "'");
}

FreeComplex build(std::string_view id, const FieldSpec& f, std::uint64_t seed) {
  const CatalogEntry& e = catalog_entry(id);
  auto it = recipes().complexes.find(id);
  if (it == recipes().complexes.end()) throw UnknownItem(e.id + " has no free presentation: " + e.skip_reason);
  std::string last;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Rng rng(seed, 1000 + static_cast<std::uint64_t>(attempt));
    try {
      FreeComplex c = it->second(f, rng);
      ValidityReport r = validate(c, SamplingConfig{seed, 64, false});
      if (r.ok()) return c;
      last = r.to_string();
    } catch (const GenericityFailure& err) {
      last = err.what();
    }
  }
  throw GenericityFailure(e.id + ": no valid instance after " + std::to_string(kRetries) + " attempts; last: " + last);
}

bool VerifyReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status == ClaimStatus::fail; });
}

const ClaimResult* VerifyReport::find(std::string_view name) const {
  for (const auto& c : claims) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerifyReport::to_text() const {
  const CatalogEntry& e = catalog_entry(id);
  std::ostringstream out;
  out << "# item " << id << " " << e.item << ": " << e.anchor << "\n";
  out << "# field " << field.to_string() << " seed " << seed << "\n";
  if (e.general) out << "# general instance means: validate passes and every claim below passes\n";
  if (e.exploratory) out << "# exploratory entry\n";
  for (const auto& c : claims) out << "CLAIM " << id << " " << c.name << " " << status_word(c.status) << " " << c.details << "\n";
  return out.str();
}

VerifyReport verify(std::string_view id, const FieldSpec& f, std::uint64_t seed, std::size_t samples) {
  const auto start = std::chrono::steady_clock::now();
  const CatalogEntry& e = catalog_entry(id);
  VerifyReport rep;
  rep.id = e.id;
  rep.field = f;
  rep.seed = seed;
  auto claim = [&rep](std::string name, bool ok, std::string details) {
    rep.claims.push_back({std::move(name), ok ? ClaimStatus::pass : ClaimStatus::fail, std::move(details)});
  };
  auto skip = [&rep](std::string name, std::string reason) {
    rep.claims.push_back({std::move(name), ClaimStatus::skip, std::move(reason)});
  };
  auto finish = [&] {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  claim("parity", parity_check(e.chern), "c3 = " + std::to_string(e.chern.c3) + ", c1*c2 = " +
                                             std::to_string(e.chern.c1 * e.chern.c2));

  if (!e.presented_twist) {
    auto model = recipes().chern_models.find(id);
    if (model != recipes().chern_models.end()) {
      ChernData3 got = model->second();
      claim("chern", got == e.chern, "calculus gives " + got.to_string() + ", expected " + e.chern.to_string());
    }
    skip("construction", e.skip_reason);
    skip("gg", e.skip_reason);
    return finish();
  }

  const int s = *e.presented_twist;
  std::optional<FreeComplex> built;
  try {
    built = build(id, f, seed);
  } catch (const GenericityFailure& err) {
    claim("construction", false, err.what());
    return finish();
  }
  const FreeComplex& c = *built;
  claim("construction", true, c.shape());

  ChernData3 got = chern_of(c);
  ChernData3 want = twist3(e.chern, s);
  claim("chern", got == want, "presented sheaf " + got.to_string() + ", expected " + want.to_string());

  try {
    CohTable tab = h_table(c, -6, 4);
    std::string bad;
    for (int t = -6; t <= 4; ++t) {
      if (tab.chi(t) != chi3(got, t) && bad.empty()) bad = "mismatch at t = " + std::to_string(t);
    }
    claim("riemann-roch", bad.empty(), bad.empty() ? "chi matches on [-6,4]" : bad);
    for (const auto& h : e.h_claims) {
      int t = h.t - s;
      long long v = tab.contains(t) ? tab.h(h.i, t) : h_table(c, t, t).h(h.i, t);
      claim(h_name(h.i, h.t), v == h.value, "got " + std::to_string(v) + ", expected " + std::to_string(h.value));
    }
  } catch (const CohomologyError& err) {
    claim("riemann-roch", false, err.what());
  }

  if (e.spectrum) {
    const Spectrum& want_spec = *e.spectrum;
    ChernData3 normalized = twist3({3, e.chern.c1, e.chern.c2, e.chern.c3}, -2);
    FreeComplex fnorm = twist_complex(c, -2 - s);
    try {
      if (e.chern.rank == 3) {
        SpectrumReport sr = spectrum_of(fnorm);
        claim("spectrum", sr.spectrum == want_spec,
              sr.label() + ", expected " + want_spec.to_string());
      } else {
        SpectrumTables fw = forward(want_spec);
        int lo = fw.h1_low.begin()->first;
        int hi = fw.h2_high.rbegin()->first;
        CohTable tab = h_table(fnorm, lo, hi);
        std::string bad;
        for (const auto& [l, v] : fw.h1_low) {
          if (tab.h(1, l) != v && bad.empty()) bad = "h1(F(" + std::to_string(l) + ")) = " + std::to_string(tab.h(1, l));
        }
        for (const auto& [l, v] : fw.h2_high) {
          if (l >= -1 && tab.h(2, l) != v && bad.empty()) {
            bad = "h2(F(" + std::to_string(l) + ")) = " + std::to_string(tab.h(2, l));
          }
        }
        claim("spectrum", bad.empty(),
              (bad.empty() ? "tables of E'(-2) match " : bad + " disagrees with ") + want_spec.to_string());
      }
    } catch (const std::exception& err) {
      claim("spectrum", false, err.what());
    }
    auto violations = validate_spectrum(want_spec, normalized.c3);
    claim("spectrum-iii", violations.empty(),
          violations.empty() ? "-2*sum(k) = c3(F) + c = " + std::to_string(normalized.c3 + want_spec.c())
                             : violations.front().message);
  }

  if (e.gg_claim) {
    if (e.gg_exhaustive) {
      FieldSpec f5 = FieldSpec::prime(5);
      GgVerdict v = is_globally_generated(build(id, f5, seed), -s, SamplingConfig{seed, samples, true});
      claim("gg", v.positive(), v.to_string());
    } else {
      GgVerdict v = is_globally_generated(c, -s, SamplingConfig{seed, samples, false});
      claim("gg", v.positive(), v.to_string());
    }
  }

  if (e.exploratory) {
    long long chi = euler_characteristic(c, 3);
    claim("chi(G(3))", chi == 3 && chi3(got, 3) == 3, "alternating sum " + std::to_string(chi) + ", Riemann-Roch " +
                                                          std::to_string(chi3(got, 3)));
    try {
      GgVerdict v = is_globally_generated(c, -s, SamplingConfig{seed, samples, false});
      skip("gg", "informational: " + v.to_string());
    } catch (const std::exception& err) {
      skip("gg", std::string("informational: ") + err.what());
    }
  }
  return finish();
}

FreeComplex euler_tangent(const FieldSpec& f) {
  GradedMap koszul(terms({{1, -1}}), terms({{4, 0}}), {x(f, 0), x(f, 1), x(f, 2), x(f, 3)}, f, kVars);
  return FreeComplex(f, kVars, -1, {terms({{1, -1}}), terms({{4, 0}})}, {koszul}, 0);
}

FreeComplex planted_witness(const FieldSpec& f) {
  auto x3 = x(f, 3);
  return kernel_of(terms({{3, 1}, {1, 0}}), terms({{1, 2}}), {x(f, 0), x(f, 1), x(f, 2), x3 * x3}, f);
}

ProjPoint planted_point(const FieldSpec& f) {
  return ProjPoint({Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::one(f)});
}

LiaisonInput liaison_input(int which, const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed, 77);
  auto combine = [&](const std::vector<Poly>& gens, int deg) {
    Poly out = zero(f);
    for (const auto& g : gens) out = out + random_form(f, kVars, deg - g.degree(), rng) * g;
    return out;
  };
  if (which == 1) {
    auto l1 = random_form(f, kVars, 1, rng), l2 = random_form(f, kVars, 1, rng), l3 = random_form(f, kVars, 1, rng);
    auto q1 = random_form(f, kVars, 2, rng), q2 = random_form(f, kVars, 2, rng);
    FreeTerm a1 = terms({{1, -3}, {1, -4}});
    FreeTerm a0 = terms({{2, -2}, {1, -3}});
    GradedMap hb(a1, a0, {l1, q1, l2, q2, zero(f), l3}, f, kVars);
    std::vector<Poly> gens{l2 * l3, -(l1 * l3), l1 * q2 - l2 * q1};
    CurveResolution r(FreeComplex(f, kVars, -1, {a1, a0}, {hb}, 0), gens);
    Poly ff = combine(gens, 4);
    Poly gg = combine(gens, 4);
    return {std::move(r), 4, 4, ff, gg, {4, 0}, "2O(2) + O(3) -> [O(3) + 3O(4)]"};
  }
  if (which == 2) {
    auto x0 = x(f, 0), x1 = x(f, 1), x2 = x(f, 2), x3 = x(f, 3);
    std::vector<Poly> gens{x0 * x3 - x1 * x2, x1 * x1 * x1 - x0 * x0 * x2, x2 * x2 * x2 - x1 * x3 * x3,
                           x0 * x2 * x2 - x1 * x1 * x3};
    FreeTerm a0 = terms({{1, -2}, {3, -3}});
    FreeTerm a1 = terms({{4, -4}});
    FreeTerm a2 = terms({{1, -5}});
    GradedMap row(a0, terms({{1, 0}}), gens, f, kVars);
    // Syzygies live in degree 4: the columns of delta1 are a basis of ker(S_2 + 3S_1 -> S_4).
    auto syz = kernel_basis(row.graded_piece(4));
    if (syz.size() != 4) throw GenericityFailure("rational quartic: expected 4 linear syzygies");
    std::vector<Poly> d1(16, zero(f));
    for (std::size_t j = 0; j < 4; ++j) {
      std::size_t off = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        int d = 4 + a0[i];
        d1[i * 4 + j] = form_from_vector(f, kVars, d, syz[j], off);
        off += static_cast<std::size_t>(piece_dim(3, d));
      }
    }
    GradedMap delta1(a1, a0, d1, f, kVars);
    auto syz2 = kernel_basis(delta1.graded_piece(5));
    if (syz2.size() != 1) throw GenericityFailure("rational quartic: expected one second syzygy");
    std::vector<Poly> d2;
    for (std::size_t i = 0; i < 4; ++i) d2.push_back(form_from_vector(f, kVars, 1, syz2[0], i * 4));
    GradedMap delta2(a2, a1, d2, f, kVars);
    CurveResolution r(FreeComplex(f, kVars, -2, {a2, a1, a0}, {delta2, delta1}, 0), gens);
    Poly ff = combine(gens, 4);
    Poly gg = combine(gens, 4);
    return {std::move(r), 4, 4, ff, gg, {4, 1}, "O(2) + 3O(3) -> [6O(4)] -> O(5)"};
  }
  throw std::invalid_argument("liaison input must be 1 or 2");
}

}  // namespace sheaflab
