#include "sheaflab/liaison.hpp"

#include <algorithm>

namespace sheaflab {

CurveResolution::CurveResolution(FreeComplex resolution, std::vector<Poly> generators)
    : resolution_(std::move(resolution)), generators_(std::move(generators)) {
  if (resolution_.coh_pos() != 0 || resolution_.pmax() != 0 || resolution_.pmin() > -1) {
    throw ComplexError("a curve resolution runs A2 -> A1 -> A0 at positions -2..0 with cohomology at 0");
  }
  const FreeTerm& a0 = resolution_.term(0);
  if (generators_.size() != a0.rank()) throw ComplexError("need one generator per summand of A0");
  GradedMap row(a0, FreeTerm({0}), generators_, resolution_.field(), resolution_.nvars());
  if (!(row * resolution_.map(-1)).is_zero()) throw ComplexError("generators do not annihilate the first syzygies");
}

std::vector<Poly> lift_to_generators(const CurveResolution& r, const Poly& f) {
  if (f.is_zero()) throw LiftFailed("cannot lift the zero form");
  const int a = f.degree();
  const FieldSpec& fs = f.field();
  const int nvars = f.nvars();
  const FreeTerm& a0 = r.a0();
  ScalarMatrix system(fs, static_cast<std::size_t>(piece_dim(proj_dim(nvars), a)), 0);
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < a0.rank(); ++i) {
    offsets.push_back(system.cols());
    system = hstack(system, mult_matrix(r.generators()[i], -a0[i], a + a0[i]));
  }
  auto x = solve(system, form_to_vector(f, a));
  if (!x) throw LiftFailed("form " + f.to_string() + " is not in the ideal in degree " + std::to_string(a));
  std::vector<Poly> psi;
  for (std::size_t i = 0; i < a0.rank(); ++i) {
    int deg = a + a0[i];
    psi.push_back(deg >= 0 ? form_from_vector(fs, nvars, deg, *x, offsets[i]) : Poly(fs, nvars));
  }
  return psi;
}

FreeComplex ferrand_transfer(const CurveResolution& r, int a, int b, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero() || f.degree() != a || g.degree() != b) {
    throw ComplexError("ferrand_transfer: f and g must be nonzero forms of degrees a and b");
  }
  const FreeComplex& res = r.resolution();
  const FieldSpec& fs = res.field();
  const int nvars = res.nvars();
  const FreeTerm& a0 = res.term(0);
  const FreeTerm& a1 = res.term(-1);
  FreeTerm a2 = res.pmin() <= -2 ? res.term(-2) : FreeTerm();

  auto psi_f = lift_to_generators(r, f);
  auto psi_g = lift_to_generators(r, g);
  std::vector<Poly> psi_t = psi_f;
  psi_t.insert(psi_t.end(), psi_g.begin(), psi_g.end());
  FreeTerm ci({a, b});
  GradedMap psi_dual(a0.negated(), ci, std::move(psi_t), fs, nvars);
  GradedMap left = stack_rows(res.map(-1).transpose(), psi_dual);
  FreeTerm middle = a1.negated() + ci;
  GradedMap right = res.pmin() <= -2
                        ? stack_cols(res.map(-2).transpose(), zero_map(fs, nvars, ci, a2.negated()))
                        : zero_map(fs, nvars, middle, FreeTerm());
  FreeComplex out(fs, nvars, -1, {a0.negated(), middle, a2.negated()}, {left, right}, 0);

  // Cancel O(a) or O(b) against a summand of A0^dual wherever the lift has a unit entry.
  std::vector<std::size_t> psi_rows{a1.rank(), a1.rank() + 1};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < psi_rows.size() && !changed; ++k) {
      const GradedMap& d = out.map(-1);
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (!d.entry(psi_rows[k], j).is_unit()) continue;
        out = cancel_unit(out, -1, psi_rows[k], j);
        std::size_t gone = psi_rows[k];
        psi_rows.erase(psi_rows.begin() + static_cast<std::ptrdiff_t>(k));
        for (auto& row : psi_rows) {
          if (row > gone) --row;
        }
        changed = true;
        break;
      }
    }
  }
  return trim(out);
}

FreeComplex attach_extension(const FreeComplex& m, const FreeTerm& a, const GradedMap& phi) {
  const int cp = m.coh_pos();
  if (a.empty() && phi.rows() == 0 && (cp == m.pmin() || phi.source() == m.term(cp - 1))) return m;
  if (!(phi.target() == a)) throw ComplexError("attach_extension: phi must land in A");
  const FieldSpec& fs = m.field();
  const int nvars = m.nvars();

  std::vector<FreeTerm> terms = m.terms();
  std::vector<GradedMap> maps = m.maps();
  int pmin = m.pmin();
  if (cp == pmin) {
    // Give the complex an empty B^{-1}.
    terms.insert(terms.begin(), FreeTerm());
    maps.insert(maps.begin(), zero_map(fs, nvars, FreeTerm(), m.term(cp)));
    --pmin;
  }
  auto idx = static_cast<std::size_t>(cp - pmin);
  if (!(phi.source() == terms[idx - 1])) throw ComplexError("attach_extension: phi must start at B^{-1}");
  terms[idx] = terms[idx] + a;
  maps[idx - 1] = stack_rows(maps[idx - 1], phi);
  if (idx < maps.size()) {
    const GradedMap& d0 = maps[idx];
    maps[idx] = stack_cols(d0, zero_map(fs, nvars, a, d0.target()));
  }
  return FreeComplex(fs, nvars, pmin, std::move(terms), std::move(maps), cp);
}

CurveData liaison_curve_data(const CurveData& linked, int a, int b) {
  long long deg = static_cast<long long>(a) * b - linked.deg;
  if (deg < 0) throw ChernError("linked curve has degree larger than the complete intersection");
  long long twice = static_cast<long long>(a + b - 4) * (deg - linked.deg);
  return {deg, linked.chi - twice / 2};
}

}  // namespace sheaflab
