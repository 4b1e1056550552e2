#include "sheaflab/ggcheck.hpp"

#include <exception>

#include "sheaflab/parallel.hpp"

namespace sheaflab {

FiberJump::FiberJump(const ProjPoint& x, long long got, long long expected)
    : std::runtime_error("fiber at " + x.to_string() + " has dimension " + std::to_string(got) + ", expected rank " +
                         std::to_string(expected)),
      point_(x) {}

Fiber fiber(const FreeComplex& c, const ProjPoint& x) {
  const FieldSpec& f = c.field();
  const int cp = c.coh_pos();
  const std::size_t m = c.term(cp).rank();
  std::vector<ScalarVector> kernel;
  if (cp < c.pmax()) {
    kernel = kernel_basis(c.map(cp).evaluate(x));
  } else {
    ScalarMatrix id = ScalarMatrix::identity(f, m);
    for (std::size_t j = 0; j < m; ++j) kernel.push_back(id.column(j));
  }
  Fiber out{cp > c.pmin() ? c.map(cp - 1).evaluate(x) : ScalarMatrix(f, m, 0), 0, {}};
  out.incoming_rank = rank(out.incoming);
  for (auto j : complement_columns(out.incoming, ScalarMatrix::from_columns(f, m, kernel))) out.basis.push_back(kernel[j]);
  if (static_cast<long long>(out.dim()) != c.rank()) throw FiberJump(x, static_cast<long long>(out.dim()), c.rank());
  return out;
}

ScalarMatrix evaluate_sections(const FreeComplex& c, const SectionBasis& s, const ProjPoint& x) {
  const int nvars = c.nvars();
  const FieldSpec& f = c.field();
  std::vector<ScalarVector> mono;
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (int b : s.term.twists()) {
    mono.push_back(evaluate_monomials(nvars, b + s.t, x));
    offsets.push_back(off);
    off += mono.back().size();
  }
  MatrixBuilder out(f, s.term.rank(), s.representatives.size());
  for (std::size_t k = 0; k < s.representatives.size(); ++k) {
    const auto& v = s.representatives[k];
    for (std::size_t j = 0; j < s.term.rank(); ++j) {
      Scalar acc = Scalar::zero(f);
      for (std::size_t m = 0; m < mono[j].size(); ++m) {
        if (!v[offsets[j] + m].is_zero()) acc += v[offsets[j] + m] * mono[j][m];
      }
      out.set(j, k, acc);
    }
  }
  return std::move(out).build();
}

long long evaluation_corank(const FreeComplex& c, const SectionBasis& s, const ProjPoint& x) {
  Fiber fib = fiber(c, x);
  ScalarMatrix vals = evaluate_sections(c, s, x);
  auto gained = static_cast<long long>(rank(hstack(fib.incoming, vals)) - fib.incoming_rank);
  return static_cast<long long>(fib.dim()) - gained;
}

std::string GgVerdict::to_string() const {
  switch (outcome) {
    case Outcome::certified_not_gg:
      return "not globally generated: evaluation has corank " + std::to_string(corank) + " at " + witness->to_string();
    case Outcome::gg_at_all_sampled:
      return "globally generated at all " + std::to_string(points) + " sampled points (seed " + std::to_string(seed) + ")";
    case Outcome::gg_over_Fp_exhaustive:
      return "globally generated at all " + std::to_string(points) + " points over F_" + std::to_string(p);
  }
  return {};
}

GgVerdict is_globally_generated(const FreeComplex& c, int t, const SamplingConfig& cfg) {
  SectionBasis s = sections(c, t);
  auto pts = sample_points(c.field(), c.nvars(), cfg, 1);
  std::vector<long long> corank(pts.size(), 0);
  std::vector<std::exception_ptr> errors(pts.size());
  parallel_for(pts.size(), [&](std::size_t k) {
    try {
      corank[k] = evaluation_corank(c, s, pts[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  });
  GgVerdict v;
  v.points = pts.size();
  v.seed = cfg.seed;
  v.p = c.field().characteristic();
  v.outcome = cfg.exhaustive ? GgVerdict::Outcome::gg_over_Fp_exhaustive : GgVerdict::Outcome::gg_at_all_sampled;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    if (corank[k] > 0) {
      v.outcome = GgVerdict::Outcome::certified_not_gg;
      v.witness = pts[k];
      v.corank = corank[k];
      break;
    }
  }
  return v;
}

bool section_eval_welldef_check(const FreeComplex& c, int t, const ProjPoint& x, int n_trials, std::uint64_t seed) {
  const int cp = c.coh_pos();
  if (cp == c.pmin()) return true;
  SectionBasis s = sections(c, t);
  if (s.representatives.empty()) return true;
  const FieldSpec& f = c.field();
  ScalarMatrix incoming = c.map(cp - 1).graded_piece(t);
  ScalarMatrix at_x = c.map(cp - 1).evaluate(x);
  std::size_t base_rank = rank(at_x);
  ScalarMatrix before = evaluate_sections(c, s, x);
  Rng rng(seed, 2);
  for (int trial = 0; trial < n_trials; ++trial) {
    SectionBasis moved = s;
    for (auto& rep : moved.representatives) {
      ScalarVector u;
      for (std::size_t j = 0; j < incoming.cols(); ++j) u.push_back(rng.scalar(f));
      ScalarVector shift = sheaflab::apply(incoming, u);
      for (std::size_t i = 0; i < rep.size(); ++i) rep[i] += shift[i];
    }
    ScalarMatrix after = evaluate_sections(c, moved, x);
    for (std::size_t k = 0; k < s.representatives.size(); ++k) {
      ScalarVector diff;
      for (std::size_t i = 0; i < after.rows(); ++i) diff.push_back(after.at(i, k) - before.at(i, k));
      if (rank(hstack(at_x, ScalarMatrix::from_columns(f, diff.size(), std::vector<ScalarVector>{diff}))) != base_rank) return false;
    }
  }
  return true;
}

}  // namespace sheaflab
