#include "sheaflab/cohom.hpp"

#include <sstream>

#include "sheaflab/parallel.hpp"

namespace sheaflab {

namespace {

long long term_dim(const FreeTerm& term, int n, bool dual_row, int t) {
  long long d = 0;
  for (int b : term.twists()) d += piece_dim(n, dual_row ? -b - t - n - 1 : b + t);
  return d;
}

// Homology dimensions of one row (row 0 or row n) at twist t, indexed by
// position offset from pmin.
std::vector<long long> row_homology(const FreeComplex& c, int t, bool dual_row) {
  const int n = proj_dim(c.nvars());
  const int len = c.pmax() - c.pmin() + 1;
  std::vector<long long> dims(static_cast<std::size_t>(len));
  std::vector<long long> ranks(static_cast<std::size_t>(len), 0);
  for (int p = c.pmin(); p <= c.pmax(); ++p) dims[p - c.pmin()] = term_dim(c.term(p), n, dual_row, t);
  for (int p = c.pmin(); p < c.pmax(); ++p) {
    auto i = static_cast<std::size_t>(p - c.pmin());
    if (dims[i] == 0 || dims[i + 1] == 0) continue;
    ScalarMatrix m = dual_row ? c.map(p).transpose().graded_piece(-t - n - 1) : c.map(p).graded_piece(t);
    ranks[i] = static_cast<long long>(rank(m));
  }
  std::vector<long long> h(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) h[i] = dims[i] - ranks[i] - (i > 0 ? ranks[i - 1] : 0);
  return h;
}

}  // namespace

CohTable::CohTable(int n, int t_lo, std::vector<std::vector<long long>> rows, const std::vector<long long>& euler)
    : n_(n), t_lo_(t_lo), rows_(std::move(rows)) {
  if (euler.size() != rows_.size()) throw CohomologyError("Euler characteristic list has the wrong length");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].size() != static_cast<std::size_t>(n_ + 1)) throw CohomologyError("cohomology row has the wrong length");
    long long alt = 0;
    for (int i = 0; i <= n_; ++i) {
      if (rows_[k][i] < 0) throw CohomologyError("negative cohomology dimension");
      alt += (i % 2 == 0) ? rows_[k][i] : -rows_[k][i];
    }
    if (alt != euler[k]) {
      throw CohomologyError("Euler characteristic mismatch at t = " + std::to_string(t_lo_ + static_cast<int>(k)) +
                            ": table gives " + std::to_string(alt) + ", terms give " + std::to_string(euler[k]));
    }
  }
}

long long CohTable::h(int i, int t) const {
  if (i < 0 || i > n_ || !contains(t)) throw CohomologyError("h(" + std::to_string(i) + ", " + std::to_string(t) + ") outside the table");
  return rows_[static_cast<std::size_t>(t - t_lo_)][static_cast<std::size_t>(i)];
}

long long CohTable::chi(int t) const {
  long long s = 0;
  for (int i = 0; i <= n_; ++i) s += (i % 2 == 0) ? h(i, t) : -h(i, t);
  return s;
}

std::string CohTable::to_text() const {
  std::ostringstream out;
  for (int t = t_lo_; t <= t_hi(); ++t) {
    out << t << " ";
    for (int i = 0; i <= n_; ++i) out << " " << h(i, t);
    out << "\n";
  }
  return out.str();
}

CohTable CohTable::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long long>> rows;
  std::vector<long long> euler;
  int t_lo = 0;
  int n = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<long long> v;
    long long x;
    while (ls >> x) v.push_back(x);
    if (v.empty()) continue;
    if (v.size() < 2) throw CohomologyError("cohomology table line too short: " + line);
    int t = static_cast<int>(v[0]);
    if (rows.empty()) {
      t_lo = t;
      n = static_cast<int>(v.size()) - 2;
    } else if (t != t_lo + static_cast<int>(rows.size()) || static_cast<int>(v.size()) != n + 2) {
      throw CohomologyError("cohomology table rows are not consecutive or have uneven width");
    }
    std::vector<long long> r(v.begin() + 1, v.end());
    long long alt = 0;
    for (int i = 0; i <= n; ++i) alt += (i % 2 == 0) ? r[i] : -r[i];
    euler.push_back(alt);
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw CohomologyError("empty cohomology table");
  return CohTable(n, t_lo, std::move(rows), euler);
}

CohTable h_table(const FreeComplex& c, int t_lo, int t_hi) {
  if (t_hi < t_lo) throw CohomologyError("empty twist range");
  const int n = proj_dim(c.nvars());
  const auto count = static_cast<std::size_t>(t_hi - t_lo + 1);
  std::vector<std::vector<long long>> rows(count);
  std::vector<long long> euler(count);
  parallel_for(count, [&](std::size_t k) {
    const int t = t_lo + static_cast<int>(k);
    auto h0 = row_homology(c, t, false);
    auto hn = row_homology(c, t, true);
    std::vector<long long> r(static_cast<std::size_t>(n + 1), 0);
    for (int p = c.pmin(); p <= c.pmax(); ++p) {
      auto i = static_cast<std::size_t>(p - c.pmin());
      int k0 = p - c.coh_pos();
      int kn = p + n - c.coh_pos();
      if (h0[i] != 0) {
        if (k0 < 0 || k0 > n) {
          throw CohomologyError("complex is not exact away from its cohomology position (row 0, position " +
                                std::to_string(p) + ", t = " + std::to_string(t) + ")");
        }
        r[static_cast<std::size_t>(k0)] += h0[i];
      }
      if (hn[i] != 0) {
        if (kn < 0 || kn > n) {
          throw CohomologyError("complex is not exact away from its cohomology position (row n, position " +
                                std::to_string(p) + ", t = " + std::to_string(t) + ")");
        }
        r[static_cast<std::size_t>(kn)] += hn[i];
      }
    }
    rows[k] = std::move(r);
    euler[k] = euler_characteristic(c, t);
  });
  return CohTable(n, t_lo, std::move(rows), euler);
}

SectionBasis sections(const FreeComplex& c, int t) {
  const int n = proj_dim(c.nvars());
  const int cp = c.coh_pos();
  if (cp - n >= c.pmin()) {
    auto hn = row_homology(c, t, true);
    if (hn[static_cast<std::size_t>(cp - n - c.pmin())] != 0) {
      throw CohomologyError("sections: global sections come partly from top cohomology; not supported");
    }
  }
  const FreeTerm& term = c.term(cp);
  std::size_t dim = 0;
  for (int b : term.twists()) dim += static_cast<std::size_t>(piece_dim(n, b + t));
  const FieldSpec& f = c.field();
  std::vector<ScalarVector> kernel;
  if (cp < c.pmax()) {
    kernel = kernel_basis(c.map(cp).graded_piece(t));
  } else {
    ScalarMatrix id = ScalarMatrix::identity(f, dim);
    for (std::size_t j = 0; j < dim; ++j) kernel.push_back(id.column(j));
  }
  ScalarMatrix incoming = cp > c.pmin() ? c.map(cp - 1).graded_piece(t) : ScalarMatrix(f, dim, 0);
  ScalarMatrix cand = ScalarMatrix::from_columns(f, dim, kernel);
  SectionBasis out;
  out.t = t;
  out.term = term;
  for (auto j : complement_columns(incoming, cand)) out.representatives.push_back(kernel[j]);
  return out;
}

bool serre_dual_check(const FreeComplex& c, int t_lo, int t_hi) {
  const int n = proj_dim(c.nvars());
  CohTable a = h_table(c, t_lo, t_hi);
  CohTable b = h_table(dualize(c), -n - 1 - t_hi, -n - 1 - t_lo);
  for (int t = t_lo; t <= t_hi; ++t) {
    for (int i = 0; i <= n; ++i) {
      if (a.h(i, t) != b.h(n - i, -n - 1 - t)) return false;
    }
  }
  return true;
}

}  // namespace sheaflab
