#include "sheaflab/matrix.hpp"

#include <string>

namespace sheaflab {

namespace {

struct ModOps {
  using T = std::uint32_t;
  std::uint32_t p;
  static bool is_zero(T a) { return a == 0; }
  T inv(T a) const { return mod_inverse(a, p); }
  T mul(T a, T b) const { return static_cast<T>(static_cast<std::uint64_t>(a) * b % p); }
  // a - f*b
  T sub_mul(T a, T f, T b) const {
    return static_cast<T>((a + static_cast<std::uint64_t>(p - f) * b) % p);
  }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  static T one() { return 1; }
  static T zero() { return 0; }
};

struct RatOps {
  using T = mpq_class;
  static bool is_zero(const T& a) { return sgn(a) == 0; }
  static T inv(const T& a) { return 1 / a; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub_mul(const T& a, const T& f, const T& b) { return a - f * b; }
  static T neg(const T& a) { return -a; }
  static T one() { return 1; }
  static T zero() { return 0; }
};

// Row echelon form in place. With `reduce` the result is fully reduced
// (pivots normalized to one, zeros above pivots).
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, std::vector<typename Ops::T>& a, std::size_t rows,
                                   std::size_t cols, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && Ops::is_zero(a[piv * cols + c])) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    }
    auto* prow = &a[r * cols];
    if (reduce) {
      auto inv = ops.inv(prow[c]);
      for (std::size_t j = c; j < cols; ++j) {
        if (!Ops::is_zero(prow[j])) prow[j] = ops.mul(prow[j], inv);
      }
    }
    auto pinv = reduce ? Ops::one() : ops.inv(prow[c]);
    for (std::size_t i = reduce ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      auto* row = &a[i * cols];
      if (Ops::is_zero(row[c])) continue;
      auto f = ops.mul(row[c], pinv);
      for (std::size_t j = c; j < cols; ++j) {
        if (!Ops::is_zero(prow[j])) row[j] = ops.sub_mul(row[j], f, prow[j]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Working copy of a matrix, optionally with extra columns appended.
struct Work {
  std::size_t rows, cols;
  std::vector<std::uint32_t> mod;
  std::vector<mpq_class> rat;
};

Work copy_of(const ScalarMatrix& m) {
  Work w{m.rows(), m.cols(), m.residues(), m.rationals()};
  return w;
}

std::vector<std::size_t> run(const FieldSpec& f, Work& w, bool reduce) {
  if (f.is_prime()) return eliminate(ModOps{f.characteristic()}, w.mod, w.rows, w.cols, reduce);
  return eliminate(RatOps{}, w.rat, w.rows, w.cols, reduce);
}

Scalar work_at(const FieldSpec& f, const Work& w, std::size_t i, std::size_t j) {
  if (f.is_prime()) return Scalar::residue(w.mod[i * w.cols + j], f.characteristic());
  return Scalar::from_mpq(f, w.rat[i * w.cols + j]);
}

void check_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw FieldError("matrices over different fields");
}

}  // namespace

ScalarMatrix::ScalarMatrix(FieldSpec f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime()) {
    mod_.assign(rows * cols, 0);
  } else {
    rat_.assign(rows * cols, mpq_class(0));
  }
}

ScalarMatrix ScalarMatrix::identity(const FieldSpec& f, std::size_t n) {
  MatrixBuilder b(f, n, n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, i, Scalar::one(f));
  return std::move(b).build();
}

ScalarMatrix ScalarMatrix::from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixBuilder b(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) b.set(i, j, Scalar::from_int(f, rows[i][j]));
  }
  return std::move(b).build();
}

ScalarMatrix ScalarMatrix::from_rows(const FieldSpec& f, std::size_t cols, const std::vector<ScalarVector>& rows) {
  MatrixBuilder b(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) b.set(i, j, rows[i][j]);
  }
  return std::move(b).build();
}

ScalarMatrix ScalarMatrix::from_columns(const FieldSpec& f, std::size_t rows, const std::vector<ScalarVector>& cols) {
  MatrixBuilder b(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) b.set(i, j, cols[j][i]);
  }
  return std::move(b).build();
}

Scalar ScalarMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  if (field_.is_prime()) return Scalar::residue(mod_[i * cols_ + j], field_.characteristic());
  return Scalar::from_mpq(field_, rat_[i * cols_ + j]);
}

ScalarVector ScalarMatrix::column(std::size_t j) const {
  ScalarVector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

bool ScalarMatrix::is_zero() const {
  for (auto v : mod_) {
    if (v != 0) return false;
  }
  for (const auto& q : rat_) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.mod_ == b.mod_ && a.rat_ == b.rat_;
}

void MatrixBuilder::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= m_.rows_ || j >= m_.cols_) throw DimensionError("matrix index out of range");
  check_field(m_.field_, v.field());
  if (m_.field_.is_prime()) {
    m_.mod_[i * m_.cols_ + j] = v.residue_value();
  } else {
    m_.rat_[i * m_.cols_ + j] = v.rational_value();
  }
}

void MatrixBuilder::add(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= m_.rows_ || j >= m_.cols_) throw DimensionError("matrix index out of range");
  check_field(m_.field_, v.field());
  if (m_.field_.is_prime()) {
    auto& slot = m_.mod_[i * m_.cols_ + j];
    std::uint32_t p = m_.field_.characteristic();
    slot = static_cast<std::uint32_t>((static_cast<std::uint64_t>(slot) + v.residue_value()) % p);
  } else {
    m_.rat_[i * m_.cols_ + j] += v.rational_value();
  }
}

void MatrixBuilder::place(std::size_t r0, std::size_t c0, const ScalarMatrix& block) {
  check_field(m_.field_, block.field());
  if (r0 + block.rows() > m_.rows_ || c0 + block.cols() > m_.cols_) throw DimensionError("block does not fit");
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) {
      std::size_t dst = (r0 + i) * m_.cols_ + c0 + j;
      std::size_t src = i * block.cols() + j;
      if (m_.field_.is_prime()) {
        m_.mod_[dst] = block.residues()[src];
      } else {
        m_.rat_[dst] = block.rationals()[src];
      }
    }
  }
}

std::size_t rank(const ScalarMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Work w = copy_of(m);
  return run(m.field(), w, false).size();
}

std::vector<std::size_t> pivot_columns(const ScalarMatrix& m) {
  Work w = copy_of(m);
  return run(m.field(), w, false);
}

std::vector<ScalarVector> kernel_basis(const ScalarMatrix& m) {
  const auto& f = m.field();
  Work w = copy_of(m);
  auto pivots = run(f, w, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(m.cols(), Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -work_at(f, w, k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ScalarVector> solve(const ScalarMatrix& m, const ScalarVector& b) {
  if (b.size() != m.rows()) {
    throw DimensionError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                         std::to_string(m.rows()));
  }
  const auto& f = m.field();
  ScalarMatrix aug = hstack(m, ScalarMatrix::from_columns(f, m.rows(), {b}));
  Work w = copy_of(aug);
  auto pivots = run(f, w, true);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  ScalarVector x(m.cols(), Scalar::zero(f));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = work_at(f, w, k, m.cols());
  return x;
}

std::vector<std::size_t> complement_columns(const ScalarMatrix& sub, const ScalarMatrix& candidates) {
  if (sub.rows() != candidates.rows()) throw DimensionError("complement_columns: row counts differ");
  auto pivots = pivot_columns(hstack(sub, candidates));
  std::vector<std::size_t> out;
  for (auto c : pivots) {
    if (c >= sub.cols()) out.push_back(c - sub.cols());
  }
  return out;
}

ScalarMatrix transpose(const ScalarMatrix& m) {
  MatrixBuilder b(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) b.set(j, i, m.at(i, j));
  }
  return std::move(b).build();
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  check_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  const auto& f = a.field();
  MatrixBuilder out(f, a.rows(), b.cols());
  if (f.is_prime()) {
    std::uint64_t p = f.characteristic();
    const auto& x = a.residues();
    const auto& y = b.residues();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) s = (s + x[i * a.cols() + k] * std::uint64_t{y[k * b.cols() + j]}) % p;
        out.set(i, j, Scalar::residue(static_cast<std::uint32_t>(s), f.characteristic()));
      }
    }
  } else {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        mpq_class s = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) s += a.rationals()[i * a.cols() + k] * b.rationals()[k * b.cols() + j];
        out.set(i, j, Scalar::from_mpq(f, s));
      }
    }
  }
  return std::move(out).build();
}

ScalarVector apply(const ScalarMatrix& m, const ScalarVector& v) {
  return (m * ScalarMatrix::from_columns(m.field(), m.cols(), {v})).column(0);
}

ScalarMatrix hstack(const ScalarMatrix& a, const ScalarMatrix& b) {
  check_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
  MatrixBuilder out(a.field(), a.rows(), a.cols() + b.cols());
  out.place(0, 0, a);
  out.place(0, a.cols(), b);
  return std::move(out).build();
}

ScalarMatrix vstack(const ScalarMatrix& a, const ScalarMatrix& b) {
  check_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  MatrixBuilder out(a.field(), a.rows() + b.rows(), a.cols());
  out.place(0, 0, a);
  out.place(a.rows(), 0, b);
  return std::move(out).build();
}

}  // namespace sheaflab
