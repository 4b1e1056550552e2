#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sheaflab/field.hpp"

namespace sheaflab {

using ScalarVector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MatrixBuilder;

// Dense immutable matrix over a FieldSpec, stored row-major. Prime fields keep
// raw residues, the rationals keep GMP rationals.
class ScalarMatrix {
 public:
  ScalarMatrix(FieldSpec f, std::size_t rows, std::size_t cols);
  static ScalarMatrix identity(const FieldSpec& f, std::size_t n);
  static ScalarMatrix from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows);
  static ScalarMatrix from_rows(const FieldSpec& f, std::size_t cols, const std::vector<ScalarVector>& rows);
  static ScalarMatrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<ScalarVector>& cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar at(std::size_t i, std::size_t j) const;
  ScalarVector column(std::size_t j) const;
  bool is_zero() const;

  // Raw storage access for the elimination kernels.
  const std::vector<std::uint32_t>& residues() const { return mod_; }
  const std::vector<mpq_class>& rationals() const { return rat_; }

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

 private:
  friend class MatrixBuilder;
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> mod_;
  std::vector<mpq_class> rat_;
};

// Mutable staging area; build() freezes it.
class MatrixBuilder {
 public:
  MatrixBuilder(FieldSpec f, std::size_t rows, std::size_t cols) : m_(f, rows, cols) {}
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void add(std::size_t i, std::size_t j, const Scalar& v);
  // Copies a block into position (r0, c0).
  void place(std::size_t r0, std::size_t c0, const ScalarMatrix& block);
  std::size_t rows() const { return m_.rows_; }
  std::size_t cols() const { return m_.cols_; }
  ScalarMatrix build() && { return std::move(m_); }

 private:
  ScalarMatrix m_;
};

std::size_t rank(const ScalarMatrix& m);
std::vector<ScalarVector> kernel_basis(const ScalarMatrix& m);
std::optional<ScalarVector> solve(const ScalarMatrix& m, const ScalarVector& b);

// Columns of `candidates` that are independent modulo the span of the columns
// of `sub`, chosen greedily left to right. Both must have the same row count.
std::vector<std::size_t> complement_columns(const ScalarMatrix& sub, const ScalarMatrix& candidates);
// Basis of the column space, as a subset of the columns.
std::vector<std::size_t> pivot_columns(const ScalarMatrix& m);

ScalarMatrix transpose(const ScalarMatrix& m);
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarVector apply(const ScalarMatrix& m, const ScalarVector& v);
ScalarMatrix hstack(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix vstack(const ScalarMatrix& a, const ScalarMatrix& b);

}  // namespace sheaflab
