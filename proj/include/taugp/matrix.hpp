#pragma once

#include <optional>
#include <vector>

#include "taugp/field.hpp"

namespace taugp {

// Dense matrix over an exact field. Row-major; matrices act on column
// vectors, so the composite "first f then g" is the product G*F.
// Elimination uses deterministic pivoting (first nonzero entry in column
// order), so every derived basis is reproducible bit for bit.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, mpq_class(0)) {}

  static Matrix identity(Field field, int n);
  static Matrix zero(Field field, int rows, int cols) { return Matrix(field, rows, cols); }

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpq_class& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const mpq_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, const mpq_class& v) { at(i, j) = field_.reduce(v); }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const mpq_class& c) const;
  Matrix transposed() const;
  Matrix pow(int n) const;

  // Stack B below/right of *this.
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;
  Matrix columns(const std::vector<int>& idx) const;

  // Reduced row echelon form; pivot column indices in increasing order.
  struct Echelon;
  Echelon rref() const;

  int rank() const;
  // Columns form a basis of the right kernel; cols = cols() - rank().
  Matrix kernel_basis() const;
  // Q with Q * (*this) = 0, Q surjective, rank(Q) = rows() - rank().
  Matrix cokernel_projection() const;
  // Basis of the column space, as columns (a subset of the original columns).
  Matrix column_space_basis() const;
  // Some X with (*this) * X = B, or nullopt.
  std::optional<Matrix> solve(const Matrix& b) const;

  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  Matrix inverse() const;

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<mpq_class> e_;
};

struct Matrix::Echelon {
  Matrix mat;
  std::vector<int> pivots;
};

}  // namespace taugp
