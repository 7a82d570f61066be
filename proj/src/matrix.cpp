#include "taugp/matrix.hpp"

#include <stdexcept>

namespace taugp {

Matrix Matrix::identity(Field field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpq_class& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += a * o.at(k, j);
    }
  for (auto& x : r.e_) x = field_.reduce(x);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.add(r.e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.sub(r.e_[i], o.e_[i]);
  return r;
}

Matrix Matrix::scaled(const mpq_class& c) const {
  Matrix r = *this;
  for (auto& x : r.e_) x = field_.mul(x, c);
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(int n) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
  Matrix r = identity(field_, rows_), b = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * b;
    if (n > 1) b = b * b;
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("vstack width mismatch");
  Matrix r(field_, rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("hstack height mismatch");
  Matrix r(field_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
  }
  return r;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
  Matrix r(field_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return r;
}

Matrix::Echelon Matrix::rref() const {
  Matrix m = *this;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pr = -1;
    for (int i = row; i < rows_; ++i)
      if (m.at(i, col) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(row, j));
    mpq_class inv = field_.inv(m.at(row, col));
    for (int j = col; j < cols_; ++j) m.at(row, j) = field_.mul(m.at(row, j), inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      mpq_class f = m.at(i, col);
      for (int j = col; j < cols_; ++j)
        m.at(i, j) = field_.sub(m.at(i, j), field_.mul(f, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

int Matrix::rank() const { return static_cast<int>(rref().pivots.size()); }

Matrix Matrix::kernel_basis() const {
  Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(field_, cols_, static_cast<int>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k.at(f, static_cast<int>(fi)) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r)
      k.at(e.pivots[r], static_cast<int>(fi)) = field_.neg(e.mat.at(static_cast<int>(r), f));
  }
  return k;
}

Matrix Matrix::cokernel_projection() const {
  // Rows spanning the left kernel: kernel of the transpose, transposed.
  return transposed().kernel_basis().transposed();
}

Matrix Matrix::column_space_basis() const {
  return columns(rref().pivots);
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (rows_ != b.rows_) throw std::invalid_argument("solve: row count mismatch");
  Echelon e = hstack(b).rref();
  // Any pivot in the B block certifies unsolvability.
  for (int p : e.pivots)
    if (p >= cols_) return std::nullopt;
  Matrix x(field_, cols_, b.cols_);
  for (size_t r = 0; r < e.pivots.size(); ++r)
    for (int j = 0; j < b.cols_; ++j)
      x.at(e.pivots[r], j) = e.mat.at(static_cast<int>(r), cols_ + j);
  return x;
}

Matrix Matrix::inverse() const {
  auto x = solve(identity(field_, rows_));
  if (!x || !(*this * *x == identity(field_, rows_)))
    throw std::domain_error("matrix not invertible");
  return *x;
}

}  // namespace taugp
