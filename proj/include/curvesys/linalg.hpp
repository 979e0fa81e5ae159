#pragma once

#include <vector>

#include "curvesys/field.hpp"

namespace curvesys {

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix(FieldPtr f, int rows, int cols);
  static Matrix identity(const FieldPtr& f, int n);
  static Matrix from_rows(const FieldPtr& f, const std::vector<std::vector<FieldElement>>& rows);

  const FieldPtr& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  FieldElement& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const FieldElement& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::vector<FieldElement> row(int r) const;
  void append_row(const std::vector<FieldElement>& row);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
  Matrix transpose() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  int rows_, cols_;
  std::vector<FieldElement> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
/// Basis of {v : M v = 0}, one vector per free column.
std::vector<std::vector<FieldElement>> nullspace(Matrix m);
/// Some solution of M v = b; InconsistentSystem if none.
std::vector<FieldElement> solve(const Matrix& m, const std::vector<FieldElement>& b);
FieldElement determinant(Matrix m);
/// DivisionByZero for singular input.
Matrix inverse(const Matrix& m);

}  // namespace curvesys
