#include "curvesys/linalg.hpp"

namespace curvesys {

Matrix::Matrix(FieldPtr f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, FieldElement::zero(field_)) {}

Matrix Matrix::identity(const FieldPtr& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = FieldElement::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldPtr& f, const std::vector<std::vector<FieldElement>>& rows) {
  const int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  Matrix m(f, static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows_; ++i) {
    require(static_cast<int>(rows[i].size()) == c, ErrorCode::PreconditionViolation, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<FieldElement> Matrix::row(int r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_, data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
}

void Matrix::append_row(const std::vector<FieldElement>& row) {
  require(static_cast<int>(row.size()) == cols_, ErrorCode::PreconditionViolation, "row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, ErrorCode::PreconditionViolation, "matrix shape mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  require(static_cast<int>(v.size()) == cols_, ErrorCode::PreconditionViolation, "vector length mismatch");
  std::vector<FieldElement> out(rows_, FieldElement::zero(v.empty() ? field_ : v.front().field()));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j).embed(v[j].field()) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    const FieldElement inv = m(r, c).inverse();
    for (int k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldElement f = m(i, c);
      for (int k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<FieldElement>> nullspace(Matrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols(), FieldElement::zero(m.field()));
    v[free] = FieldElement::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FieldElement> solve(const Matrix& m, const std::vector<FieldElement>& b) {
  require(static_cast<int>(b.size()) == m.rows(), ErrorCode::PreconditionViolation, "right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  std::vector<FieldElement> x(m.cols(), FieldElement::zero(m.field()));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) fail(ErrorCode::InconsistentSystem, "linear system has no solution");
    x[pivots[i]] = aug(static_cast<int>(i), m.cols());
  }
  return x;
}

FieldElement determinant(Matrix m) {
  require(m.rows() == m.cols(), ErrorCode::PreconditionViolation, "determinant of a non-square matrix");
  FieldElement det = FieldElement::one(m.field());
  const int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return FieldElement::zero(m.field());
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const FieldElement inv = m(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const FieldElement f = m(i, c) * inv;
      for (int k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorCode::PreconditionViolation, "inverse of a non-square matrix");
  const int n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement::one(m.field());
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    fail(ErrorCode::DivisionByZero, "matrix is singular");
  Matrix inv(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace curvesys
