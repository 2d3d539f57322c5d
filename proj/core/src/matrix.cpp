#include "finitype/matrix.hpp"

#include <utility>

#include "finitype/errors.hpp"

namespace finitype {

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::conj_transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  }
  return t;
}

bool Matrix::is_hermitian() const { return is_square() && conj_transpose() == *this; }

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix dimension mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix dimension mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw InputError("inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const GaussianRational scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const GaussianRational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t Matrix::rank() const {
  Matrix a = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && a(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(rank, j));
    const GaussianRational inv = a(rank, col).inverse();
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (a(i, col).is_zero()) continue;
      const GaussianRational f = a(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace finitype
