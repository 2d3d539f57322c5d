#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finitype/gaussian_rational.hpp"

namespace finitype {

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix conj_transpose() const;
  bool is_hermitian() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// Exact Gauss–Jordan inverse; nullopt when singular.
  std::optional<Matrix> inverse() const;
  std::size_t rank() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

}  // namespace finitype
