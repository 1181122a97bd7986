#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/scalar.hpp"

namespace hopflab {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
// y += a*x
void axpy(Vec& y, const Scalar& a, const Vec& x);
Vec scaled(const Vec& x, const Scalar& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);
// Kronecker product of coordinate vectors, first factor most significant
Vec kron(const Vec& a, const Vec& b);

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, Vec data);
  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Vec& data() const { return data_; }
  Vec& data() { return data_; }

  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  Vec row(std::size_t r) const;
  Matrix transpose() const;
  Vec apply(const Vec& x) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& m);
// Columns span the null space of m.
Matrix kernel_basis(const Matrix& m);
// x with m*x = b, if one exists
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
// Basis (as columns) of the column span of m, chosen among m's columns.
Matrix column_basis(const Matrix& m);
// Column spans equal / contained.
bool same_span(const Matrix& a, const Matrix& b);
bool span_contains(const Matrix& outer, const Matrix& inner);

// Row-major dense tensor.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape);
  Tensor(std::vector<std::size_t> shape, Vec data);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t order() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  const Vec& data() const { return data_; }
  Vec& data() { return data_; }

  std::size_t offset(const std::vector<std::size_t>& idx) const;
  Scalar& at(const std::vector<std::size_t>& idx) { return data_[offset(idx)]; }
  const Scalar& at(const std::vector<std::size_t>& idx) const { return data_[offset(idx)]; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * shape_[1] + j) * shape_[2] + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * shape_[1] + j) * shape_[2] + k];
  }

  Matrix as_matrix(std::size_t leading_axes) const;
  static Tensor from_matrix(const Matrix& m);

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.shape_ == b.shape_ && a.data_ == b.data_; }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

 private:
  std::vector<std::size_t> shape_;
  Vec data_;
};

// Contract paired axes; result axes are the free axes of a, then those of b.
Tensor contract(const Tensor& a, const Tensor& b, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace hopflab
