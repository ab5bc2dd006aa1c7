#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cforge/scalar.hpp"

namespace cforge {

/// Dense row-major matrix over Q(i). Used for algebra-sized linear maps.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec column(std::size_t c) const;
  Vec apply(const Vec& v) const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  /// ShapeError on mismatched shapes.
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; `pivots` lists the pivot column of each row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vec> kernel_basis(const Matrix& m);
/// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
/// Throws NotInvertible for singular or non-square input.
Matrix inverse(const Matrix& m);

}  // namespace cforge
