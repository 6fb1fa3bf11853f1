#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "sosgram/rational.hpp"

namespace sosgram {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;
  Matrix transpose() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& scale, const Matrix& a);
std::vector<Rational> operator*(const Matrix& a, std::span<const Rational> v);

/// u vᵀ
Matrix outer(std::span<const Rational> u, std::span<const Rational> v);

/// Exact rank by fraction-based Gaussian elimination.
std::size_t rank(Matrix a);

/// Solution of a x = b for square nonsingular a; nullopt when singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Symmetric matrix whose rows and columns are indexed by the degree-d
/// monomials in n variables (unscaled basis). Immutable after construction.
class SymMatrix {
 public:
  /// Zero matrix of side C(n+d-1, d).
  SymMatrix(int n, int d);
  /// Throws InputError if `entries` is not symmetric or has the wrong side.
  SymMatrix(int n, int d, Matrix entries);

  static SymMatrix from_rows(int n, int d, const std::vector<std::vector<Rational>>& rows);

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return entries_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const Matrix& entries() const { return entries_; }
  bool is_zero() const { return entries_.is_zero(); }

  bool operator==(const SymMatrix& other) const = default;

 private:
  int n_;
  int d_;
  Matrix entries_;
};

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(const Rational& scale, const SymMatrix& a);

std::ostream& operator<<(std::ostream& os, const SymMatrix& m);

}  // namespace sosgram
