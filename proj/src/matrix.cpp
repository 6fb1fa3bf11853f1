#include "sosgram/matrix.hpp"

#include <utility>

#include "sosgram/error.hpp"
#include "sosgram/multi_index.hpp"

namespace sosgram {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!sosgram::is_zero(x)) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix add: shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Matrix operator*(const Rational& scale, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = scale * a(i, j);
  }
  return c;
}

std::vector<Rational> operator*(const Matrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector multiply: shape mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

Matrix outer(std::span<const Rational> u, std::span<const Rational> v) {
  Matrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  }
  return m;
}

std::size_t rank(Matrix a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, col))) continue;
      const Rational factor = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.size() != n) throw InputError("solve: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a(i, col))) continue;
      const Rational factor = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
      b[i] -= factor * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  return os << ']';
}

SymMatrix::SymMatrix(int n, int d) : n_(n), d_(d) {
  const std::size_t side = basis_size(n, d);
  entries_ = Matrix(side, side);
}

SymMatrix::SymMatrix(int n, int d, Matrix entries) : n_(n), d_(d), entries_(std::move(entries)) {
  const std::size_t side = basis_size(n, d);
  if (entries_.rows() != side || entries_.cols() != side) {
    throw InputError("symmetric matrix side " + std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()) + " does not match C(n+d-1,d) = " +
                     std::to_string(side));
  }
  if (!entries_.is_symmetric()) throw InputError("matrix is not symmetric");
}

SymMatrix SymMatrix::from_rows(int n, int d, const std::vector<std::vector<Rational>>& rows) {
  return SymMatrix(n, d, Matrix::from_rows(rows));
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (a.num_vars() != b.num_vars() || a.degree() != b.degree()) {
    throw InputError("symmetric matrix add: shape mismatch");
  }
  return SymMatrix(a.num_vars(), a.degree(), a.entries() + b.entries());
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) { return a + Rational(-1) * b; }

SymMatrix operator*(const Rational& scale, const SymMatrix& a) {
  return SymMatrix(a.num_vars(), a.degree(), scale * a.entries());
}

std::ostream& operator<<(std::ostream& os, const SymMatrix& m) {
  return os << "S(n=" << m.num_vars() << ",d=" << m.degree() << ")" << m.entries();
}

}  // namespace sosgram
