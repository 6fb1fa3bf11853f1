#pragma once

// Test-only generators and independent oracles. Nothing here calls the
// library routine it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "sosgram/form.hpp"
#include "sosgram/matrix.hpp"
#include "sosgram/multi_index.hpp"

namespace sosgram::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small rational p/q with |p| <= 6, 1 <= q <= 4.
  Rational rational() {
    Rational r(integer(-6, 6), integer(1, 4));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    Rational r = 0;
    while (is_zero(r)) r = rational();
    return r;
  }

 private:
  std::mt19937_64 engine_;
};

inline Form random_form(Rng& rng, int n, int degree, int density_percent = 80) {
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < basis_size(n, degree); ++i) {
    coeffs.push_back(rng.integer(1, 100) <= density_percent ? rng.rational() : Rational(0));
  }
  return Form::from_dense(n, degree, coeffs);
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational();
  }
  return m;
}

inline SymMatrix random_sym(Rng& rng, int n, int d) {
  const std::size_t side = basis_size(n, d);
  Matrix m(side, side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = i; j < side; ++j) {
      m(i, j) = rng.rational();
      m(j, i) = m(i, j);
    }
  }
  return SymMatrix(n, d, std::move(m));
}

/// WᵀW for a random rational W with `rank_rows` rows.
inline SymMatrix random_psd(Rng& rng, int n, int d, std::size_t rank_rows) {
  const std::size_t side = basis_size(n, d);
  const Matrix w = random_matrix(rng, rank_rows, side);
  return SymMatrix(n, d, w.transpose() * w);
}

/// Product of random rational shears in the plane; determinant exactly 1.
inline Matrix random_shear_product(Rng& rng, int factors = 3) {
  Matrix a = Matrix::identity(2);
  for (int i = 0; i < factors; ++i) {
    Matrix s = Matrix::identity(2);
    if (rng.integer(0, 1) == 0) {
      s(0, 1) = rng.rational();
    } else {
      s(1, 0) = rng.rational();
    }
    a = a * s;
  }
  return a;
}

/// Coefficients of det(tI - A), ascending powers, by Faddeev–LeVerrier.
inline std::vector<Rational> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    const Matrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

/// A real symmetric matrix is psd iff (-1)^{n+k} c_k >= 0 for every
/// coefficient c_k of its characteristic polynomial.
inline bool psd_by_sign_alternation(const Matrix& a) {
  const auto c = characteristic_polynomial(a);
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k <= n; ++k) {
    const int s = ((n + k) % 2 == 0) ? sgn(c[k]) : -sgn(c[k]);
    if (s < 0) return false;
  }
  return true;
}

/// A ⊙ B via the full Kronecker product with rows and columns summed over
/// index pairs whose monomials add to the same product monomial.
inline Matrix symprod_by_kronecker(const SymMatrix& a, const SymMatrix& b) {
  const int n = a.num_vars();
  const auto ba = monomial_basis(n, a.degree());
  const auto bb = monomial_basis(n, b.degree());
  const auto bc = monomial_basis(n, a.degree() + b.degree());
  const std::size_t na = ba.size(), nb = bb.size();
  Matrix kron(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) kron(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
      }
    }
  }
  // Summing matrix S with S[γ, (i,k)] = 1 when ba[i] + bb[k] = γ.
  Matrix s(bc.size(), na * nb);
  for (std::size_t g = 0; g < bc.size(); ++g) {
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t k = 0; k < nb; ++k) {
        if (ba[i] + bb[k] == bc[g]) s(g, i * nb + k) = 1;
      }
    }
  }
  return s * kron * s.transpose();
}

/// Dense coefficient convolution of two binary forms (basis order).
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Form binary(std::vector<Rational> dense) {
  const int degree = static_cast<int>(dense.size()) - 1;
  return Form::from_dense(2, degree, dense);
}

inline std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

inline SymMatrix sym(int n, int d, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.push_back(rationals(row));
  return SymMatrix::from_rows(n, d, r);
}

}  // namespace sosgram::testing
