#include "sosgram/grams.hpp"

#include <cmath>
#include <optional>

#include "sosgram/error.hpp"
#include "sosgram/lifting.hpp"

namespace sosgram {

Form gram_eval(const SymMatrix& q) {
  const BasisIndex basis(q.num_vars(), q.degree());
  Form::Terms terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (is_zero(q(i, j))) continue;
      terms[basis[i] + basis[j]] += q(i, j);
    }
  }
  return Form(q.num_vars(), 2 * q.degree(), std::move(terms));
}

SymMatrix gram_transform(const SymMatrix& q, const Matrix& a) {
  if (!a.is_square() || static_cast<int>(a.rows()) != q.num_vars()) {
    throw InputError("gram_transform: A must be square with side n");
  }
  const Matrix lifted = induced_matrix(a, q.degree());
  return SymMatrix(q.num_vars(), q.degree(), lifted.transpose() * q.entries() * lifted);
}

SymMatrix canonical_gram(const Form& p) {
  if (p.degree() % 2 != 0) throw InputError("canonical_gram: form degree must be even");
  const int d = p.degree() / 2;
  const BasisIndex basis(p.num_vars(), d);
  std::vector<Integer> weights;
  for (const auto& alpha : basis.monomials()) weights.push_back(multinomial(alpha));
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const MultiIndex gamma = basis[i] + basis[j];
      const Rational c = p.coefficient(gamma);
      if (is_zero(c)) continue;
      Rational ratio(Integer(weights[i] * weights[j]), multinomial(gamma));
      ratio.canonicalize();
      Rational entry = c * ratio;
      g(i, j) = entry;
      g(j, i) = entry;
    }
  }
  return SymMatrix(p.num_vars(), d, std::move(g));
}

Rational quadratic_form(const Matrix& q, std::span<const Rational> w) {
  const std::vector<Rational> qw = q * w;
  Rational total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += w[i] * qw[i];
  return total;
}

namespace {

/// e_i or e_i ± e_j when one of them already shows indefiniteness.
std::optional<std::vector<Rational>> short_witness(const Matrix& q) {
  const std::size_t n = q.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(q(i, i)) < 0) {
      std::vector<Rational> w(n);
      w[i] = 1;
      return w;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int s = sgn(q(i, j));
      if (s == 0) continue;
      // (e_i - s e_j)ᵀ q (e_i - s e_j) = q_ii + q_jj - 2|q_ij|
      Rational value = q(i, i) + q(j, j) - 2 * abs(q(i, j));
      if (sgn(value) < 0) {
        std::vector<Rational> w(n);
        w[i] = 1;
        w[j] = -s;
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PsdVerdict psd_check(const Matrix& q) {
  if (!q.is_symmetric()) throw InputError("psd_check: matrix is not symmetric");
  const std::size_t n = q.rows();
  // Invariant: work == E q Eᵀ. A vector u in the eliminated coordinates pulls
  // back to w = Eᵀu with wᵀqw = uᵀ work u.
  Matrix work = q;
  Matrix e = Matrix::identity(n);
  std::vector<bool> done(n, false);
  PsdVerdict verdict;

  auto fail_with = [&](const std::vector<Rational>& u) {
    verdict.is_psd = false;
    verdict.rank = 0;
    verdict.witness = short_witness(q).value_or(e.transpose() * std::span<const Rational>(u));
    verdict.witness_value = quadratic_form(q, verdict.witness);
    if (sgn(verdict.witness_value) >= 0) throw InternalError("psd_check produced an invalid witness");
    return verdict;
  };

  while (true) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (sgn(work(i, i)) < 0) {
        std::vector<Rational> u(n);
        u[i] = 1;
        return fail_with(u);
      }
      if (pivot == n && sgn(work(i, i)) > 0) pivot = i;
    }
    if (pivot == n) break;
    done[pivot] = true;
    ++verdict.rank;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || is_zero(work(i, pivot))) continue;
      const Rational factor = work(i, pivot) / work(pivot, pivot);
      for (std::size_t j = 0; j < n; ++j) work(i, j) -= factor * work(pivot, j);
      for (std::size_t j = 0; j < n; ++j) work(j, i) -= factor * work(j, pivot);
      for (std::size_t j = 0; j < n; ++j) e(i, j) -= factor * e(pivot, j);
    }
  }

  // Every remaining diagonal entry is zero; any nonzero entry in those rows
  // makes the matrix indefinite.
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k] || k == i || is_zero(work(i, k))) continue;
      // u = t e_i + e_k gives uᵀ work u = 2 t work(i,k) + work(k,k) = -1.
      std::vector<Rational> u(n);
      u[i] = -(work(k, k) + 1) / (2 * work(i, k));
      u[k] = 1;
      return fail_with(u);
    }
  }
  return verdict;
}

PsdVerdict psd_check(const SymMatrix& q) { return psd_check(q.entries()); }

std::vector<std::vector<double>> scaled_basis_view(const SymMatrix& q) {
  const auto weights = scaled_lift_weights(q.num_vars(), q.degree());
  std::vector<std::vector<double>> view(q.size(), std::vector<double>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      view[i][j] = q(i, j).get_d() / std::sqrt(weights[i].get_d() * weights[j].get_d());
    }
  }
  return view;
}

}  // namespace sosgram
