#include "sosgram/lifting.hpp"

#include "sosgram/error.hpp"

namespace sosgram {

LiftedVector monomial_lift(std::span<const Rational> point, int d) {
  if (d < 0) throw InputError("monomial_lift: negative degree");
  if (point.empty()) throw InputError("monomial_lift: empty point");
  const int n = static_cast<int>(point.size());
  LiftedVector lifted{n, d, Basis::unscaled, {}};
  for (const auto& alpha : monomial_basis(n, d)) {
    Rational value = 1;
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < alpha[i]; ++e) value *= point[i];
    }
    lifted.entries.push_back(std::move(value));
  }
  return lifted;
}

std::vector<Integer> scaled_lift_weights(int n, int d) {
  std::vector<Integer> weights;
  for (const auto& alpha : monomial_basis(n, d)) weights.push_back(multinomial(alpha));
  return weights;
}

Matrix induced_matrix(const Matrix& a, int d) {
  if (!a.is_square() || a.rows() == 0) throw InputError("induced_matrix: A must be square");
  const int n = static_cast<int>(a.rows());
  const BasisIndex basis(n, d);
  // Row i of A as the linear form (Ax)_i.
  std::vector<Form> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = a(i, j);
    rows.push_back(linear_form(coeffs));
  }
  Matrix induced(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const MultiIndex& alpha = basis[r];
    Form expanded = Form::constant(n, 1);
    for (int i = 0; i < n; ++i) expanded = expanded * power(rows[i], alpha[i]);
    for (const auto& [beta, coeff] : expanded.terms()) induced(r, basis.position(beta)) = coeff;
  }
  return induced;
}

Form act_on_coefficients(const Matrix& a, const Form& p) {
  if (!a.is_square() || static_cast<int>(a.rows()) != p.num_vars()) {
    throw InputError("act_on_coefficients: A must be square with side n");
  }
  const Matrix lifted = induced_matrix(a, p.degree());
  const std::vector<Rational> v = p.dense();
  return Form::from_dense(p.num_vars(), p.degree(), lifted.transpose() * std::span<const Rational>(v));
}

}  // namespace sosgram
