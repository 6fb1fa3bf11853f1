#include "sosgram/symprod.hpp"

#include "sosgram/error.hpp"
#include "sosgram/multi_index.hpp"

namespace sosgram {

SymMatrix sym_tensor_product(const SymMatrix& a, const SymMatrix& b) {
  if (a.num_vars() != b.num_vars()) throw InputError("sym_tensor_product: variable count mismatch");
  const int n = a.num_vars();
  const BasisIndex basis_a(n, a.degree());
  const BasisIndex basis_b(n, b.degree());
  const BasisIndex basis_c(n, a.degree() + b.degree());

  // sum_position[i][j] = row of basis_a[i] + basis_b[j] in the product basis
  std::vector<std::vector<std::size_t>> sum_position(basis_a.size(),
                                                     std::vector<std::size_t>(basis_b.size()));
  for (std::size_t i = 0; i < basis_a.size(); ++i) {
    for (std::size_t j = 0; j < basis_b.size(); ++j) {
      sum_position[i][j] = basis_c.position(basis_a[i] + basis_b[j]);
    }
  }

  Matrix c(basis_c.size(), basis_c.size());
  for (std::size_t a1 = 0; a1 < basis_a.size(); ++a1) {
    for (std::size_t b1 = 0; b1 < basis_a.size(); ++b1) {
      const Rational& x = a(a1, b1);
      if (is_zero(x)) continue;
      for (std::size_t a2 = 0; a2 < basis_b.size(); ++a2) {
        const std::size_t row = sum_position[a1][a2];
        for (std::size_t b2 = 0; b2 < basis_b.size(); ++b2) {
          const Rational& y = b(a2, b2);
          if (is_zero(y)) continue;
          c(row, sum_position[b1][b2]) += x * y;
        }
      }
    }
  }
  return SymMatrix(n, a.degree() + b.degree(), std::move(c));
}

}  // namespace sosgram
