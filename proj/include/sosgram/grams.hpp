#pragma once

#include <span>
#include <vector>

#include "sosgram/form.hpp"
#include "sosgram/matrix.hpp"

namespace sosgram {

/// p(x) = x^[d]ᵀ Q x^[d]; the coefficient of x^γ is Σ_{α+β=γ} Q_{α,β}.
Form gram_eval(const SymMatrix& q);

/// A^[d]ᵀ Q A^[d], a Gram matrix of p(Ax) when Q is one of p.
SymMatrix gram_transform(const SymMatrix& q, const Matrix& a);

/// Canonical Gram matrix in the unscaled basis:
///   G[p]_{α,β} = c_{α+β} · mult(α) · mult(β) / mult(α+β)
/// where mult is the multinomial coefficient. Requires even degree.
SymMatrix canonical_gram(const Form& p);

/// Outcome of the exact psd test.
///
/// When `is_psd` is false, `witness` is a rational vector w with
/// wᵀQw = `witness_value` < 0. When it is true, `rank` is the exact rank.
struct PsdVerdict {
  bool is_psd = true;
  std::size_t rank = 0;
  std::vector<Rational> witness;
  Rational witness_value;
};

/// Symmetric elimination with positive diagonal pivots, exact.
PsdVerdict psd_check(const SymMatrix& q);
PsdVerdict psd_check(const Matrix& q);

/// wᵀ Q w
Rational quadratic_form(const Matrix& q, std::span<const Rational> w);

/// Approximate view of Q in the scaled monomial basis, D^{-1/2} Q D^{-1/2}
/// with D the multinomial weights. Display only.
std::vector<std::vector<double>> scaled_basis_view(const SymMatrix& q);

}  // namespace sosgram
