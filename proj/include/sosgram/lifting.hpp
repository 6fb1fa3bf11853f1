#pragma once

#include <span>
#include <vector>

#include "sosgram/form.hpp"
#include "sosgram/matrix.hpp"
#include "sosgram/rational.hpp"

namespace sosgram {

/// Monomial basis normalization. Everything exact lives in the unscaled
/// basis; the scaled basis (x^α times √multinomial(α)) is only ever described
/// by its integer radicands.
enum class Basis { unscaled, scaled };

struct LiftedVector {
  int n = 0;
  int d = 0;
  Basis basis = Basis::unscaled;
  std::vector<Rational> entries;
};

/// x^[d]: every degree-d monomial evaluated at `point`, in basis order.
LiftedVector monomial_lift(std::span<const Rational> point, int d);

/// multinomial(α) for each α of the degree-d basis. The scaled lift is the
/// unscaled lift with entry i multiplied by √weights[i].
std::vector<Integer> scaled_lift_weights(int n, int d);

/// The unique A^[d] with A^[d] x^[d] = (Ax)^[d], built by expanding each
/// (Ax)^α symbolically.
Matrix induced_matrix(const Matrix& a, int d);

/// q(x) = p(Ax). On coefficient vectors this is v ↦ A^[d]ᵀ v.
Form act_on_coefficients(const Matrix& a, const Form& p);

}  // namespace sosgram
