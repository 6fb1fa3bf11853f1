#pragma once

#include "sosgram/matrix.hpp"

namespace sosgram {

/// Symmetric tensor product A ⊙ B on monomial-indexed symmetric matrices:
///   (A ⊙ B)_{α,β} = Σ_{α₁+α₂=α, β₁+β₂=β} A_{α₁,β₁} B_{α₂,β₂}.
///
/// If A and B are Gram matrices of p and q, A ⊙ B is a Gram matrix of p·q,
/// and A, B ⪰ 0 implies A ⊙ B ⪰ 0. Defined for any number of variables.
SymMatrix sym_tensor_product(const SymMatrix& a, const SymMatrix& b);

}  // namespace sosgram
