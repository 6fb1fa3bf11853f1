#pragma once

#include <array>
#include <vector>

#include "sosgram/form.hpp"
#include "sosgram/matrix.hpp"

namespace sosgram {

/// ψ_order(p, q) for binary forms via the expanded Ω process
///   Σ_k (-1)^k C(order,k) ∂^order p/∂x^{order-k}∂y^k · ∂^order q/∂x^k∂y^{order-k}.
/// No factorial normalization; ψ₀(p, q) = p·q.
Form transvectant(const Form& p, const Form& q, int order);

/// The order-two transvectant on (d+1)×(d+1) monomial-indexed symmetric
/// matrices, returning a (d-1)×(d-1) matrix. With 1-based indices,
///   d²(d-1)² T(A) = D₁ A[1..d-1, 3..d+1] D₂ - 2 D₃ A[2..d, 2..d] D₃
///                   + D₂ A[3..d+1, 1..d-1] D₁
/// with (D₁)ᵢᵢ = (d-i+1)(d-i), (D₂)ᵢᵢ = i(i+1), (D₃)ᵢᵢ = (d-i)i.
/// Binary forms only; requires d ≥ 2.
SymMatrix matrix_transvectant(const SymMatrix& a);

/// T applied `times` times (T⁰ is the identity).
SymMatrix matrix_transvectant_power(const SymMatrix& a, int times);

struct SupportComponent {
  int degree = 0;  ///< 2d - 4k for the k-th component
  Form form;       ///< x^[d-2k]ᵀ T^k(A) x^[d-2k]
  bool nonzero = false;
};

/// Components of a symmetric matrix under A ↔ Σ_k x^[d-2k]ᵀ T^k(A) x^[d-2k].
struct SupportProfile {
  int d = 0;
  std::vector<SupportComponent> components;

  std::vector<int> component_degrees() const;
  std::vector<bool> nonzero_mask() const;
  /// Number of nonzero components.
  int observed_components() const;
};

SupportProfile support_profile(const SymMatrix& a);

/// p = Σ_k parts[k] · (x² + y²)^{d-k}, each parts[k] harmonic of degree 2k.
struct HarmonicDecomposition {
  int half_degree = 0;
  std::vector<Form> parts;

  Form reconstruct() const;
};

/// {Re (x+iy)^m, Im (x+iy)^m} for m ≥ 1; {1, 0} for m = 0.
std::array<Form, 2> harmonic_basis(int m);

HarmonicDecomposition harmonic_decompose(const Form& p);

/// Largest k with parts[k] nonzero; 0 for the zero form.
int harmonic_support_bound(const HarmonicDecomposition& hd);

}  // namespace sosgram
