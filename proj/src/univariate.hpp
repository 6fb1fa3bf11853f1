#pragma once

// Internal univariate polynomial helpers for the binary SOS construction.

#include <complex>
#include <utility>
#include <vector>

#include "sosgram/rational.hpp"

namespace sosgram::detail {

/// Dense univariate polynomial over the rationals, ascending powers, with no
/// trailing zero coefficients (the zero polynomial is empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int power) const;
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  bool operator==(const UPoly& other) const = default;

 private:
  std::vector<Rational> c_;
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly power(const UPoly& p, int exponent);

/// Quotient and remainder of a / b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// Yun's algorithm: for monic f, returns {f₁, f₂, …} with f = ∏ fᵢ^i and
/// each fᵢ monic, squarefree and pairwise coprime.
std::vector<UPoly> squarefree_decomposition(const UPoly& monic_f);

/// Number of distinct real roots of squarefree p.
int count_real_roots(const UPoly& squarefree_p);

/// Disjoint intervals (a, b] each holding exactly one real root of squarefree
/// p, with p(a) and p(b) both nonzero.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& squarefree_p);

/// All complex roots (with multiplicity) by Aberth iteration and Newton polish.
std::vector<std::complex<double>> complex_roots(const UPoly& p);

}  // namespace sosgram::detail
