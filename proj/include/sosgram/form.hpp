#pragma once

#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "sosgram/multi_index.hpp"
#include "sosgram/rational.hpp"

namespace sosgram {

/// Homogeneous polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so two forms are mathematically equal
/// exactly when their term maps are equal.
class Form {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  /// The zero form of the given shape.
  Form(int n, int degree);
  /// Validates homogeneity and variable count; drops zero coefficients.
  Form(int n, int degree, Terms terms);

  /// Coefficients listed in the order of monomial_basis(n, degree).
  static Form from_dense(int n, int degree, std::span<const Rational> coefficients);
  static Form monomial(const MultiIndex& index, Rational coefficient = 1);
  static Form constant(int n, Rational value);

  int num_vars() const { return n_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiIndex& index) const;
  /// Coefficient vector in monomial_basis order.
  std::vector<Rational> dense() const;

  bool operator==(const Form& other) const = default;

 private:
  int n_;
  int degree_;
  Terms terms_;
};

Form operator+(const Form& a, const Form& b);
Form operator-(const Form& a, const Form& b);
Form operator-(const Form& a);
Form operator*(const Form& a, const Form& b);
Form operator*(const Rational& scale, const Form& p);

Form power(const Form& p, int exponent);

/// Exact value of p at the point.
Rational evaluate(const Form& p, std::span<const Rational> point);

/// Σᵢ ∂²p/∂xᵢ². Forms of degree below 2 map to the zero form of degree 0.
Form laplacian(const Form& p);

/// ∂^order p / ∂x_variable^order.
Form partial_derivative(const Form& p, int variable, int order = 1);

/// cᵀx
Form linear_form(std::span<const Rational> c);
/// x₁² + … + xₙ²
Form norm_squared(int n);

/// Exact quotient of binary forms; throws InputError if the divisor has a
/// zero x-leading coefficient and std::domain_error if it does not divide p.
Form exact_divide(const Form& p, const Form& divisor);

std::ostream& operator<<(std::ostream& os, const Form& p);

}  // namespace sosgram
