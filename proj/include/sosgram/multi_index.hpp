#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <vector>

#include "sosgram/rational.hpp"

namespace sosgram {

/// Exponent vector of a monomial x₁^e₁ ⋯ xₙ^eₙ.
///
/// Ordering is graded lexicographic with the x₁ power descending, so for
/// n = 2, d = 3 the basis reads x³, x²y, xy², y³. This order is the row and
/// column contract for every vector and matrix in the library.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  std::size_t num_vars() const { return exponents_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }

  MultiIndex operator+(const MultiIndex& other) const;

  bool operator==(const MultiIndex& other) const { return exponents_ == other.exponents_; }
  /// Lower degree first; within a degree, lexicographically larger first.
  std::strong_ordering operator<=>(const MultiIndex& other) const;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& index);

/// Number of degree-d monomials in n variables, C(n+d-1, d).
std::size_t basis_size(int n, int d);

/// All degree-d monomials in n variables, in the global order.
std::vector<MultiIndex> monomial_basis(int n, int d);

/// (|α|)! / ∏ αᵢ!
Integer multinomial(const MultiIndex& index);

/// Position lookup for one monomial basis.
class BasisIndex {
 public:
  BasisIndex(int n, int d);

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return basis_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<MultiIndex>& monomials() const { return basis_; }
  std::size_t position(const MultiIndex& index) const;

 private:
  int n_;
  int d_;
  std::vector<MultiIndex> basis_;
  std::map<MultiIndex, std::size_t> position_;
};

}  // namespace sosgram
