#include "sosgram/multi_index.hpp"

#include <numeric>

#include "sosgram/error.hpp"

namespace sosgram {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw InputError("negative exponent in multi-index");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (num_vars() != other.num_vars()) {
    throw InputError("multi-index variable count mismatch");
  }
  std::vector<int> sum(exponents_);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.exponents_[i];
  return MultiIndex(std::move(sum));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  // Reversed lexicographic comparison: a larger x₁ power sorts first.
  return other.exponents_ <=> exponents_;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& index) {
  os << '(';
  for (std::size_t i = 0; i < index.num_vars(); ++i) {
    if (i) os << ',';
    os << index[i];
  }
  return os << ')';
}

std::size_t basis_size(int n, int d) {
  if (n <= 0 || d < 0) throw InputError("basis size needs n >= 1 and d >= 0");
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(n + d - 1),
               static_cast<unsigned long>(d));
  return count.get_ui();
}

namespace {

void enumerate(int vars_left, int degree_left, std::vector<int>& prefix,
               std::vector<MultiIndex>& out) {
  if (vars_left == 1) {
    prefix.push_back(degree_left);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree_left; e >= 0; --e) {
    prefix.push_back(e);
    enumerate(vars_left - 1, degree_left - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> monomial_basis(int n, int d) {
  if (n <= 0 || d < 0) throw InputError("monomial basis needs n >= 1 and d >= 0");
  std::vector<MultiIndex> out;
  out.reserve(basis_size(n, d));
  std::vector<int> prefix;
  enumerate(n, d, prefix, out);
  return out;
}

Integer multinomial(const MultiIndex& index) {
  Integer result = 1;
  int running = 0;
  for (int e : index.exponents()) {
    for (int k = 1; k <= e; ++k) {
      ++running;
      result *= running;
      result /= k;
    }
  }
  return result;
}

BasisIndex::BasisIndex(int n, int d) : n_(n), d_(d), basis_(monomial_basis(n, d)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) position_.emplace(basis_[i], i);
}

std::size_t BasisIndex::position(const MultiIndex& index) const {
  auto it = position_.find(index);
  if (it == position_.end()) throw InputError("monomial not in basis");
  return it->second;
}

}  // namespace sosgram
