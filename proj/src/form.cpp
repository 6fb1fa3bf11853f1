#include "sosgram/form.hpp"

#include <stdexcept>
#include <string>

#include "sosgram/error.hpp"

namespace sosgram {

namespace {

void require_same_vars(const Form& a, const Form& b, const char* op) {
  if (a.num_vars() != b.num_vars()) {
    throw InputError(std::string(op) + ": variable count mismatch (" +
                     std::to_string(a.num_vars()) + " vs " + std::to_string(b.num_vars()) + ")");
  }
}

}  // namespace

Form::Form(int n, int degree) : n_(n), degree_(degree) {
  if (n <= 0) throw InputError("form needs at least one variable");
  if (degree < 0) throw InputError("form degree must be nonnegative");
}

Form::Form(int n, int degree, Terms terms) : Form(n, degree) {
  for (auto& [index, coeff] : terms) {
    if (static_cast<int>(index.num_vars()) != n) {
      throw InputError("term has wrong number of variables");
    }
    if (index.degree() != degree) {
      throw InputError("term degree differs from form degree (not homogeneous)");
    }
    if (!sosgram::is_zero(coeff)) terms_.emplace(index, std::move(coeff));
  }
}

Form Form::from_dense(int n, int degree, std::span<const Rational> coefficients) {
  const auto basis = monomial_basis(n, degree);
  if (coefficients.size() != basis.size()) {
    throw InputError("dense coefficient vector has wrong length");
  }
  Terms terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!sosgram::is_zero(coefficients[i])) terms.emplace(basis[i], coefficients[i]);
  }
  return Form(n, degree, std::move(terms));
}

Form Form::monomial(const MultiIndex& index, Rational coefficient) {
  Terms terms;
  terms.emplace(index, std::move(coefficient));
  return Form(static_cast<int>(index.num_vars()), index.degree(), std::move(terms));
}

Form Form::constant(int n, Rational value) {
  return monomial(MultiIndex(std::vector<int>(n, 0)), std::move(value));
}

Rational Form::coefficient(const MultiIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Form::dense() const {
  std::vector<Rational> out;
  for (const auto& m : monomial_basis(n_, degree_)) out.push_back(coefficient(m));
  return out;
}

Form operator+(const Form& a, const Form& b) {
  require_same_vars(a, b, "form_add");
  if (a.degree() != b.degree()) throw InputError("form_add: degree mismatch");
  Form::Terms terms = a.terms();
  for (const auto& [index, coeff] : b.terms()) terms[index] += coeff;
  return Form(a.num_vars(), a.degree(), std::move(terms));
}

Form operator-(const Form& a) { return Rational(-1) * a; }

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form operator*(const Form& a, const Form& b) {
  require_same_vars(a, b, "form_mul");
  Form::Terms terms;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      Rational product = ca * cb;
      terms[ia + ib] += product;
    }
  }
  return Form(a.num_vars(), a.degree() + b.degree(), std::move(terms));
}

Form operator*(const Rational& scale, const Form& p) {
  Form::Terms terms;
  if (!is_zero(scale)) {
    for (const auto& [index, coeff] : p.terms()) terms.emplace(index, scale * coeff);
  }
  return Form(p.num_vars(), p.degree(), std::move(terms));
}

Form power(const Form& p, int exponent) {
  if (exponent < 0) throw InputError("negative exponent");
  Form result = Form::constant(p.num_vars(), 1);
  Form base = p;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Rational evaluate(const Form& p, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != p.num_vars()) {
    throw InputError("form_eval: point has wrong length");
  }
  Rational total = 0;
  for (const auto& [index, coeff] : p.terms()) {
    Rational term = coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < index[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

Form partial_derivative(const Form& p, int variable, int order) {
  if (variable < 0 || variable >= p.num_vars()) {
    throw InputError("partial_derivative: variable out of range");
  }
  if (order < 0) throw InputError("partial_derivative: negative order");
  const int degree = std::max(p.degree() - order, 0);
  Form::Terms terms;
  if (order <= p.degree()) {
    for (const auto& [index, coeff] : p.terms()) {
      const int e = index[variable];
      if (e < order) continue;
      Rational c = coeff;
      for (int k = 0; k < order; ++k) c *= e - k;
      std::vector<int> exps = index.exponents();
      exps[variable] -= order;
      terms.emplace(MultiIndex(std::move(exps)), std::move(c));
    }
  }
  return Form(p.num_vars(), degree, std::move(terms));
}

Form laplacian(const Form& p) {
  if (p.degree() < 2) return Form(p.num_vars(), 0);
  Form result(p.num_vars(), p.degree() - 2);
  for (int i = 0; i < p.num_vars(); ++i) result = result + partial_derivative(p, i, 2);
  return result;
}

Form linear_form(std::span<const Rational> c) {
  return Form::from_dense(static_cast<int>(c.size()), 1, c);
}

Form norm_squared(int n) {
  Form::Terms terms;
  for (int i = 0; i < n; ++i) {
    std::vector<int> exps(n, 0);
    exps[i] = 2;
    terms.emplace(MultiIndex(std::move(exps)), 1);
  }
  return Form(n, 2, std::move(terms));
}

Form exact_divide(const Form& p, const Form& divisor) {
  require_same_vars(p, divisor, "exact_divide");
  if (p.num_vars() != 2) throw InputError("exact_divide: binary forms only");
  if (divisor.is_zero()) throw InputError("exact_divide: division by zero form");
  if (divisor.degree() > p.degree()) {
    if (p.is_zero()) return Form(2, 0);
    throw std::domain_error("exact_divide: divisor degree exceeds dividend degree");
  }
  // Coefficient j of a binary form of degree m sits on x^{m-j} y^j.
  const std::vector<Rational> a = p.dense();
  const std::vector<Rational> b = divisor.dense();
  if (is_zero(b[0])) throw InputError("exact_divide: divisor has zero x-leading coefficient");
  const int qdeg = p.degree() - divisor.degree();
  std::vector<Rational> q(qdeg + 1);
  std::vector<Rational> rem = a;
  for (int i = 0; i <= qdeg; ++i) {
    q[i] = rem[i] / b[0];
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= q[i] * b[j];
  }
  for (const auto& r : rem) {
    if (!is_zero(r)) throw std::domain_error("exact_divide: nonzero remainder");
  }
  return Form::from_dense(2, qdeg, q);
}

std::ostream& operator<<(std::ostream& os, const Form& p) {
  if (p.is_zero()) return os << "0 [deg " << p.degree() << "]";
  bool first = true;
  for (const auto& [index, coeff] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << coeff.get_str() << "*x^" << index;
  }
  return os;
}

}  // namespace sosgram
