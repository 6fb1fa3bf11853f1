#include "sosgram/cgtools.hpp"

#include <string>

#include "sosgram/error.hpp"
#include "sosgram/grams.hpp"

namespace sosgram {

namespace {

void require_binary(int n, const char* op) {
  if (n != 2) {
    throw InputError(std::string(op) + ": only binary forms (n = 2) are supported, got n = " +
                     std::to_string(n));
  }
}

Form mixed_partial(const Form& p, int x_order, int y_order) {
  return partial_derivative(partial_derivative(p, 0, x_order), 1, y_order);
}

}  // namespace

Form transvectant(const Form& p, const Form& q, int order) {
  require_binary(p.num_vars(), "transvectant");
  require_binary(q.num_vars(), "transvectant");
  if (order < 0) throw InputError("transvectant: negative order");
  const int degree = p.degree() + q.degree() - 2 * order;
  Form result(2, std::max(degree, 0));
  if (order > p.degree() || order > q.degree()) return result;
  Integer binom = 1;
  for (int k = 0; k <= order; ++k) {
    Form term = mixed_partial(p, order - k, k) * mixed_partial(q, k, order - k);
    const Rational coeff = (k % 2 == 0) ? Rational(binom) : Rational(-binom);
    result = result + coeff * term;
    binom = binom * (order - k) / (k + 1);
  }
  return result;
}

SymMatrix matrix_transvectant(const SymMatrix& a) {
  require_binary(a.num_vars(), "matrix_transvectant");
  const int d = a.degree();
  if (d < 2) throw InputError("matrix_transvectant: needs d >= 2 (side >= 3)");
  const std::size_t m = static_cast<std::size_t>(d - 1);
  const Rational scale(1, d * d * (d - 1) * (d - 1));
  Matrix t(m, m);
  // 0-based r, c here; i = r + 1 in the 1-based diagonal formulas.
  auto d1 = [d](std::size_t r) { const int i = static_cast<int>(r) + 1; return (d - i + 1) * (d - i); };
  auto d2 = [](std::size_t r) { const int i = static_cast<int>(r) + 1; return i * (i + 1); };
  auto d3 = [d](std::size_t r) { const int i = static_cast<int>(r) + 1; return (d - i) * i; };
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      Rational value = Rational(d1(r) * d2(c)) * a(r, c + 2);
      value -= Rational(2 * d3(r) * d3(c)) * a(r + 1, c + 1);
      value += Rational(d2(r) * d1(c)) * a(r + 2, c);
      t(r, c) = scale * value;
    }
  }
  return SymMatrix(2, d - 2, std::move(t));
}

SymMatrix matrix_transvectant_power(const SymMatrix& a, int times) {
  if (times < 0) throw InputError("matrix_transvectant_power: negative power");
  SymMatrix result = a;
  for (int k = 0; k < times; ++k) result = matrix_transvectant(result);
  return result;
}

std::vector<int> SupportProfile::component_degrees() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(c.degree);
  return out;
}

std::vector<bool> SupportProfile::nonzero_mask() const {
  std::vector<bool> out;
  for (const auto& c : components) out.push_back(c.nonzero);
  return out;
}

int SupportProfile::observed_components() const {
  int count = 0;
  for (const auto& c : components) count += c.nonzero ? 1 : 0;
  return count;
}

SupportProfile support_profile(const SymMatrix& a) {
  require_binary(a.num_vars(), "support_profile");
  const int d = a.degree();
  SupportProfile profile;
  profile.d = d;
  SymMatrix current = a;
  bool reached_zero = current.is_zero();
  for (int k = 0; k <= d / 2; ++k) {
    const int degree = 2 * d - 4 * k;
    if (k > 0 && !reached_zero) {
      current = matrix_transvectant(current);
      reached_zero = current.is_zero();
    }
    if (reached_zero) {
      profile.components.push_back({degree, Form(2, degree), false});
      continue;
    }
    Form form = gram_eval(current);
    const bool nonzero = !form.is_zero();
    profile.components.push_back({degree, std::move(form), nonzero});
  }
  return profile;
}

Form HarmonicDecomposition::reconstruct() const {
  const int d = half_degree;
  Form total(2, 2 * d);
  const Form norm = norm_squared(2);
  for (int k = 0; k <= d; ++k) total = total + parts[k] * power(norm, d - k);
  return total;
}

std::array<Form, 2> harmonic_basis(int m) {
  if (m < 0) throw InputError("harmonic_basis: negative degree");
  if (m == 0) return {Form::constant(2, 1), Form(2, 0)};
  // (x + iy)^m = Σ_j C(m,j) x^{m-j} (iy)^j; i^j cycles 1, i, -1, -i.
  std::vector<Rational> re(m + 1), im(m + 1);
  Integer binom = 1;
  for (int j = 0; j <= m; ++j) {
    switch (j % 4) {
      case 0: re[j] = binom; break;
      case 1: im[j] = binom; break;
      case 2: re[j] = -binom; break;
      case 3: im[j] = -binom; break;
    }
    binom = binom * (m - j) / (j + 1);
  }
  return {Form::from_dense(2, m, re), Form::from_dense(2, m, im)};
}

HarmonicDecomposition harmonic_decompose(const Form& p) {
  require_binary(p.num_vars(), "harmonic_decompose");
  if (p.degree() % 2 != 0) throw InputError("harmonic_decompose: form degree must be even");
  const int d = p.degree() / 2;
  const Form norm = norm_squared(2);

  // Columns: h · (x²+y²)^{d-k} for h in the degree-2k harmonic basis.
  struct Column {
    int k;
    Form harmonic;
  };
  std::vector<Column> columns;
  std::vector<std::vector<Rational>> column_coeffs;
  for (int k = 0; k <= d; ++k) {
    const auto basis = harmonic_basis(2 * k);
    const Form shift = power(norm, d - k);
    for (int b = 0; b < (k == 0 ? 1 : 2); ++b) {
      columns.push_back({k, basis[b]});
      column_coeffs.push_back((basis[b] * shift).dense());
    }
  }
  const std::size_t side = columns.size();
  Matrix system(side, side);
  for (std::size_t c = 0; c < side; ++c) {
    for (std::size_t r = 0; r < side; ++r) system(r, c) = column_coeffs[c][r];
  }
  auto solution = solve(system, p.dense());
  if (!solution) throw InternalError("harmonic_decompose: basis system is singular");

  HarmonicDecomposition hd;
  hd.half_degree = d;
  for (int k = 0; k <= d; ++k) hd.parts.emplace_back(2, 2 * k);
  for (std::size_t c = 0; c < side; ++c) {
    const int k = columns[c].k;
    hd.parts[k] = hd.parts[k] + (*solution)[c] * columns[c].harmonic;
  }
  return hd;
}

int harmonic_support_bound(const HarmonicDecomposition& hd) {
  for (int k = static_cast<int>(hd.parts.size()) - 1; k > 0; --k) {
    if (!hd.parts[k].is_zero()) return k;
  }
  return 0;
}

}  // namespace sosgram
