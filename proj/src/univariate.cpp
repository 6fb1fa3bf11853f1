#include "univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sosgram/error.hpp"

namespace sosgram::detail {

UPoly::UPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  while (!c_.empty() && sosgram::is_zero(c_.back())) c_.pop_back();
}

Rational UPoly::coefficient(int power) const {
  return power >= 0 && power < static_cast<int>(c_.size()) ? c_[power] : Rational(0);
}

Rational UPoly::operator()(const Rational& t) const {
  Rational value = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) value = value * t + *it;
  return value;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> m = c_;
  const Rational lead = leading();
  for (auto& x : m) x /= lead;
  return UPoly(std::move(m));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> s(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
  }
  return UPoly(std::move(s));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> s(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
  }
  return UPoly(std::move(s));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> s(a.coefficients().size() + b.coefficients().size() - 1);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
      s[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
  }
  return UPoly(std::move(s));
}

UPoly power(const UPoly& p, int exponent) {
  UPoly result(std::vector<Rational>{1});
  for (int i = 0; i < exponent; ++i) result = result * p;
  return result;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(a.degree() - b.degree() + 1);
  const auto& bc = b.coefficients();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    quot[i] = rem[i + b.degree()] / b.leading();
    for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= quot[i] * bc[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& f) {
  std::vector<UPoly> factors;
  if (f.degree() <= 0) return factors;
  const UPoly df = f.derivative();
  const UPoly a0 = gcd(f, df);
  UPoly b = divmod(f, a0).first;
  UPoly c = divmod(df, a0).first;
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly a = gcd(b, d);
    factors.push_back(a.monic());
    UPoly b_next = divmod(b, a).first;
    c = divmod(d, a).first;
    b = std::move(b_next);
    d = c - b.derivative();
  }
  // Drop the trailing constant factors Yun's loop can leave at high powers.
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

namespace {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(UPoly(std::vector<Rational>{}) - r);
  }
  seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at(const std::vector<UPoly>& seq, const Rational& t) {
  std::vector<int> signs;
  for (const auto& q : seq) signs.push_back(sgn(q(t)));
  return sign_changes(signs);
}

int variations_at_infinity(const std::vector<UPoly>& seq, bool positive) {
  std::vector<int> signs;
  for (const auto& q : seq) {
    if (q.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

Rational root_bound(const UPoly& p) {
  Rational bound = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(p.coefficients()[i] / p.leading());
    if (ratio > bound) bound = ratio;
  }
  return bound + 1;
}

}  // namespace

int count_real_roots(const UPoly& p) {
  if (p.degree() <= 0) return 0;
  const auto seq = sturm_sequence(p);
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  const auto seq = sturm_sequence(p);
  const Rational bound = root_bound(p);
  // Roots lie strictly inside (-bound, bound); neither endpoint is a root.
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int count = variations_at(seq, lo) - variations_at(seq, hi);
    if (count == 0) continue;
    if (count == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    // Nudge the split point off any root so endpoints stay nonzero.
    Rational step = (hi - lo) / 7;
    while (is_zero(p(mid))) {
      mid += step;
      step /= 3;
    }
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::complex<double>> complex_roots(const UPoly& p) {
  using cd = std::complex<double>;
  const int n = p.degree();
  std::vector<cd> roots;
  if (n <= 0) return roots;
  std::vector<double> c;
  const UPoly monic = p.monic();
  for (const auto& x : monic.coefficients()) c.push_back(x.get_d());

  auto eval = [&](cd z, cd& value, cd& deriv) {
    value = 0;
    deriv = 0;
    for (int i = n; i >= 0; --i) {
      deriv = deriv * z + value;
      value = value * z + c[i];
    }
  };

  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::fabs(c[i]), 1.0 / (n - i)));
  radius = std::max(radius, 1e-3);
  for (int k = 0; k < n; ++k) {
    const double angle = 2 * std::numbers::pi * k / n + 0.4;
    roots.push_back(radius * cd(std::cos(angle), std::sin(angle)));
  }

  for (int iter = 0; iter < 1000; ++iter) {
    double max_step = 0;
    for (int k = 0; k < n; ++k) {
      cd value, deriv;
      eval(roots[k], value, deriv);
      if (value == cd(0)) continue;
      const cd ratio = value / deriv;
      cd repulsion = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (roots[k] - roots[j]);
      }
      const cd step = ratio / (1.0 - ratio * repulsion);
      roots[k] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(roots[k])));
    }
    if (max_step < 1e-16) break;
  }
  // A few Newton steps to clean up the last bits.
  for (auto& z : roots) {
    for (int iter = 0; iter < 3; ++iter) {
      cd value, deriv;
      eval(z, value, deriv);
      if (deriv == cd(0)) break;
      z -= value / deriv;
    }
  }
  return roots;
}

}  // namespace sosgram::detail
