#include "sosgram/structured.hpp"

#include <algorithm>
#include <complex>
#include <random>
#include <stdexcept>

#include "sosgram/error.hpp"
#include "sosgram/symprod.hpp"
#include "univariate.hpp"

namespace sosgram {

namespace {

using detail::UPoly;

void require_binary(const Form& p, const char* op) {
  if (p.num_vars() != 2) throw InputError(std::string(op) + ": binary forms only");
}

[[noreturn]] void throw_not_psd(const std::string& what, const PsdVerdict& verdict) {
  throw PreconditionError(what, PreconditionError::WitnessKind::quadratic_form_vector,
                          verdict.witness, verdict.witness_value);
}

/// f(t) = q(t, 1) after stripping the y^m factor; `m` receives that power.
UPoly dehomogenize(const Form& q, int& m) {
  const std::vector<Rational> a = q.dense();
  const int degree = q.degree();
  m = 0;
  while (m <= degree && is_zero(a[m])) ++m;
  std::vector<Rational> ascending(degree - m + 1);
  for (int j = m; j <= degree; ++j) ascending[degree - j] = a[j];
  return UPoly(std::move(ascending));
}

/// Coefficient vector (basis order) of y^{extra} · y^{deg f} f(x/y), as a
/// binary form of degree deg f + extra.
std::vector<Rational> homogenize(const UPoly& f, int extra) {
  const int degree = f.degree() + extra;
  std::vector<Rational> v(degree + 1);
  for (int j = 0; j <= degree; ++j) v[j] = f.coefficient(degree - j);
  return v;
}

/// Searches exact rational points for q < 0; throws when one is found.
void reject_if_negative_somewhere(const Form& q, int m, const UPoly& f) {
  std::vector<std::vector<Rational>> candidates;
  candidates.push_back({1, 0});
  for (int t = -4; t <= 4; ++t) candidates.push_back({t, 1});
  if (f.degree() > 0) {
    UPoly squarefree = UPoly(std::vector<Rational>{1});
    for (const auto& factor : detail::squarefree_decomposition(f.monic())) {
      squarefree = squarefree * factor;
    }
    for (const auto& [lo, hi] : detail::isolate_real_roots(squarefree)) {
      candidates.push_back({lo, 1});
      candidates.push_back({hi, 1});
    }
  }
  if (m % 2 == 1) {
    Rational eps = 1;
    for (int j = 0; j < 256; ++j) {
      eps /= 2;
      candidates.push_back({1, eps});
      candidates.push_back({1, -eps});
    }
  }
  for (const auto& point : candidates) {
    const Rational value = evaluate(q, point);
    if (sgn(value) < 0) {
      throw PreconditionError("form is negative at a point, so it is not nonnegative (not SOS)",
                              PreconditionError::WitnessKind::evaluation_point, point, value);
    }
  }
}

/// Adds each residual coefficient of a degree-2b binary form onto the
/// diagonal (even y power) or the first off-diagonal (odd y power).
Matrix fold_residual(Matrix g, const Form& residual) {
  const std::vector<Rational> r = residual.dense();
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (is_zero(r[j])) continue;
    if (j % 2 == 0) {
      g(j / 2, j / 2) += r[j];
    } else {
      const Rational half = r[j] / 2;
      g((j - 1) / 2, (j + 1) / 2) += half;
      g((j + 1) / 2, (j - 1) / 2) += half;
    }
  }
  return g;
}

/// psd Gram matrix of a monic, strictly positive, squarefree r(t) of even
/// degree 2b, homogenized to a binary form of degree 2b.
SymMatrix positive_factor_gram(const UPoly& r, const RootPairingOptions& options) {
  using cd = std::complex<double>;
  const int b = r.degree() / 2;
  if (b == 0) return SymMatrix::from_rows(2, 0, {{Rational(1)}});

  const auto roots = detail::complex_roots(r);
  std::vector<cd> upper, lower;
  for (const auto& z : roots) (z.imag() > 0 ? upper : lower).push_back(z);
  if (static_cast<int>(upper.size()) != b || static_cast<int>(lower.size()) != b) {
    throw NumericFailure("root pairing: computed roots are not split evenly across the real axis; "
                         "use exact-input mode");
  }
  // Match conjugates and average the pair for a symmetric estimate.
  std::vector<cd> chosen;
  std::vector<bool> used(lower.size(), false);
  for (const auto& z : upper) {
    std::size_t best = lower.size();
    double best_dist = 0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (used[i]) continue;
      const double dist = std::abs(z - std::conj(lower[i]));
      if (best == lower.size() || dist < best_dist) {
        best = i;
        best_dist = dist;
      }
    }
    if (best_dist > options.pairing_tolerance * std::max(1.0, std::abs(z))) {
      throw NumericFailure("root pairing: no conjugate partner within tolerance; use exact-input mode");
    }
    used[best] = true;
    chosen.push_back((z + std::conj(lower[best])) / 2.0);
  }

  // Averaging over which root of each conjugate pair enters h keeps the
  // floating Gram matrix away from the boundary of the psd cone.
  const int choice_bits = std::min(b, 10);
  const std::size_t choices = std::size_t{1} << choice_bits;
  const std::size_t side = static_cast<std::size_t>(b) + 1;
  std::vector<std::vector<double>> g(side, std::vector<double>(side, 0.0));
  for (std::size_t mask = 0; mask < choices; ++mask) {
    std::vector<cd> h{cd(1)};  // ascending powers of t
    for (int i = 0; i < b; ++i) {
      const cd root = (i < choice_bits && (mask >> i) & 1) ? std::conj(chosen[i]) : chosen[i];
      std::vector<cd> next(h.size() + 1, cd(0));
      for (std::size_t j = 0; j < h.size(); ++j) {
        next[j + 1] += h[j];
        next[j] -= root * h[j];
      }
      h = std::move(next);
    }
    // Basis position j holds x^{b-j} y^j, i.e. t^{b-j}.
    for (std::size_t i = 0; i < side; ++i) {
      for (std::size_t j = 0; j < side; ++j) {
        const cd& hi = h[b - i];
        const cd& hj = h[b - j];
        g[i][j] += hi.real() * hj.real() + hi.imag() * hj.imag();
      }
    }
  }
  Matrix rational_g(side, side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = i; j < side; ++j) {
      rational_g(i, j) = rationalize(g[i][j] / static_cast<double>(choices));
      rational_g(j, i) = rational_g(i, j);
    }
  }
  const Form target = Form::from_dense(2, 2 * b, homogenize(r, 0));
  const Form residual = target - gram_eval(SymMatrix(2, b, rational_g));
  SymMatrix repaired(2, b, fold_residual(std::move(rational_g), residual));
  const PsdVerdict verdict = psd_check(repaired);
  if (!verdict.is_psd) {
    throw NumericFailure(
        "root pairing: rationalized Gram matrix failed the exact psd check; use exact-input mode",
        PreconditionError::WitnessKind::quadratic_form_vector, verdict.witness,
        verdict.witness_value);
  }
  return repaired;
}

Certificate zero_certificate(const Form& p) {
  const int d = p.degree() / 2;
  SymMatrix zero(2, d);
  Certificate cert{p,
                   zero,
                   psd_check(zero),
                   support_profile(zero),
                   {"zero form", Form(2, 0), Form(2, p.degree()), zero, "zero"},
                   {0, 1, 1}};
  return cert;
}

}  // namespace

SymMatrix sos_gram_binary_exact(const Form& q, const SymMatrix& candidate) {
  require_binary(q, "sos_gram_binary");
  if (candidate.num_vars() != 2 || 2 * candidate.degree() != q.degree()) {
    throw InputError("supplied Gram matrix has the wrong shape for the form");
  }
  if (gram_eval(candidate) != q) throw InputError("supplied matrix is not a Gram matrix of the form");
  const PsdVerdict verdict = psd_check(candidate);
  if (!verdict.is_psd) throw_not_psd("supplied Gram matrix is not psd", verdict);
  return candidate;
}

SymMatrix sos_gram_binary_roots(const Form& q, const RootPairingOptions& options) {
  require_binary(q, "sos_gram_binary");
  if (q.degree() % 2 != 0) {
    // q(-v) = -q(v), so any point where q is nonzero yields a negative value.
    for (int t = -q.degree() - 1; t <= q.degree() + 1 && !q.is_zero(); ++t) {
      std::vector<Rational> point{t, 1};
      Rational value = evaluate(q, point);
      if (is_zero(value)) continue;
      if (sgn(value) > 0) {
        point = {-t, -1};
        value = -value;
      }
      throw PreconditionError("odd-degree form takes negative values (not SOS)",
                              PreconditionError::WitnessKind::evaluation_point, point, value);
    }
    throw InputError("sos_gram_binary: odd degree");
  }
  const int k = q.degree() / 2;
  if (q.is_zero()) return SymMatrix(2, k);

  int m = 0;
  const UPoly f = dehomogenize(q, m);
  const Rational lead = f.leading();
  const auto factors = detail::squarefree_decomposition(f.monic());
  UPoly square_root(std::vector<Rational>{1});
  UPoly positive(std::vector<Rational>{1});
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int multiplicity = static_cast<int>(i) + 1;
    square_root = square_root * detail::power(factors[i], multiplicity / 2);
    if (multiplicity % 2 == 1) positive = positive * factors[i];
  }
  if (m % 2 == 1 || sgn(lead) < 0 || detail::count_real_roots(positive) > 0) {
    reject_if_negative_somewhere(q, m, f);
    throw InternalError("sos_gram_binary: negativity detected but no witness point found");
  }

  // q = lead · (y^{m/2} S)² · R with R strictly positive.
  const std::vector<Rational> s = homogenize(square_root, m / 2);
  const int s_degree = static_cast<int>(s.size()) - 1;
  const SymMatrix square_gram(2, s_degree, outer(s, s));
  const SymMatrix positive_gram = positive_factor_gram(positive, options);
  SymMatrix gram = lead * sym_tensor_product(square_gram, positive_gram);

  if (gram_eval(gram) != q) throw InternalError("sos_gram_binary: Gram round trip failed");
  const PsdVerdict verdict = psd_check(gram);
  if (!verdict.is_psd) throw InternalError("sos_gram_binary: product of psd factors is not psd");
  return gram;
}

Certificate structured_gram(const Form& sopl_factor, const SymMatrix& other_gram,
                            const std::string& other_gram_source) {
  require_binary(sopl_factor, "structured_gram");
  if (other_gram.num_vars() != 2) throw InputError("structured_gram: other Gram matrix must be binary");
  if (sopl_factor.degree() % 2 != 0) throw InputError("structured_gram: sopl factor degree must be even");

  const SymMatrix sopl_gram = canonical_gram(sopl_factor);
  const PsdVerdict sopl_verdict = psd_check(sopl_gram);
  if (!sopl_verdict.is_psd) {
    throw_not_psd("canonical Gram matrix of the sopl factor is not psd, so the factor is not a "
                  "sum of even powers of linear forms",
                  sopl_verdict);
  }
  const PsdVerdict other_verdict = psd_check(other_gram);
  if (!other_verdict.is_psd) throw_not_psd("other Gram matrix is not psd", other_verdict);

  const Form other_factor = gram_eval(other_gram);
  Certificate cert{sopl_factor * other_factor,
                   sym_tensor_product(sopl_gram, other_gram),
                   {},
                   {},
                   {"canonical_gram(sopl_factor) (.) other_gram", sopl_factor, other_factor,
                    other_gram, other_gram_source},
                   {}};

  if (gram_eval(cert.gram) != cert.target) {
    throw InternalError("structured_gram: Gram round trip failed");
  }
  cert.psd = psd_check(cert.gram);
  if (!cert.psd.is_psd) throw InternalError("structured_gram: result is not psd");

  const int d2 = other_gram.degree();
  SymMatrix chain = cert.gram;
  for (int step = 0; step <= d2 && chain.degree() >= 2 && !chain.is_zero(); ++step) {
    chain = matrix_transvectant(chain);
    if (step == d2 && !chain.is_zero()) {
      throw InternalError("structured_gram: T^{d2+1}(gram) is nonzero");
    }
  }

  cert.profile = support_profile(cert.gram);
  cert.components.observed = cert.profile.observed_components();
  cert.components.theorem_claim = (d2 + 1) / 2 + 1;
  cert.components.lemma_bound = d2 + 1;
  if (cert.components.observed > cert.components.lemma_bound) {
    throw InternalError("structured_gram: more components than T^{d2+1} = 0 allows");
  }
  return cert;
}

Certificate corollary_pipeline(const Form& p, const PipelineOptions& options) {
  require_binary(p, "corollary_pipeline");
  if (p.degree() % 2 != 0) throw InputError("corollary_pipeline: form degree must be even");
  if (p.is_zero()) return zero_certificate(p);

  const int d = p.degree() / 2;
  const int k = harmonic_support_bound(harmonic_decompose(p));
  const Form sopl = power(norm_squared(2), d - k);
  Form quotient(2, 2 * k);
  try {
    quotient = exact_divide(p, sopl);
  } catch (const std::domain_error&) {
    throw InternalError("corollary_pipeline: p is not divisible by (x^2+y^2)^(d-k)");
  }

  SymMatrix quotient_gram(2, k);
  std::string source;
  if (options.mode == GramMode::exact_input) {
    if (!options.quotient_gram) throw InputError("exact-input mode needs a quotient Gram matrix");
    quotient_gram = sos_gram_binary_exact(quotient, *options.quotient_gram);
    source = "supplied";
  } else {
    if (options.quotient_gram) {
      throw InputError("a quotient Gram matrix was supplied but the mode is root-pairing");
    }
    quotient_gram = sos_gram_binary_roots(quotient, options.roots);
    source = "root-pairing";
  }
  return structured_gram(sopl, quotient_gram, source);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<TheoremTrial> theorem_experiment(int d1, int d2, int trials, std::uint64_t seed) {
  if (d1 < 0 || d2 < 0 || trials < 0) throw InputError("theorem_experiment: negative parameter");
  std::vector<TheoremTrial> rows;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(s);
    auto draw = [&rng](int lo, int hi) {
      return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    Form sopl(2, 2 * d1);
    for (int term = 0; term < 3; ++term) {
      int a = 0, b = 0;
      while (a == 0 && b == 0) {
        a = draw(-3, 3);
        b = draw(-3, 3);
      }
      const std::vector<Rational> c{a, b};
      sopl = sopl + power(linear_form(c), 2 * d1);
    }
    const std::size_t side = static_cast<std::size_t>(d2) + 1;
    Matrix w(side, side);
    for (std::size_t i = 0; i < side; ++i) {
      for (std::size_t j = 0; j < side; ++j) w(i, j) = draw(-3, 3);
    }
    const SymMatrix m(2, d2, w.transpose() * w);
    const Certificate cert = structured_gram(sopl, m, "random W^T W");
    rows.push_back({s, d1, d2, cert.components});
  }
  return rows;
}

}  // namespace sosgram
