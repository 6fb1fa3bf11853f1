#include <doctest.h>

#include "sosgram/error.hpp"
#include "sosgram/grams.hpp"
#include "sosgram/lifting.hpp"
#include "support.hpp"

using namespace sosgram;
using namespace sosgram::testing;

namespace {

Rational quadratic(const Matrix& q, const std::vector<Rational>& w) {
  Rational total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) total += w[i] * q(i, j) * w[j];
  }
  return total;
}

void check_verdict(const Matrix& q, const PsdVerdict& v) {
  if (v.is_psd) {
    CHECK(v.rank == rank(q));
  } else {
    REQUIRE(v.witness.size() == q.rows());
    CHECK(v.witness_value < 0);
    CHECK(quadratic(q, v.witness) == v.witness_value);
  }
}

}  // namespace

TEST_CASE("gram_eval") {
  CHECK(gram_eval(sym(2, 1, {{"2", "-1"}, {"-1", "5"}})) == binary({2, -2, 5}));
  CHECK(gram_eval(sym(2, 2, {{"1", "0", "1"}, {"0", "2", "0"}, {"1", "0", "3"}})) ==
        binary({1, 0, 4, 0, 3}));
  CHECK(gram_eval(SymMatrix(2, 2)).is_zero());
  CHECK(gram_eval(SymMatrix(2, 2)).degree() == 4);
}

TEST_CASE("gram_eval of the identity and trivial transforms") {
  CHECK(gram_eval(SymMatrix(2, 1, Matrix::identity(2))) == norm_squared(2));
  Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(1, 3);
    const int d = rng.integer(0, 3);
    const SymMatrix q = random_sym(rng, n, d);
    CHECK(gram_transform(q, Matrix::identity(n)) == q);
    const SymMatrix p = random_psd(rng, n, d, 2);
    CHECK(psd_check(gram_transform(p, random_matrix(rng, n, n))).is_psd);
  }
}

TEST_CASE("canonical_gram") {
  const Form p = power(norm_squared(2), 3);
  CHECK(canonical_gram(p) == sym(2, 3, {{"1", "0", "3/5", "0"},
                                        {"0", "9/5", "0", "3/5"},
                                        {"3/5", "0", "9/5", "0"},
                                        {"0", "3/5", "0", "1"}}));
  CHECK(canonical_gram(binary({1, 0, 0})) == sym(2, 1, {{"1", "0"}, {"0", "0"}}));
  CHECK(rank(canonical_gram(power(binary({1, 2}), 4)).entries()) == 1);
  CHECK_THROWS_AS(canonical_gram(binary({1, 0, 0, 1})), InputError);

  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.integer(1, 3);
    const int d = rng.integer(0, 3);
    const Form p = random_form(rng, n, 2 * d);
    const Form q = random_form(rng, n, 2 * d);
    const Rational a = rng.rational(), b = rng.rational();
    CHECK(gram_eval(canonical_gram(p)) == p);
    CHECK(canonical_gram(a * p + b * q) == a * canonical_gram(p) + b * canonical_gram(q));
  }
}

TEST_CASE("canonical_gram is equivariant under determinant-one substitutions") {
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = rng.integer(0, 3);
    const Form p = random_form(rng, 2, 2 * d);
    const Matrix a = random_shear_product(rng);
    CHECK(canonical_gram(act_on_coefficients(a, p)) == gram_transform(canonical_gram(p), a));
  }
}

TEST_CASE("gram_transform is a Gram matrix of the substituted form") {
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.integer(1, 3);
    const int d = rng.integer(0, 3);
    const SymMatrix q = random_sym(rng, n, d);
    const Matrix a = random_matrix(rng, n, n);
    CHECK(gram_eval(gram_transform(q, a)) == act_on_coefficients(a, gram_eval(q)));
  }
}

TEST_CASE("psd_check") {
  const SymMatrix indefinite = sym(2, 1, {{"1", "2"}, {"2", "1"}});
  const PsdVerdict v = psd_check(indefinite);
  CHECK_FALSE(v.is_psd);
  CHECK(v.witness_value == -2);
  check_verdict(indefinite.entries(), v);

  CHECK(psd_check(sym(2, 1, {{"2", "-1"}, {"-1", "5"}})).is_psd);
  CHECK(psd_check(sym(2, 1, {{"2", "-1"}, {"-1", "5"}})).rank == 2);
  CHECK(psd_check(Matrix::identity(4)).rank == 4);
  CHECK(psd_check(sym(2, 4, {{"2", "-1", "6/5", "-3/5", "0"},
                             {"-1", "43/5", "-12/5", "21/5", "-3/5"},
                             {"6/5", "-12/5", "63/5", "-12/5", "3"},
                             {"-3/5", "21/5", "-12/5", "11", "-1"},
                             {"0", "-3/5", "3", "-1", "5"}}))
            .is_psd);
  CHECK(v.witness == rationals({"1", "-1"}));
  CHECK(psd_check(SymMatrix(2, 2)).is_psd);
  CHECK(psd_check(SymMatrix(2, 2)).rank == 0);

  SUBCASE("zero pivot with a nonzero off-diagonal entry") {
    const SymMatrix q = sym(2, 2, {{"0", "1", "0"}, {"1", "3", "0"}, {"0", "0", "1"}});
    const PsdVerdict w = psd_check(q);
    CHECK_FALSE(w.is_psd);
    check_verdict(q.entries(), w);
  }
  SUBCASE("negative entry appearing after elimination") {
    const SymMatrix q = sym(2, 2, {{"1", "1", "1"}, {"1", "1", "1"}, {"1", "1", "0"}});
    const PsdVerdict w = psd_check(q);
    CHECK_FALSE(w.is_psd);
    check_verdict(q.entries(), w);
  }
}

TEST_CASE("psd_check agrees with the characteristic polynomial oracle") {
  Rng rng(34);
  int psd_count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t side = static_cast<std::size_t>(rng.integer(1, 8));
    Matrix q(side, side);
    if (trial % 2 == 0) {
      const Matrix w = random_matrix(rng, static_cast<std::size_t>(rng.integer(1, 8)), side);
      q = w.transpose() * w;
    } else {
      for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = i; j < side; ++j) q(i, j) = q(j, i) = rng.rational();
      }
    }
    const PsdVerdict v = psd_check(q);
    CHECK(v.is_psd == psd_by_sign_alternation(q));
    check_verdict(q, v);
    psd_count += v.is_psd ? 1 : 0;
  }
  CHECK(psd_count >= 50);
}

TEST_CASE("scaled_basis_view divides by square roots of multinomials") {
  const auto view = scaled_basis_view(canonical_gram(power(norm_squared(2), 3)));
  REQUIRE(view.size() == 4);
  CHECK(view[0][0] == doctest::Approx(1.0));
  CHECK(view[1][1] == doctest::Approx(0.6));
  CHECK(view[0][2] == doctest::Approx(0.6 / std::sqrt(3.0)));
}
