#include <doctest.h>

#include "sosgram/cgtools.hpp"
#include "sosgram/error.hpp"
#include "sosgram/grams.hpp"
#include "sosgram/structured.hpp"
#include "sosgram/symprod.hpp"
#include "support.hpp"

using namespace sosgram;
using namespace sosgram::testing;

namespace {

const SymMatrix kQuotientGram = sym(2, 1, {{"2", "-1"}, {"-1", "5"}});

Form worked_example() { return power(norm_squared(2), 3) * binary({2, -2, 5}); }

/// Random Σ (a x + b y)^{2 d1} with integer a, b.
Form random_sopl(Rng& rng, int d1, int terms) {
  Form p(2, 2 * d1);
  for (int i = 0; i < terms; ++i) {
    p = p + power(binary({rng.integer(-3, 3), rng.integer(-3, 3)}), 2 * d1);
  }
  return p;
}

/// Re-derives every claim in the certificate with independent calls.
void check_certificate(const Certificate& cert) {
  CHECK(gram_eval(cert.gram) == cert.target);
  CHECK(psd_by_sign_alternation(cert.gram.entries()));
  const int d2 = cert.provenance.other_gram.degree();
  if (cert.gram.degree() >= 2) {
    SymMatrix t = cert.gram;
    int applied = 0;
    while (applied < d2 + 1 && t.degree() >= 2) {
      t = matrix_transvectant(t);
      ++applied;
    }
    if (applied == d2 + 1) CHECK(t.is_zero());
  }
  CHECK(cert.components.observed <= d2 + 1);
  CHECK(cert.components.lemma_bound == d2 + 1);
  CHECK(cert.components.theorem_claim == (d2 + 1) / 2 + 1);
  CHECK(cert.profile.observed_components() == cert.components.observed);
}

template <typename F>
PreconditionError capture_precondition(F&& f) {
  try {
    f();
  } catch (const PreconditionError& e) {
    return e;
  }
  FAIL("expected a precondition error");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("structured_gram on the worked example") {
  const Certificate cert = structured_gram(power(norm_squared(2), 3), kQuotientGram);
  CHECK(cert.target == worked_example());
  CHECK(cert.gram == sym_tensor_product(canonical_gram(power(norm_squared(2), 3)), kQuotientGram));
  CHECK(cert.psd.is_psd);
  CHECK_FALSE(matrix_transvectant(cert.gram).is_zero());
  CHECK(matrix_transvectant_power(cert.gram, 2).is_zero());
  CHECK(cert.components.observed == 2);
  CHECK(cert.components.theorem_claim == 2);
  CHECK(cert.components.lemma_bound == 2);
  check_certificate(cert);
}

TEST_CASE("structured_gram with a constant other factor") {
  for (int d = 1; d <= 4; ++d) {
    const Form sopl = power(norm_squared(2), d);
    const Certificate cert = structured_gram(sopl, sym(2, 0, {{"1"}}));
    CHECK(cert.gram == canonical_gram(sopl));
    CHECK(cert.components.observed == 1);
    check_certificate(cert);
  }
}

TEST_CASE("structured_gram with a random psd other factor") {
  Rng rng(61);
  const Form sopl = power(binary({1, 1}), 4) + binary({1, 0, 0, 0, 0});
  for (int trial = 0; trial < 10; ++trial) {
    const Certificate cert = structured_gram(sopl, random_psd(rng, 2, 2, 3));
    // Index degree 4: the chain ends after two steps, so T^3 vanishes trivially.
    CHECK(matrix_transvectant_power(cert.gram, 2).degree() == 0);
    check_certificate(cert);
  }
}

TEST_CASE("structured gram matrices satisfy T^{d2+1} = 0") {
  Rng rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    const int d1 = rng.integer(0, 3);
    const int d2 = rng.integer(0, 3);
    const Form sopl = random_sopl(rng, d1, rng.integer(1, 3));
    if (sopl.is_zero()) continue;
    const SymMatrix m = random_psd(rng, 2, d2, static_cast<std::size_t>(d2 + 1));
    const SymMatrix g = sym_tensor_product(canonical_gram(sopl), m);
    if (g.degree() >= 2 * d2 + 2) CHECK(matrix_transvectant_power(g, d2 + 1).is_zero());
    check_certificate(structured_gram(sopl, m));
  }
}

TEST_CASE("structured_gram rejects non-psd inputs with a witness") {
  const Form not_sopl = binary({1, 0, -1, 0, 1});
  const auto e = capture_precondition([&] { structured_gram(not_sopl, kQuotientGram); });
  CHECK(e.witness_kind() == PreconditionError::WitnessKind::quadratic_form_vector);
  CHECK(quadratic_form(canonical_gram(not_sopl).entries(), e.witness()) == e.witness_value());
  CHECK(e.witness_value() < 0);

  const SymMatrix indefinite = sym(2, 1, {{"1", "2"}, {"2", "1"}});
  const auto f = capture_precondition([&] { structured_gram(norm_squared(2), indefinite); });
  CHECK(quadratic_form(indefinite.entries(), f.witness()) == f.witness_value());
  CHECK(f.witness_value() < 0);
}

TEST_CASE("sos_gram_binary_exact") {
  CHECK(sos_gram_binary_exact(binary({2, -2, 5}), kQuotientGram) == kQuotientGram);
  CHECK_THROWS_AS(sos_gram_binary_exact(binary({2, -2, 6}), kQuotientGram), InputError);
  CHECK_THROWS_AS(sos_gram_binary_exact(binary({1, 4, 1}), sym(2, 1, {{"1", "2"}, {"2", "1"}})),
                  PreconditionError);
}

TEST_CASE("sos_gram_binary_roots") {
  SUBCASE("squarefree positive forms") {
    for (const Form& q : {binary({2, -2, 5}), binary({1, 0, 0, 0, 1}), binary({1, 1, 1}),
                          norm_squared(2) * binary({1, 1, 1}) * binary({2, -2, 5})}) {
      const SymMatrix g = sos_gram_binary_roots(q);
      CHECK(gram_eval(g) == q);
      CHECK(psd_check(g).is_psd);
    }
  }
  SUBCASE("repeated factors and powers of y") {
    const Form q = power(binary({1, 1, 1}), 2) * binary({0, 0, 1}) * binary({1, 0, 3});
    const SymMatrix g = sos_gram_binary_roots(q);
    CHECK(gram_eval(g) == q);
    CHECK(psd_check(g).is_psd);
    CHECK(gram_eval(sos_gram_binary_roots(binary({0, 0, 1}))) == binary({0, 0, 1}));
    CHECK(gram_eval(sos_gram_binary_roots(power(binary({1, -1}), 4))) ==
          power(binary({1, -1}), 4));
    CHECK(sos_gram_binary_roots(Form(2, 4)).is_zero());
  }
  SUBCASE("forms that go negative are rejected with a point") {
    for (const Form& q : {binary({1, 0, -1}), binary({-1, 0, -1}), binary({1, 2, 3, 4}),
                          binary({1, 0, -3, 0, 1}), binary({0, 1, 0})}) {
      const auto e = capture_precondition([&] { sos_gram_binary_roots(q); });
      CHECK(e.witness_kind() == PreconditionError::WitnessKind::evaluation_point);
      CHECK(evaluate(q, e.witness()) == e.witness_value());
      CHECK(e.witness_value() < 0);
    }
  }
  CHECK_THROWS_AS(sos_gram_binary_roots(norm_squared(3)), InputError);
}

TEST_CASE("corollary_pipeline") {
  SUBCASE("worked example in both modes") {
    PipelineOptions exact;
    exact.mode = GramMode::exact_input;
    exact.quotient_gram = kQuotientGram;
    const Certificate a = corollary_pipeline(worked_example(), exact);
    CHECK(a.gram == sym(2, 4, {{"2", "-1", "6/5", "-3/5", "0"},
                               {"-1", "43/5", "-12/5", "21/5", "-3/5"},
                               {"6/5", "-12/5", "63/5", "-12/5", "3"},
                               {"-3/5", "21/5", "-12/5", "11", "-1"},
                               {"0", "-3/5", "3", "-1", "5"}}));
    CHECK(a.components.observed == 2);
    check_certificate(a);

    const Certificate b = corollary_pipeline(worked_example());
    CHECK(b.components.observed == 2);
    CHECK(b.provenance.sopl_factor == power(norm_squared(2), 3));
    check_certificate(b);
  }
  SUBCASE("powers of the squared norm") {
    for (int d = 1; d <= 4; ++d) {
      const Certificate cert = corollary_pipeline(power(norm_squared(2), d));
      CHECK(cert.gram == canonical_gram(power(norm_squared(2), d)));
      CHECK(cert.components.observed == 1);
      check_certificate(cert);
    }
  }
  SUBCASE("harmonic support two") {
    const Form p = power(norm_squared(2), 2) * binary({1, 0, 0, 0, 1});
    PipelineOptions exact;
    exact.mode = GramMode::exact_input;
    exact.quotient_gram = sym(2, 2, {{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}});
    const Certificate cert = corollary_pipeline(p, exact);
    CHECK(cert.provenance.sopl_factor == power(norm_squared(2), 2));
    check_certificate(cert);
    check_certificate(corollary_pipeline(p));
  }
  SUBCASE("root pairing on a square") {
    const Form p = power(binary({1, 1, 1}), 2);
    const Certificate cert = corollary_pipeline(p);
    check_certificate(cert);
  }
  SUBCASE("zero and constant forms") {
    const Certificate zero = corollary_pipeline(Form(2, 4));
    CHECK(zero.gram.is_zero());
    CHECK(zero.components.observed == 0);
    const Certificate constant = corollary_pipeline(Form::constant(2, 3));
    CHECK(gram_eval(constant.gram) == Form::constant(2, 3));
  }
  SUBCASE("errors") {
    PipelineOptions exact;
    exact.mode = GramMode::exact_input;
    CHECK_THROWS_AS(corollary_pipeline(worked_example(), exact), InputError);
    PipelineOptions roots;
    roots.quotient_gram = kQuotientGram;
    CHECK_THROWS_AS(corollary_pipeline(worked_example(), roots), InputError);
    CHECK_THROWS_AS(corollary_pipeline(binary({1, 0, 0, 1})), InputError);
    const Form negative = power(norm_squared(2), 3) * binary({1, 0, -1});
    const auto e = capture_precondition([&] { corollary_pipeline(negative); });
    CHECK(e.witness_value() < 0);
  }
}

TEST_CASE("theorem_experiment is deterministic and respects the lemma bound") {
  const auto a = theorem_experiment(2, 2, 5, 7);
  const auto b = theorem_experiment(2, 2, 5, 7);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].count.observed == b[i].count.observed);
    CHECK(a[i].count.observed <= 3);
    CHECK(a[i].seed == trial_seed(7, i));
  }
  CHECK(trial_seed(7, 0) != trial_seed(7, 1));
  CHECK(trial_seed(7, 0) != trial_seed(8, 0));
}
