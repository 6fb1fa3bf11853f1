#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sosgram/cgtools.hpp"
#include "sosgram/form.hpp"
#include "sosgram/grams.hpp"
#include "sosgram/matrix.hpp"

namespace sosgram {

/// Component counts of a structured Gram matrix G[q_sopl] ⊙ M with M of
/// index degree d₂.
struct ComponentCount {
  int observed = 0;       ///< nonzero entries of the support profile
  int theorem_claim = 0;  ///< ⌈d₂/2⌉ + 1
  int lemma_bound = 0;    ///< d₂ + 1, guaranteed by T^{d₂+1}(gram) = 0
};

struct Provenance {
  std::string construction;   ///< e.g. "canonical_gram(sopl_factor) (.) other_gram"
  Form sopl_factor;           ///< factor that received the canonical Gram matrix
  Form other_factor;          ///< factor represented by the supplied/derived psd Gram
  SymMatrix other_gram;
  std::string other_gram_source;  ///< "supplied", "root-pairing", "constant", ...
};

/// A psd Gram matrix for `target` together with its support profile.
///
/// Invariants: gram_eval(gram) == target, psd.is_psd.
struct Certificate {
  Form target;
  SymMatrix gram;
  PsdVerdict psd;
  SupportProfile profile;
  Provenance provenance;
  ComponentCount components;
};

/// Builds canonical_gram(sopl_factor) ⊙ other_gram and verifies the gram_eval
/// round trip, psd-ness and T^{d₂+1}(gram) = 0 exactly.
///
/// Throws PreconditionError if canonical_gram(sopl_factor) is not psd (the
/// factor is then not a sum of even powers of linear forms) and if
/// other_gram is not psd; both carry the offending witness.
Certificate structured_gram(const Form& sopl_factor, const SymMatrix& other_gram,
                            const std::string& other_gram_source = "supplied");

enum class GramMode { exact_input, root_pairing };

struct RootPairingOptions {
  /// Tolerance for matching a complex root with its conjugate.
  double pairing_tolerance = 1e-10;
};

/// Validates a caller-supplied Gram matrix of a binary form: exact round trip
/// (InputError otherwise) and psd (PreconditionError with witness otherwise).
SymMatrix sos_gram_binary_exact(const Form& q, const SymMatrix& candidate);

/// psd Gram matrix of a nonnegative binary form from its complex roots.
///
/// The repeated part of q is split off exactly (squarefree decomposition);
/// only the remaining strictly positive factor goes through floating-point
/// root pairing, after which the Gram matrix is rationalized, its residual
/// folded into the diagonal band, and the result verified exactly.
///
/// Throws PreconditionError with a point where q < 0 when q is not
/// nonnegative, and NumericFailure when exact verification fails.
SymMatrix sos_gram_binary_roots(const Form& q, const RootPairingOptions& options = {});

struct PipelineOptions {
  GramMode mode = GramMode::root_pairing;
  std::optional<SymMatrix> quotient_gram;  ///< required for exact_input
  RootPairingOptions roots;
};

/// Structured certificate for an SOS binary form with bounded harmonic
/// support k: p = (x²+y²)^{d-k} q, certificate G[(x²+y²)^{d-k}] ⊙ M(q).
Certificate corollary_pipeline(const Form& p, const PipelineOptions& options = {});

/// One row of the component-count experiment.
struct TheoremTrial {
  std::uint64_t seed = 0;
  int d1 = 0;
  int d2 = 0;
  ComponentCount count;
};

/// Random sums of even powers of linear forms (degree 2·d1) times random
/// WᵀW Gram matrices (index degree d2). Deterministic in `seed`.
std::vector<TheoremTrial> theorem_experiment(int d1, int d2, int trials, std::uint64_t seed);

/// Per-trial seed derivation used by theorem_experiment (splitmix64).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace sosgram
