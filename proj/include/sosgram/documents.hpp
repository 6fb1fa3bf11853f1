#pragma once

#include <json.hpp>

#include <string>

#include "sosgram/cgtools.hpp"
#include "sosgram/form.hpp"
#include "sosgram/grams.hpp"
#include "sosgram/lifting.hpp"
#include "sosgram/matrix.hpp"
#include "sosgram/structured.hpp"

namespace sosgram {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// FormDocument:
//   {"schema_version": "1", "n": 2, "degree": 2, "basis": "unscaled",
//    "terms": [{"exponents": [2, 0], "coeff": "1"}, ...]}
// Terms are written in basis order; coefficients are "p" or "p/q" strings.
Json form_to_json(const Form& p);
Form form_from_json(const Json& doc);

// MatrixDocument:
//   {"schema_version": "1", "n": 2, "d": 1, "basis": "unscaled",
//    "rows": [["2", "-1"], ["-1", "5"]]}
Json matrix_to_json(const SymMatrix& q);
SymMatrix sym_matrix_from_json(const Json& doc);

/// Same layout without the symmetry requirement, for transformation
/// matrices (d = 1) and induced matrices.
Json general_matrix_to_json(const Matrix& m, int n, int d);
Matrix general_matrix_from_json(const Json& doc);

Json lifted_vector_to_json(const LiftedVector& v);
Json verdict_to_json(const PsdVerdict& verdict);
Json profile_to_json(const SupportProfile& profile);
Json harmonic_to_json(const HarmonicDecomposition& hd);
Json certificate_to_json(const Certificate& cert);

/// Approximate scaled-basis view of a matrix, labeled as such.
Json scaled_float_view(const SymMatrix& q);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const Json& doc);

Json rationals_to_json(const std::vector<Rational>& values);

}  // namespace sosgram
