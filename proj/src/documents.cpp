#include "sosgram/documents.hpp"

#include <cmath>
#include <set>

#include "sosgram/error.hpp"

namespace sosgram {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("document is missing field '") + key + "'");
  }
  return doc.at(key);
}

int int_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

void check_header(const Json& doc) {
  const Json& version = field(doc, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw InputError("unsupported schema_version (expected \"1\")");
  }
  const Json& basis = field(doc, "basis");
  if (!basis.is_string() || basis.get<std::string>() != "unscaled") {
    throw InputError(
        "only basis \"unscaled\" is accepted: scaled-basis entries carry square roots of "
        "multinomial coefficients and cannot be stored as exact rationals");
  }
}

Rational rational_field(const Json& v) {
  if (!v.is_string()) throw InputError("rational values must be JSON strings like \"3/5\"");
  return parse_rational(v.get<std::string>());
}

std::vector<std::vector<Rational>> parse_rows(const Json& doc, std::size_t side) {
  const Json& rows = field(doc, "rows");
  if (!rows.is_array() || rows.size() != side) {
    throw InputError("matrix must have " + std::to_string(side) + " rows");
  }
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != side) {
      throw InputError("matrix must be square with side " + std::to_string(side));
    }
    std::vector<Rational> values;
    for (const auto& x : row) values.push_back(rational_field(x));
    out.push_back(std::move(values));
  }
  return out;
}

template <typename Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json form_to_json(const Form& p) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["n"] = p.num_vars();
  doc["degree"] = p.degree();
  doc["basis"] = "unscaled";
  Json terms = Json::array();
  for (const auto& [index, coeff] : p.terms()) {
    Json term;
    term["exponents"] = index.exponents();
    term["coeff"] = to_string(coeff);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

Form form_from_json(const Json& doc) {
  return guarded([&] {
    check_header(doc);
    const int n = int_field(doc, "n");
    const int degree = int_field(doc, "degree");
    if (n < 1 || degree < 0) throw InputError("form document needs n >= 1 and degree >= 0");
    const Json& terms = field(doc, "terms");
    if (!terms.is_array()) throw InputError("'terms' must be an array");
    Form::Terms parsed;
    for (const auto& term : terms) {
      const Json& exps = field(term, "exponents");
      if (!exps.is_array() || static_cast<int>(exps.size()) != n) {
        throw InputError("each term needs exactly n exponents");
      }
      std::vector<int> e;
      for (const auto& x : exps) {
        if (!x.is_number_integer()) throw InputError("exponents must be integers");
        e.push_back(x.get<int>());
      }
      MultiIndex index(std::move(e));
      if (index.degree() != degree) throw InputError("term exponents do not sum to the degree");
      Rational coeff = rational_field(field(term, "coeff"));
      if (is_zero(coeff)) throw InputError("term coefficients must be nonzero");
      if (!parsed.emplace(index, coeff).second) throw InputError("duplicate exponent vector");
    }
    return Form(n, degree, std::move(parsed));
  });
}

Json general_matrix_to_json(const Matrix& m, int n, int d) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["n"] = n;
  doc["d"] = d;
  doc["basis"] = "unscaled";
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

Json matrix_to_json(const SymMatrix& q) {
  return general_matrix_to_json(q.entries(), q.num_vars(), q.degree());
}

Matrix general_matrix_from_json(const Json& doc) {
  return guarded([&] {
    check_header(doc);
    const int n = int_field(doc, "n");
    const int d = int_field(doc, "d");
    if (n < 1 || d < 0) throw InputError("matrix document needs n >= 1 and d >= 0");
    return Matrix::from_rows(parse_rows(doc, basis_size(n, d)));
  });
}

SymMatrix sym_matrix_from_json(const Json& doc) {
  return guarded([&] {
    Matrix m = general_matrix_from_json(doc);
    return SymMatrix(int_field(doc, "n"), int_field(doc, "d"), std::move(m));
  });
}

Json lifted_vector_to_json(const LiftedVector& v) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["n"] = v.n;
  doc["d"] = v.d;
  doc["basis"] = "unscaled";
  doc["entries"] = rationals_to_json(v.entries);
  return doc;
}

Json verdict_to_json(const PsdVerdict& verdict) {
  Json doc;
  doc["is_psd"] = verdict.is_psd;
  if (verdict.is_psd) {
    doc["rank"] = verdict.rank;
  } else {
    doc["witness"] = rationals_to_json(verdict.witness);
    doc["witness_value"] = to_string(verdict.witness_value);
  }
  return doc;
}

Json profile_to_json(const SupportProfile& profile) {
  Json doc;
  doc["d"] = profile.d;
  doc["component_degrees"] = profile.component_degrees();
  Json mask = Json::array();
  for (bool b : profile.nonzero_mask()) mask.push_back(b);
  doc["nonzero_mask"] = std::move(mask);
  doc["observed_components"] = profile.observed_components();
  Json forms = Json::array();
  for (const auto& c : profile.components) forms.push_back(form_to_json(c.form));
  doc["component_forms"] = std::move(forms);
  return doc;
}

Json harmonic_to_json(const HarmonicDecomposition& hd) {
  Json doc;
  Json parts = Json::array();
  for (std::size_t k = 0; k < hd.parts.size(); ++k) {
    Json part;
    part["degree"] = 2 * k;
    part["multiplier_power"] = hd.half_degree - static_cast<int>(k);
    part["form"] = form_to_json(hd.parts[k]);
    parts.push_back(std::move(part));
  }
  doc["parts"] = std::move(parts);
  doc["support_bound"] = harmonic_support_bound(hd);
  return doc;
}

Json certificate_to_json(const Certificate& cert) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["target"] = form_to_json(cert.target);
  doc["gram"] = matrix_to_json(cert.gram);
  doc["verdict"] = verdict_to_json(cert.psd);
  doc["profile"] = profile_to_json(cert.profile);
  Json counts;
  counts["observed"] = cert.components.observed;
  counts["theorem_claim"] = cert.components.theorem_claim;
  counts["lemma_bound"] = cert.components.lemma_bound;
  doc["components"] = std::move(counts);
  Json prov;
  prov["construction"] = cert.provenance.construction;
  prov["sopl_factor"] = form_to_json(cert.provenance.sopl_factor);
  prov["other_factor"] = form_to_json(cert.provenance.other_factor);
  prov["other_gram"] = matrix_to_json(cert.provenance.other_gram);
  prov["other_gram_source"] = cert.provenance.other_gram_source;
  doc["provenance"] = std::move(prov);
  return doc;
}

Json scaled_float_view(const SymMatrix& q) {
  Json doc;
  doc["note"] = "APPROXIMATE: scaled monomial basis, double precision, display only";
  doc["rows"] = scaled_basis_view(q);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace sosgram
