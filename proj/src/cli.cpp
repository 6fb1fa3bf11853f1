#include "sosgram/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "sosgram/cgtools.hpp"
#include "sosgram/documents.hpp"
#include "sosgram/error.hpp"
#include "sosgram/grams.hpp"
#include "sosgram/lifting.hpp"
#include "sosgram/structured.hpp"
#include "sosgram/symprod.hpp"

namespace sosgram {

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) point.push_back(parse_rational(item));
  if (point.empty()) throw InputError("--point needs at least one coordinate");
  return point;
}

Json with_scaled_view(Json doc, const SymMatrix& q, bool scaled) {
  if (scaled) doc["approximate_scaled_view"] = scaled_float_view(q);
  return doc;
}

Json precondition_report(const PreconditionError& e) {
  Json doc;
  doc["error"] = e.what();
  switch (e.witness_kind()) {
    case PreconditionError::WitnessKind::quadratic_form_vector:
      doc["witness_kind"] = "quadratic_form_vector";
      break;
    case PreconditionError::WitnessKind::evaluation_point:
      doc["witness_kind"] = "evaluation_point";
      break;
    case PreconditionError::WitnessKind::none:
      doc["witness_kind"] = "none";
      break;
  }
  if (e.witness_kind() != PreconditionError::WitnessKind::none) {
    doc["witness"] = rationals_to_json(e.witness());
    doc["witness_value"] = to_string(e.witness_value());
  }
  return doc;
}

struct Options {
  std::string out_path;
  bool scaled_float = false;

  std::string point;
  int degree = 0;
  std::string matrix, by, form, p, q, a, b, quotient_gram, mode;
  int power = 1;
  int order = 0;
  double pairing_tolerance = 1e-10;
  int d1 = 0, d2 = 0, trials = 0;
  std::uint64_t seed = 0;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Gram-matrix certificates for sums of squares of binary forms", "sosgram"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out_path, "Write the result to FILE instead of standard output");
  app.add_flag("--scaled-float", o.scaled_float,
               "Also print an approximate scaled-basis view (floating point)");

  auto* lift = app.add_subcommand("lift", "Monomial lift x^[d] of a rational point");
  lift->add_option("--point", o.point, "Comma-separated rationals, e.g. 1/2,3")->required();
  lift->add_option("--degree", o.degree)->required();

  auto* induced = app.add_subcommand("induced", "Induced matrix A^[d]");
  induced->add_option("--matrix", o.matrix, "n x n matrix document (d = 1)")->required();
  induced->add_option("--degree", o.degree)->required();

  auto* gram = app.add_subcommand("gram", "Gram matrix operations");
  gram->require_subcommand(1);
  auto* gram_canonical = gram->add_subcommand("canonical", "Canonical Gram matrix G[p]");
  gram_canonical->add_option("--form", o.form)->required();
  auto* gram_eval_cmd = gram->add_subcommand("eval", "Form represented by a Gram matrix");
  gram_eval_cmd->add_option("--matrix", o.matrix)->required();
  auto* gram_transform_cmd = gram->add_subcommand("transform", "A^[d]^T Q A^[d]");
  gram_transform_cmd->add_option("--matrix", o.matrix)->required();
  gram_transform_cmd->add_option("--by", o.by, "n x n matrix document (d = 1)")->required();

  auto* psd = app.add_subcommand("psd", "Exact positive semidefiniteness check");
  psd->add_option("--matrix", o.matrix)->required();

  auto* transvect = app.add_subcommand("transvect", "Transvectants");
  transvect->require_subcommand(1);
  auto* transvect_matrix = transvect->add_subcommand("matrix", "Matrix transvectant T^k");
  transvect_matrix->add_option("--matrix", o.matrix)->required();
  transvect_matrix->add_option("--power", o.power, "Number of applications")->capture_default_str();
  auto* transvect_poly = transvect->add_subcommand("poly", "Polynomial transvectant psi_n(p, q)");
  transvect_poly->add_option("--p", o.p)->required();
  transvect_poly->add_option("--q", o.q)->required();
  transvect_poly->add_option("--order", o.order)->required();

  auto* symprod = app.add_subcommand("symprod", "Symmetric tensor product A (.) B");
  symprod->add_option("--a", o.a)->required();
  symprod->add_option("--b", o.b)->required();

  auto* harmonic = app.add_subcommand("harmonic", "Harmonic decomposition of a binary form");
  harmonic->add_option("--form", o.form)->required();

  auto* support = app.add_subcommand("support", "Support profile of a symmetric matrix");
  support->add_option("--matrix", o.matrix)->required();

  auto* certify = app.add_subcommand("certify", "Structured psd Gram certificate");
  certify->add_option("--form", o.form)->required();
  certify->add_option("--quotient-gram", o.quotient_gram, "psd Gram matrix of the quotient");
  certify->add_option("--mode", o.mode, "exact or roots (default: exact when --quotient-gram is given)")
      ->check(CLI::IsMember({"exact", "roots"}));
  certify->add_option("--pairing-tolerance", o.pairing_tolerance)->capture_default_str();

  auto* experiment = app.add_subcommand("experiment", "Batch experiments (CSV output)");
  experiment->require_subcommand(1);
  auto* theorem = experiment->add_subcommand("theorem", "Observed vs claimed component counts");
  theorem->add_option("--d1", o.d1)->required();
  theorem->add_option("--d2", o.d2)->required();
  theorem->add_option("--trials", o.trials)->required();
  theorem->add_option("--seed", o.seed)->required();

  std::vector<std::string> argv_storage{"sosgram"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformedInput;
  }

  try {
    std::string text;
    if (lift->parsed()) {
      const auto lifted = monomial_lift(parse_point(o.point), o.degree);
      Json doc = lifted_vector_to_json(lifted);
      if (o.scaled_float) {
        const auto weights = scaled_lift_weights(lifted.n, lifted.d);
        Json view = Json::array();
        for (std::size_t i = 0; i < weights.size(); ++i) {
          view.push_back(lifted.entries[i].get_d() * std::sqrt(weights[i].get_d()));
        }
        doc["approximate_scaled_entries"] = std::move(view);
      }
      text = dump(doc);
    } else if (induced->parsed()) {
      const Matrix a = general_matrix_from_json(read_json(o.matrix));
      text = dump(general_matrix_to_json(induced_matrix(a, o.degree), static_cast<int>(a.rows()),
                                         o.degree));
    } else if (gram_canonical->parsed()) {
      const SymMatrix g = canonical_gram(form_from_json(read_json(o.form)));
      text = dump(with_scaled_view(matrix_to_json(g), g, o.scaled_float));
    } else if (gram_eval_cmd->parsed()) {
      text = dump(form_to_json(gram_eval(sym_matrix_from_json(read_json(o.matrix)))));
    } else if (gram_transform_cmd->parsed()) {
      const SymMatrix g = gram_transform(sym_matrix_from_json(read_json(o.matrix)),
                                         general_matrix_from_json(read_json(o.by)));
      text = dump(with_scaled_view(matrix_to_json(g), g, o.scaled_float));
    } else if (psd->parsed()) {
      text = dump(verdict_to_json(psd_check(sym_matrix_from_json(read_json(o.matrix)))));
    } else if (transvect_matrix->parsed()) {
      const SymMatrix t =
          matrix_transvectant_power(sym_matrix_from_json(read_json(o.matrix)), o.power);
      text = dump(with_scaled_view(matrix_to_json(t), t, o.scaled_float));
    } else if (transvect_poly->parsed()) {
      text = dump(form_to_json(transvectant(form_from_json(read_json(o.p)),
                                            form_from_json(read_json(o.q)), o.order)));
    } else if (symprod->parsed()) {
      const SymMatrix c = sym_tensor_product(sym_matrix_from_json(read_json(o.a)),
                                             sym_matrix_from_json(read_json(o.b)));
      text = dump(with_scaled_view(matrix_to_json(c), c, o.scaled_float));
    } else if (harmonic->parsed()) {
      text = dump(harmonic_to_json(harmonic_decompose(form_from_json(read_json(o.form)))));
    } else if (support->parsed()) {
      text = dump(profile_to_json(support_profile(sym_matrix_from_json(read_json(o.matrix)))));
    } else if (certify->parsed()) {
      PipelineOptions options;
      const bool have_gram = !o.quotient_gram.empty();
      const std::string mode = o.mode.empty() ? (have_gram ? "exact" : "roots") : o.mode;
      options.mode = mode == "exact" ? GramMode::exact_input : GramMode::root_pairing;
      if (have_gram) options.quotient_gram = sym_matrix_from_json(read_json(o.quotient_gram));
      options.roots.pairing_tolerance = o.pairing_tolerance;
      const Certificate cert = corollary_pipeline(form_from_json(read_json(o.form)), options);
      text = dump(with_scaled_view(certificate_to_json(cert), cert.gram, o.scaled_float));
    } else if (theorem->parsed()) {
      std::ostringstream csv;
      csv << "seed,d1,d2,observed_components,theorem_claim,lemma_bound\n";
      for (const auto& row : theorem_experiment(o.d1, o.d2, o.trials, o.seed)) {
        csv << row.seed << ',' << row.d1 << ',' << row.d2 << ',' << row.count.observed << ','
            << row.count.theorem_claim << ',' << row.count.lemma_bound << '\n';
      }
      text = csv.str();
    }

    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw InputError("cannot write '" + o.out_path + "'");
      file << text;
    }
    return kExitSuccess;
  } catch (const PreconditionError& e) {
    out << dump(precondition_report(e));
    err << "precondition violated: " << e.what() << "\n";
    return kExitPreconditionViolated;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const InternalError& e) {
    err << "internal error (bug): " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "internal error (bug): " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace sosgram
