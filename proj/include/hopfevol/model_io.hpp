#pragma once

#include <json.hpp>

#include "hopfevol/constraints.hpp"

namespace hopfevol {

using Json = nlohmann::json;

/// Load a custom first-order model.  Schema (version 1):
/// {
///   "schema_version": 1,
///   "name": "...",                      // optional
///   "dimension": d,
///   "param": "h" | "z" | "inv_kappa",
///   "param_value": 0.1,                 // optional, default 0.1
///   "generators": ["A", "B", ...],
///   "representation": {"A": [[[re,im], ...], ...], ...},
///   "coproduct_corrections": [{"target": "A", "left": ["A"],
///                              "right": ["B"], "coeff": [re,im]}, ...],
///   "antipode_corrections": [{"target": "A", "word": ["B"],
///                             "coeff": [re,im]}, ...],
///   "counits": {"A": [re,im], ...},     // optional, default 0
///   "dagger": {"A": "B", ...}
/// }
/// Coproducts are primitive plus the listed first-order corrections;
/// antipodes are -X plus the listed corrections.  Commutation relations are
/// recovered from the representation where they close on the generator span.
HopfModel parse_custom_model(const Json& j);
HopfModel load_custom_model(const std::string& path);

Json matrix_json(const Eigen::MatrixXcd& m);
Json vector_json(const Eigen::VectorXcd& v);

Json to_json(const AuditReport& r);
Json to_json(const PreservationResult& r);
Json to_json(const GeneratorReport& r);
Json to_json(const PositivityWitness& w);
Json to_json(const SolutionSet& s);
Json to_json(const FeasibilityResult& f);
Json to_json(const ScenarioReport& r);

}  // namespace hopfevol
