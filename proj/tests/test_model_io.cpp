#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfevol/model_io.hpp"

using namespace hopfevol;
using Mat = Eigen::MatrixXcd;

namespace {

Json rep_json(const Mat& m) { return matrix_json(m); }

// A custom-model document equivalent to a general su(2) deformation table.
Json su2_document(const CTable& t) {
  Json j;
  j["schema_version"] = 1;
  j["name"] = "custom-su2";
  j["dimension"] = 2;
  j["param"] = "h";
  j["param_value"] = 0.1;
  j["generators"] = {"J+", "J-", "Jz"};
  j["representation"] = {{"J+", rep_json(qubit_rep("J+"))},
                         {"J-", rep_json(qubit_rep("J-"))},
                         {"Jz", rep_json(qubit_rep("Jz"))}};
  j["dagger"] = {{"J+", "J-"}, {"J-", "J+"}, {"Jz", "Jz"}};
  const char* names[3] = {"J+", "J-", "Jz"};
  Json cops = Json::array();
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int c = 0; c < 3; ++c) {
        Complex v = t.at(k, i, c);
        if (v == 0.0) continue;
        cops.push_back({{"target", names[k]},
                        {"left", {names[i]}},
                        {"right", {names[c]}},
                        {"coeff", {v.real(), v.imag()}}});
      }
  j["coproduct_corrections"] = cops;
  Json ants = Json::array();
  STable s = solve_antipode_first_order(build_general_su2(t, 0.1));
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector4cd& x = s.coeffs.at(names[k]);
    for (int i = 0; i < 3; ++i) {
      if (x(i) == 0.0) continue;
      ants.push_back({{"target", names[k]},
                      {"word", {names[i]}},
                      {"coeff", {x(i).real(), x(i).imag()}}});
    }
    if (x(3) != 0.0)
      ants.push_back({{"target", names[k]},
                      {"word", Json::array()},
                      {"coeff", {x(3).real(), x(3).imag()}}});
  }
  j["antipode_corrections"] = ants;
  return j;
}

}  // namespace

TEST_CASE("a custom document reproduces the built-in deformation model") {
  CTable t = random_hermitian_ctable(81);
  HopfModel builtin = build_general_su2(t, 0.1);
  HopfModel custom = parse_custom_model(su2_document(t));

  CHECK(audit_model(custom).all_ok());

  // structure maps agree on the representation
  for (const auto& sym : builtin.data.symbols) {
    Mat cb = evaluate_at(
        evaluate_tensor(coproduct(SymElement::gen(sym), builtin.data), builtin.data),
        0.1);
    Mat cc = evaluate_at(
        evaluate_tensor(coproduct(SymElement::gen(sym), custom.data), custom.data),
        0.1);
    CHECK((cb - cc).norm() < 1e-12);
    Mat sb = evaluate_at(evaluate(builtin.data.antipodes.at(sym), builtin.data), 0.1);
    Mat sc = evaluate_at(evaluate(custom.data.antipodes.at(sym), custom.data), 0.1);
    CHECK((sb - sc).norm() < 1e-12);
  }

  // recovered commutation relations drive the homomorphism audit
  CHECK(custom.data.relations.size() == 3);

  // generators built from both models coincide
  SuperOp lb = build_generator(hamiltonian(builtin, "hz"), builtin,
                               PrescriptionCoeffs::half());
  SuperOp lc = build_generator(HamiltonianSpec{SymElement::gen("Jz"), 1.0}, custom,
                               PrescriptionCoeffs::half());
  CHECK((lb.at(0.1) - lc.at(0.1)).norm() < 1e-12);
}

TEST_CASE("schema violations are rejected") {
  CTable t;  // zero table is fine
  Json good = su2_document(t);

  Json missing = good;
  missing.erase("schema_version");
  CHECK_THROWS_AS(parse_custom_model(missing), BadFile);

  Json wrong_version = good;
  wrong_version["schema_version"] = 2;
  CHECK_THROWS_AS(parse_custom_model(wrong_version), BadFile);

  Json no_rep = good;
  no_rep["representation"].erase("Jz");
  CHECK_THROWS_AS(parse_custom_model(no_rep), BadFile);

  Json bad_dagger = good;
  bad_dagger["dagger"]["J+"] = "J+";  // J- maps back to J+, not an involution
  CHECK_THROWS_AS(parse_custom_model(bad_dagger), BadFile);

  Json bad_param = good;
  bad_param["param"] = "none";
  CHECK_THROWS_AS(parse_custom_model(bad_param), BadFile);
}

TEST_CASE("file loading distinguishes parse failures") {
  CHECK_THROWS_AS(load_custom_model("/nonexistent/path.json"), BadFile);
}

TEST_CASE("report serialization carries the expected fields") {
  auto m = build_uq_su2(0.1, HopfModel::Mode::FirstOrder);
  HamiltonianSpec h = hamiltonian(m, "hx");

  Json s = to_json(solve_prescription(m, h));
  CHECK(s.contains("kind"));
  CHECK(s.contains("basepoint"));
  CHECK(s.contains("nullspace"));
  CHECK(s.contains("rank"));
  CHECK(s["kind"] == "affine");
  CHECK(s["coefficients"]["alpha"][0].get<double>() == doctest::Approx(0.25));

  Json g = to_json(gksl_decompose(
      build_generator(h, m, PrescriptionCoeffs::quarter()).at(0.1)));
  CHECK(g["verdict"] == "VON_NEUMANN");
  CHECK(g.contains("kossakowski"));
  CHECK(g.contains("kossakowski_eigenvalues"));
  CHECK(g["preservation"]["trace"]["pass"].get<bool>());

  Json a = to_json(audit_model(m));
  CHECK(a["pass"].get<bool>());

  Json f = to_json(lindblad_feasibility(m, h));
  CHECK_FALSE(f["feasible"].get<bool>());
  CHECK(f["certificate"] == "zero-image");
}
