#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfevol/constraints.hpp"

using namespace hopfevol;
using Vector8d = Eigen::Matrix<double, 8, 1>;

namespace {

Vector8d quarter() { return PrescriptionCoeffs::quarter().components(); }

}  // namespace

TEST_CASE("deformed qubit model pins the real coefficients to the quarter point") {
  auto m = build_uq_su2(0.1, HopfModel::Mode::FirstOrder);
  SolutionSet s = solve_prescription(m, hamiltonian(m, "hx"));
  CHECK((s.basepoint - quarter()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(s.residual < 1e-10);
  // The admissible set contains one extra direction: a common imaginary
  // shift i(1, 1, -1, -1) that only tilts the effective Hamiltonian, so the
  // solution is a line rather than a point.
  CHECK(s.kind == SolutionSet::Kind::Affine);
  REQUIRE(s.nullspace.size() == 1);
  Vector8d dir;
  dir << 0, 0.5, 0, 0.5, 0, -0.5, 0, -0.5;
  double overlap = std::abs(s.nullspace[0].dot(dir));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("every point of the admissible line is a viable von Neumann generator") {
  auto m = build_uq_su2(0.1, HopfModel::Mode::FirstOrder);
  HamiltonianSpec h = hamiltonian(m, "hx");
  SolutionSet s = solve_prescription(m, h);
  REQUIRE(s.nullspace.size() == 1);
  for (double step : {0.0, 0.4, -1.2}) {
    Vector8d x = s.basepoint + step * s.nullspace[0];
    SuperOp L = build_generator(h, m, PrescriptionCoeffs::from_components(x));
    Eigen::MatrixXcd Lm = L.at(0.1);
    PreservationResult p = preservation_tests(Lm);
    CHECK(p.trace_ok());
    CHECK(p.herm_ok());
    CHECK(hamiltonian_projection(Lm).residual < 1e-10);
  }
}

TEST_CASE("the undeformed model leaves a four-parameter family") {
  auto m = build_trivial_su2();
  SolutionSet s = solve_prescription(m, hamiltonian(m, "hx"));
  CHECK(s.kind == SolutionSet::Kind::Affine);
  CHECK(s.rank == 4);
  CHECK(s.nullspace.size() == 4);
  CHECK((s.basepoint - quarter()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("generic deformation tables give the same basepoint for all Hamiltonians") {
  for (int t = 0; t < 3; ++t) {
    auto m = build_general_su2(random_hermitian_ctable(7100 + t), 0.1);
    for (const char* hid : {"hz", "hx", "hy"}) {
      SolutionSet s = solve_prescription(m, hamiltonian(m, hid));
      CHECK((s.basepoint - quarter()).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(s.nullspace.size() == 1);
    }
  }
}

TEST_CASE("solution set is invariant under rescaling the deformation table") {
  CTable t = random_hermitian_ctable(7200);
  auto m1 = build_general_su2(t, 0.1);
  auto m2 = build_general_su2(t.scaled(3.7), 0.1);
  SolutionSet s1 = solve_prescription(m1, hamiltonian(m1, "hz"));
  SolutionSet s2 = solve_prescription(m2, hamiltonian(m2, "hz"));
  CHECK(s1.kind == s2.kind);
  CHECK((s1.basepoint - s2.basepoint).cwiseAbs().maxCoeff() < 1e-10);
  REQUIRE(s1.nullspace.size() == s2.nullspace.size());
  // same span
  double overlap = std::abs(s1.nullspace[0].dot(s2.nullspace[0]));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sparser tables can only enlarge the solution set") {
  CTable generic = random_hermitian_ctable(7300);
  auto mg = build_general_su2(generic, 0.1);
  size_t n_generic =
      solve_prescription(mg, hamiltonian(mg, "hz")).nullspace.size();

  std::array<Complex, 8> f{};
  f[4] = 1.0;  // only the z+/z- pair after hermitization
  CTable sparse = apply_hermiticity(solve_general_su2_coproducts(f).first);
  auto ms = build_general_su2(sparse, 0.1);
  size_t n_sparse = solve_prescription(ms, hamiltonian(ms, "hz")).nullspace.size();

  auto mz = build_general_su2(CTable{}, 0.1);
  size_t n_zero = solve_prescription(mz, hamiltonian(mz, "hz")).nullspace.size();

  CHECK(n_generic <= n_sparse);
  CHECK(n_sparse <= n_zero);
  CHECK(n_zero == 4);
}

TEST_CASE("no admissible Lindblad dissipator for the deformed qubit") {
  auto m = build_uq_su2(0.1, HopfModel::Mode::FirstOrder);
  FeasibilityResult f = lindblad_feasibility(m, hamiltonian(m, "hx"));
  CHECK_FALSE(f.feasible);
  CHECK(f.image_norm < 1e-10);
  CHECK(f.certificate == "zero-image");
  CHECK(f.kinematic_residual < 1e-10);
}

TEST_CASE("no admissible Lindblad dissipator for generic deformations") {
  for (int t = 0; t < 3; ++t) {
    auto m = build_general_su2(random_hermitian_ctable(7400 + t), 0.1);
    FeasibilityResult f = lindblad_feasibility(m, hamiltonian(m, "hz"));
    CHECK_FALSE(f.feasible);
    CHECK(f.image_norm < 1e-10);
  }
}

TEST_CASE("feasibility verdict is seed independent") {
  auto m = build_uq_su2(0.1, HopfModel::Mode::FirstOrder);
  HamiltonianSpec h = hamiltonian(m, "hx");
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    FeasibilityResult f = lindblad_feasibility(m, h, {}, seed);
    CHECK_FALSE(f.feasible);
  }
}

TEST_CASE("the mapped momentum model pinned at the half preset is feasible") {
  auto kg = build_kappa_galilei_default(10.0, true);
  FeasibilityResult f =
      lindblad_feasibility(kg, hamiltonian(kg, "p0"), PrescriptionCoeffs::half());
  CHECK(f.feasible);
  CHECK(f.kinematic_residual < 1e-10);
  REQUIRE(f.witness.has_value());
  CHECK((*f.witness - PrescriptionCoeffs::half().components()).norm() < 1e-12);

  // Kossakowski matrix is (1/kappa) v v^T over the momentum direction
  HermitianBasis basis = hermitian_basis(8);
  Eigen::MatrixXcd ptl = traceless(kg.data.rep.at("P1"));
  Eigen::VectorXd v(63);
  for (int k = 1; k < 64; ++k)
    v(k - 1) = (basis.elements[size_t(k)].adjoint() * ptl).trace().real();
  Eigen::MatrixXcd expect = 0.1 * (v * v.transpose()).cast<Complex>();
  CHECK((f.kossakowski - expect).norm() < 1e-10);
}

TEST_CASE("transverse-Hamiltonian sweep agrees with the quarter point") {
  ScenarioReport rep = xy_family_scenario(5, 991);
  CHECK(rep.tables == 5);
  CHECK(rep.max_basepoint_deviation < 1e-10);
  CHECK(rep.max_remainder < 1e-10);
  CHECK(rep.consistent);
}

TEST_CASE("the unmapped momentum model admits no Lindblad dissipator either") {
  // Identity cancellation kills the sandwich term, and the rest is a
  // commutator with P^2; only the von Neumann route survives.
  auto kg = build_kappa_galilei_default(10.0, false);
  FeasibilityResult f = lindblad_feasibility(kg, hamiltonian(kg, "p0"));
  CHECK_FALSE(f.feasible);
  CHECK(f.image_norm < 1e-10);
  CHECK(f.certificate == "zero-image");
}
