#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfevol/models.hpp"

using namespace hopfevol;
using Mat = Eigen::MatrixXcd;

TEST_CASE("undeformed limit of the q-deformed model") {
  auto m = build_uq_su2(0.0, HopfModel::Mode::Exact);
  for (const auto& sym : m.data.symbols) {
    CHECK(is_primitive(sym, m.data));
    SymElement expect = Jet(-1.0) * SymElement::gen(sym);
    CHECK((m.data.antipodes.at(sym) - expect).is_zero());
  }
  CHECK(audit_model(m).all_ok());
}

TEST_CASE("qubit commutators stay undeformed at z = 0.2") {
  auto m = build_uq_su2(0.2, HopfModel::Mode::Exact);
  Mat jp = m.data.rep.at("J+"), jm = m.data.rep.at("J-"), jz = m.data.rep.at("Jz");
  CHECK((jp * jm - jm * jp - 2.0 * jz).norm() < 1e-14);
  CHECK(audit_model(m).all_ok());
}

TEST_CASE("antipode condition evaluates to zero for each generator") {
  auto m = build_uq_su2(0.2, HopfModel::Mode::Exact);
  for (const auto& sym : m.data.symbols) {
    SymTensor dx = coproduct(SymElement::gen(sym), m.data);
    Mat v = order_part(
        evaluate(tensor_contract(antipode_leg(dx, 0, m.data)), m.data), 0);
    CHECK(v.norm() < 1e-12);
  }
}

TEST_CASE("homomorphism system has rank 19 and nullity 8") {
  auto [table, rep] = solve_general_su2_coproducts(std::array<Complex, 8>{});
  CHECK(table.norm() == 0.0);
  CHECK(rep.rank == 19);
  CHECK(rep.nullity == 8);
}

TEST_CASE("dependent coefficients follow from the free slot c^(z)_{--}") {
  // The structure-constant assembly fixes c^(+)_{-z} = c^(+)_{z-} = -c^(z)_{--}
  // (and all other (+)-entries vanish for this slot).
  std::array<Complex, 8> f{};
  f[2] = 1.0;  // c^(z)_{--}
  CTable t = solve_general_su2_coproducts(f).first;
  CHECK(std::abs(t.at(kPlus, kMinus, kZ) - Complex(-1.0)) < 1e-12);
  CHECK(std::abs(t.at(kPlus, kZ, kMinus) - Complex(-1.0)) < 1e-12);
  CHECK(std::abs(t.at(kPlus, kPlus, kPlus)) < 1e-12);
  CHECK(std::abs(t.at(kPlus, kZ, kZ)) < 1e-12);
  // weight-one couplings reproduce the linear relations
  std::array<Complex, 8> g{};
  g[1] = 1.0;  // c^(z)_{+z}
  CTable u = solve_general_su2_coproducts(g).first;
  CHECK(std::abs(u.at(kPlus, kPlus, kPlus) - Complex(-1.0)) < 1e-12);
  CHECK(std::abs(u.at(kMinus, kPlus, kMinus) - Complex(1.0)) < 1e-12);
}

TEST_CASE("a full table is validated against the system") {
  CTable t = solve_general_su2_coproducts(std::array<Complex, 8>{
                 {1.0, Complex(0, 1), 0.5, 0, 0, 0, 2.0, 0}})
                 .first;
  CHECK_NOTHROW(solve_general_su2_coproducts(t));
  t.at(kPlus, kMinus, kMinus) += 0.1;  // break a dependent entry
  CHECK_THROWS_AS(solve_general_su2_coproducts(t), InconsistentInput);
}

TEST_CASE("hermiticity projection conjugates the paired entries") {
  std::array<Complex, 8> f{};
  f[2] = Complex(2.0, 1.0);  // c^(z)_{--}
  CTable t = apply_hermiticity(solve_general_su2_coproducts(f).first);
  CHECK(std::abs(t.at(kZ, kPlus, kPlus) - Complex(2.0, -1.0)) < 1e-12);
  CHECK(dagger_pairing_defect(t) < 1e-12);
}

TEST_CASE("hermiticity projection is idempotent") {
  CTable t = random_hermitian_ctable(41);
  CTable t2 = apply_hermiticity(t);
  double d = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        d = std::max(d, std::abs(t.at(k, i, j) - t2.at(k, i, j)));
  CHECK(d < 1e-12);
}

TEST_CASE("hermiticity-constrained tables give Hermitian coproduct combinations") {
  for (int s = 0; s < 50; ++s) {
    CTable t = random_hermitian_ctable(4200 + s);
    HopfModel m = build_general_su2(t, 0.1);
    auto eval = [&](const SymElement& x) {
      return evaluate_at(evaluate_tensor(coproduct(x, m.data), m.data), 0.1);
    };
    Mat djz = eval(SymElement::gen("Jz"));
    Mat dsum = eval(SymElement::gen("J+") + SymElement::gen("J-"));
    Mat ddiff = eval(Jet(Complex(0, 1)) *
                     (SymElement::gen("J+") - SymElement::gen("J-")));
    CHECK(hermiticity_defect(djz) < 1e-12);
    CHECK(hermiticity_defect(dsum) < 1e-12);
    CHECK(hermiticity_defect(ddiff) < 1e-12);
  }
}

TEST_CASE("antipode corrections from the representation") {
  // c^(z)_{z+} = 1 with hermiticity applied gives s^(z)_+ = 1/2 exactly:
  // Jz J+ = J+/2 on the qubit.
  std::array<Complex, 8> f{};
  f[4] = 1.0;
  CTable t = apply_hermiticity(solve_general_su2_coproducts(f).first);
  HopfModel m = build_general_su2(t, 0.1);
  STable s = solve_antipode_first_order(m);
  CHECK(std::abs(s.coeffs.at("Jz")(0) - Complex(0.5)) < 1e-12);
  CHECK(std::abs(s.coeffs.at("Jz")(1) - Complex(-0.5)) < 1e-12);
  CHECK(std::abs(s.coeffs.at("Jz")(2)) < 1e-12);
  CHECK(std::abs(s.coeffs.at("Jz")(3)) < 1e-12);
  CHECK(s.residual.at("Jz") < 1e-12);

  // zero table -> zero corrections
  STable z = solve_antipode_first_order(build_general_su2(CTable{}, 0.1));
  for (const auto& [sym, v] : z.coeffs) {
    CHECK(v.norm() < 1e-14);
    CHECK(z.residual.at(sym) < 1e-14);
  }
}

TEST_CASE("representation-level antipode residual vanishes on the qubit") {
  // {J+, J-, Jz, 1} spans all 2x2 matrices, so the least squares is exact;
  // rescaling the table rescales the (zero) residual trivially.
  for (int s = 0; s < 5; ++s) {
    CTable t = random_hermitian_ctable(4300 + s);
    STable st = solve_antipode_first_order(build_general_su2(t, 0.1));
    for (const auto& [sym, r] : st.residual) {
      (void)sym;
      CHECK(r < 1e-12);
    }
  }
}

TEST_CASE("closed-form antipode table differs from the qubit reduction by 2") {
  std::array<Complex, 8> f{};
  f[4] = 1.0;  // c^(z)_{z+}
  CTable t = apply_hermiticity(solve_general_su2_coproducts(f).first);
  STable abs_table = antipode_table_abstract(t);
  STable rep_table = solve_antipode_first_order(build_general_su2(t, 0.1));
  CHECK(std::abs(abs_table.coeffs.at("Jz")(0) -
                 2.0 * rep_table.coeffs.at("Jz")(0)) < 1e-12);
}

TEST_CASE("general-family audit passes for hermiticity-constrained tables") {
  HopfModel m = build_general_su2(random_hermitian_ctable(44), 0.1);
  AuditReport r = audit_model(m);
  CHECK(r.all_ok());
}

TEST_CASE("first-order model approaches the exact one at O(z^2)") {
  auto defect = [](double z) {
    auto exact = build_uq_su2(z, HopfModel::Mode::Exact);
    auto first = build_uq_su2(z, HopfModel::Mode::FirstOrder);
    double d = 0.0;
    for (const auto& sym : exact.data.symbols) {
      Mat ce = order_part(
          evaluate_tensor(coproduct(SymElement::gen(sym), exact.data), exact.data), 0);
      Mat cf = evaluate_at(
          evaluate_tensor(coproduct(SymElement::gen(sym), first.data), first.data), z);
      d = std::max(d, (ce - cf).norm());
      Mat se = order_part(evaluate(exact.data.antipodes.at(sym), exact.data), 0);
      Mat sf = evaluate_at(evaluate(first.data.antipodes.at(sym), first.data), z);
      d = std::max(d, (se - sf).norm());
    }
    return d;
  };
  double e1 = defect(0.01), e2 = defect(0.02), e4 = defect(0.04);
  CHECK(e2 / e1 == doctest::Approx(4.0).epsilon(0.1));
  CHECK(e4 / e2 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("momentum model structures") {
  auto inf = std::numeric_limits<double>::infinity();
  auto flat = build_kappa_galilei_default(inf, false);
  CHECK(flat.param_value == Complex(0.0));
  for (const auto& sym : flat.data.symbols) {
    Mat c = evaluate_at(
        evaluate_tensor(coproduct(SymElement::gen(sym), flat.data), flat.data), 0.0);
    Mat prim = kron(flat.data.rep.at(sym), Mat::Identity(8, 8)) +
               kron(Mat::Identity(8, 8), flat.data.rep.at(sym));
    CHECK((c - prim).norm() < 1e-12);
    Mat s = evaluate_at(evaluate(flat.data.antipodes.at(sym), flat.data), 0.0);
    CHECK((s + flat.data.rep.at(sym)).norm() < 1e-12);
  }

  std::vector<Eigen::VectorXd> grid;
  for (int g = 0; g < 4; ++g) {
    Eigen::VectorXd p(1);
    p(0) = -1.0 + 2.0 * g / 3.0;
    grid.push_back(p);
  }
  auto kg = build_kappa_galilei(10.0, grid, {});
  CHECK(audit_model(kg).all_ok());

  auto mapped = build_kappa_galilei_default(10.0, true);
  AuditReport r = audit_model(mapped);
  Mat P = mapped.data.rep.at("P1");
  CHECK_FALSE(r.hermiticity_ok());
  CHECK(std::abs(r.coproduct_hermiticity_defect - 0.2 * kron(P, P).norm()) < 1e-10);
  CHECK(r.homomorphism_ok());
  CHECK(r.antipode_ok());
  CHECK(r.counit_ok());

  CHECK_THROWS_AS(build_kappa_galilei(10.0, {}, {}), EmptyGrid);
}

TEST_CASE("two-dimensional momentum grids are supported") {
  std::vector<Eigen::VectorXd> grid;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Eigen::VectorXd p(2);
      p << 0.3 * a - 0.1, 0.5 * b - 0.25;
      grid.push_back(p);
    }
  auto kg = build_kappa_galilei(5.0, grid, {});
  CHECK(kg.momentum_symbols.size() == 2);
  CHECK(audit_model(kg).all_ok());
}

TEST_CASE("imaginary deformation spoils the coproduct hermiticity") {
  auto m = build_uq_su2(Complex(0, 0.3), HopfModel::Mode::Exact);
  AuditReport r = audit_model(m);
  CHECK_FALSE(r.hermiticity_ok());
  CHECK(r.antipode_ok());
}

TEST_CASE("model construction errors") {
  CHECK_THROWS_AS(build_uq_su2(0.1, HopfModel::Mode::Exact, 3), UnsupportedDimension);
  CHECK_THROWS_AS(build_uq_su2(Complex(0, 0.1), HopfModel::Mode::FirstOrder),
                  InconsistentInput);
}
