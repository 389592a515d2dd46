#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfevol/models.hpp"

using namespace hopfevol;
using Mat = Eigen::MatrixXcd;

namespace {

const HopfModel& uq(double z = 0.2) {
  static HopfModel m = build_uq_su2(0.2, HopfModel::Mode::Exact);
  (void)z;
  return m;
}

SymElement random_element(std::mt19937_64& rng, const std::vector<std::string>& syms) {
  std::normal_distribution<double> nd;
  std::uniform_int_distribution<size_t> pick(0, syms.size() - 1);
  SymElement out;
  for (int t = 0; t < 3; ++t) {
    GenWord w;
    for (int a = 0; a < 2; ++a) w.atoms.push_back(Atom::gen(syms[pick(rng)]));
    out.add_term(w, Jet(Complex(nd(rng), nd(rng))));
  }
  return out;
}

}  // namespace

TEST_CASE("words concatenate and exponentials merge") {
  SymElement jp = SymElement::gen("J+");
  SymElement jz = SymElement::gen("Jz");
  SymElement prod = sym_mul(jp, jz);
  REQUIRE(prod.terms.size() == 1);
  const GenWord& w = prod.terms.begin()->first;
  REQUIRE(w.atoms.size() == 2);
  CHECK(w.atoms[0].sym == "J+");
  CHECK(w.atoms[1].sym == "Jz");

  SymElement ea = SymElement::word(GenWord::exponential("Jz", Jet(0.3)));
  SymElement eb = SymElement::word(GenWord::exponential("Jz", Jet(0.45)));
  SymElement eab = sym_mul(ea, eb);
  REQUIRE(eab.terms.size() == 1);
  const GenWord& we = eab.terms.begin()->first;
  REQUIRE(we.atoms.size() == 1);
  CHECK(we.atoms[0].exponent == Jet(0.75));

  // opposite exponents cancel to the unit word
  SymElement ec = SymElement::word(GenWord::exponential("Jz", Jet(-0.75)));
  CHECK(sym_mul(eab, ec).terms.begin()->first.is_one());
}

TEST_CASE("(J+ + J-)^2 evaluates to the identity on the qubit") {
  SymElement x = SymElement::gen("J+") + SymElement::gen("J-");
  Mat m = order_part(evaluate(sym_mul(x, x), uq().data), 0);
  CHECK((m - Mat::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("coproduct of a primitive exponential is group-like") {
  GenWord q = GenWord::exponential("Jz", Jet(0.05));
  SymTensor cop = coproduct(SymElement::word(q), uq().data);
  SymTensor expect = SymTensor::of(q, q);
  CHECK((cop - expect).is_zero());
}

TEST_CASE("coproduct of the deformed Hamiltonian splits into two terms") {
  // Delta(H') = H' (x) 1 + q^{2Jz} (x) H' for H' = q^{Jz/2}(J+ + J-)q^{Jz/2}.
  const double z = 0.2;
  auto model = build_uq_su2(z, HopfModel::Mode::Exact);
  SymElement h = hamiltonian_expr(model, "hx");
  SymTensor cop = coproduct(h, model.data);
  SymTensor expect;
  for (const auto& [w, c] : h.terms) {
    expect.add_term(w, GenWord::one(), c);
    expect.add_term(GenWord::exponential("Jz", Jet(z)), w, c);
  }
  CHECK((cop - expect).is_zero());
}

TEST_CASE("coproduct of the unit is the unit tensor") {
  SymTensor cop = coproduct(SymElement::one(), uq().data);
  CHECK((cop - SymTensor::unit()).is_zero());
}

TEST_CASE("exponentials of non-primitive generators are rejected") {
  SymElement bad = SymElement::word(GenWord::exponential("J+", Jet(1.0)));
  CHECK_THROWS_AS(coproduct(bad, uq().data), NonPrimitiveExponential);
}

TEST_CASE("antipode composes anti-homomorphically") {
  // S(J+ Jz) = S(Jz) S(J+) = q^{-1} Jz J+
  const double z = 0.2;
  auto model = build_uq_su2(z, HopfModel::Mode::Exact);
  SymElement x = sym_mul(SymElement::gen("J+"), SymElement::gen("Jz"));
  SymElement s = antipode(x, model.data);
  REQUIRE(s.terms.size() == 1);
  const auto& [w, c] = *s.terms.begin();
  REQUIRE(w.atoms.size() == 2);
  CHECK(w.atoms[0].sym == "Jz");
  CHECK(w.atoms[1].sym == "J+");
  CHECK(std::abs(c.a0 - std::exp(-0.5 * z)) < 1e-15);
}

TEST_CASE("antipode of the unit and of exponentials") {
  CHECK((antipode(SymElement::one(), uq().data) - SymElement::one()).is_zero());
  GenWord q2 = GenWord::exponential("Jz", Jet(0.4));
  GenWord q2inv = GenWord::exponential("Jz", Jet(-0.4));
  SymElement s = antipode(SymElement::word(q2), uq().data);
  CHECK((s - SymElement::word(q2inv)).is_zero());
}

TEST_CASE("antipode is an anti-homomorphism on random elements") {
  // Coefficients are products of floats, so compare up to roundoff.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    SymElement x = random_element(rng, uq().data.symbols);
    SymElement y = random_element(rng, uq().data.symbols);
    SymElement lhs = antipode(sym_mul(x, y), uq().data);
    SymElement rhs = sym_mul(antipode(y, uq().data), antipode(x, uq().data));
    double worst = 0.0;
    for (const auto& [w, c] : (lhs - rhs).terms) {
      (void)w;
      worst = std::max(worst, max_abs(c));
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("counit values") {
  auto model = build_uq_su2(0.2, HopfModel::Mode::Exact);
  CHECK(counit(hamiltonian_expr(model, "hx"), model.data).is_zero());
  CHECK(counit(SymElement::one(), model.data) == Jet(1.0));
  CHECK(counit(SymElement::word(GenWord::exponential("Jz", Jet(0.4))), model.data) ==
        Jet(1.0));
}

TEST_CASE("evaluation of exponentials and of the deformed Hamiltonian") {
  const double z = 0.2;
  auto model = build_uq_su2(z, HopfModel::Mode::Exact);
  const double q = std::exp(0.5 * z);
  Mat qjz = order_part(
      evaluate(SymElement::word(GenWord::exponential("Jz", Jet(0.5 * z))), model.data),
      0);
  CHECK(std::abs(qjz(0, 0) - std::sqrt(q)) < 1e-14);
  CHECK(std::abs(qjz(1, 1) - 1.0 / std::sqrt(q)) < 1e-14);
  CHECK(std::abs(qjz(0, 1)) + std::abs(qjz(1, 0)) < 1e-15);

  // the deformed Hamiltonian evaluates to the undeformed sigma_x
  Mat h = order_part(evaluate(hamiltonian_expr(model, "hx"), model.data), 0);
  Mat sx(2, 2);
  sx << 0, 1, 1, 0;
  CHECK((h - sx).norm() < 1e-14);

  // J+ raises the lower basis state
  Eigen::Vector2cd down(0, 1);
  Eigen::Vector2cd up = order_part(evaluate(SymElement::gen("J+"), model.data), 0) * down;
  CHECK(std::abs(up(0) - 1.0) < 1e-15);
  CHECK(std::abs(up(1)) < 1e-15);
}

TEST_CASE("evaluation is an algebra homomorphism") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 10; ++t) {
    SymElement x = random_element(rng, uq().data.symbols);
    SymElement y = random_element(rng, uq().data.symbols);
    Mat lhs = order_part(evaluate(sym_mul(x, y), uq().data), 0);
    Mat rhs = order_part(evaluate(x, uq().data), 0) * order_part(evaluate(y, uq().data), 0);
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("counit axiom holds in the representation") {
  for (auto mode : {HopfModel::Mode::Exact, HopfModel::Mode::FirstOrder}) {
    auto model = build_uq_su2(0.1, mode);
    const double tol = mode == HopfModel::Mode::Exact ? 1e-12 : 1e-10;
    for (const auto& sym : model.data.symbols) {
      SymTensor dx = coproduct(SymElement::gen(sym), model.data);
      SymElement applied;
      for (const auto& [p, c] : dx.terms)
        applied.add_term(p.second, c * counit(SymElement::word(p.first), model.data));
      Mat lhs = evaluate_at(evaluate(applied, model.data), model.param_value);
      Mat rhs = evaluate_at(evaluate(SymElement::gen(sym), model.data), model.param_value);
      CHECK((lhs - rhs).norm() < tol);
    }
  }
}

TEST_CASE("antipode axiom holds at q = 0.7, 1, 1.3") {
  for (double q : {0.7, 1.0, 1.3}) {
    auto model = build_uq_su2(2.0 * std::log(q), HopfModel::Mode::Exact);
    for (const auto& sym : model.data.symbols) {
      SymTensor dx = coproduct(SymElement::gen(sym), model.data);
      SymElement m_s_id = tensor_contract(antipode_leg(dx, 0, model.data));
      Mat lhs = order_part(evaluate(m_s_id, model.data), 0);
      CHECK(lhs.norm() < 1e-12);  // counit of all generators is zero
    }
  }
}

TEST_CASE("dagger data is compatible with the representation") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 10; ++t) {
    SymElement x = random_element(rng, uq().data.symbols);
    Mat lhs = order_part(evaluate(dagger_of(x, uq().data), uq().data), 0);
    Mat rhs = order_part(evaluate(x, uq().data), 0).adjoint();
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("unknown symbols are reported") {
  CHECK_THROWS_AS(evaluate(SymElement::gen("Q"), uq().data), UnknownSymbol);
  CHECK_THROWS_AS(coproduct(SymElement::gen("Q"), uq().data), UnknownSymbol);
}
