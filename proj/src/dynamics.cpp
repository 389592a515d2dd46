#include "hopfevol/dynamics.hpp"

#include <cstdio>
#include <ostream>

namespace hopfevol {

HamiltonianSpec hamiltonian(const HopfModel& model, const std::string& id,
                            double scale) {
  return HamiltonianSpec{hamiltonian_expr(model, id), scale * model.scale};
}

Eigen::Matrix<double, 8, 1> PrescriptionCoeffs::components() const {
  Eigen::Matrix<double, 8, 1> x;
  x << alpha.real(), alpha.imag(), beta.real(), beta.imag(), gamma.real(),
      gamma.imag(), delta.real(), delta.imag();
  return x;
}

PrescriptionCoeffs PrescriptionCoeffs::from_components(
    const Eigen::Matrix<double, 8, 1>& x) {
  return {Complex(x(0), x(1)), Complex(x(2), x(3)), Complex(x(4), x(5)),
          Complex(x(6), x(7))};
}

namespace {

TensorElement scaled_terms(const SymTensor& t, const HopfData& data, double scale) {
  TensorElement out = tensor_terms(t, data);
  for (auto& term : out.terms) term.coeff *= Jet(scale);
  return out;
}

void check_hamiltonian(const HamiltonianSpec& h, const HopfModel& model) {
  if (model.mapped) return;
  Eigen::MatrixXcd hm =
      evaluate_at(evaluate(h.expr, model.data), model.param_value) * h.scale;
  if (hermiticity_defect(hm) > 1e-8)
    throw NotHermitian("hamiltonian is not Hermitian in the representation");
}

}  // namespace

TensorElement adjoint_terms_left(const HamiltonianSpec& h, const HopfModel& model) {
  check_hamiltonian(h, model);
  SymTensor t = antipode_leg(coproduct(h.expr, model.data), 1, model.data);
  return scaled_terms(t, model.data, h.scale);
}

TensorElement adjoint_terms_right(const HamiltonianSpec& h, const HopfModel& model) {
  check_hamiltonian(h, model);
  SymTensor t = antipode_leg(coproduct(h.expr, model.data), 0, model.data);
  return scaled_terms(t, model.data, h.scale);
}

Operator ad_left(const HamiltonianSpec& h, const Operator& rho, const HopfModel& model) {
  return diamond(adjoint_terms_left(h, model), rho);
}

Operator ad_right(const HamiltonianSpec& h, const Operator& rho, const HopfModel& model) {
  return diamond(adjoint_terms_right(h, model), rho);
}

AdjointSuperops adjoint_superops(const HamiltonianSpec& h, const HopfModel& model) {
  TensorElement left = adjoint_terms_left(h, model);
  TensorElement right = adjoint_terms_right(h, model);
  return {superop_of(left), superop_of(tensor_dagger(left)), superop_of(right),
          superop_of(tensor_dagger(right))};
}

SuperOp AdjointSuperops::combine(const PrescriptionCoeffs& c) const {
  SuperOp out = superop_zero(left.dim);
  const Jet minus_i(Complex(0.0, -1.0));
  out.mat = minus_i * (Jet(c.alpha) * left.mat + Jet(c.beta) * left_dag.mat +
                       Jet(c.gamma) * right.mat + Jet(c.delta) * right_dag.mat);
  return out;
}

SuperOp build_generator(const HamiltonianSpec& h, const HopfModel& model,
                        const PrescriptionCoeffs& c) {
  return adjoint_superops(h, model).combine(c);
}

SuperOp amplitude_damping_generator() {
  Eigen::MatrixXcd jump = Eigen::MatrixXcd::Zero(2, 2);
  jump(1, 0) = 1.0;  // |z-><z+|
  Operator L = lift(jump);
  Operator Ld = dagger(L);
  Operator LdL = Operator(Ld * L);
  Operator I = jet_identity(2);
  TensorElement t;
  t.terms.push_back({L, Ld, Jet(1.0)});
  t.terms.push_back({Operator(LdL), I, Jet(-0.5)});
  t.terms.push_back({I, Operator(LdL), Jet(-0.5)});
  return superop_of(t);
}

SuperOp redfield_demo_generator(double eps0) {
  Operator H = lift(eps0 * (qubit_rep("J+") + qubit_rep("J-")));
  Operator Jz = lift(qubit_rep("Jz"));
  Operator I = jet_identity(2);
  const Jet z(0.0, 1.0, Param::Z);
  TensorElement t;
  // -i[H, rho]
  t.terms.push_back({H, I, Jet(Complex(0, -1))});
  t.terms.push_back({I, H, Jet(Complex(0, 1))});
  // -(z/2) (rho Jz H - Jz rho H + H Jz rho - H rho Jz)
  Jet w = Jet(-0.5) * z;
  t.terms.push_back({I, Operator(Jz * H), w});
  t.terms.push_back({Jz, H, -w});
  t.terms.push_back({Operator(H * Jz), I, w});
  t.terms.push_back({H, Jz, -w});
  return superop_of(t);
}

Trajectory evolve(const SuperOp& L, const Eigen::MatrixXcd& rho0, double t_final,
                  double dt, Complex param_value) {
  const Eigen::Index d = rho0.rows();
  if (rho0.cols() != d || d != L.dim)
    throw DimensionMismatch("evolve: state/generator dimensions");
  if (!(dt > 0.0) || !(t_final >= 0.0)) throw InvalidState("evolve: need dt > 0");
  if (hermiticity_defect(rho0) > 1e-8) throw InvalidState("rho0 not Hermitian");
  if (std::abs(rho0.trace() - 1.0) > 1e-8) throw InvalidState("rho0 trace != 1");
  if (min_eigenvalue(rho0) < -1e-8) throw InvalidState("rho0 not positive");

  Eigen::MatrixXcd Lm = L.at(param_value);
  if (Lm.norm() * dt > 0.5)
    throw StepTooLarge("||L||*dt = " + std::to_string(Lm.norm() * dt));

  const auto steps = static_cast<long>(std::ceil(t_final / dt - 1e-12));
  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.monitors.reserve(steps + 1);

  auto record = [&](double t, const Eigen::MatrixXcd& rho) {
    Trajectory::Monitor m;
    m.trace_defect = std::abs(rho.trace() - 1.0);
    m.herm_defect = hermiticity_defect(rho);
    Eigen::MatrixXcd sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
    m.min_eig = es.eigenvalues()(0);
    m.purity = (rho * rho).trace().real();
    traj.times.push_back(t);
    traj.states.push_back(rho);
    traj.monitors.push_back(m);
  };

  Eigen::VectorXcd y = stack(rho0);
  record(0.0, rho0);
  for (long s = 0; s < steps; ++s) {
    const double h = std::min(dt, t_final - double(s) * dt);
    Eigen::VectorXcd k1 = Lm * y;
    Eigen::VectorXcd k2 = Lm * (y + 0.5 * h * k1);
    Eigen::VectorXcd k3 = Lm * (y + 0.5 * h * k2);
    Eigen::VectorXcd k4 = Lm * (y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    record(double(s) * dt + h, unstack(y));
  }
  return traj;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
  const Eigen::Index d = traj.states.empty() ? 0 : traj.states.front().rows();
  os << "t,trace_defect,herm_defect,min_eig,purity";
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      os << ",rho_" << i << "_" << j << "_re,rho_" << i << "_" << j << "_im";
  os << "\n";
  char buf[32];
  auto put = [&](double v, char lead) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (lead) os << lead;
    os << buf;
  };
  for (size_t n = 0; n < traj.times.size(); ++n) {
    put(traj.times[n], 0);
    put(traj.monitors[n].trace_defect, ',');
    put(traj.monitors[n].herm_defect, ',');
    put(traj.monitors[n].min_eig, ',');
    put(traj.monitors[n].purity, ',');
    const auto& rho = traj.states[n];
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        put(rho(i, j).real(), ',');
        put(rho(i, j).imag(), ',');
      }
    os << "\n";
  }
}

Eigen::MatrixXcd named_state(const std::string& id, Eigen::Index dim) {
  if (id == "mixed")
    return Eigen::MatrixXcd::Identity(dim, dim) / double(dim);
  if (dim != 2) throw InvalidState("named state '" + id + "' needs dimension 2");
  Eigen::Vector2cd v;
  const double r = 1.0 / std::sqrt(2.0);
  if (id == "z+") v << 1, 0;
  else if (id == "z-") v << 0, 1;
  else if (id == "x+") v << r, r;
  else if (id == "x-") v << r, -r;
  else if (id == "y+") v << r, Complex(0, r);
  else if (id == "y-") v << r, Complex(0, -r);
  else throw InvalidState("unknown state '" + id + "'");
  return v * v.adjoint();
}

}  // namespace hopfevol
