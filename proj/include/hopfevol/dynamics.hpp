#pragma once

#include <iosfwd>

#include "hopfevol/models.hpp"

namespace hopfevol {

/// Hamiltonian as a symbolic expression times an energy scale.
struct HamiltonianSpec {
  SymElement expr;
  double scale = 1.0;  // epsilon_0
};

HamiltonianSpec hamiltonian(const HopfModel& model, const std::string& id,
                            double scale = 1.0);

/// Coefficients (alpha, beta, gamma, delta) of the combined evolution
///   i drho/dt = alpha ad^L + beta (ad^L)^dag + gamma ad^R + delta (ad^R)^dag.
struct PrescriptionCoeffs {
  Complex alpha{0.0}, beta{0.0}, gamma{0.0}, delta{0.0};

  static PrescriptionCoeffs quarter() { return {0.25, -0.25, -0.25, 0.25}; }
  static PrescriptionCoeffs half() { return {0.5, -0.5, 0.0, 0.0}; }

  /// Real 8-vector (a0, a1, b0, b1, g0, g1, d0, d1).
  Eigen::Matrix<double, 8, 1> components() const;
  static PrescriptionCoeffs from_components(const Eigen::Matrix<double, 8, 1>& x);
};

/// Sweedler terms of (id (x) S) Delta(H) and (S (x) id) Delta(H), legs
/// evaluated in the representation.  Includes the energy scale.
TensorElement adjoint_terms_left(const HamiltonianSpec& h, const HopfModel& model);
TensorElement adjoint_terms_right(const HamiltonianSpec& h, const HopfModel& model);

/// ad^L_H(rho) = (id (x) S) Delta(H) diamond rho, and the right-leg variant.
Operator ad_left(const HamiltonianSpec& h, const Operator& rho, const HopfModel& model);
Operator ad_right(const HamiltonianSpec& h, const Operator& rho, const HopfModel& model);

/// The four building blocks of the combined generator.
struct AdjointSuperops {
  SuperOp left, left_dag, right, right_dag;

  /// -i (alpha L + beta L^dag + gamma R + delta R^dag).
  SuperOp combine(const PrescriptionCoeffs& c) const;
};

AdjointSuperops adjoint_superops(const HamiltonianSpec& h, const HopfModel& model);

/// Generator superoperator L with drho/dt = L(rho),
///   L(rho) = -i [alpha ad^L(rho) + beta (ad^L(rho))^dag
///             + gamma ad^R(rho) + delta (ad^R(rho))^dag],
/// where the daggered maps are extended linearly (term (A,B,c) -> (B^dag,
/// A^dag, conj c)), so they agree with the adjoint on Hermitian rho.
/// With alpha-beta-gamma+delta = 1 the undeformed limit is -i[H, rho].
SuperOp build_generator(const HamiltonianSpec& h, const HopfModel& model,
                        const PrescriptionCoeffs& c);

/// Dissipative demo generator: jump sigma- = |z-><z+| at unit rate.
SuperOp amplitude_damping_generator();

/// drho/dt = -i[H, rho] - (z/2)([rho, Jz] H + H [Jz, rho]) with H = eps0 sigma_x,
/// first order in z.
SuperOp redfield_demo_generator(double eps0 = 1.0);

struct Trajectory {
  struct Monitor {
    double trace_defect = 0.0;
    double herm_defect = 0.0;
    double min_eig = 0.0;
    double purity = 0.0;
  };
  std::vector<double> times;
  std::vector<Eigen::MatrixXcd> states;
  std::vector<Monitor> monitors;
};

/// Fixed-step RK4 integration of drho/dt = L(rho) with the Jets evaluated
/// at param_value; monitors sampled every step.
Trajectory evolve(const SuperOp& L, const Eigen::MatrixXcd& rho0, double t_final,
                  double dt, Complex param_value);

/// CSV columns: t, trace_defect, herm_defect, min_eig, purity, then the
/// state entries re/im interleaved in row-major order.
void write_trajectory_csv(const Trajectory& traj, std::ostream& os);

/// Named density matrices on the qubit ("z+", "z-", "x+", "x-", "y+", "y-",
/// "mixed"); "mixed" is maximally mixed in any dimension.
Eigen::MatrixXcd named_state(const std::string& id, Eigen::Index dim);

}  // namespace hopfevol
