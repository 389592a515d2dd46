#pragma once

#include "hopfevol/classify.hpp"
#include "hopfevol/dynamics.hpp"

namespace hopfevol {

/// Outcome of a linear solve over the 8 real coefficient components
/// (alpha0, alpha1, beta0, beta1, gamma0, gamma1, delta0, delta1).
struct SolutionSet {
  enum class Kind { Unique, Affine, Infeasible };

  Kind kind = Kind::Infeasible;
  Eigen::Matrix<double, 8, 1> basepoint = Eigen::Matrix<double, 8, 1>::Zero();
  std::vector<Eigen::Matrix<double, 8, 1>> nullspace;  // orthonormal directions
  Eigen::MatrixXd system;
  Eigen::VectorXd rhs;
  int rank = 0;
  double residual = 0.0;

  PrescriptionCoeffs coeffs() const {
    return PrescriptionCoeffs::from_components(basepoint);
  }
};

const char* solution_kind_name(SolutionSet::Kind k);

/// Admissibility system for a von Neumann evolution: the undeformed limit is
/// the unit commutator (real part 1, imaginary part 0), identity terms in H
/// cancel, and the order-1 remainder after Hamiltonian projection vanishes.
/// Solved by rank-revealing least squares; infeasibility is a result.
SolutionSet solve_prescription(const HopfModel& model, const HamiltonianSpec& h);

struct FeasibilityResult {
  bool feasible = false;
  double image_norm = 0.0;        // of the order-1 remainder over the solution space
  double kinematic_residual = 0.0;
  int solution_space_dim = 0;
  std::optional<Eigen::Matrix<double, 8, 1>> witness;  // feasible coefficients
  Eigen::MatrixXcd kossakowski;   // at the witness (order-1 part, evaluated)
  std::string certificate;
};

/// Decide whether any coefficient choice that keeps the evolution
/// trace-preserving and hermiticity-preserving (and normalized with
/// identity cancellation) makes the order-1 part a GKSL dissipator with a
/// nonzero positive semidefinite Kossakowski matrix.  The affine image of
/// the post-projection remainder is computed exactly; sampling (nullspace
/// basis plus seeded random combinations) confirms the verdict.  A pinned
/// coefficient point restricts the search to that point.
FeasibilityResult lindblad_feasibility(const HopfModel& model, const HamiltonianSpec& h,
                                       std::optional<PrescriptionCoeffs> pinned = {},
                                       std::uint64_t seed = 0x5eed0001u,
                                       int samples = 100);

struct ScenarioReport {
  int tables = 0;
  double max_basepoint_deviation = 0.0;  // from (1/4, -1/4, -1/4, 1/4)
  double max_remainder = 0.0;            // order-1 remainder at the basepoint
  bool consistent = true;                // identical solution across the H's
};

/// Sweeps seeded random hermiticity-constrained tables with the transverse
/// Hamiltonians eps0(J+ + J-) and eps0(J+ - J-)/i and checks that both give
/// the same admissible point with vanishing order-1 remainder.
ScenarioReport xy_family_scenario(int tables = 20, std::uint64_t seed = 0x5eed0002u);

}  // namespace hopfevol
