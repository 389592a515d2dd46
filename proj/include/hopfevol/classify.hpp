#pragma once

#include <cstdint>
#include <optional>

#include "hopfevol/opalg.hpp"

namespace hopfevol {

enum class Verdict {
  VonNeumann,
  Gksl,
  NonGksl,
  NotHermiticityPreserving,
  NotTracePreserving,
};

const char* verdict_name(Verdict v);

struct PreservationResult {
  double trace_defect = 0.0;
  double herm_defect = 0.0;
  double tolerance = 1e-10;
  bool trace_ok() const { return trace_defect < tolerance; }
  bool herm_ok() const { return herm_defect < tolerance; }
};

/// Trace defect: max_k |Tr L(E_k)| over the matrix units; hermiticity
/// defect: max_k ||L(E_k)^dag - L(E_k^dag)||.
PreservationResult preservation_tests(const Eigen::MatrixXcd& L);

struct HamiltonianPart {
  Eigen::MatrixXcd h_eff;  // Hermitian, traceless gauge
  double residual = 0.0;   // Frobenius norm of the non-commutator remainder
};

/// Closest generator of the form rho -> -i[h, rho] with h Hermitian and
/// traceless (Frobenius least squares on superoperator matrices).
HamiltonianPart hamiltonian_projection(const Eigen::MatrixXcd& L);

/// Superoperator matrix of rho -> -i[h, rho].
Eigen::MatrixXcd commutator_superop(const Eigen::MatrixXcd& h);

/// Remainder of L after removing its Hamiltonian projection.
Eigen::MatrixXcd hamiltonian_remainder(const Eigen::MatrixXcd& L);

struct GeneratorReport {
  PreservationResult preservation;
  Eigen::MatrixXcd h_eff;
  double hamiltonian_residual = 0.0;
  Eigen::MatrixXcd kossakowski;  // over the traceless Hermitian basis
  double kossakowski_min_eig = 0.0;
  double kossakowski_norm = 0.0;
  double reconstruction_residual = 0.0;
  Verdict verdict = Verdict::VonNeumann;
};

/// Unique decomposition L = -i[h, .] + sum_{ij>=1} c_ij (F_i . F_j
/// - 1/2 {F_j F_i, .}) over the traceless Hermitian basis.  Non-preserving
/// inputs get the corresponding failure verdict and skip the decomposition.
GeneratorReport gksl_decompose(const Eigen::MatrixXcd& L);

/// Classification of a formal first-order generator, reduced to its order-0
/// and order-1 parts separately.
struct OrderSplitReport {
  GeneratorReport order0;
  GeneratorReport order1;
};

inline OrderSplitReport gksl_decompose_orders(const SuperOp& L) {
  return {gksl_decompose(L.order(0)), gksl_decompose(L.order(1))};
}

struct PositivityWitness {
  Eigen::VectorXcd phi, psi;
  double value = 0.0;        // <psi| L(|phi><phi|) |psi>
  double imag_defect = 0.0;  // |Im| of the raw matrix element
  bool violated = false;     // value < -1e-10
};

/// Witness for a given orthogonal pair (throws NotOrthogonal beyond 1e-10).
PositivityWitness positivity_witness(const Eigen::MatrixXcd& L,
                                     const Eigen::VectorXcd& phi,
                                     const Eigen::VectorXcd& psi);

/// Seeded search over Haar-random orthonormal pairs; returns the minimum.
PositivityWitness positivity_witness_search(const Eigen::MatrixXcd& L,
                                            std::uint64_t seed,
                                            int samples = 10000);

}  // namespace hopfevol
