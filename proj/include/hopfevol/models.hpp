#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "hopfevol/symalg.hpp"

namespace hopfevol {

/// A Hopf structure together with a representation and bookkeeping for the
/// deformation parameter and energy scale.
struct HopfModel {
  enum class Mode { Exact, FirstOrder };

  std::string name;
  HopfData data;
  Mode mode = Mode::FirstOrder;
  Complex param_value{0.0, 0.0};  // z, h, or 1/kappa; evaluation point for Jets
  double scale = 1.0;             // energy scale multiplying Hamiltonians
  bool mapped = false;            // true for the non-physical mapped variants
  Eigen::MatrixXd metric;        // spatial metric (momentum models only)
  std::vector<std::string> momentum_symbols;

  Eigen::Index dim() const { return data.dim; }
};

Eigen::MatrixXcd qubit_rep(const std::string& sym);

HopfModel build_trivial_su2();

/// q-deformed su(2) on the qubit, q = e^{z/2}.  Exact mode keeps q numeric
/// (z may be complex); first-order mode truncates in z (z real).
HopfModel build_uq_su2(Complex z, HopfModel::Mode mode, int dim = 2);

/// Named Hamiltonian expressions per model ("hx", "hy", "hz", "p0").
SymElement hamiltonian_expr(const HopfModel& model, const std::string& id);

// ---------------------------------------------------------------------------
// General first-order su(2) deformation family
// ---------------------------------------------------------------------------

/// Basis index order {+, -, z} for the 27 coefficients c^{(k)}_{ij}.
enum : int { kPlus = 0, kMinus = 1, kZ = 2 };

struct CTable {
  std::array<std::array<std::array<Complex, 3>, 3>, 3> c{};

  Complex& at(int k, int i, int j) { return c[k][i][j]; }
  const Complex& at(int k, int i, int j) const { return c[k][i][j]; }
  double norm() const;
  CTable scaled(Complex s) const;
};

/// Free-parameter slots in the order c^(z)_{++}, c^(z)_{+z}, c^(z)_{--},
/// c^(z)_{-z}, c^(z)_{z+}, c^(z)_{z-}, c^(+)_{+z}, c^(+)_{z+}.
std::array<Complex, 8> ctable_free(const CTable& t);
CTable ctable_from_free_raw(const std::array<Complex, 8>& free);  // zeros elsewhere

struct RankReport {
  int rank = 0;
  int nullity = 0;
  double sigma_max = 0.0;
  double cutoff = 0.0;
};

/// Coproduct homomorphism conditions at first order, assembled from the
/// su(2) structure constants in the J_i (x) J_j basis.  27 x 27.
Eigen::MatrixXcd homomorphism_matrix();

Eigen::VectorXcd ctable_vec(const CTable& t);
CTable ctable_unvec(const Eigen::VectorXcd& v);

/// Solve the homomorphism system with the free slots pinned to `free`.
std::pair<CTable, RankReport> solve_general_su2_coproducts(const std::array<Complex, 8>& free);

/// Validate a full table against the system (InconsistentInput beyond 1e-10).
std::pair<CTable, RankReport> solve_general_su2_coproducts(const CTable& full);

/// Project onto the hermiticity-compatible subfamily: keeps c^(z)_{--},
/// c^(z)_{+z}, c^(z)_{z+} and c^(+)_{+z}, overwrites their partners.
CTable apply_hermiticity(const CTable& t);

double dagger_pairing_defect(const CTable& t);

/// Antipode correction coefficients over {J+, J-, Jz, identity}.
struct STable {
  std::map<std::string, Eigen::Vector4cd> coeffs;
  std::map<std::string, double> residual;
};

/// Representation-level least-squares solution of the antipode condition.
STable solve_antipode_first_order(const HopfModel& model_with_coproducts);

/// Closed-form linear table for the antipode corrections (identity-free
/// ansatz, no representation reduction).  Shipped for comparison; the
/// built models use the representation-level solution.
STable antipode_table_abstract(const CTable& t);

HopfModel build_general_su2(const CTable& t, double h_value = 0.1);

CTable random_hermitian_ctable(std::uint64_t seed);

// ---------------------------------------------------------------------------
// kappa-Galilei translations on a momentum grid
// ---------------------------------------------------------------------------

struct KappaOptions {
  bool mapped = false;
  std::optional<Eigen::VectorXd> p0_diagonal;   // default: sum_i p_i^2 / 2
  std::optional<Eigen::MatrixXd> metric;        // default: identity
};

HopfModel build_kappa_galilei(double kappa, const std::vector<Eigen::VectorXd>& grid,
                              const KappaOptions& opts = {});

/// 1-D, 8 evenly spaced momenta in [-1, 1].
HopfModel build_kappa_galilei_default(double kappa, bool mapped = false);

// ---------------------------------------------------------------------------
// Audits
// ---------------------------------------------------------------------------

struct AuditReport {
  double coproduct_hermiticity_defect = 0.0;
  double coproduct_homomorphism_defect = 0.0;
  double antipode_condition_defect = 0.0;
  double counit_defect = 0.0;
  double tolerance = 1e-8;

  bool hermiticity_ok() const { return coproduct_hermiticity_defect < tolerance; }
  bool homomorphism_ok() const { return coproduct_homomorphism_defect < tolerance; }
  bool antipode_ok() const { return antipode_condition_defect < tolerance; }
  bool counit_ok() const { return counit_defect < tolerance; }
  bool all_ok() const {
    return hermiticity_ok() && homomorphism_ok() && antipode_ok() && counit_ok();
  }
};

/// Structure-map defects evaluated in the representation at the model's
/// parameter value: coproduct dagger-compatibility, homomorphism on the
/// declared commutators, antipode condition, counit axiom.
AuditReport audit_model(const HopfModel& model);

}  // namespace hopfevol
