#include "hopfevol/constraints.hpp"

#include <random>

namespace hopfevol {

const char* solution_kind_name(SolutionSet::Kind k) {
  switch (k) {
    case SolutionSet::Kind::Unique: return "unique";
    case SolutionSet::Kind::Affine: return "affine";
    case SolutionSet::Kind::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

using Vector8d = Eigen::Matrix<double, 8, 1>;

// Generator order parts for the 8 unit coefficient directions; the
// dependence on the components is exactly linear.
struct DirectionParts {
  Eigen::Index d = 0;
  std::array<Eigen::MatrixXcd, 8> m0, m1;

  Eigen::MatrixXcd order_at(int order, const Vector8d& x) const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int k = 0; k < 8; ++k) m += x(k) * (order == 0 ? m0[k] : m1[k]);
    return m;
  }
};

DirectionParts direction_parts(const AdjointSuperops& ops) {
  DirectionParts p;
  p.d = ops.left.dim;
  for (int k = 0; k < 8; ++k) {
    Vector8d e = Vector8d::Zero();
    e(k) = 1.0;
    SuperOp s = ops.combine(PrescriptionCoeffs::from_components(e));
    p.m0[k] = s.order(0);
    p.m1[k] = s.order(1);
  }
  return p;
}

// The four coefficient conditions of the undeformed limit:
// normalization, identity cancellation (re, im), real commutator strength.
void base_rows(Eigen::MatrixXd& A, Eigen::VectorXd& b) {
  A.setZero(4, 8);
  b.setZero(4);
  A.row(0) << 1, 0, -1, 0, -1, 0, 1, 0;
  b(0) = 1.0;
  A.row(1) << 1, 0, 1, 0, 1, 0, 1, 0;
  A.row(2) << 0, 1, 0, 1, 0, 1, 0, 1;
  A.row(3) << 0, 1, 0, -1, 0, -1, 0, 1;
}

struct LinSolve {
  Vector8d x = Vector8d::Zero();
  std::vector<Vector8d> nullspace;
  int rank = 0;
  double residual = 0.0;
};

LinSolve solve_ls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sig = svd.singularValues();
  const double cutoff = 1e-8 * (sig.size() ? sig(0) : 0.0);
  LinSolve out;
  Eigen::VectorXd utb = svd.matrixU().transpose() * b;
  for (Eigen::Index i = 0; i < sig.size(); ++i) {
    if (sig(i) > cutoff) {
      out.x += (utb(i) / sig(i)) * svd.matrixV().col(i);
      ++out.rank;
    }
  }
  for (Eigen::Index i = out.rank; i < 8; ++i)
    out.nullspace.push_back(svd.matrixV().col(i));
  out.residual = (A * out.x - b).norm();
  return out;
}

// Assembles [base; remainder-vanishing] for the von Neumann mode.
void von_neumann_system(const DirectionParts& p, Eigen::MatrixXd& A,
                        Eigen::VectorXd& b) {
  const Eigen::Index n = p.d * p.d;
  Eigen::MatrixXd base;
  Eigen::VectorXd brhs;
  base_rows(base, brhs);
  A.setZero(4 + 2 * n * n, 8);
  b.setZero(A.rows());
  A.topRows(4) = base;
  b.head(4) = brhs;
  for (int k = 0; k < 8; ++k) {
    Eigen::MatrixXcd R = hamiltonian_remainder(p.m1[k]);
    for (Eigen::Index i = 0; i < n * n; ++i) {
      A(4 + 2 * i, k) = R(i % (n), i / n).real();
      A(4 + 2 * i + 1, k) = R(i % n, i / n).imag();
    }
  }
}

// vec(X^dag) = S conj(vec X).
Eigen::MatrixXd swap_matrix(Eigen::Index d) {
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) S(i + d * j, j + d * i) = 1.0;
  return S;
}

// [base; trace preservation; hermiticity preservation] at both orders.
void kinematic_system(const DirectionParts& p, Eigen::MatrixXd& A,
                      Eigen::VectorXd& b) {
  const Eigen::Index d = p.d, n = d * d;
  Eigen::MatrixXd base;
  Eigen::VectorXd brhs;
  base_rows(base, brhs);
  const Eigen::Index rows = 4 + 2 * (2 * n) + 2 * (2 * n * n);
  A.setZero(rows, 8);
  b.setZero(rows);
  A.topRows(4) = base;
  b.head(4) = brhs;
  Eigen::MatrixXcd idm = Eigen::MatrixXcd::Identity(d, d);
  Eigen::RowVectorXcd vecI = stack(idm).adjoint();
  Eigen::MatrixXd S = swap_matrix(d);
  Eigen::Index r = 4;
  for (int order = 0; order < 2; ++order) {
    for (int k = 0; k < 8; ++k) {
      const Eigen::MatrixXcd& m = order == 0 ? p.m0[k] : p.m1[k];
      Eigen::RowVectorXcd tr = vecI * m;
      for (Eigen::Index i = 0; i < n; ++i) {
        A(r + 2 * i, k) = tr(i).real();
        A(r + 2 * i + 1, k) = tr(i).imag();
      }
    }
    r += 2 * n;
  }
  for (int order = 0; order < 2; ++order) {
    for (int k = 0; k < 8; ++k) {
      const Eigen::MatrixXcd& m = order == 0 ? p.m0[k] : p.m1[k];
      Eigen::MatrixXcd D = m - S * m.conjugate() * S;
      for (Eigen::Index i = 0; i < n * n; ++i) {
        A(r + 2 * i, k) = D(i % n, i / n).real();
        A(r + 2 * i + 1, k) = D(i % n, i / n).imag();
      }
    }
    r += 2 * n * n;
  }
}

}  // namespace

SolutionSet solve_prescription(const HopfModel& model, const HamiltonianSpec& h) {
  DirectionParts p = direction_parts(adjoint_superops(h, model));
  SolutionSet out;
  von_neumann_system(p, out.system, out.rhs);
  LinSolve ls = solve_ls(out.system, out.rhs);
  out.basepoint = ls.x;
  out.nullspace = ls.nullspace;
  out.rank = ls.rank;
  out.residual = ls.residual;
  if (ls.residual > 1e-10 * std::max(1.0, out.rhs.norm()))
    out.kind = SolutionSet::Kind::Infeasible;
  else
    out.kind = ls.rank == 8 ? SolutionSet::Kind::Unique : SolutionSet::Kind::Affine;
  return out;
}

FeasibilityResult lindblad_feasibility(const HopfModel& model, const HamiltonianSpec& h,
                                       std::optional<PrescriptionCoeffs> pinned,
                                       std::uint64_t seed, int samples) {
  DirectionParts p = direction_parts(adjoint_superops(h, model));
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  kinematic_system(p, A, b);

  FeasibilityResult out;
  Vector8d x0;
  std::vector<Vector8d> dirs;
  if (pinned) {
    x0 = pinned->components();
    out.kinematic_residual = (A * x0 - b).norm();
  } else {
    LinSolve ls = solve_ls(A, b);
    x0 = ls.x;
    dirs = ls.nullspace;
    out.kinematic_residual = ls.residual;
  }
  out.solution_space_dim = int(dirs.size());

  // Exact image of the post-projection remainder over the solution space.
  double image = hamiltonian_remainder(p.order_at(1, x0)).norm();
  for (const auto& nvec : dirs)
    image = std::max(image, hamiltonian_remainder(p.order_at(1, nvec)).norm());
  out.image_norm = image;
  out.kossakowski = Eigen::MatrixXcd::Zero(p.d * p.d - 1, p.d * p.d - 1);
  if (image < 1e-10) {
    out.feasible = false;
    out.certificate = "zero-image";
    return out;
  }

  std::vector<Vector8d> points{x0};
  for (const auto& nvec : dirs) {
    points.push_back(x0 + nvec);
    points.push_back(x0 - nvec);
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int s = 0; s < samples && !dirs.empty(); ++s) {
    Vector8d x = x0;
    for (const auto& nvec : dirs) x += normal(rng) * nvec;
    points.push_back(x);
  }

  const Complex v = model.param_value;
  for (const auto& x : points) {
    Eigen::MatrixXcd L = p.order_at(0, x) + v * p.order_at(1, x);
    GeneratorReport rep = gksl_decompose(L);
    if (rep.verdict == Verdict::Gksl && rep.reconstruction_residual < 1e-8) {
      out.feasible = true;
      out.witness = x;
      out.kossakowski = rep.kossakowski;
      out.certificate = "gksl-witness";
      return out;
    }
  }
  out.feasible = false;
  out.certificate = "no-psd-point-found";
  return out;
}

ScenarioReport xy_family_scenario(int tables, std::uint64_t seed) {
  ScenarioReport rep;
  rep.tables = tables;
  Vector8d quarter = PrescriptionCoeffs::quarter().components();
  for (int t = 0; t < tables; ++t) {
    HopfModel model = build_general_su2(random_hermitian_ctable(seed + t), 0.1);
    Vector8d first;
    for (int which = 0; which < 2; ++which) {
      HamiltonianSpec h = hamiltonian(model, which == 0 ? "hx" : "hy");
      SolutionSet ss = solve_prescription(model, h);
      rep.max_basepoint_deviation =
          std::max(rep.max_basepoint_deviation,
                   (ss.basepoint - quarter).cwiseAbs().maxCoeff());
      SuperOp L = build_generator(h, model, ss.coeffs());
      rep.max_remainder = std::max(
          rep.max_remainder, hamiltonian_projection(L.order(1)).residual);
      if (which == 0)
        first = ss.basepoint;
      else if ((first - ss.basepoint).cwiseAbs().maxCoeff() > 1e-8)
        rep.consistent = false;
    }
  }
  return rep;
}

}  // namespace hopfevol
